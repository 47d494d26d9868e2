#include "superder/json_io.hpp"

#include <stdexcept>

namespace superder {

namespace {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace

nlohmann::ordered_json algebra_to_json(const SuperAlgebra& a) {
    nlohmann::ordered_json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["parity"] = a.parities();
    auto brackets = nlohmann::ordered_json::array();
    for (const auto& [key, vec] : a.table()) {
        auto entry = nlohmann::ordered_json::array();
        entry.push_back(key.first);
        entry.push_back(key.second);
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& [k, c] : vec) coeffs.push_back(nlohmann::ordered_json::array({k, c.str()}));
        entry.push_back(std::move(coeffs));
        brackets.push_back(std::move(entry));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

SuperAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("algebra JSON: object expected");
    for (const char* key : {"name", "dim", "parity", "brackets"})
        if (!j.contains(key)) throw parse_error(std::string("algebra JSON: missing key '") + key + "'");
    const std::string name = j.at("name").get<std::string>();
    const int dim = j.at("dim").get<int>();
    if (dim < 0) throw parse_error("algebra JSON: negative dim");
    std::vector<int> parity = j.at("parity").get<std::vector<int>>();
    if (static_cast<int>(parity.size()) != dim)
        throw parse_error("algebra JSON: parity length differs from dim");
    BracketTable table;
    std::pair<int, int> prev{-1, -1};
    for (const auto& entry : j.at("brackets")) {
        if (!entry.is_array() || entry.size() != 3)
            throw parse_error("algebra JSON: bracket entry must be [i, j, coeffs]");
        const int i = entry.at(0).get<int>();
        const int jj = entry.at(1).get<int>();
        if (i < 0 || jj < i || jj >= dim) throw parse_error("algebra JSON: bracket pair out of range");
        if (std::make_pair(i, jj) <= prev) throw parse_error("algebra JSON: pairs not sorted");
        prev = {i, jj};
        SparseVec vec;
        int prev_k = -1;
        for (const auto& ce : entry.at(2)) {
            if (!ce.is_array() || ce.size() != 2)
                throw parse_error("algebra JSON: coefficient entry must be [k, \"n/d\"]");
            const int k = ce.at(0).get<int>();
            if (k <= prev_k) throw parse_error("algebra JSON: coefficients not sorted");
            prev_k = k;
            const std::string s = ce.at(1).get<std::string>();
            Rational c = Rational::parse(s);
            if (c.str() != s) throw parse_error("algebra JSON: non-canonical rational '" + s + "'");
            if (c.is_zero()) throw parse_error("algebra JSON: zero coefficient stored");
            vec.emplace_back(k, std::move(c));
        }
        if (vec.empty()) throw parse_error("algebra JSON: empty bracket entry");
        table.emplace(std::make_pair(i, jj), std::move(vec));
    }
    try {
        return SuperAlgebra(name, std::move(parity), std::move(table));
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("algebra JSON: ") + e.what());
    }
}

nlohmann::ordered_json meta_to_json(const AlgebraMeta& m) {
    nlohmann::ordered_json j;
    j["family"] = m.family;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.labels) labels[k] = v;
    j["labels"] = std::move(labels);
    j["cartan"] = m.cartan;
    return j;
}

AlgebraMeta meta_from_json(const nlohmann::json& j) {
    AlgebraMeta m;
    if (!j.is_object()) throw parse_error("sidecar JSON: object expected");
    if (j.contains("family")) m.family = j.at("family").get<std::string>();
    if (j.contains("labels"))
        for (const auto& [k, v] : j.at("labels").items()) m.labels[k] = v.get<int>();
    if (j.contains("cartan")) m.cartan = j.at("cartan").get<std::vector<int>>();
    return m;
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump() + "\n"; }

}  // namespace superder
