#include "superder/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace superder {

namespace {

std::string functional_str(const std::vector<Rational>& f) {
    std::string s = "(";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += f[i].str();
    }
    return s + ")";
}

}  // namespace

RootDatum root_decompose(const SuperAlgebra& a, const std::vector<int>& cartan) {
    std::vector<bool> in_cartan(static_cast<size_t>(a.dim()), false);
    for (int h : cartan) {
        if (h < 0 || h >= a.dim()) throw std::domain_error("Cartan index out of range");
        in_cartan[static_cast<size_t>(h)] = true;
    }
    for (int h1 : cartan)
        for (int h2 : cartan)
            if (!sv_is_zero(a.bracket_basis(h1, h2)))
                throw std::domain_error("basis is not a root basis");

    RootDatum rd;
    rd.cartan = cartan;
    std::map<std::pair<std::vector<Rational>, int>, std::vector<int>> groups;
    const std::vector<Rational> zero_func(cartan.size(), Rational(0));
    for (int j = 0; j < a.dim(); ++j) {
        if (in_cartan[static_cast<size_t>(j)]) continue;
        std::vector<Rational> func;
        func.reserve(cartan.size());
        for (int h : cartan) {
            SparseVec v = a.bracket_basis(h, j);
            Rational eig(0);
            for (const auto& [k, c] : v) {
                if (k != j) throw std::domain_error("basis is not a root basis");
                eig = c;
            }
            func.push_back(std::move(eig));
        }
        groups[{std::move(func), a.parity(j)}].push_back(j);
    }
    for (int h : cartan) rd.zero_space.insert(sv_unit(h));
    for (const auto& [key, members] : groups) {
        if (key.first == zero_func) {
            for (int j : members) rd.zero_space.insert(sv_unit(j));
            continue;
        }
        RootSpace rs;
        rs.functional = key.first;
        rs.parity = key.second;
        for (int j : members) rs.space.insert(sv_unit(j));
        rd.roots.push_back(std::move(rs));
    }
    return rd;
}

std::vector<std::string> verify_theorem2(const SuperAlgebra& a, const RootDatum& rd) {
    std::vector<std::string> report;
    // (a) G_0 = H
    if (rd.zero_space.dim() != static_cast<int>(rd.cartan.size()))
        report.push_back("(a) zero-weight space has dim " + std::to_string(rd.zero_space.dim()) +
                         " but the Cartan subalgebra has dim " + std::to_string(rd.cartan.size()));
    // (b) dim G_alpha = 1, counting both parities of one functional together
    std::map<std::vector<Rational>, int> total_dim;
    for (const auto& rs : rd.roots) total_dim[rs.functional] += rs.dim();
    for (const auto& [func, d] : total_dim)
        if (d != 1) report.push_back("(b) root " + functional_str(func) + " has multiplicity " +
                                     std::to_string(d));
    // (c) [G_a, G_b] != 0 iff a + b is a root or zero; products land in G_{a+b}
    std::set<std::vector<Rational>> root_set;
    for (const auto& rs : rd.roots) root_set.insert(rs.functional);
    const std::vector<Rational> zero_func(rd.cartan.size(), Rational(0));
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        for (size_t j = i; j < rd.roots.size(); ++j) {
            const auto& ra = rd.roots[i];
            const auto& rb = rd.roots[j];
            std::vector<Rational> sum(ra.functional);
            for (size_t k = 0; k < sum.size(); ++k) sum[k] += rb.functional[k];
            const bool sum_is_zero = (sum == zero_func);
            const bool expected = sum_is_zero || root_set.count(sum) > 0;
            bool nonzero = false;
            bool contained = true;
            for (const auto& x : ra.space.rows()) {
                for (const auto& y : rb.space.rows()) {
                    SparseVec prod = a.bracket(x, y);
                    if (sv_is_zero(prod)) continue;
                    nonzero = true;
                    if (!sum_is_zero) {
                        // the product must lie in the root space of sum (with the product parity)
                        Subspace target;
                        for (const auto& rs : rd.roots)
                            if (rs.functional == sum)
                                for (const auto& row : rs.space.rows()) target.insert(row);
                        if (!target.contains(prod)) contained = false;
                    }
                }
            }
            if (nonzero != expected)
                report.push_back("(c) [" + functional_str(ra.functional) + ", " +
                                 functional_str(rb.functional) + "] is " +
                                 (nonzero ? "nonzero" : "zero") + " but alpha+beta " +
                                 (expected ? "lies in" : "is outside") + " the root set");
            if (!contained)
                report.push_back("(c) product of " + functional_str(ra.functional) + " and " +
                                 functional_str(rb.functional) + " leaves G_{alpha+beta}");
        }
    }
    return report;
}

namespace {

struct TableRoot {
    std::vector<Rational> coords;  // over the family's epsilon/delta symbols
    int parity;
};

struct FamilyTable {
    int fdim = 0;
    std::vector<TableRoot> roots;
    std::vector<TableRoot> simple;  // the simple system Pi
};

std::vector<Rational> coords(int fdim, std::initializer_list<std::pair<int, int>> terms) {
    std::vector<Rational> v(static_cast<size_t>(fdim), Rational(0));
    for (const auto& [idx, c] : terms) v[static_cast<size_t>(idx)] += Rational(c);
    return v;
}

FamilyTable family_table(const FamilySpec& spec) {
    FamilyTable t;
    switch (spec.family) {
        case FamilySpec::A: {
            const int p = spec.m + 1, q = spec.n + 1;
            t.fdim = p + q;
            auto E = [&](int i) { return i; };
            auto D = [&](int j) { return p + j; };
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    if (i != j) t.roots.push_back({coords(t.fdim, {{E(i), 1}, {E(j), -1}}), 0});
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    if (i != j) t.roots.push_back({coords(t.fdim, {{D(i), 1}, {D(j), -1}}), 0});
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < q; ++j)
                    for (int s : {1, -1})
                        t.roots.push_back({coords(t.fdim, {{E(i), s}, {D(j), -s}}), 1});
            for (int i = 0; i + 1 < p; ++i)
                t.simple.push_back({coords(t.fdim, {{E(i), 1}, {E(i + 1), -1}}), 0});
            t.simple.push_back({coords(t.fdim, {{E(p - 1), 1}, {D(0), -1}}), 1});
            for (int j = 0; j + 1 < q; ++j)
                t.simple.push_back({coords(t.fdim, {{D(j), 1}, {D(j + 1), -1}}), 0});
            break;
        }
        case FamilySpec::B: {
            const int m = spec.m, n = spec.n;
            t.fdim = m + n;
            auto E = [&](int i) { return i; };
            auto D = [&](int j) { return m + j; };
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{E(i), si}, {E(j), sj}}), 0});
            for (int i = 0; i < n; ++i)
                for (int s : {2, -2}) t.roots.push_back({coords(t.fdim, {{D(i), s}}), 0});
            for (int i = 0; i < m; ++i)
                for (int s : {1, -1}) t.roots.push_back({coords(t.fdim, {{E(i), s}}), 0});
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{D(i), si}, {D(j), sj}}), 0});
            for (int i = 0; i < n; ++i)
                for (int s : {1, -1}) t.roots.push_back({coords(t.fdim, {{D(i), s}}), 1});
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{E(i), si}, {D(j), sj}}), 1});
            for (int j = 0; j + 1 < n; ++j)
                t.simple.push_back({coords(t.fdim, {{D(j), 1}, {D(j + 1), -1}}), 0});
            if (m > 0) {
                t.simple.push_back({coords(t.fdim, {{D(n - 1), 1}, {E(0), -1}}), 1});
                for (int i = 0; i + 1 < m; ++i)
                    t.simple.push_back({coords(t.fdim, {{E(i), 1}, {E(i + 1), -1}}), 0});
                t.simple.push_back({coords(t.fdim, {{E(m - 1), 1}}), 0});
            } else {
                t.simple.push_back({coords(t.fdim, {{D(n - 1), 1}}), 1});
            }
            break;
        }
        case FamilySpec::C: {
            const int k = spec.n - 1;  // number of delta coordinates
            t.fdim = 1 + k;
            const int E = 0;
            auto D = [&](int j) { return 1 + j; };
            for (int i = 0; i < k; ++i)
                for (int s : {2, -2}) t.roots.push_back({coords(t.fdim, {{D(i), s}}), 0});
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{D(i), si}, {D(j), sj}}), 0});
            for (int i = 0; i < k; ++i)
                for (int se : {1, -1})
                    for (int sd : {1, -1})
                        t.roots.push_back({coords(t.fdim, {{E, se}, {D(i), sd}}), 1});
            for (int j = 0; j + 1 < k; ++j)
                t.simple.push_back({coords(t.fdim, {{D(j), 1}, {D(j + 1), -1}}), 0});
            t.simple.push_back({coords(t.fdim, {{D(k - 1), 1}, {E, -1}}), 1});
            t.simple.push_back({coords(t.fdim, {{D(k - 1), 1}, {E, 1}}), 1});
            break;
        }
        case FamilySpec::D: {
            const int m = spec.m, n = spec.n;
            t.fdim = m + n;
            auto E = [&](int i) { return i; };
            auto D = [&](int j) { return m + j; };
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{E(i), si}, {E(j), sj}}), 0});
            for (int i = 0; i < n; ++i)
                for (int s : {2, -2}) t.roots.push_back({coords(t.fdim, {{D(i), s}}), 0});
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{D(i), si}, {D(j), sj}}), 0});
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            t.roots.push_back({coords(t.fdim, {{E(i), si}, {D(j), sj}}), 1});
            for (int i = 0; i + 1 < m; ++i)
                t.simple.push_back({coords(t.fdim, {{E(i), 1}, {E(i + 1), -1}}), 0});
            t.simple.push_back({coords(t.fdim, {{E(m - 1), 1}, {D(0), -1}}), 1});
            for (int j = 0; j + 1 < n; ++j)
                t.simple.push_back({coords(t.fdim, {{D(j), 1}, {D(j + 1), -1}}), 0});
            t.simple.push_back({coords(t.fdim, {{D(n - 1), 2}}), 0});
            break;
        }
        case FamilySpec::D21: {
            t.fdim = 3;
            for (int i = 0; i < 3; ++i)
                for (int s : {2, -2}) t.roots.push_back({coords(t.fdim, {{i, s}}), 0});
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1})
                        t.roots.push_back({coords(t.fdim, {{0, s1}, {1, s2}, {2, s3}}), 1});
            t.simple.push_back({coords(t.fdim, {{0, 1}, {1, 1}, {2, 1}}), 1});
            t.simple.push_back({coords(t.fdim, {{0, -2}}), 0});
            t.simple.push_back({coords(t.fdim, {{1, -2}}), 0});
            break;
        }
        default:
            throw std::domain_error("match_root_table requires a basic family");
    }
    return t;
}

// exact dense solve of M c = b (M given per rows); nullopt when inconsistent
bool solve_exact(std::vector<std::vector<Rational>> M, std::vector<Rational> b,
                 std::vector<Rational>& out) {
    const size_t rows = M.size();
    const size_t cols = rows ? M[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && M[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[r]);
        std::swap(b[sel], b[r]);
        const Rational inv = M[r][c].inverse();
        for (size_t k = c; k < cols; ++k) M[r][k] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            const Rational f = M[i][c];
            for (size_t k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return false;
    out.assign(cols, Rational(0));
    for (size_t i = 0; i < r; ++i) out[static_cast<size_t>(pivot_col_of_row[i])] = b[i];
    return true;
}

}  // namespace

bool match_root_table(const RootDatum& rd, const FamilySpec& spec) {
    const FamilyTable table = family_table(spec);
    const size_t h = rd.cartan.size();
    if (table.simple.size() != h) return false;
    for (const auto& rs : rd.roots)
        if (rs.dim() != 1) return false;
    if (rd.roots.size() != table.roots.size()) return false;

    // coefficients of every table root over the simple system (independent of
    // the assignment)
    std::vector<std::vector<Rational>> pi_coeff;
    {
        std::vector<std::vector<Rational>> M(static_cast<size_t>(table.fdim),
                                             std::vector<Rational>(h, Rational(0)));
        for (size_t k = 0; k < h; ++k)
            for (int f = 0; f < table.fdim; ++f)
                M[static_cast<size_t>(f)][k] = table.simple[k].coords[static_cast<size_t>(f)];
        for (const auto& root : table.roots) {
            std::vector<Rational> c;
            if (!solve_exact(M, root.coords, c)) return false;  // table root outside span(Pi)
            pi_coeff.push_back(std::move(c));
        }
    }

    std::vector<std::pair<std::vector<Rational>, int>> computed;
    computed.reserve(rd.roots.size());
    for (const auto& rs : rd.roots) computed.emplace_back(rs.functional, rs.parity);
    std::sort(computed.begin(), computed.end());

    std::vector<int> assign(h, -1);
    std::vector<bool> used(rd.roots.size(), false);

    auto full_check = [&]() {
        std::vector<std::pair<std::vector<Rational>, int>> image;
        image.reserve(table.roots.size());
        for (size_t t = 0; t < table.roots.size(); ++t) {
            std::vector<Rational> v(h, Rational(0));
            for (size_t k = 0; k < h; ++k) {
                if (pi_coeff[t][k].is_zero()) continue;
                const auto& f = rd.roots[static_cast<size_t>(assign[k])].functional;
                for (size_t x = 0; x < h; ++x) v[x] += pi_coeff[t][k] * f[x];
            }
            image.emplace_back(std::move(v), table.roots[t].parity);
        }
        std::sort(image.begin(), image.end());
        return image == computed;
    };

    // lexicographic depth-first assignment of the simple system
    auto dfs = [&](auto&& self, size_t k) -> bool {
        if (k == h) return full_check();
        for (size_t i = 0; i < rd.roots.size(); ++i) {
            if (used[i] || rd.roots[i].parity != table.simple[k].parity) continue;
            used[i] = true;
            assign[k] = static_cast<int>(i);
            if (self(self, k + 1)) return true;
            used[i] = false;
            assign[k] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

nlohmann::ordered_json root_report(const SuperAlgebra& a, const RootDatum& rd) {
    nlohmann::ordered_json j;
    j["cartan_dim"] = rd.cartan.size();
    auto roots = nlohmann::ordered_json::array();
    for (const auto& rs : rd.roots) {
        nlohmann::ordered_json r;
        auto func = nlohmann::ordered_json::array();
        for (const auto& c : rs.functional) func.push_back(c.str());
        r["functional"] = std::move(func);
        r["parity"] = rs.parity;
        r["dim"] = rs.dim();
        roots.push_back(std::move(r));
    }
    j["roots"] = std::move(roots);
    const auto violations = verify_theorem2(a, rd);
    if (violations.empty())
        j["theorem2"] = "ok";
    else
        j["theorem2"] = violations;
    return j;
}

}  // namespace superder
