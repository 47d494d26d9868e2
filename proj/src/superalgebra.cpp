#include "superder/superalgebra.hpp"

#include <stdexcept>

namespace superder {

std::string Violation::describe() const {
    switch (kind) {
        case Grading:
            return "grading violated at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Anticommutativity:
            return "super-anticommutativity violated at pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
        default:
            return "super Jacobi violated at triple (" + std::to_string(i) + "," + std::to_string(j) +
                   "," + std::to_string(k) + ")";
    }
}

SuperAlgebra::SuperAlgebra(std::string name, std::vector<int> parity, BracketTable table)
    : name_(std::move(name)),
      dim_(static_cast<int>(parity.size())),
      parity_(std::move(parity)),
      table_(std::move(table)) {
    for (int p : parity_)
        if (p != 0 && p != 1) throw std::domain_error("parity bits must be 0 or 1");
    for (const auto& [key, vec] : table_) {
        const auto [i, j] = key;
        if (i < 0 || j < i || j >= dim_) throw std::domain_error("bracket table key out of range");
        if (vec.empty()) throw std::domain_error("bracket table stores an empty entry");
        for (const auto& [k, c] : vec) {
            if (k < 0 || k >= dim_) throw std::domain_error("bracket table index out of range");
            if (c.is_zero()) throw std::domain_error("bracket table stores a zero coefficient");
        }
    }
}

int SuperAlgebra::even_dim() const {
    int n = 0;
    for (int p : parity_) n += (p == 0);
    return n;
}

SparseVec SuperAlgebra::bracket_basis(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::domain_error("basis index out of range");
    if (i <= j) {
        auto it = table_.find({i, j});
        return it == table_.end() ? SparseVec{} : it->second;
    }
    auto it = table_.find({j, i});
    if (it == table_.end()) return {};
    // [e_i,e_j] = -(-1)^{p(i)p(j)} [e_j,e_i]
    const bool both_odd = parity_[static_cast<size_t>(i)] && parity_[static_cast<size_t>(j)];
    return sv_scale(it->second, Rational(both_odd ? 1 : -1));
}

SparseVec SuperAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    SparseVec acc;
    for (const auto& [i, xi] : x)
        for (const auto& [j, yj] : y) acc = sv_axpy(acc, xi * yj, bracket_basis(i, j));
    return acc;
}

ViolationReport SuperAlgebra::check_superidentities() const {
    ViolationReport report;
    for (const auto& [key, vec] : table_) {
        const auto [i, j] = key;
        const int pij = parity_[static_cast<size_t>(i)] ^ parity_[static_cast<size_t>(j)];
        for (const auto& [k, c] : vec) {
            if (parity_[static_cast<size_t>(k)] != pij) {
                report.push_back({Violation::Grading, i, j, k});
                break;
            }
        }
    }
    // With i <= j storage the only representable anticommutativity failure is
    // a nonzero [e_i,e_i] for even e_i.
    for (int i = 0; i < dim_; ++i)
        if (parity_[static_cast<size_t>(i)] == 0 && !bracket_basis(i, i).empty())
            report.push_back({Violation::Anticommutativity, i, i, -1});
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            const SparseVec bij = bracket_basis(i, j);
            for (int k = 0; k < dim_; ++k) {
                // [[x,y],z] - [x,[y,z]] - (-1)^{p(y)p(z)} [[x,z],y]
                SparseVec lhs = bracket(bij, sv_unit(k));
                lhs = sv_axpy(lhs, Rational(-1), bracket(sv_unit(i), bracket_basis(j, k)));
                const bool jk_odd =
                    parity_[static_cast<size_t>(j)] && parity_[static_cast<size_t>(k)];
                lhs = sv_axpy(lhs, Rational(jk_odd ? 1 : -1), bracket(bracket_basis(i, k), sv_unit(j)));
                if (!lhs.empty()) report.push_back({Violation::Jacobi, i, j, k});
            }
        }
    }
    return report;
}

Subspace SuperAlgebra::component(int parity) const {
    Subspace s;
    for (int i = 0; i < dim_; ++i)
        if (parity_[static_cast<size_t>(i)] == parity) s.insert(sv_unit(i));
    return s;
}

Subspace SuperAlgebra::derived_odd() const {
    Subspace s;
    for (int i = 0; i < dim_; ++i) {
        if (!parity_[static_cast<size_t>(i)]) continue;
        for (int j = i; j < dim_; ++j) {
            if (!parity_[static_cast<size_t>(j)]) continue;
            s.insert(bracket_basis(i, j));
        }
    }
    return s;
}

Subspace SuperAlgebra::ideal_closure(const Subspace& seed) const {
    Subspace closure;
    std::vector<SparseVec> queue;
    for (const auto& row : seed.rows())
        if (closure.insert(row)) queue.push_back(row);
    while (!queue.empty()) {
        SparseVec v = std::move(queue.back());
        queue.pop_back();
        for (int j = 0; j < dim_; ++j) {
            SparseVec w = bracket(v, sv_unit(j));
            if (closure.insert(w)) queue.push_back(std::move(w));
        }
    }
    return closure;
}

bool SuperAlgebra::is_simple() const {
    if (dim_ < 2) throw std::domain_error("is_simple requires dim >= 2");
    if (table_.empty()) return false;
    // a nonzero central element spans a proper ideal even when no basis
    // vector does (the scalar line of sl(n,n) is the motivating case)
    {
        Subspace constraints;  // rows over the coordinates of a central v
        for (int j = 0; j < dim_; ++j) {
            std::map<int, SparseVec> rows_by_k;
            for (int i = 0; i < dim_; ++i)
                for (const auto& [k, c] : bracket_basis(i, j)) rows_by_k[k].emplace_back(i, c);
            for (auto& [k, row] : rows_by_k) constraints.insert(std::move(row));
        }
        if (constraints.dim() < dim_) return false;  // nontrivial center
    }
    for (int i = 0; i < dim_; ++i) {
        Subspace seed;
        seed.insert(sv_unit(i));
        if (ideal_closure(seed).dim() != dim_) return false;
    }
    return true;
}

SuperAlgebra SuperAlgebra::quotient(const Subspace& ideal, std::vector<int>* old_of_new,
                                    const std::string& new_name) const {
    for (const auto& row : ideal.rows()) {
        int p = -1;
        for (const auto& [idx, c] : row) {
            const int pi = parity_[static_cast<size_t>(idx)];
            if (p == -1) p = pi;
            if (pi != p) throw std::domain_error("quotient: subspace is not graded");
        }
        for (int j = 0; j < dim_; ++j)
            if (!sv_is_zero(ideal.reduce(bracket(row, sv_unit(j)))))
                throw std::domain_error("quotient: subspace is not an ideal");
    }

    std::vector<int> old_of;  // surviving original indices, ascending
    std::vector<int> new_of(static_cast<size_t>(dim_), -1);
    {
        const auto piv = ideal.pivots();
        size_t pi = 0;
        for (int i = 0; i < dim_; ++i) {
            if (pi < piv.size() && piv[pi] == i) {
                ++pi;
                continue;
            }
            new_of[static_cast<size_t>(i)] = static_cast<int>(old_of.size());
            old_of.push_back(i);
        }
    }

    std::vector<int> parity;
    parity.reserve(old_of.size());
    for (int i : old_of) parity.push_back(parity_[static_cast<size_t>(i)]);

    BracketTable table;
    for (size_t a = 0; a < old_of.size(); ++a) {
        for (size_t b = a; b < old_of.size(); ++b) {
            SparseVec v = ideal.reduce(bracket_basis(old_of[a], old_of[b]));
            if (v.empty()) continue;
            SparseVec w;
            w.reserve(v.size());
            for (const auto& [idx, c] : v) w.emplace_back(new_of[static_cast<size_t>(idx)], c);
            table.emplace(std::make_pair(static_cast<int>(a), static_cast<int>(b)), std::move(w));
        }
    }
    if (old_of_new) *old_of_new = old_of;
    return SuperAlgebra(new_name.empty() ? name_ + "/ideal" : new_name, std::move(parity),
                        std::move(table));
}

}  // namespace superder
