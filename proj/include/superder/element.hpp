#pragma once

/**
 * @file element.hpp
 * @brief Sparse exact vectors over Q and reduced-echelon subspaces.
 */

#include <map>
#include <utility>
#include <vector>

#include "superder/rational.hpp"

namespace superder {

/// Sparse vector: (index, coefficient) pairs, sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sv_unit(int idx);
Rational sv_get(const SparseVec& v, int idx);
/// a + c*b
SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec sv_scale(const SparseVec& v, const Rational& c);
bool sv_is_zero(const SparseVec& v);

/**
 * Row-reduced subspace over Q: rows kept in reduced echelon form (pivot
 * coefficient 1, pivot columns eliminated from every other row). Insertion
 * order does not affect the final row set.
 */
class Subspace {
public:
    Subspace() = default;

    /// Reduce v against the rows; returns the residual (zero iff v is a member).
    SparseVec reduce(SparseVec v) const;

    /// Insert v; returns true if the dimension grew.
    bool insert(SparseVec v);

    bool contains(const SparseVec& v) const { return sv_is_zero(reduce(v)); }

    int dim() const { return static_cast<int>(rows_.size()); }

    /// Rows in pivot order.
    std::vector<SparseVec> rows() const;

    const std::map<int, SparseVec>& row_map() const { return rows_; }

    std::vector<int> pivots() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

private:
    std::map<int, SparseVec> rows_;  // pivot column -> row
};

}  // namespace superder
