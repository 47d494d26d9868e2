#pragma once

/**
 * @file superalgebra.hpp
 * @brief Finite-dimensional superalgebras given by basis, parity and a sparse
 *        structure-constant table.
 *
 * The table stores ordered pairs i <= j only; the (j, i) bracket is derived
 * from super-anticommutativity. Bracket evaluation, the superidentity
 * checker, ideal machinery and quotients live here.
 */

#include <map>
#include <string>
#include <vector>

#include "superder/element.hpp"

namespace superder {

using BracketTable = std::map<std::pair<int, int>, SparseVec>;

/// One violated identity, as data (never thrown).
struct Violation {
    enum Kind { Grading, Anticommutativity, Jacobi } kind;
    int i, j, k;  // k = -1 for pair violations
    std::string describe() const;
};

using ViolationReport = std::vector<Violation>;

class SuperAlgebra {
public:
    /// Table keys must satisfy i <= j; entries must be nonzero and in range.
    SuperAlgebra(std::string name, std::vector<int> parity, BracketTable table);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    int parity(int i) const { return parity_.at(static_cast<size_t>(i)); }
    const std::vector<int>& parities() const { return parity_; }
    const BracketTable& table() const { return table_; }

    int even_dim() const;
    int odd_dim() const { return dim_ - even_dim(); }

    /// [e_i, e_j] for any ordered pair (derived for i > j).
    SparseVec bracket_basis(int i, int j) const;
    /// Bilinear extension of the table.
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    /// Exhaustive: grading compatibility of every stored entry,
    /// super-anticommutativity on all pairs, super Jacobi on all triples.
    ViolationReport check_superidentities() const;

    /// Span of the basis vectors of the given parity.
    Subspace component(int parity) const;
    /// Span of all brackets of odd basis pairs.
    Subspace derived_odd() const;

    /// Smallest subspace containing seed and closed under bracketing with the basis.
    Subspace ideal_closure(const Subspace& seed) const;

    /// True iff every single-basis-element seed closes to the full space and
    /// the bracket is not identically zero. Requires dim >= 2.
    bool is_simple() const;

    /// Quotient by a graded ideal; complement basis = non-pivot original basis
    /// vectors. old_of_new, if given, receives the original index of each
    /// surviving basis vector.
    SuperAlgebra quotient(const Subspace& ideal, std::vector<int>* old_of_new = nullptr,
                          const std::string& new_name = "") const;

private:
    std::string name_;
    int dim_;
    std::vector<int> parity_;
    BracketTable table_;
};

}  // namespace superder
