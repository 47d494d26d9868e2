#pragma once

/**
 * @file roots.hpp
 * @brief Root-space decomposition with respect to a supplied Cartan basis,
 *        verification of the simultaneous-eigenspace structure, and matching
 *        of the computed root multiset against the family tables.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "superder/catalog.hpp"
#include "superder/superalgebra.hpp"

namespace superder {

struct RootSpace {
    std::vector<Rational> functional;  // over the Cartan basis, in cartan order
    int parity;
    Subspace space;
    int dim() const { return space.dim(); }
};

struct RootDatum {
    std::vector<int> cartan;
    std::vector<RootSpace> roots;  // nonzero functionals, sorted by (functional, parity)
    Subspace zero_space;           // Cartan plus any further zero-weight vectors
};

/// Group basis vectors by their joint ad-eigenvalue vector under the Cartan
/// basis. Throws std::domain_error("basis is not a root basis") if some
/// ad-action is not diagonal on the basis.
RootDatum root_decompose(const SuperAlgebra& a, const std::vector<int>& cartan);

/// Checks (a) zero space = Cartan span, (b) one-dimensional root spaces,
/// (c) [G_alpha, G_beta] nonzero exactly when alpha + beta is a root or zero,
/// plus containment of products in the target root space. Violations are
/// returned as data.
std::vector<std::string> verify_theorem2(const SuperAlgebra& a, const RootDatum& rd);

/// True iff the computed root multiset equals the family's table under some
/// invertible linear identification of coordinates, found by assigning the
/// simple system greedily in lexicographic order.
bool match_root_table(const RootDatum& rd, const FamilySpec& spec);

nlohmann::ordered_json root_report(const SuperAlgebra& a, const RootDatum& rd);

}  // namespace superder
