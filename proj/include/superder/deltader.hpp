#pragma once

/**
 * @file deltader.hpp
 * @brief The delta-derivation linear system: exact assembly, nullspace
 *        solving at fixed rational delta, the parametric scan over the
 *        symbolic parameter, and classification of solution spaces.
 *
 * A candidate map phi is an n x n rational matrix (column j = image of basis
 * vector j, row-major flattening). For every basis pair i <= j the condition
 *   phi([e_i,e_j]) - delta([phi(e_i),e_j] + [e_i,phi(e_j)]) = 0
 * contributes up to n rows; the (j,i) equation is a scalar multiple and is
 * skipped. Every solution is re-verified on all ordered pairs afterwards.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "superder/polynomial.hpp"
#include "superder/superalgebra.hpp"

namespace superder {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Unknown-column processing order of the eliminations (the second order
/// backs the independent-oracle equivalence checks).
enum class ElimOrder { Forward, Reversed };

struct DerivationSpace {
    Rational delta;
    std::vector<std::vector<Rational>> basis;  // reduced echelon, flattened n*n, pivots 1
    std::string algebra_name;
    int dim() const { return static_cast<int>(basis.size()); }
};

struct SpaceAnalysis {
    bool grading_preserving = true;        // phi(G_0) in G_0 and phi(G_1) in G_1, all maps
    std::vector<bool> per_map_grading;
    bool scalar_line = false;              // dim 1 and the map is a multiple of the identity
    int inner_dim = -1;                    // delta = 1 only: dim span(ad e_i)
    bool inner_contained = false;          // delta = 1 only: span(ad) inside the space
    int outer_dim = -1;                    // delta = 1 only: dim - dim(inner meet space)
};

struct CriticalPoint {
    Rational delta;
    int nullity;
};

struct ScanProbes {
    std::uint64_t seed = kDefaultSeed;
    std::vector<Rational> deltas;
    bool ok = true;
};

struct CriticalReport {
    int generic_rank = 0;
    bool degenerate = false;  // generic_rank == 0
    std::vector<CriticalPoint> critical;
    std::vector<IntPolynomial> unresolved_factors;
    ScanProbes probes;
};

/// Equation rows at a fixed delta (sparse, columns k*n+l for phi_{k,l});
/// zero rows are omitted.
std::vector<SparseVec> assemble_system(const SuperAlgebra& a, const Rational& delta);

/// Symbolic rows over Z[t]: entries have degree <= 1; rows are cleared of
/// rational denominators and integer content.
using PolyRow = std::vector<std::pair<int, IntPolynomial>>;
std::vector<PolyRow> assemble_system_symbolic(const SuperAlgebra& a);

/// Exact nullspace at the given delta, canonical reduced echelon basis.
DerivationSpace derivation_space(const SuperAlgebra& a, const Rational& delta,
                                 ElimOrder order = ElimOrder::Forward);

SpaceAnalysis analyze_space(const SuperAlgebra& a, const DerivationSpace& s);

/// Fraction-free elimination over Z[t] with content stripping; rational roots
/// of the pivot polynomials (and of any stripped polynomial row contents) are
/// the critical candidates; each is confirmed by an exact pointwise solve.
CriticalReport critical_deltas(const SuperAlgebra& a, std::uint64_t seed = kDefaultSeed);

nlohmann::ordered_json derive_report(const SuperAlgebra& a, const DerivationSpace& s);
nlohmann::ordered_json scan_report(const CriticalReport& r);

}  // namespace superder
