#pragma once

/**
 * @file catalog.hpp
 * @brief Constructors for the classical families: A(m,n), the A(n,n)
 *        quotient, the orthosymplectic B/C/D families, P(n), Q(n) and the
 *        one-parameter family D(2,1;alpha), all with exact rational
 *        structure constants.
 *
 * Matrix families are realized inside gl(p|q) and converted to structure
 * constants by expressing every superbracket of basis matrices back in the
 * basis. The orthosymplectic form is split (hyperbolic pairs) so that the
 * Cartan subalgebra consists of diagonal matrices with rational ad-eigenvalues.
 */

#include <map>
#include <string>
#include <vector>

#include "superder/json_io.hpp"
#include "superder/superalgebra.hpp"

namespace superder {

struct FamilySpec {
    enum Family { A, Aqq, B, C, D, P, Q, D21 } family = A;
    int m = 0;
    int n = 0;
    Rational alpha;  // D21 only

    /// Parse a CLI spec string: "A:1,0", "Aqq:1", "B:1,1", "C:2", "D:2,1",
    /// "P:2", "Q:2", "D21:2/3".
    static FamilySpec parse(const std::string& s);
    /// Throws std::domain_error with the reason if the parameters are invalid.
    void validate() const;
    std::string str() const;           // CLI spec form
    std::string display_name() const;  // e.g. "A(1,0)", "D(2,1;2/3)"
};

struct CatalogEntry {
    SuperAlgebra algebra;
    AlgebraMeta meta;
};

/// Build the family member. The result passes check_superidentities with an
/// empty report and is simple (asserted by the test suite, not recomputed here).
CatalogEntry construct(const FamilySpec& spec);

/// Plain Lie algebra sl2 in the column convention (h, e, f), h = diag(1,-1),
/// e = e_12, f = e_21. Fixture for the antiderivation results at rank 1.
CatalogEntry make_sl2();

/// sl(p,q) without any quotient (used by the A constructors and tests).
CatalogEntry make_sl(int p, int q);

/// Parse either a family spec or the "sl2" fixture name.
CatalogEntry construct_by_name(const std::string& spec);

// --- matrix scaffolding -----------------------------------------------------

/// Sparse rectangular matrix over Q.
struct MatrixElement {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, Rational> entries;

    static MatrixElement zero(int r, int c) { return {r, c, {}}; }
    static MatrixElement unit(int n, int r, int c);

    void add(int r, int c, const Rational& v);
    bool is_zero() const { return entries.empty(); }
    friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);
MatrixElement operator+(const MatrixElement& a, const MatrixElement& b);
MatrixElement operator-(const MatrixElement& a, const MatrixElement& b);

/// ab - (-1)^{px py} ba for square matrices of equal size.
MatrixElement matrix_superbracket(const MatrixElement& x, const MatrixElement& y, int px, int py);

/// Exact coordinates of x in the span of basis; throws std::domain_error
/// ("bracket left the subalgebra") if x is not in the span.
SparseVec express_in_basis(const MatrixElement& x, const std::vector<MatrixElement>& basis);

}  // namespace superder
