#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate integer polynomials in the scan parameter, and their
 *        fraction field.
 *
 * Coefficients are stored lowest degree first; the zero polynomial is the
 * empty list. Everything is exact; the rational-root machinery backs the
 * parametric critical-value scan.
 */

#include <string>
#include <vector>

#include "superder/rational.hpp"

namespace superder {

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(Integer v);
    /// The monomial c * t^k.
    static IntPolynomial monomial(Integer c, int k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    const Integer& leading() const { return c_.back(); }

    /// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
    Integer content() const;
    /// p / content(p), with sign fixed so the leading coefficient is positive.
    IntPolynomial primitive_part() const;

    IntPolynomial derivative() const;
    Rational eval(const Rational& x) const;
    Integer eval_int(const Integer& x) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator*(const Integer& s) const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ != b.c_; }
    /// Lexicographic on (degree, coefficients high-to-low); total order for canonical sorting.
    friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

    /// Exact quotient; throws std::domain_error unless b divides a over the integers.
    IntPolynomial divide_exact(const IntPolynomial& b) const;

    /// Human-readable form, e.g. "2*t^2 - t + 1".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// Primitive greatest common divisor (positive leading coefficient); gcd(0,0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree part p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// All divisors of |n| (n != 0), unsorted.
std::vector<Integer> divisors(const Integer& n);

/// Exactly the rational roots of p (sorted ascending), via the rational-root
/// theorem on the primitive part, each verified by exact evaluation.
/// Throws std::domain_error on the zero polynomial.
std::vector<Rational> rational_roots(const IntPolynomial& p);

/**
 * Element of the fraction field Q(t), reduced: gcd(num, den) = 1 (content
 * included), denominator with positive leading coefficient, zero is 0/1.
 */
class RatFunction {
public:
    RatFunction() : num_(), den_(IntPolynomial::constant(1)) {}
    RatFunction(IntPolynomial num, IntPolynomial den);
    static RatFunction from_poly(IntPolynomial p) { return RatFunction(std::move(p), IntPolynomial::constant(1)); }
    static RatFunction from_rational(const Rational& r) {
        return RatFunction(IntPolynomial::constant(r.num()), IntPolynomial::constant(r.den()));
    }

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunction operator-() const;
    friend RatFunction operator+(const RatFunction& a, const RatFunction& b);
    friend RatFunction operator-(const RatFunction& a, const RatFunction& b);
    friend RatFunction operator*(const RatFunction& a, const RatFunction& b);
    friend RatFunction operator/(const RatFunction& a, const RatFunction& b);
    friend bool operator==(const RatFunction& a, const RatFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunction& a, const RatFunction& b) { return !(a == b); }

    /// Exact evaluation; throws std::domain_error if x is a pole.
    Rational eval(const Rational& x) const;

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    IntPolynomial num_, den_;
};

}  // namespace superder
