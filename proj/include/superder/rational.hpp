#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Thin wrapper around GMP's mpq_class that enforces the canonical form
 * (positive denominator, reduced, zero is 0/1) on every construction path
 * and pins the serialization format to "n/d".
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superder {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { canon(d != 0); }
    Rational(const Integer& n, const Integer& d) : q_(n, d) { canon(d != 0); }
    explicit Rational(const mpq_class& q, bool canonical = false) : q_(q) {
        if (!canonical) canon(q.get_den() != 0);
    }

    static Rational parse(std::string_view s);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sgn() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational operator-() const { return Rational(mpq_class(-q_), true); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(1) / q_, true);
    }

    /// Canonical "n/d" form, e.g. "0/1", "-1/2", "3/1".
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

private:
    void canon(bool den_ok) {
        if (!den_ok) throw std::domain_error("division by zero");
        q_.canonicalize();
    }

    mpq_class q_;
};

/// Canonical reduced fraction with positive denominator.
inline Rational rat_normalize(const Integer& n, const Integer& d) { return Rational(n, d); }

inline Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpq_class q(std::string(s), 10);
            return Rational(q, false);
        }
        mpz_class n(std::string(s.substr(0, slash)), 10);
        mpz_class d(std::string(s.substr(slash + 1)), 10);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: '" + std::string(s) + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace superder
