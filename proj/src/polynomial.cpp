#include "superder/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superder {

IntPolynomial IntPolynomial::constant(Integer v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPolynomial IntPolynomial::monomial(Integer c, int k) {
    IntPolynomial p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Integer(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    IntPolynomial p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c / g);
    return p;
}

IntPolynomial IntPolynomial::derivative() const {
    IntPolynomial d;
    for (size_t k = 1; k < c_.size(); ++k) d.c_.push_back(c_[k] * static_cast<long>(k));
    d.trim();
    return d;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Integer IntPolynomial::eval_int(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::operator*(const Integer& s) const {
    if (s == 0) return {};
    IntPolynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    return r;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return {};
    if (degree() < b.degree()) throw std::domain_error("not divisible");
    // long division over Q, then demand an integral quotient and zero remainder
    std::vector<Rational> rem(c_.begin(), c_.end());
    std::vector<Rational> quo(static_cast<size_t>(degree() - b.degree()) + 1, Rational(0));
    Rational lead(b.leading());
    for (int k = degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] / lead;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * Rational(b.coeff(i));
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw std::domain_error("not divisible");
    std::vector<Integer> out;
    out.reserve(quo.size());
    for (const auto& q : quo) {
        if (!q.is_integer()) throw std::domain_error("not divisible");
        out.push_back(q.num());
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        const Integer& c = c_[i];
        if (c == 0) continue;
        Integer a = abs(c);
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) {
            if (a != 1) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// pseudo-remainder of a by b (deg a >= deg b > 0 not required; b nonzero)
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        IntPolynomial t = IntPolynomial::monomial(a.leading(), shift);
        a = a * b.leading() - t * b;
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    IntPolynomial pp = p.primitive_part();
    if (pp.degree() == 0) return pp;
    IntPolynomial g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return pp.divide_exact(g).primitive_part();
}

namespace {

void factorize(Integer n, std::map<Integer, int>& out);

// Pollard rho with Brent cycling; n odd composite, not a prime power of 2
Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xC0FFEEul);
    while (true) {
        Integer x = rng.get_z_range(n - 2) + 2;
        Integer y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = abs(x - y);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factorize(Integer n, std::map<Integer, int>& out) {
    if (n < 0) n = -n;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    for (Integer p = 41; n > 1 && p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

}  // namespace

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw std::domain_error("divisors of zero");
    std::map<Integer, int> f;
    factorize(n, f);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : f) {
        const size_t base = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

std::vector<Rational> rational_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("root set is all of Q");
    IntPolynomial q = p.primitive_part();
    std::vector<Rational> roots;
    // strip t^k
    size_t low = 0;
    while (low < q.coeffs().size() && q.coeffs()[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        std::vector<Integer> shifted(q.coeffs().begin() + static_cast<long>(low), q.coeffs().end());
        q = IntPolynomial(std::move(shifted));
    }
    if (q.degree() >= 1) {
        const auto us = divisors(q.coeff(0));
        const auto vs = divisors(q.leading());
        for (const auto& u : us) {
            for (const auto& v : vs) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
                if (g != 1) continue;
                for (int sign : {1, -1}) {
                    Rational cand(sign > 0 ? u : Integer(-u), v);
                    if (q.eval(cand).is_zero()) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

RatFunction::RatFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = IntPolynomial::constant(1);
        return;
    }
    IntPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Integer cg;
    mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (den_.leading() < 0) cg = -cg;
    if (cg != 1) {
        std::vector<Integer> nc, dc;
        for (const auto& c : num_.coeffs()) nc.push_back(c / cg);
        for (const auto& c : den_.coeffs()) dc.push_back(c / cg);
        num_ = IntPolynomial(std::move(nc));
        den_ = IntPolynomial(std::move(dc));
    }
}

RatFunction RatFunction::operator-() const {
    RatFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunction operator+(const RatFunction& a, const RatFunction& b) {
    return RatFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunction operator-(const RatFunction& a, const RatFunction& b) { return a + (-b); }

RatFunction operator*(const RatFunction& a, const RatFunction& b) {
    return RatFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunction operator/(const RatFunction& a, const RatFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return RatFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("pole at " + x.str());
    return num_.eval(x) / d;
}

}  // namespace superder
