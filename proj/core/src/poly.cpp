#include "grweyl/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace grweyl {

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

void Poly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::z() { return monomial(1, 1); }

Poly Poly::linear(const Rational& c0, const Rational& c1) {
    return Poly(std::vector<Rational>{c0, c1});
}

Poly Poly::monomial(std::size_t exp, const Rational& c) {
    if (c == 0) return {};
    std::vector<Rational> v(exp + 1, Rational(0));
    v[exp] = c;
    return Poly(std::move(v));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Poly::coeff(std::size_t exp) const {
    return exp < c_.size() ? c_[exp] : Rational(0);
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    strip();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::substitute_linear(const Rational& a, const Rational& b) const {
    // Horner in the polynomial ring: p(a*z + b).
    Poly lin = linear(b, a);
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly acc(Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
    Poly r = *this;
    Rational inv = Rational(1) / leading();
    for (auto& c : r.c_) c *= inv;
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        Rational factor = rem.leading() / b.leading();
        q[shift] = factor;
        rem -= Poly::monomial(shift, factor) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_divexact: inexact division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly g = poly_gcd(a, b);
    return poly_divexact(a * b, g).monic();
}

Poly h_poly(const FinSet& j) {
    Poly r(Rational(1));
    for (std::int64_t n : j) r *= Poly::linear(Rational(-n), Rational(1));
    return r;
}

namespace {

// All positive divisors of |n| that are <= bound, by trial-division
// factorization.
std::vector<Int> bounded_divisors(Int n, const Int& bound) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> factors;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Int pe(1);
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) {
                Int d = divs[i] * pe;
                if (d <= bound) divs.push_back(std::move(d));
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

} // namespace

std::map<std::int64_t, int> integer_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
    std::map<std::int64_t, int> roots;

    // Split off the root at zero.
    Poly q = p;
    {
        std::size_t k = 0;
        while (q.coeff(k) == 0) ++k;
        if (k > 0) {
            roots[0] = static_cast<int>(k);
            std::vector<Rational> shifted(q.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                          q.coeffs().end());
            q = Poly(std::move(shifted));
        }
    }
    if (q.degree() == 0) return roots;

    // Clear denominators and content to get a primitive integer polynomial.
    Int den(1);
    for (const auto& c : q.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
    std::vector<Int> ic;
    ic.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) ic.push_back(numerator(c) * (den / denominator(c)));
    Int content(0);
    for (const auto& c : ic) content = boost::multiprecision::gcd(content, c);
    for (auto& c : ic) c /= content;

    // Any integer root divides the constant term and is bounded by the
    // Cauchy bound 1 + max |a_i| / |a_d|.
    Int lead = boost::multiprecision::abs(ic.back());
    Int maxc(0);
    for (const auto& c : ic) maxc = std::max(maxc, Int(boost::multiprecision::abs(c)));
    Int bound = 1 + maxc / lead;

    for (const Int& d : bounded_divisors(ic.front(), bound)) {
        for (int sign : {1, -1}) {
            Int cand = sign * d;
            if (cand < INT64_MIN || cand > INT64_MAX) continue;
            Rational r(cand);
            int mult = 0;
            while (q.eval(r) == 0) {
                q = poly_divexact(q, Poly::linear(-r, Rational(1)));
                ++mult;
            }
            if (mult > 0) roots[cand.convert_to<std::int64_t>()] = mult;
        }
    }
    return roots;
}

} // namespace grweyl
