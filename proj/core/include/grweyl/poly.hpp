#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grweyl/finset.hpp"
#include "grweyl/rational.hpp"

namespace grweyl {

/// Univariate polynomial in z with exact rational coefficients.
/// All arithmetic is exact; gcd/lcm results are monic; exact division
/// throws std::domain_error on a nonzero remainder.
class Poly {
public:
    Poly() = default;                      // zero polynomial
    Poly(const Rational& c);               // constant
    Poly(std::int64_t c) : Poly(Rational(c)) {}
    /// Coefficients in ascending degree order; trailing zeros are stripped.
    explicit Poly(std::vector<Rational> coeffs);

    static Poly z();                       // the variable
    static Poly monomial(std::size_t exp, const Rational& c);
    /// c0 + c1 * z.
    static Poly linear(const Rational& c0, const Rational& c1);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// Degree, or -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    Rational coeff(std::size_t exp) const;
    const Rational& leading() const;       // requires nonzero
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly&, const Poly&) = default;

    Rational eval(const Rational& at) const;
    /// p(a*z + b).
    Poly substitute_linear(const Rational& a, const Rational& b) const;
    Poly pow(std::uint32_t e) const;
    Poly monic() const;                    // requires nonzero

private:
    std::vector<Rational> c_; // ascending degree, no trailing zeros
    void strip();
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm; lcm with 0 is 0.
Poly poly_lcm(const Poly& a, const Poly& b);

/// h_J = prod_{j in J} (z - j); the degree-zero avatar of a twist.
Poly h_poly(const FinSet& j);

/// All integer roots with multiplicity (root -> multiplicity).
/// Throws std::domain_error on the zero polynomial.
std::map<std::int64_t, int> integer_roots(const Poly& p);

} // namespace grweyl
