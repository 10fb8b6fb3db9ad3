#pragma once

#include <map>
#include <optional>

#include "grweyl/finset.hpp"
#include "grweyl/poly.hpp"

namespace grweyl {

/// An element of the commutative ring C = k[z][x_n : n in Z] subject to
/// x_n^2 = z - n, graded by finite subsets of Z with deg x_n = {n}.
/// Stored as a finitely supported map degree J -> coefficient in k[z],
/// the coefficient of the square-free monomial x_J.
///
/// The product of homogeneous parts follows
///   x_I * x_J = h_{I cap J} * x_{I xor J},
/// extended bilinearly.
class CElement {
public:
    CElement() = default; // zero

    static CElement zero() { return {}; }
    static CElement one() { return from_term(FinSet(), Poly(1)); }
    /// The monomial x_J.
    static CElement x(const FinSet& j) { return from_term(j, Poly(1)); }
    static CElement x(std::int64_t n) { return x(FinSet::singleton(n)); }
    /// f(z) * x_J.
    static CElement from_term(const FinSet& j, const Poly& f);
    /// A degree-empty element f(z).
    static CElement scalar(const Poly& f) { return from_term(FinSet(), f); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<FinSet, Poly>& terms() const { return terms_; }
    Poly component(const FinSet& j) const;
    /// The unique degree if the element has exactly one term, else nullopt.
    std::optional<FinSet> homogeneous_degree() const;

    CElement operator-() const;
    CElement& operator+=(const CElement& o);
    CElement& operator-=(const CElement& o);
    CElement& operator*=(const CElement& o);

    friend CElement operator+(CElement a, const CElement& b) { return a += b; }
    friend CElement operator-(CElement a, const CElement& b) { return a -= b; }
    friend CElement operator*(CElement a, const CElement& b) { return a *= b; }

    CElement scaled(const Rational& c) const;
    CElement scaled(const Poly& f) const;
    CElement pow(std::uint32_t e) const;

    friend bool operator==(const CElement&, const CElement&) = default;

private:
    std::map<FinSet, Poly> terms_; // no zero polynomials stored

    void add_term(const FinSet& j, const Poly& f);
};

} // namespace grweyl
