#pragma once

#include <map>
#include <optional>

#include "grweyl/poly.hpp"

namespace grweyl {

/// An element of the first Weyl algebra A = k<x, y>/(xy - yx - 1), graded
/// by deg x = 1, deg y = -1, in normal form: a finitely supported map
/// n -> f_n(z) meaning x^n f_n(z) for n >= 0 and y^{-n} f_n(z) for n < 0,
/// where z = xy. Multiplication rewrites with f(z) x = x f(z-1),
/// f(z) y = y f(z+1), xy = z, yx = z - 1.
class WeylElem {
public:
    WeylElem() = default; // zero

    static WeylElem zero() { return {}; }
    static WeylElem one() { return from_component(0, Poly(1)); }
    static WeylElem x() { return from_component(1, Poly(1)); }
    static WeylElem y() { return from_component(-1, Poly(1)); }
    static WeylElem z() { return from_component(0, Poly::z()); }
    /// x^n f (n >= 0) or y^{-n} f (n < 0).
    static WeylElem from_component(std::int64_t n, const Poly& f);

    bool is_zero() const { return comps_.empty(); }
    const std::map<std::int64_t, Poly>& components() const { return comps_; }
    Poly component(std::int64_t n) const;
    /// The unique Euler degree if concentrated in one degree, else nullopt.
    std::optional<std::int64_t> homogeneous_degree() const;

    WeylElem operator-() const;
    WeylElem& operator+=(const WeylElem& o);
    WeylElem& operator-=(const WeylElem& o);
    WeylElem& operator*=(const WeylElem& o);
    friend WeylElem operator+(WeylElem a, const WeylElem& b) { return a += b; }
    friend WeylElem operator-(WeylElem a, const WeylElem& b) { return a -= b; }
    friend WeylElem operator*(WeylElem a, const WeylElem& b) { return a *= b; }

    WeylElem scaled(const Rational& c) const;
    WeylElem pow(std::uint32_t e) const;

    friend bool operator==(const WeylElem&, const WeylElem&) = default;

private:
    std::map<std::int64_t, Poly> comps_; // no zero polynomials stored

    void add_component(std::int64_t n, const Poly& f);
};

/// The left k[z]-action on the right coordinate of a degree-j module
/// element: z . m = m (z - j), so f -> f * (z - j).
Poly z_left_action(std::int64_t j, const Poly& f);

/// Generators of the distinguished graded right ideal with degree-zero part
/// (z - n) k[z]: {x} for n = 0, {y} for n = 1, {y^n, z - n} for n >= 2,
/// {x^{1-n}, z - n} for n <= -1.
std::vector<WeylElem> iota_generators(std::int64_t n);

/// The monic g with degree-m component of the ideal equal to x^m g k[z]
/// (m >= 0) or y^{-m} g k[z] (m < 0); for a set J, the lcm over j in J.
/// iota_component({}, m) = 1 (the whole ring).
Poly iota_component(const FinSet& j, std::int64_t m);

} // namespace grweyl
