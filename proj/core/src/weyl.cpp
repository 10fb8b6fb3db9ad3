#include "grweyl/weyl.hpp"

#include <stdexcept>

namespace grweyl {

WeylElem WeylElem::from_component(std::int64_t n, const Poly& f) {
    WeylElem e;
    if (!f.is_zero()) e.comps_.emplace(n, f);
    return e;
}

void WeylElem::add_component(std::int64_t n, const Poly& f) {
    if (f.is_zero()) return;
    auto it = comps_.find(n);
    if (it == comps_.end()) {
        comps_.emplace(n, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
}

Poly WeylElem::component(std::int64_t n) const {
    auto it = comps_.find(n);
    return it == comps_.end() ? Poly() : it->second;
}

std::optional<std::int64_t> WeylElem::homogeneous_degree() const {
    if (comps_.size() != 1) return std::nullopt;
    return comps_.begin()->first;
}

WeylElem WeylElem::operator-() const {
    WeylElem r;
    for (const auto& [n, f] : comps_) r.comps_.emplace(n, -f);
    return r;
}

WeylElem& WeylElem::operator+=(const WeylElem& o) {
    for (const auto& [n, f] : o.comps_) add_component(n, f);
    return *this;
}

WeylElem& WeylElem::operator-=(const WeylElem& o) {
    for (const auto& [n, f] : o.comps_) add_component(n, -f);
    return *this;
}

namespace {

// The straightening factor F with T^a T^b = T^{a+b} F(z), where T^k stands
// for x^k (k >= 0) or y^{-k} (k < 0). Mixed signs contract c = min(|a|, |b|)
// generator pairs, each contributing one linear factor.
Poly straighten(std::int64_t a, std::int64_t b) {
    Poly f(1);
    if (a > 0 && b < 0) {
        std::int64_t c = std::min(a, -b);
        std::int64_t base = std::max<std::int64_t>(0, -(a + b));
        for (std::int64_t i = 0; i < c; ++i)
            f *= Poly::linear(Rational(base + i), Rational(1)); // z + base + i
    } else if (a < 0 && b > 0) {
        std::int64_t c = std::min(-a, b);
        std::int64_t base = std::max<std::int64_t>(0, a + b);
        for (std::int64_t i = 1; i <= c; ++i)
            f *= Poly::linear(Rational(-(base + i)), Rational(1)); // z - base - i
    }
    return f;
}

} // namespace

WeylElem& WeylElem::operator*=(const WeylElem& o) {
    WeylElem r;
    for (const auto& [a, f] : comps_) {
        for (const auto& [b, g] : o.comps_) {
            std::int64_t deg;
            if (__builtin_add_overflow(a, b, &deg))
                throw std::overflow_error("WeylElem: degree overflow");
            // T^a f(z) T^b g(z) = T^{a+b} F(z) f(z - b) g(z).
            Poly coeff = straighten(a, b) * f.substitute_linear(1, Rational(-b)) * g;
            r.add_component(deg, coeff);
        }
    }
    comps_ = std::move(r.comps_);
    return *this;
}

WeylElem WeylElem::scaled(const Rational& c) const {
    WeylElem r;
    if (c == 0) return r;
    for (const auto& [n, f] : comps_) r.comps_.emplace(n, f * c);
    return r;
}

WeylElem WeylElem::pow(std::uint32_t e) const {
    WeylElem acc = one();
    WeylElem base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly z_left_action(std::int64_t j, const Poly& f) {
    return f * Poly::linear(Rational(-j), Rational(1));
}

std::vector<WeylElem> iota_generators(std::int64_t n) {
    Poly z_minus_n = Poly::linear(Rational(-n), Rational(1));
    if (n == 0) return {WeylElem::x()};
    if (n == 1) return {WeylElem::y()};
    if (n >= 2)
        return {WeylElem::from_component(-n, Poly(1)), WeylElem::from_component(0, z_minus_n)};
    return {WeylElem::from_component(1 - n, Poly(1)), WeylElem::from_component(0, z_minus_n)};
}

Poly iota_component(const FinSet& j, std::int64_t m) {
    Poly acc(1);
    for (std::int64_t n : j) {
        Poly single;
        for (const WeylElem& gen : iota_generators(n)) {
            std::int64_t d = *gen.homogeneous_degree();
            WeylElem prod = gen * WeylElem::from_component(m - d, Poly(1));
            single = poly_gcd(single, prod.component(m));
        }
        acc = poly_lcm(acc, single);
    }
    return acc;
}

} // namespace grweyl
