#pragma once

#include <cstdint>

#include "grweyl/finset.hpp"
#include "grweyl/rational.hpp"

namespace grweyl {

/// An isometry of the integers, n -> eps*n + shift with eps = +-1.
/// These form the infinite dihedral group.
struct Isometry {
    int eps = 1;              // +1 or -1
    std::int64_t shift = 0;

    static Isometry identity() { return {1, 0}; }
    static Isometry translation(std::int64_t d) { return {1, d}; }
    static Isometry reflection() { return {-1, 0}; }

    bool is_identity() const { return eps == 1 && shift == 0; }

    /// eps*n + shift; throws std::overflow_error outside 64-bit range.
    std::int64_t operator()(std::int64_t n) const {
        if (eps == -1 && n == INT64_MIN)
            throw std::overflow_error("Isometry: 64-bit overflow");
        std::int64_t s = eps == 1 ? n : -n, r;
        if (__builtin_add_overflow(s, shift, &r))
            throw std::overflow_error("Isometry: 64-bit overflow");
        return r;
    }

    FinSet operator()(const FinSet& s) const {
        return fs_translate(fs_scale(s, eps), shift);
    }

    Rational operator()(const Rational& r) const { return Rational(eps) * r + shift; }

    friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// compose(g, h)(n) = g(h(n)).
inline Isometry compose(const Isometry& g, const Isometry& h) {
    std::int64_t s = g(h.shift);
    return {g.eps * h.eps, s};
}

inline Isometry inverse(const Isometry& g) {
    // n -> eps*(n - shift)
    std::int64_t s = g.eps == 1 ? -g.shift : g.shift;
    return {g.eps, s};
}

} // namespace grweyl
