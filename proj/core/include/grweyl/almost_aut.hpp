#pragma once

#include <utility>

#include "grweyl/celement.hpp"
#include "grweyl/isometry.hpp"

namespace grweyl {

/// The degree-permuting symmetries of C generated by the shift tau
/// (x_n -> x_{n-1}, z -> z+1, a ring automorphism) and the reflection phi
/// (x_n -> x_{-n}, z -> -z), which is multiplicative only up to the sign
/// cocycle (-1)^{|I cap J|}. Every element has a canonical word
/// tau^e or tau^e phi; the family is closed under composition via
/// phi tau^d = tau^{-d} phi.
///
/// Stored as the index map u with alpha(x_n) = x_{u(n)}; the cocycle is
/// active exactly for the orientation-reversing u.
class AlmostAut {
public:
    AlmostAut() = default; // identity

    static AlmostAut identity() { return {}; }
    static AlmostAut tau() { return tau_power(1); }
    static AlmostAut tau_power(std::int64_t e) { return AlmostAut(Isometry{1, -e}); }
    static AlmostAut phi() { return AlmostAut(Isometry::reflection()); }
    /// The word tau^e phi^{delta}.
    static AlmostAut word(std::int64_t e, bool with_phi);

    const Isometry& index_map() const { return u_; }
    /// True exactly when the sign cocycle is active (orientation-reversing).
    bool cocycle_on() const { return u_.eps == -1; }
    /// Exponent e of the canonical word tau^e [phi].
    std::int64_t tau_exponent() const { return -u_.shift; }
    bool has_phi() const { return u_.eps == -1; }

    /// The degree-zero action, as z -> a*z + b.
    std::pair<Rational, Rational> z_action() const;

    Poly apply(const Poly& f) const;
    FinSet apply_index(const FinSet& j) const;
    CElement apply(const CElement& a) const;

    friend bool operator==(const AlmostAut&, const AlmostAut&) = default;

private:
    explicit AlmostAut(Isometry u) : u_(u) {}
    Isometry u_ = Isometry::identity();
};

/// compose(a, b) applies b first: compose(a, b).apply(c) = a.apply(b.apply(c)).
AlmostAut compose(const AlmostAut& a, const AlmostAut& b);
AlmostAut inverse(const AlmostAut& a);

/// The twisted right action of a homogeneous c in C_I on a pushed-forward
/// module element of degree J: (phi_* m).c = sign * phi_*(m phi(c)) with
/// sign = (-1)^{|I cap J|}. Returns (sign, phi(c)); rejects non-homogeneous c.
std::pair<int, CElement> phi_star_action(const FinSet& module_degree, const CElement& c);

} // namespace grweyl
