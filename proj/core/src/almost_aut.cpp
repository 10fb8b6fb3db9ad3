#include "grweyl/almost_aut.hpp"

#include <stdexcept>

namespace grweyl {

AlmostAut AlmostAut::word(std::int64_t e, bool with_phi) {
    // tau^e phi: x_n -> tau^e(x_{-n}) = x_{-n-e}; without phi: x_n -> x_{n-e}.
    return AlmostAut(Isometry{with_phi ? -1 : 1, -e});
}

std::pair<Rational, Rational> AlmostAut::z_action() const {
    // alpha(z - n) = eps*(z - u(n)) forces alpha(z) = eps*(z - shift).
    return {Rational(u_.eps), Rational(-u_.eps) * u_.shift};
}

Poly AlmostAut::apply(const Poly& f) const {
    auto [a, b] = z_action();
    return f.substitute_linear(a, b);
}

FinSet AlmostAut::apply_index(const FinSet& j) const { return u_(j); }

CElement AlmostAut::apply(const CElement& a) const {
    CElement r;
    for (const auto& [j, f] : a.terms()) r += CElement::from_term(u_(j), apply(f));
    return r;
}

AlmostAut compose(const AlmostAut& a, const AlmostAut& b) {
    // The index maps compose like the underlying maps of Z.
    std::int64_t e1 = a.tau_exponent(), e2 = b.tau_exponent();
    std::int64_t e = 0;
    if (__builtin_add_overflow(e1, a.has_phi() ? -e2 : e2, &e))
        throw std::overflow_error("AlmostAut compose: 64-bit overflow");
    return AlmostAut::word(e, a.has_phi() != b.has_phi());
}

AlmostAut inverse(const AlmostAut& a) {
    if (a.has_phi()) return a; // tau^e phi is an involution
    return AlmostAut::tau_power(-a.tau_exponent());
}

std::pair<int, CElement> phi_star_action(const FinSet& module_degree, const CElement& c) {
    auto deg = c.homogeneous_degree();
    if (!deg) throw std::domain_error("phi_star_action: element must be homogeneous");
    int sign = cocycle_sign(*deg, module_degree);
    return {sign, AlmostAut::phi().apply(c)};
}

} // namespace grweyl
