#pragma once

#include <utility>
#include <vector>

#include "grweyl/celement.hpp"

namespace grweyl {

/// A graded ideal of C in normal form. Every graded ideal of C is principal
/// with a homogeneous generator d(z) * x_J, d monic; the pair (d, J) is the
/// unique normal form. The degree-K component of the ideal is
/// d * h_{J - K} * k[z] * x_K.
class GradedIdeal {
public:
    /// The zero ideal.
    GradedIdeal() = default;

    static GradedIdeal zero_ideal() { return {}; }
    /// The ideal (d * x_J); d is made monic. d must be nonzero.
    static GradedIdeal principal(const Poly& d, const FinSet& j);
    /// The unit ideal C = (x_{}).
    static GradedIdeal unit() { return principal(Poly(1), FinSet()); }

    /// Normal form of the ideal generated by homogeneous elements f_i * x_{I_i}.
    /// Computes the componentwise gcds g_K = gcd_i(f_i * h_{I_i - K}) over
    /// K inside U = union I_i, reads off d = g_U and J = roots(g_{} / d), and
    /// verifies g_K = d * h_{J-K} for every K; a verification failure throws
    /// std::logic_error. Zero generators are ignored; no generators -> zero ideal.
    static GradedIdeal normalize(const std::vector<std::pair<Poly, FinSet>>& gens);

    bool is_zero() const { return zero_; }
    const Poly& d() const { return d_; }
    const FinSet& twist() const { return j_; }
    /// The generator d * x_J as a ring element.
    CElement generator() const;
    /// Monic generator of the degree-K component over k[z] (d * h_{J-K}).
    Poly component_generator(const FinSet& k) const;

    friend bool operator==(const GradedIdeal&, const GradedIdeal&) = default;

private:
    bool zero_ = true;
    Poly d_;
    FinSet j_;
};

/// True iff every homogeneous component f * x_I of c has d * h_{J-I} | f.
bool ideal_member(const CElement& c, const GradedIdeal& a);

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b);
/// (d, J) * (e, L) = (monic(d * e * h_{J cap L}), J xor L).
GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b);
/// Componentwise lcm over K inside J union L, then verified principal.
GradedIdeal ideal_intersect(const GradedIdeal& a, const GradedIdeal& b);

} // namespace grweyl
