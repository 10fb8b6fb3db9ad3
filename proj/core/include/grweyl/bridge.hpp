#pragma once

#include <variant>

#include "grweyl/celement.hpp"
#include "grweyl/modules.hpp"
#include "grweyl/pic.hpp"
#include "grweyl/weyl.hpp"

namespace grweyl {

/// A homogeneous element of the twisted homogeneous coordinate ring B built
/// from the distinguished right ideals of the Weyl algebra: degree J holds
/// the polynomials divisible by h_J (the degree-J part is free on the image
/// of h_J). B is isomorphic to C via x_n -> b_n.
class BElem {
public:
    BElem() : f_(1) {} // the identity, 1 @ {}

    /// f @ J; throws std::domain_error unless h_J divides f.
    BElem(FinSet j, Poly f);

    static BElem one() { return {}; }
    /// b_n = (z - n) @ {n}, the image of x_n.
    static BElem b(std::int64_t n);

    const FinSet& twist() const { return j_; }
    const Poly& f() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }

    friend bool operator==(const BElem&, const BElem&) = default;

private:
    FinSet j_;
    Poly f_;
};

/// (f @ I) * (g @ J) = (f g / h_{I cap J}) @ (I xor J); the division is
/// exact for elements satisfying the divisibility invariant, and an inexact
/// division is a hard fault (std::logic_error).
BElem b_mul(const BElem& p, const BElem& q);

/// The ring isomorphism C -> B, componentwise: a(z) x_J -> (a h_J) @ J.
std::vector<BElem> b_from_c(const CElement& c);
/// Inverse on one homogeneous piece: f @ J -> (f / h_J) x_J; throws
/// std::domain_error if h_J does not divide f.
CElement c_from_b(const BElem& p);

/// An element of the bigraded A-C bimodule P = sum_n e_n C implementing the
/// category equivalence; component n is the C-coefficient of the basis
/// vector e_n, which sits in bidegree (n, K xor [n]) over the C-degree-K
/// part of its coefficient. The left action is generated by
///   x . e_n c = e_{n+1} c x_{n+1},   y . e_n c = e_{n-1} c x_n,
/// and the degree-zero part acts through z . e_n c = e_n c (z - n).
class PElem {
public:
    PElem() = default; // zero

    static PElem e(std::int64_t n) { return from_component(n, CElement::one()); }
    static PElem from_component(std::int64_t n, const CElement& c);

    bool is_zero() const { return comps_.empty(); }
    const std::map<std::int64_t, CElement>& components() const { return comps_; }
    CElement component(std::int64_t n) const;

    PElem operator-() const;
    PElem& operator+=(const PElem& o);
    PElem& operator-=(const PElem& o);
    friend PElem operator+(PElem a, const PElem& b) { return a += b; }
    friend PElem operator-(PElem a, const PElem& b) { return a -= b; }

    friend bool operator==(const PElem&, const PElem&) = default;

    /// Sorted list of bidegrees (n, K xor [n]) of the nonzero homogeneous
    /// pieces.
    std::vector<std::pair<std::int64_t, FinSet>> bidegrees() const;

private:
    std::map<std::int64_t, CElement> comps_; // no zero coefficients

    void add_component(std::int64_t n, const CElement& c);
    friend PElem p_left_act(const WeylElem&, const PElem&);
};

PElem p_left_act(const WeylElem& a, const PElem& p);
PElem p_right_act(const PElem& p, const CElement& c);

/// A special simple graded module over the Weyl algebra: X(n) is supported
/// exactly in degrees m <= -n and Y(n) exactly in degrees m >= -n + 1.
class ASimple {
public:
    enum class Family { X, Y };

    static ASimple X(std::int64_t n) { return ASimple(Family::X, n); }
    static ASimple Y(std::int64_t n) { return ASimple(Family::Y, n); }

    Family family() const { return fam_; }
    std::int64_t index() const { return n_; }
    bool nonzero_in_degree(std::int64_t m) const {
        return fam_ == Family::X ? m <= -n_ : m >= -n_ + 1;
    }

    friend bool operator==(const ASimple&, const ASimple&) = default;

private:
    ASimple(Family f, std::int64_t n) : fam_(f), n_(n) {}
    Family fam_;
    std::int64_t n_;
};

/// The simple-module correspondence induced by the equivalence:
/// X_n matches Y(n) for n > 0 and X(n) for n <= 0; Y_n the other way.
/// Ordinary simples are rejected. The two maps are mutually inverse.
ASimple match_simple_c_to_a(const SimpleMod& s);
SimpleMod match_simple_a_to_c(const ASimple& t);

/// Generators of the A-side autoequivalence monoid used by the dictionary:
/// the twist shift(k), the ideal-exchange iota(J) (swaps X(j) and Y(j) for
/// j in J), and the symplectic flip sigma (X(n) -> Y(-n+1), an involution
/// on isomorphism classes).
struct AShift { std::int64_t k = 1; };
struct AIota { FinSet j; };
struct ASigma {};
using AGenerator = std::variant<AShift, AIota, ASigma>;
using AWord = std::vector<AGenerator>;

ASimple a_act_simple(const AGenerator& g, const ASimple& t);
/// Applies the word as a functor composition: the last letter acts first.
ASimple a_act_simple(const AWord& w, const ASimple& t);

/// The A-side image of T under the autoequivalence matching F, computed by
/// conjugating the C-side action with the simple correspondence.
ASimple bridge_image(const PicElem& f, const ASimple& t);

/// The action table of bridge_image over the index window |n| <= window.
std::vector<std::pair<ASimple, ASimple>> bridge_table(const PicElem& f,
                                                      std::int64_t window = 16);

/// The canonical A-side word iota(S) o shift(k) o sigma^delta equal to
/// bridge_image(f, -); verified on a window around the data, std::logic_error
/// if the replay disagrees.
struct ABridgeWord {
    FinSet iota_set;
    std::int64_t shift = 0;
    bool sigma = false;
};
ABridgeWord bridge_word(const PicElem& f);
AWord to_word(const ABridgeWord& w);

/// Tensor of special simples on the A side: X(m) (x) X(n) = X(m+n),
/// Y(m) (x) Y(n) = Y(m+n-1), X(m) (x) Y(n) = Y(m+n); the identity is X(0).
ASimple a_tensor_simple(const ASimple& s, const ASimple& t);

/// dim ext^1 between special simples: 1 iff {S, T} = {X(i), Y(i)};
/// isomorphic pairs are rejected.
unsigned ext1_dim_a(const ASimple& s, const ASimple& t);

} // namespace grweyl
