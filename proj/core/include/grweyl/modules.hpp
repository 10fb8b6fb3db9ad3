#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "grweyl/finset.hpp"
#include "grweyl/rational.hpp"

namespace grweyl {

/// A simple graded C-module from the classified catalog:
///  - X(n) = C/(x_n), nonvanishing exactly in degrees I with n not in I;
///  - Y(n) = X(n) twisted by {n}, nonvanishing exactly when n in I;
///  - O(lambda) = C/(z - lambda) for non-integer rational lambda, which
///    never vanishes in any degree.
/// X(n) and Y(n) are the two simples killed by x_n ("special"); O(lambda)
/// covers the remaining rational points of the catalog.
class SimpleMod {
public:
    enum class Family { X, Y, O };

    static SimpleMod X(std::int64_t n) { return SimpleMod(Family::X, n, 0); }
    static SimpleMod Y(std::int64_t n) { return SimpleMod(Family::Y, n, 0); }
    /// Throws std::domain_error if lambda is an integer.
    static SimpleMod O(const Rational& lambda);

    Family family() const { return fam_; }
    bool is_special() const { return fam_ != Family::O; }
    /// Index n of a special simple; throws for O.
    std::int64_t index() const;
    /// lambda of an ordinary simple; throws for X/Y.
    const Rational& lambda() const;

    friend bool operator==(const SimpleMod&, const SimpleMod&) = default;

private:
    SimpleMod(Family f, std::int64_t n, Rational lam)
        : fam_(f), n_(n), lambda_(std::move(lam)) {}
    Family fam_;
    std::int64_t n_;
    Rational lambda_;
};

/// A finitely generated projective graded C-module: a direct sum of twists
/// C(I_1) + ... + C(I_r), stored as the sorted list of twist sets. The
/// isomorphism class is the multiset union of the I_r with multiplicity.
/// The empty sum is the zero module.
class ProjMod {
public:
    ProjMod() = default; // zero module

    explicit ProjMod(std::vector<FinSet> twists);
    static ProjMod free_of_rank(std::size_t r) { return ProjMod(std::vector<FinSet>(r)); }
    static ProjMod twist_of_ring(const FinSet& i) { return ProjMod({i}); }

    std::size_t rank() const { return twists_.size(); }
    bool is_zero() const { return twists_.empty(); }
    const std::vector<FinSet>& twists() const { return twists_; }
    /// The multiset union of the twist sets, as a sorted list with repeats.
    std::vector<std::int64_t> integer_multiset() const;

    ProjMod direct_sum(const ProjMod& other) const;

    /// Equality of representatives (same twist lists), not isomorphism.
    friend bool operator==(const ProjMod&, const ProjMod&) = default;

private:
    std::vector<FinSet> twists_; // sorted
};

/// An object of the catalog: a projective or a simple. The zero module is
/// the empty ProjMod.
using CatModule = std::variant<ProjMod, SimpleMod>;

bool is_zero_module(const CatModule& m);

/// dim hom(C(I), S): for X(n) this is 1 iff n is not in I, for Y(n) 1 iff
/// n is in I, and 1 always for O(lambda).
unsigned hom_dim(const FinSet& i, const SimpleMod& s);

/// dim of the degree-I homogeneous component of S over k[z]/(ann); equals
/// hom_dim(I, S).
unsigned simple_component_dim(const SimpleMod& s, const FinSet& i);

SimpleMod twist(const SimpleMod& s, const FinSet& j);
ProjMod twist(const ProjMod& p, const FinSet& j);
CatModule twist(const CatModule& m, const FinSet& j);

/// Tensor product over C within the catalog:
///  - projective x projective: C(I) (x) C(J) = C(I xor J), biadditively;
///  - rank-one projective x simple: the twist of the simple;
///  - special x special: X_i (x) X_j = Y_i (x) Y_j = X_i if i=j else 0,
///    X_i (x) Y_j = Y_j if i=j else 0.
/// Tensors involving O(lambda) with a simple, or a projective of rank >= 2
/// with a simple, are rejected with std::domain_error.
CatModule tensor(const CatModule& a, const CatModule& b);

/// Isomorphism test: equal rank and equal integer multisets.
bool proj_iso(const ProjMod& p, const ProjMod& q);

/// The canonical representative whose twist sets form a weakly decreasing
/// chain I_1 >= I_2 >= ..., padded with empty sets to the original rank.
ProjMod proj_canonical_chain(const ProjMod& p);

/// Whether a degree-zero surjection C x_I + C x_J -> C x_K exists:
/// I cap J inside K inside I cup J.
bool surjects_onto_twist(const FinSet& i, const FinSet& j, const FinSet& k);

/// Whether C(K) is a quotient of a finite direct sum of the C(I), I in s:
/// intersection(s) inside K inside union(s). s must be nonempty.
bool generates(const std::vector<FinSet>& s, const FinSet& k);

/// hom(C(I), C(J)) is free of rank one over k[z], generated by
/// multiplication by x_{I xor J}; returns that multiplier degree.
FinSet hom_proj_proj(const FinSet& i, const FinSet& j);

/// dim ext^1 between special simples: 1 iff {S, T} = {X(n), Y(n)} for some n.
/// Pairs involving O(lambda) and isomorphic pairs are rejected
/// (self-extensions are outside the catalog's tables).
unsigned ext1_dim(const SimpleMod& s, const SimpleMod& t);

} // namespace grweyl
