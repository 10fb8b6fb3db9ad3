#pragma once

#include "grweyl/isometry.hpp"
#include "grweyl/k0.hpp"
#include "grweyl/modules.hpp"

namespace grweyl {

/// An autoequivalence class of the graded C-module category, in canonical
/// form (J, h): the twist (J) composed after the pushforward along tau^e
/// or tau^e phi. J is the twist part; h is the induced isometry of the
/// simple-module indices (the inverse of the ring-level index map, so the
/// shift tau has h(n) = n + 1). These form the group extension of Iso(Z)
/// by the twists with composition
///   (J1, h1) * (J2, h2) = (J1 xor h1(J2), h1 h2).
class PicElem {
public:
    PicElem() = default; // identity

    static PicElem identity() { return {}; }
    static PicElem twist_by(const FinSet& j) { return PicElem(j, Isometry::identity()); }
    static PicElem tau() { return PicElem(FinSet(), Isometry::translation(1)); }
    static PicElem phi() { return PicElem(FinSet(), Isometry::reflection()); }
    static PicElem make(const FinSet& j, const Isometry& h) { return PicElem(j, h); }

    const FinSet& twist_part() const { return j_; }
    const Isometry& simple_action() const { return h_; }
    bool is_identity() const { return j_.empty() && h_.is_identity(); }

    friend bool operator==(const PicElem&, const PicElem&) = default;

private:
    PicElem(FinSet j, Isometry h) : j_(std::move(j)), h_(h) {}
    FinSet j_;
    Isometry h_ = Isometry::identity();
};

/// compose(f, g) applies g first.
PicElem pic_compose(const PicElem& f, const PicElem& g);
PicElem pic_invert(const PicElem& f);

/// Folds a generator word into one element; the first entry of the word
/// acts first (so the last entry is outermost).
PicElem pic_from_generators(const std::vector<PicElem>& word);

/// X(n) -> X(h(n)) or Y(h(n)) according to h(n) in J; Y likewise with the
/// letters exchanged; O(lambda) -> O(h(lambda)).
SimpleMod pic_act(const PicElem& f, const SimpleMod& s);
/// Summandwise C(I) -> C(h(I) xor J).
ProjMod pic_act(const PicElem& f, const ProjMod& p);
CatModule pic_act(const PicElem& f, const CatModule& m);
/// Additive extension of u_I -> reduce(u_{h(I) xor J}).
K0Elem pic_act_k0(const PicElem& f, const K0Elem& a);

/// The projection onto Iso(Z); its kernel is exactly the twists.
Isometry pic_project(const PicElem& f);

} // namespace grweyl
