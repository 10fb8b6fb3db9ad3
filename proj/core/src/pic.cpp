#include "grweyl/pic.hpp"

namespace grweyl {

PicElem pic_compose(const PicElem& f, const PicElem& g) {
    FinSet j = fs_xor(f.twist_part(), f.simple_action()(g.twist_part()));
    return PicElem::make(j, compose(f.simple_action(), g.simple_action()));
}

PicElem pic_invert(const PicElem& f) {
    Isometry hinv = inverse(f.simple_action());
    return PicElem::make(hinv(f.twist_part()), hinv);
}

PicElem pic_from_generators(const std::vector<PicElem>& word) {
    PicElem acc;
    for (const PicElem& g : word) acc = pic_compose(g, acc);
    return acc;
}

SimpleMod pic_act(const PicElem& f, const SimpleMod& s) {
    if (!s.is_special()) return SimpleMod::O(f.simple_action()(s.lambda()));
    std::int64_t m = f.simple_action()(s.index());
    bool flip = f.twist_part().contains(m);
    bool is_x = s.family() == SimpleMod::Family::X;
    if (flip) is_x = !is_x;
    return is_x ? SimpleMod::X(m) : SimpleMod::Y(m);
}

ProjMod pic_act(const PicElem& f, const ProjMod& p) {
    std::vector<FinSet> out;
    out.reserve(p.rank());
    for (const auto& i : p.twists()) out.push_back(fs_xor(f.simple_action()(i), f.twist_part()));
    return ProjMod(std::move(out));
}

CatModule pic_act(const PicElem& f, const CatModule& m) {
    return std::visit([&](const auto& v) -> CatModule { return pic_act(f, v); }, m);
}

K0Elem pic_act_k0(const PicElem& f, const K0Elem& a) {
    K0Elem out = K0Elem::unit(a.unit_coeff()) *
                 k0_reduce(GroupRingExpr::u(f.twist_part()));
    for (const auto& [m, c] : a.point_coeffs()) {
        FinSet image = fs_xor(f.simple_action()(FinSet::singleton(m)), f.twist_part());
        out += k0_reduce(GroupRingExpr::u(image, c));
    }
    return out;
}

Isometry pic_project(const PicElem& f) { return f.simple_action(); }

} // namespace grweyl
