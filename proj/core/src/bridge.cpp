#include "grweyl/bridge.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace grweyl {

BElem::BElem(FinSet j, Poly f) : j_(std::move(j)), f_(std::move(f)) {
    auto [q, r] = poly_divmod(f_, h_poly(j_));
    if (!r.is_zero()) throw std::domain_error("BElem: h_J must divide the coordinate");
}

BElem BElem::b(std::int64_t n) {
    FinSet j = FinSet::singleton(n);
    return BElem(j, h_poly(j));
}

BElem b_mul(const BElem& p, const BElem& q) {
    if (p.is_zero() || q.is_zero()) return BElem(FinSet(), Poly());
    Poly num = p.f() * q.f();
    Poly den = h_poly(fs_intersect(p.twist(), q.twist()));
    Poly quot;
    try {
        quot = poly_divexact(num, den);
    } catch (const std::domain_error&) {
        throw std::logic_error("b_mul: inexact division");
    }
    return BElem(fs_xor(p.twist(), q.twist()), quot);
}

std::vector<BElem> b_from_c(const CElement& c) {
    std::vector<BElem> out;
    out.reserve(c.terms().size());
    for (const auto& [j, a] : c.terms()) out.emplace_back(j, a * h_poly(j));
    return out;
}

CElement c_from_b(const BElem& p) {
    if (p.is_zero()) return CElement::zero();
    return CElement::from_term(p.twist(), poly_divexact(p.f(), h_poly(p.twist())));
}

PElem PElem::from_component(std::int64_t n, const CElement& c) {
    PElem e;
    if (!c.is_zero()) e.comps_.emplace(n, c);
    return e;
}

void PElem::add_component(std::int64_t n, const CElement& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(n);
    if (it == comps_.end()) {
        comps_.emplace(n, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
}

CElement PElem::component(std::int64_t n) const {
    auto it = comps_.find(n);
    return it == comps_.end() ? CElement::zero() : it->second;
}

PElem PElem::operator-() const {
    PElem r;
    for (const auto& [n, c] : comps_) r.comps_.emplace(n, -c);
    return r;
}

PElem& PElem::operator+=(const PElem& o) {
    for (const auto& [n, c] : o.comps_) add_component(n, c);
    return *this;
}

PElem& PElem::operator-=(const PElem& o) {
    for (const auto& [n, c] : o.comps_) add_component(n, -c);
    return *this;
}

std::vector<std::pair<std::int64_t, FinSet>> PElem::bidegrees() const {
    std::vector<std::pair<std::int64_t, FinSet>> out;
    for (const auto& [n, c] : comps_)
        for (const auto& [k, f] : c.terms()) out.emplace_back(n, fs_xor(k, interval(n)));
    return out;
}

PElem p_left_act(const WeylElem& a, const PElem& p) {
    PElem out;
    for (const auto& [deg, f] : a.components()) {
        for (const auto& [n, c] : p.components()) {
            // T^deg f(z) . e_n c = T^deg . (e_n c f(z - n)).
            std::int64_t m = n;
            CElement acc = c * CElement::scalar(f.substitute_linear(1, Rational(-n)));
            for (std::int64_t step = 0; step < (deg >= 0 ? deg : -deg); ++step) {
                if (deg >= 0) {
                    acc *= CElement::x(m + 1); // x . e_m c = e_{m+1} c x_{m+1}
                    ++m;
                } else {
                    acc *= CElement::x(m); // y . e_m c = e_{m-1} c x_m
                    --m;
                }
            }
            out.add_component(m, acc);
        }
    }
    return out;
}

PElem p_right_act(const PElem& p, const CElement& c) {
    PElem out;
    for (const auto& [n, pc] : p.components()) out += PElem::from_component(n, pc * c);
    return out;
}

ASimple match_simple_c_to_a(const SimpleMod& s) {
    if (!s.is_special())
        throw std::domain_error("match_simple_c_to_a: ordinary simples are not matched");
    std::int64_t n = s.index();
    bool swap = n > 0;
    bool is_x = s.family() == SimpleMod::Family::X;
    if (swap) is_x = !is_x;
    return is_x ? ASimple::X(n) : ASimple::Y(n);
}

SimpleMod match_simple_a_to_c(const ASimple& t) {
    std::int64_t n = t.index();
    bool swap = n > 0;
    bool is_x = t.family() == ASimple::Family::X;
    if (swap) is_x = !is_x;
    return is_x ? SimpleMod::X(n) : SimpleMod::Y(n);
}

ASimple a_act_simple(const AGenerator& g, const ASimple& t) {
    if (const AShift* sh = std::get_if<AShift>(&g)) {
        std::int64_t m;
        if (__builtin_add_overflow(t.index(), sh->k, &m))
            throw std::overflow_error("a_act_simple: index overflow");
        return t.family() == ASimple::Family::X ? ASimple::X(m) : ASimple::Y(m);
    }
    if (const AIota* io = std::get_if<AIota>(&g)) {
        if (!io->j.contains(t.index())) return t;
        return t.family() == ASimple::Family::X ? ASimple::Y(t.index())
                                                : ASimple::X(t.index());
    }
    // sigma: X(n) -> Y(-n+1), Y(n) -> X(-n+1).
    std::int64_t m = Isometry{-1, 1}(t.index());
    return t.family() == ASimple::Family::X ? ASimple::Y(m) : ASimple::X(m);
}

ASimple a_act_simple(const AWord& w, const ASimple& t) {
    ASimple out = t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = a_act_simple(*it, out);
    return out;
}

ASimple bridge_image(const PicElem& f, const ASimple& t) {
    return match_simple_c_to_a(pic_act(f, match_simple_a_to_c(t)));
}

std::vector<std::pair<ASimple, ASimple>> bridge_table(const PicElem& f, std::int64_t window) {
    std::vector<std::pair<ASimple, ASimple>> out;
    for (std::int64_t n = -window; n <= window; ++n) {
        out.emplace_back(ASimple::X(n), bridge_image(f, ASimple::X(n)));
        out.emplace_back(ASimple::Y(n), bridge_image(f, ASimple::Y(n)));
    }
    return out;
}

ABridgeWord bridge_word(const PicElem& f) {
    const Isometry& h = f.simple_action();
    ABridgeWord w;
    w.sigma = h.eps == -1;
    w.shift = w.sigma ? h.shift - 1 : h.shift;

    // The letter-exchange set is finite: outside a bounded window the X/Y
    // letters transport without flips once sigma and the shift are factored
    // out. Scan a window that safely contains all exceptional indices.
    std::int64_t radius = std::abs(h.shift) + 2;
    if (!f.twist_part().empty()) {
        radius = std::max({radius, std::abs(f.twist_part().elements().front()) + 2,
                           std::abs(f.twist_part().elements().back()) + 2});
    }
    std::vector<std::int64_t> flips;
    for (std::int64_t m = -radius; m <= radius; ++m) {
        std::int64_t n = inverse(h)(m);
        bool flip = (n > 0) != (m > 0);
        if (f.twist_part().contains(m)) flip = !flip;
        if (w.sigma) flip = !flip;
        if (flip) flips.push_back(m);
    }
    w.iota_set = FinSet(std::move(flips));

    // Replay: the decomposition must reproduce the conjugated table.
    AWord word = to_word(w);
    for (std::int64_t n = -radius; n <= radius; ++n) {
        for (ASimple t : {ASimple::X(n), ASimple::Y(n)}) {
            if (a_act_simple(word, t) != bridge_image(f, t))
                throw std::logic_error("bridge_word: decomposition replay failed");
        }
    }
    return w;
}

AWord to_word(const ABridgeWord& w) {
    AWord word;
    if (!w.iota_set.empty()) word.push_back(AIota{w.iota_set});
    if (w.shift != 0) word.push_back(AShift{w.shift});
    if (w.sigma) word.push_back(ASigma{});
    return word;
}

ASimple a_tensor_simple(const ASimple& s, const ASimple& t) {
    bool sx = s.family() == ASimple::Family::X;
    bool tx = t.family() == ASimple::Family::X;
    std::int64_t m;
    if (__builtin_add_overflow(s.index(), t.index(), &m))
        throw std::overflow_error("a_tensor_simple: index overflow");
    if (sx && tx) return ASimple::X(m);
    if (!sx && !tx) return ASimple::Y(m - 1);
    return ASimple::Y(m);
}

unsigned ext1_dim_a(const ASimple& s, const ASimple& t) {
    if (s == t) throw std::domain_error("ext1_dim_a: self-extensions are not tabulated");
    return (s.index() == t.index() && s.family() != t.family()) ? 1 : 0;
}

} // namespace grweyl
