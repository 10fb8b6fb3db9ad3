#include "grweyl/k0.hpp"

#include <stdexcept>

namespace grweyl {

K0Elem K0Elem::unit(Int c) {
    K0Elem e;
    e.unit_ = std::move(c);
    return e;
}

K0Elem K0Elem::point(std::int64_t m, Int c) {
    K0Elem e;
    e.add_point(m, c);
    return e;
}

void K0Elem::add_point(std::int64_t m, const Int& c) {
    if (c == 0) return;
    auto it = pts_.find(m);
    if (it == pts_.end()) {
        pts_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) pts_.erase(it);
}

Int K0Elem::rank() const {
    Int r = unit_;
    for (const auto& [m, c] : pts_) r += c;
    return r;
}

K0Elem K0Elem::operator-() const {
    K0Elem r;
    r.unit_ = -unit_;
    for (const auto& [m, c] : pts_) r.pts_.emplace(m, -c);
    return r;
}

K0Elem& K0Elem::operator+=(const K0Elem& o) {
    unit_ += o.unit_;
    for (const auto& [m, c] : o.pts_) add_point(m, c);
    return *this;
}

K0Elem& K0Elem::operator-=(const K0Elem& o) {
    unit_ -= o.unit_;
    for (const auto& [m, c] : o.pts_) add_point(m, -c);
    return *this;
}

K0Elem& K0Elem::operator*=(const K0Elem& o) {
    // Bilinear extension of the basis table:
    //   1 * 1 = 1, 1 * u_n = u_n, u_m * u_m = 1, u_m * u_n = u_m + u_n - 1.
    K0Elem r;
    r.unit_ = unit_ * o.unit_;
    for (const auto& [n, c] : o.pts_) r.add_point(n, unit_ * c);
    for (const auto& [m, c] : pts_) r.add_point(m, c * o.unit_);
    for (const auto& [m, cm] : pts_) {
        for (const auto& [n, cn] : o.pts_) {
            Int c = cm * cn;
            if (m == n) {
                r.unit_ += c;
            } else {
                r.add_point(m, c);
                r.add_point(n, c);
                r.unit_ -= c;
            }
        }
    }
    *this = std::move(r);
    return *this;
}

GroupRingExpr GroupRingExpr::u(const FinSet& i, Int c) {
    GroupRingExpr e;
    e.add_term(i, c);
    return e;
}

void GroupRingExpr::add_term(const FinSet& i, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
        terms_.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingExpr GroupRingExpr::operator-() const {
    GroupRingExpr r;
    for (const auto& [i, c] : terms_) r.terms_.emplace(i, -c);
    return r;
}

GroupRingExpr& GroupRingExpr::operator+=(const GroupRingExpr& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, c);
    return *this;
}

GroupRingExpr& GroupRingExpr::operator-=(const GroupRingExpr& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
    return *this;
}

GroupRingExpr& GroupRingExpr::operator*=(const GroupRingExpr& o) {
    GroupRingExpr r;
    for (const auto& [i, ci] : terms_)
        for (const auto& [j, cj] : o.terms_) r.add_term(fs_xor(i, j), ci * cj);
    *this = std::move(r);
    return *this;
}

K0Elem k0_reduce(const GroupRingExpr& e) {
    K0Elem out;
    for (const auto& [i, c] : e.terms()) {
        for (std::int64_t m : i) out += K0Elem::point(m, c);
        out += K0Elem::unit(c * (1 - Int(i.size())));
    }
    return out;
}

K0Elem class_of(const ProjMod& p) {
    GroupRingExpr e;
    for (const auto& i : p.twists()) e += GroupRingExpr::u(i);
    return k0_reduce(e);
}

K0Elem class_of(const SimpleMod& s) {
    switch (s.family()) {
        case SimpleMod::Family::X:
            return K0Elem::unit(1) - K0Elem::point(s.index());
        case SimpleMod::Family::Y:
            return K0Elem::point(s.index()) - K0Elem::unit(1);
        case SimpleMod::Family::O: return K0Elem::zero();
    }
    return {};
}

K0Elem class_of(const CatModule& m) {
    return std::visit([](const auto& v) { return class_of(v); }, m);
}

std::map<std::int64_t, Int> p_decompose(const K0Elem& a) {
    if (a.rank() != 0) throw std::domain_error("p_decompose: element has nonzero rank");
    std::map<std::int64_t, Int> out;
    for (const auto& [m, c] : a.point_coeffs()) out.emplace(m, -c);
    return out;
}

} // namespace grweyl
