#include "grweyl/celement.hpp"

namespace grweyl {

CElement CElement::from_term(const FinSet& j, const Poly& f) {
    CElement e;
    if (!f.is_zero()) e.terms_.emplace(j, f);
    return e;
}

void CElement::add_term(const FinSet& j, const Poly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(j);
    if (it == terms_.end()) {
        terms_.emplace(j, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly CElement::component(const FinSet& j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Poly() : it->second;
}

std::optional<FinSet> CElement::homogeneous_degree() const {
    if (terms_.size() != 1) return std::nullopt;
    return terms_.begin()->first;
}

CElement CElement::operator-() const {
    CElement r;
    for (const auto& [j, f] : terms_) r.terms_.emplace(j, -f);
    return r;
}

CElement& CElement::operator+=(const CElement& o) {
    for (const auto& [j, f] : o.terms_) add_term(j, f);
    return *this;
}

CElement& CElement::operator-=(const CElement& o) {
    for (const auto& [j, f] : o.terms_) add_term(j, -f);
    return *this;
}

CElement& CElement::operator*=(const CElement& o) {
    CElement r;
    for (const auto& [i, f] : terms_)
        for (const auto& [j, g] : o.terms_)
            r.add_term(fs_xor(i, j), f * g * h_poly(fs_intersect(i, j)));
    terms_ = std::move(r.terms_);
    return *this;
}

CElement CElement::scaled(const Rational& c) const {
    CElement r;
    if (c == 0) return r;
    for (const auto& [j, f] : terms_) r.terms_.emplace(j, f * c);
    return r;
}

CElement CElement::scaled(const Poly& f) const {
    CElement r;
    for (const auto& [j, g] : terms_) r.add_term(j, g * f);
    return r;
}

CElement CElement::pow(std::uint32_t e) const {
    CElement acc = one();
    CElement base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace grweyl
