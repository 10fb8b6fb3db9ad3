#include "grweyl/modules.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace grweyl {

SimpleMod SimpleMod::O(const Rational& lambda) {
    if (is_integer(lambda))
        throw std::domain_error("SimpleMod::O: lambda must not be an integer");
    return SimpleMod(Family::O, 0, lambda);
}

std::int64_t SimpleMod::index() const {
    if (fam_ == Family::O) throw std::domain_error("SimpleMod::index: ordinary simple");
    return n_;
}

const Rational& SimpleMod::lambda() const {
    if (fam_ != Family::O) throw std::domain_error("SimpleMod::lambda: special simple");
    return lambda_;
}

ProjMod::ProjMod(std::vector<FinSet> twists) : twists_(std::move(twists)) {
    std::sort(twists_.begin(), twists_.end());
}

std::vector<std::int64_t> ProjMod::integer_multiset() const {
    std::vector<std::int64_t> out;
    for (const auto& t : twists_) out.insert(out.end(), t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

ProjMod ProjMod::direct_sum(const ProjMod& other) const {
    std::vector<FinSet> all = twists_;
    all.insert(all.end(), other.twists_.begin(), other.twists_.end());
    return ProjMod(std::move(all));
}

bool is_zero_module(const CatModule& m) {
    const ProjMod* p = std::get_if<ProjMod>(&m);
    return p && p->is_zero();
}

unsigned hom_dim(const FinSet& i, const SimpleMod& s) {
    switch (s.family()) {
        case SimpleMod::Family::X: return i.contains(s.index()) ? 0 : 1;
        case SimpleMod::Family::Y: return i.contains(s.index()) ? 1 : 0;
        case SimpleMod::Family::O: return 1;
    }
    return 0;
}

unsigned simple_component_dim(const SimpleMod& s, const FinSet& i) {
    return hom_dim(i, s);
}

SimpleMod twist(const SimpleMod& s, const FinSet& j) {
    switch (s.family()) {
        case SimpleMod::Family::X:
            return j.contains(s.index()) ? SimpleMod::Y(s.index()) : s;
        case SimpleMod::Family::Y:
            return j.contains(s.index()) ? SimpleMod::X(s.index()) : s;
        case SimpleMod::Family::O: return s;
    }
    return s;
}

ProjMod twist(const ProjMod& p, const FinSet& j) {
    std::vector<FinSet> out;
    out.reserve(p.rank());
    for (const auto& i : p.twists()) out.push_back(fs_xor(i, j));
    return ProjMod(std::move(out));
}

CatModule twist(const CatModule& m, const FinSet& j) {
    return std::visit([&](const auto& v) -> CatModule { return twist(v, j); }, m);
}

namespace {

CatModule tensor_specials(const SimpleMod& s, const SimpleMod& t) {
    if (!s.is_special() || !t.is_special())
        throw std::domain_error("tensor: ordinary simples are outside the tensor table");
    if (s.index() != t.index()) return ProjMod(); // zero
    bool both_y = s.family() == SimpleMod::Family::Y && t.family() == SimpleMod::Family::Y;
    bool any_y = s.family() == SimpleMod::Family::Y || t.family() == SimpleMod::Family::Y;
    // X.X = X, Y.Y = X, X.Y = Y -- on the shared index.
    if (both_y || !any_y) return SimpleMod::X(s.index());
    return SimpleMod::Y(s.index());
}

CatModule tensor_proj_simple(const ProjMod& p, const SimpleMod& s) {
    if (p.is_zero()) return ProjMod();
    if (p.rank() != 1)
        throw std::domain_error("tensor: projective (x) simple needs rank one");
    return twist(s, p.twists()[0]);
}

} // namespace

CatModule tensor(const CatModule& a, const CatModule& b) {
    if (const ProjMod* p = std::get_if<ProjMod>(&a)) {
        if (const ProjMod* q = std::get_if<ProjMod>(&b)) {
            std::vector<FinSet> out;
            out.reserve(p->rank() * q->rank());
            for (const auto& i : p->twists())
                for (const auto& j : q->twists()) out.push_back(fs_xor(i, j));
            return ProjMod(std::move(out));
        }
        return tensor_proj_simple(*p, std::get<SimpleMod>(b));
    }
    const SimpleMod& s = std::get<SimpleMod>(a);
    if (const ProjMod* q = std::get_if<ProjMod>(&b)) return tensor_proj_simple(*q, s);
    return tensor_specials(s, std::get<SimpleMod>(b));
}

bool proj_iso(const ProjMod& p, const ProjMod& q) {
    return p.rank() == q.rank() && p.integer_multiset() == q.integer_multiset();
}

ProjMod proj_canonical_chain(const ProjMod& p) {
    std::map<std::int64_t, std::size_t> mult;
    std::size_t maxmult = 0;
    for (std::int64_t n : p.integer_multiset()) maxmult = std::max(maxmult, ++mult[n]);
    std::vector<FinSet> chain;
    for (std::size_t k = 1; k <= maxmult; ++k) {
        std::vector<std::int64_t> level;
        for (const auto& [n, m] : mult)
            if (m >= k) level.push_back(n);
        chain.push_back(FinSet(std::move(level)));
    }
    while (chain.size() < p.rank()) chain.push_back(FinSet());
    return ProjMod(std::move(chain));
}

bool surjects_onto_twist(const FinSet& i, const FinSet& j, const FinSet& k) {
    FinSet lo = fs_intersect(i, j), hi = fs_union(i, j);
    return fs_union(lo, k) == k && fs_union(k, hi) == hi;
}

bool generates(const std::vector<FinSet>& s, const FinSet& k) {
    if (s.empty()) throw std::invalid_argument("generates: empty family");
    FinSet lo = s[0], hi = s[0];
    for (std::size_t i = 1; i < s.size(); ++i) {
        lo = fs_intersect(lo, s[i]);
        hi = fs_union(hi, s[i]);
    }
    return fs_union(lo, k) == k && fs_union(k, hi) == hi;
}

FinSet hom_proj_proj(const FinSet& i, const FinSet& j) { return fs_xor(i, j); }

unsigned ext1_dim(const SimpleMod& s, const SimpleMod& t) {
    if (!s.is_special() || !t.is_special())
        throw std::domain_error("ext1_dim: ordinary simples are outside the table");
    if (s == t) throw std::domain_error("ext1_dim: self-extensions are not tabulated");
    return (s.index() == t.index() && s.family() != t.family()) ? 1 : 0;
}

} // namespace grweyl
