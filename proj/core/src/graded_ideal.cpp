#include "grweyl/graded_ideal.hpp"

#include <functional>
#include <stdexcept>

namespace grweyl {

namespace {

// Enumerate all subsets of u (u.size() <= 63 assumed; practical inputs are tiny).
template <typename Fn>
void for_each_subset(const FinSet& u, Fn&& fn) {
    const auto& v = u.elements();
    if (v.size() >= 63) throw std::invalid_argument("graded ideal: index universe too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << v.size()); ++mask) {
        std::vector<std::int64_t> sub;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) sub.push_back(v[i]);
        fn(FinSet(std::move(sub)));
    }
}

// Recover the normal form from the component-generator function K -> g_K on
// subsets of u, then verify g_K = d * h_{J-K} throughout. The verification
// is the runtime form of the principality theorem; its failure means the
// component function does not describe a principal graded ideal.
GradedIdeal from_components(const FinSet& u, const std::function<Poly(const FinSet&)>& g) {
    Poly d = g(u);
    if (d.is_zero()) return GradedIdeal::zero_ideal();
    d = d.monic();

    Poly g_empty = g(FinSet());
    Poly hj = poly_divexact(g_empty.monic(), d);
    std::vector<std::int64_t> j_elems;
    for (const auto& [root, mult] : integer_roots(hj)) {
        if (mult != 1) throw std::logic_error("graded ideal: component quotient has a repeated root");
        j_elems.push_back(root);
    }
    FinSet j(std::move(j_elems));
    if (h_poly(j) != hj)
        throw std::logic_error("graded ideal: component quotient is not a product of distinct z - j");
    if (fs_union(j, u) != u)
        throw std::logic_error("graded ideal: twist escapes the generator index universe");

    GradedIdeal result = GradedIdeal::principal(d, j);
    for_each_subset(u, [&](const FinSet& k) {
        if (g(k).monic() != result.component_generator(k))
            throw std::logic_error("graded ideal: component verification failed");
    });
    return result;
}

} // namespace

GradedIdeal GradedIdeal::principal(const Poly& d, const FinSet& j) {
    if (d.is_zero()) throw std::invalid_argument("GradedIdeal::principal: zero generator");
    GradedIdeal a;
    a.zero_ = false;
    a.d_ = d.monic();
    a.j_ = j;
    return a;
}

GradedIdeal GradedIdeal::normalize(const std::vector<std::pair<Poly, FinSet>>& gens) {
    std::vector<std::pair<Poly, FinSet>> gs;
    for (const auto& g : gens)
        if (!g.first.is_zero()) gs.push_back(g);
    if (gs.empty()) return zero_ideal();

    FinSet u;
    for (const auto& [f, i] : gs) u = fs_union(u, i);

    auto component = [&gs](const FinSet& k) {
        Poly acc;
        for (const auto& [f, i] : gs) acc = poly_gcd(acc, f * h_poly(fs_diff(i, k)));
        return acc;
    };
    return from_components(u, component);
}

CElement GradedIdeal::generator() const {
    if (zero_) return CElement::zero();
    return CElement::from_term(j_, d_);
}

Poly GradedIdeal::component_generator(const FinSet& k) const {
    if (zero_) return {};
    return d_ * h_poly(fs_diff(j_, k));
}

bool ideal_member(const CElement& c, const GradedIdeal& a) {
    if (a.is_zero()) return c.is_zero();
    for (const auto& [i, f] : c.terms()) {
        auto [q, r] = poly_divmod(f, a.component_generator(i));
        if (!r.is_zero()) return false;
    }
    return true;
}

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b) {
    std::vector<std::pair<Poly, FinSet>> gens;
    if (!a.is_zero()) gens.emplace_back(a.d(), a.twist());
    if (!b.is_zero()) gens.emplace_back(b.d(), b.twist());
    return GradedIdeal::normalize(gens);
}

GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b) {
    if (a.is_zero() || b.is_zero()) return GradedIdeal::zero_ideal();
    Poly d = a.d() * b.d() * h_poly(fs_intersect(a.twist(), b.twist()));
    return GradedIdeal::principal(d, fs_xor(a.twist(), b.twist()));
}

GradedIdeal ideal_intersect(const GradedIdeal& a, const GradedIdeal& b) {
    if (a.is_zero() || b.is_zero()) return GradedIdeal::zero_ideal();
    FinSet u = fs_union(a.twist(), b.twist());
    auto component = [&](const FinSet& k) {
        return poly_lcm(a.component_generator(k), b.component_generator(k));
    };
    return from_components(u, component);
}

} // namespace grweyl
