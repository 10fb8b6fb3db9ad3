#include <doctest.h>

#include "testutil.hpp"

using namespace grweyl;
using testutil::Rng;

namespace {
FinSet fs(std::vector<std::int64_t> v) { return FinSet(std::move(v)); }
const Poly kZ = Poly::z();

GradedIdeal random_ideal(Rng& rng) {
    return GradedIdeal::principal(testutil::random_rooted_poly(rng),
                                  testutil::random_finset(rng, 3, -5, 5));
}
} // namespace

TEST_CASE("normal forms") {
    // (z-5, {}) and (z-3, {5}) together generate the ideal of x_5
    GradedIdeal a = GradedIdeal::normalize({{kZ - Poly(5), FinSet()}, {kZ - Poly(3), fs({5})}});
    CHECK(a == GradedIdeal::principal(Poly(1), fs({5})));

    // x_1 and x_2 generate the ideal with twist {1} cap {2} = {}
    GradedIdeal b = GradedIdeal::normalize({{Poly(1), fs({1})}, {Poly(1), fs({2})}});
    CHECK(b == GradedIdeal::principal(Poly(1), FinSet()));

    // z - 1 and x_1 generate the ideal of x_1
    GradedIdeal c = GradedIdeal::normalize({{kZ - Poly(1), FinSet()}, {Poly(1), fs({1})}});
    CHECK(c == GradedIdeal::principal(Poly(1), fs({1})));

    CHECK(GradedIdeal::normalize({}).is_zero());
    CHECK(GradedIdeal::normalize({{Poly(), fs({1})}}).is_zero());
    // non-monic input generators are made monic
    CHECK(GradedIdeal::normalize({{Poly(2) * (kZ - Poly(1)), FinSet()}}) ==
          GradedIdeal::principal(kZ - Poly(1), FinSet()));
}

TEST_CASE("membership") {
    GradedIdeal x5 = GradedIdeal::principal(Poly(1), fs({5}));
    CHECK(ideal_member(CElement::x(5) * CElement::x(5), x5));
    CHECK(ideal_member(CElement::scalar(kZ - Poly(5)), x5));
    CHECK(!ideal_member(CElement::x(5), GradedIdeal::principal(kZ - Poly(5), FinSet())));
    CHECK(ideal_member(CElement::zero(), x5));
    CHECK(ideal_member(CElement::zero(), GradedIdeal::zero_ideal()));
    CHECK(!ideal_member(CElement::one(), GradedIdeal::zero_ideal()));
}

TEST_CASE("sum, product, intersection") {
    GradedIdeal x1 = GradedIdeal::principal(Poly(1), fs({1}));
    GradedIdeal x2 = GradedIdeal::principal(Poly(1), fs({2}));
    CHECK(ideal_sum(x1, x2) == GradedIdeal::principal(Poly(1), FinSet()));
    CHECK(ideal_intersect(x1, x2) == GradedIdeal::principal(Poly(1), fs({1, 2})));
    CHECK(ideal_product(x1, x1) == GradedIdeal::principal(kZ - Poly(1), FinSet()));

    // zero propagates
    CHECK(ideal_sum(x1, GradedIdeal::zero_ideal()) == x1);
    CHECK(ideal_product(x1, GradedIdeal::zero_ideal()).is_zero());
    CHECK(ideal_intersect(x1, GradedIdeal::zero_ideal()).is_zero());
}

TEST_CASE("twist compatibility of products") {
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        FinSet a = testutil::random_finset(rng, 3, -5, 5);
        FinSet b = testutil::random_finset(rng, 3, -5, 5);
        GradedIdeal p = ideal_product(GradedIdeal::principal(Poly(1), a),
                                      GradedIdeal::principal(Poly(1), b));
        CHECK(p.twist() == fs_xor(a, b));
        CHECK(p.d() == h_poly(fs_intersect(a, b)));
    }
}

TEST_CASE("idempotent normalization") {
    Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::pair<Poly, FinSet>> gens;
        int k = static_cast<int>(testutil::rint(rng, 1, 3));
        for (int g = 0; g < k; ++g)
            gens.emplace_back(testutil::random_rooted_poly(rng),
                              testutil::random_finset(rng, 3, -5, 5));
        GradedIdeal a = GradedIdeal::normalize(gens);
        CHECK(GradedIdeal::normalize({{a.d(), a.twist()}}) == a);
    }
}

TEST_CASE("normalization agrees with the span oracle") {
    Rng rng(43);
    const std::size_t width = 11; // z-degrees 0..10
    for (int i = 0; i < 40; ++i) {
        std::vector<std::pair<Poly, FinSet>> gens;
        int k = static_cast<int>(testutil::rint(rng, 1, 3));
        for (int g = 0; g < k; ++g)
            gens.emplace_back(testutil::random_rooted_poly(rng),
                              testutil::random_finset(rng, 3, -5, 5));
        GradedIdeal a = GradedIdeal::normalize(gens);
        REQUIRE(!a.is_zero());
        std::vector<std::pair<Poly, FinSet>> out{{a.d(), a.twist()}};

        FinSet u;
        for (const auto& [f, s] : gens) u = fs_union(u, s);
        for (const FinSet& kset : testutil::all_subsets(u)) {
            CHECK(testutil::span_equal(testutil::component_span(gens, kset, width),
                                       testutil::component_span(out, kset, width)));
        }
        // two-sided membership
        for (const auto& [f, s] : gens) CHECK(ideal_member(CElement::from_term(s, f), a));
    }
}

TEST_CASE("lattice laws") {
    Rng rng(44);
    for (int i = 0; i < 30; ++i) {
        GradedIdeal a = random_ideal(rng);
        GradedIdeal b = random_ideal(rng);
        GradedIdeal c = random_ideal(rng);

        CHECK(ideal_sum(a, b) == ideal_sum(b, a));
        CHECK(ideal_intersect(a, b) == ideal_intersect(b, a));
        CHECK(ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c)));
        CHECK(ideal_intersect(ideal_intersect(a, b), c) ==
              ideal_intersect(a, ideal_intersect(b, c)));
        CHECK(ideal_sum(a, a) == a);
        CHECK(ideal_intersect(a, a) == a);

        // absorption via membership of generators
        CHECK(ideal_member(a.generator(), ideal_sum(a, b)));
        CHECK(ideal_member(ideal_intersect(a, b).generator(), a));
        CHECK(ideal_sum(a, ideal_intersect(a, b)) == a);
        CHECK(ideal_intersect(a, ideal_sum(a, b)) == a);
    }
}
