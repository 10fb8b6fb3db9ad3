#include <doctest.h>

#include "testutil.hpp"

using namespace grweyl;
using testutil::Rng;

namespace {
FinSet fs(std::vector<std::int64_t> v) { return FinSet(std::move(v)); }
} // namespace

TEST_CASE("grammar acceptance") {
    CHECK(parse_finset("{1,3,-2}") == fs({-2, 1, 3}));
    CHECK(parse_finset("{}") == FinSet());
    CHECK(parse_finset(" { 5 , -5 } ") == fs({-5, 5}));

    CHECK(parse_poly("z^2 - 3*z + 1/2") ==
          Poly(std::vector<Rational>{Rational(1, 2), -3, 1}));
    CHECK(parse_poly("(z-1)(z-2)") == parse_poly("z^2-3z+2"));
    CHECK(parse_poly("z/2") == Poly(std::vector<Rational>{0, Rational(1, 2)}));
    CHECK(parse_poly("-z") == -Poly::z());

    CHECK(parse_isometry("n->n+3") == Isometry::translation(3));
    CHECK(parse_isometry("n->-n+1") == Isometry{-1, 1});
    CHECK(parse_isometry("n->n") == Isometry::identity());
    CHECK(parse_isometry("id") == Isometry::identity());

    CHECK(parse_celement("(z-1)*x{1,3} + 2*x{}") ==
          CElement::from_term(fs({1, 3}), parse_poly("z-1")) +
              CElement::scalar(Poly(2)));
    CHECK(parse_celement("x{1}*x{1}") == CElement::scalar(parse_poly("z-1")));
    CHECK(parse_celement("x{1}^2") == CElement::scalar(parse_poly("z-1")));
    CHECK(parse_celement("z - 5") == CElement::scalar(parse_poly("z-5")));

    CHECK(parse_aaut("tau^2*phi") == AlmostAut::word(2, true));
    CHECK(parse_aaut("phi*phi") == AlmostAut::identity());
    CHECK(parse_aaut("tau^-3") == AlmostAut::tau_power(-3));

    CHECK(parse_module("C{1}+C{2}") == CatModule(ProjMod({fs({1}), fs({2})})));
    CHECK(parse_module("C{1}\xE2\x8A\x95""C{2}") == parse_module("C{1}+C{2}"));
    CHECK(parse_module("X(3)") == CatModule(SimpleMod::X(3)));
    CHECK(parse_module("0") == CatModule(ProjMod()));
    CHECK(parse_simple("O(1/2)") == SimpleMod::O(Rational(1, 2)));
    CHECK(parse_simple("Y(-1)") == SimpleMod::Y(-1));

    CHECK(parse_k0("u{1,2}") == K0Elem::point(1) + K0Elem::point(2) - K0Elem::unit(1));
    CHECK(parse_k0("u1 + u2 - 1") == parse_k0("u{1,2}"));
    CHECK(parse_k0("u(-3)") == K0Elem::point(-3));
    CHECK(parse_k0("2*u{} - u3") == K0Elem::unit(2) - K0Elem::point(3));
    CHECK(parse_k0("u1*u1") == K0Elem::unit(1));

    CHECK(parse_pic("({0},n->n+1)") == PicElem::make(fs({0}), Isometry::translation(1)));
    CHECK(parse_pic("tau*phi") == pic_compose(PicElem::tau(), PicElem::phi()));
    CHECK(parse_pic("twist{1,2}") == PicElem::twist_by(fs({1, 2})));
    CHECK(parse_pic("tau^-2") ==
          pic_compose(pic_invert(PicElem::tau()), pic_invert(PicElem::tau())));

    CHECK(parse_weyl("x^2*(z-1) + y*(z+3) + (z^2)") ==
          WeylElem::from_component(2, parse_poly("z-1")) +
              WeylElem::from_component(-1, parse_poly("z+3")) +
              WeylElem::from_component(0, parse_poly("z^2")));
    CHECK(parse_weyl("x*y") == WeylElem::z());
    CHECK(parse_weyl("y x") == parse_weyl("z-1"));

    CHECK(parse_belem("(z-1)@{1}") == BElem::b(1));
    CHECK(parse_pelem("e[0]*(x{1}) + e[-1]*((z-2)*x{})") ==
          PElem::from_component(0, CElement::x(1)) +
              PElem::from_component(-1, CElement::scalar(parse_poly("z-2"))));
    CHECK(parse_pelem("e[3]") == PElem::e(3));

    CHECK(parse_asimple("X(3)") == ASimple::X(3));
    CHECK(parse_ideal("(z-5)*x{} ; (z-3)*x{5}") == GradedIdeal::principal(Poly(1), fs({5})));
    CHECK(parse_ideal("0").is_zero());
}

TEST_CASE("parse failures carry positions") {
    CHECK_THROWS_AS(parse_finset("{1,1}"), ParseError);
    CHECK_THROWS_AS(parse_finset("{1"), ParseError);
    CHECK_THROWS_AS(parse_celement("x{1} +"), ParseError);
    CHECK_THROWS_AS(parse_celement("x{1} junk"), ParseError);
    CHECK_THROWS_AS(parse_poly("x{1}"), ParseError);
    CHECK_THROWS_AS(parse_weyl("w"), ParseError);
    CHECK_THROWS_AS(parse_k0("u"), ParseError);
    CHECK_THROWS_AS(parse_isometry("n->2n"), ParseError);
    CHECK_THROWS_AS(parse_celement("1/0"), ParseError);
    CHECK_THROWS_AS(parse_asimple("O(1/2)"), ParseError);

    try {
        parse_finset("{1, 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("printers and parsers are inverse") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        FinSet s = testutil::random_finset(rng, 5, -20, 20);
        CHECK(parse_finset(to_text(s)) == s);

        Isometry g = testutil::random_isometry(rng, 12);
        CHECK(parse_isometry(to_text(g)) == g);

        Poly p = testutil::random_poly(rng, 5, 6);
        CHECK(parse_poly(to_text(p)) == p);

        CElement c = testutil::random_celement(rng, 4, 3, 4);
        CHECK(parse_celement(to_text(c)) == c);

        PicElem f = testutil::random_pic(rng, 3, 6, 6);
        CHECK(parse_pic(to_text(f)) == f);

        K0Elem k = testutil::random_k0(rng, 4, 8);
        CHECK(parse_k0(to_text(k)) == k);

        WeylElem w = testutil::random_weyl(rng, 5, 4);
        CHECK(parse_weyl(to_text(w)) == w);

        BElem b = testutil::random_belem(rng, 3, 5, 2);
        CHECK(parse_belem(to_text(b)) == b);

        PElem pe = testutil::random_pelem(rng, 3, 5);
        CHECK(parse_pelem(to_text(pe)) == pe);

        SimpleMod sm = testutil::random_simple(rng, 10);
        CHECK(parse_simple(to_text(sm)) == sm);

        ProjMod pj = testutil::random_proj(rng, 4, 3, 8);
        CHECK(parse_module(to_text(pj)) == CatModule(pj));

        ASimple as = testutil::random_asimple(rng, 10);
        CHECK(parse_asimple(to_text(as)) == as);
    }

    // almost-automorphism words
    for (std::int64_t e = -5; e <= 5; ++e) {
        for (bool with_phi : {false, true}) {
            AlmostAut a = AlmostAut::word(e, with_phi);
            CHECK(parse_aaut(to_text(a)) == a);
        }
    }

    // ideals, including the zero ideal
    Rng rng2(102);
    for (int i = 0; i < 50; ++i) {
        GradedIdeal a = GradedIdeal::principal(testutil::random_rooted_poly(rng2),
                                               testutil::random_finset(rng2, 3, -5, 5));
        CHECK(parse_ideal(to_text(a)) == a);
    }
    CHECK(parse_ideal(to_text(GradedIdeal::zero_ideal())).is_zero());
}
