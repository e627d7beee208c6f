#include "g2az/chars.hpp"

#include <doctest.h>

#include <set>

using namespace g2az;

namespace {

struct Syms {
    SymbolGroupPtr g = std::make_shared<SymbolGroup>();
    FChar xi, chi2, chi3, eta;
    Syms() {
        g->declare("xi", 0, true);
        g->declare("chi2", 2, true);
        g->declare("chi3", 3, true);
        g->declare("eta", 2, false);
        xi = FChar::generator(g, "xi");
        chi2 = FChar::generator(g, "chi2");
        chi3 = FChar::generator(g, "chi3");
        eta = FChar::generator(g, "eta");
    }
};

FChar nu(Rational s) { return FChar::nu(s); }

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-7, 2).floor() == Rational(-4));
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(parse_rational("1/x"), Error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), Error);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("symbol group law") {
    Syms s;
    CHECK((s.chi3 * s.chi3 * s.chi3).is_trivial());
    CHECK(s.chi3.inverse() == s.chi3.pow(2));
    CHECK((s.chi2 * s.chi2).is_trivial());
    CHECK(s.chi3.finite_order() == 3);
    CHECK(s.xi.finite_order() == 0);
    CHECK(s.xi.involves_infinite_symbol());
    CHECK(s.chi2.ramified());
    CHECK_FALSE(s.eta.ramified());
    CHECK_FALSE(s.xi.pow(5).is_trivial());
    FChar a = nu(Rational(1, 2)) * s.xi;
    CHECK(a.inverse() == nu(Rational(-1, 2)) * s.xi.pow(-1));
    CHECK((a * a.inverse()).is_trivial());
    CHECK(a.twist(Rational(1, 2)) == nu(1) * s.xi);
    // torus characters
    TorusCharacter t{nu(1), s.xi}, u{nu(-1), s.xi.inverse()};
    CHECK((t * u) == TorusCharacter{FChar(), FChar()});
    CHECK(t.inverse() == u);
    CHECK_THROWS_AS(s.g->declare("chi3", 2, true), Error);
}

TEST_CASE("Weyl action on characters") {
    Syms s;
    const WeylGroup& W = g2_weyl();
    TorusCharacter t{nu(Rational(2, 7)) * s.xi, nu(Rational(-3, 5)) * s.chi3};
    TorusCharacter t2{nu(1) * s.chi2, s.xi.pow(2)};
    for (const auto& a : W.elements()) {
        for (const auto& b : W.elements())
            CHECK(weyl_act_char(W.compose(a, b), t) == weyl_act_char(a, weyl_act_char(b, t)));
        CHECK(weyl_act_char(a, t * t2) == weyl_act_char(a, t) * weyl_act_char(a, t2));
    }
    CHECK(weyl_act_char(W.identity(), t) == t);

    // w = s_a s_b s_a s_b s_a on nu^{-s2 -+ 1} xi^-1 (x) nu^{s2} xi
    const WeylElement& w = W.from_word({0, 1, 0, 1, 0});
    Rational s2(2, 7);
    for (int e : {-1, 1}) {
        TorusCharacter in{nu(-s2 - e) * s.xi.inverse(), nu(s2) * s.xi};
        CHECK(weyl_act_char(w, in) == TorusCharacter{nu(e), nu(s2) * s.xi});
    }
}

TEST_CASE("orbits and stabilizers") {
    Syms s;
    for (int e : {-1, 1}) {
        TorusCharacter t{nu(e), s.xi};
        auto orb = weyl_orbit(t);
        std::set<TorusCharacter> distinct(orb.begin(), orb.end());
        CHECK(distinct.size() == 12);
        CHECK(stabilizer_order(t) == 1);
        CHECK(classify(t).regular);
    }
    // s_b swaps the diagonal of T_b, (chi1 chi2, chi1) -> (chi1, chi1 chi2),
    // so it fixes nu (x) 1; s_a s_b s_a does not.
    TorusCharacter v{nu(1), FChar()};
    const WeylGroup& W = g2_weyl();
    CHECK(weyl_act_char(W.from_word({1}), v) == v);
    CHECK(weyl_act_char(W.from_word({0, 1, 0}), v) == TorusCharacter{nu(-1), nu(1)});
    CHECK(stabilizer_order(v) == 2);
    CHECK(stabilizer_order(TorusCharacter{nu(1), nu(-1)}) > 1);
}

TEST_CASE("reducibility conditions") {
    Syms s;
    CharClass a = classify(TorusCharacter{nu(1), FChar()});
    CHECK(a.conditions.count(1));
    CHECK(a.conditions.count(2));

    CharClass b = classify(TorusCharacter{nu(Rational(1, 2)) * s.chi2, nu(Rational(-1, 2)) * s.chi2});
    CHECK(b.conditions.count(3));
    CHECK_FALSE(b.unramified);

    CharClass c = classify(TorusCharacter{nu(Rational(2, 7)), FChar()});
    CHECK_FALSE(c.reducible());
    CHECK(c.conditions.empty());

    CharClass g = classify(TorusCharacter{nu(Rational(2, 7)), s.xi});
    CHECK_FALSE(g.reducible());

    CharClass r = classify(TorusCharacter{nu(-1), s.xi});
    CHECK(r.reducing_roots.size() == 1);
}
