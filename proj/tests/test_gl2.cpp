#include "g2az/gl2.hpp"

#include <doctest.h>

using namespace g2az;

namespace {

FChar nu(Rational s) { return FChar::nu(s); }

struct Syms {
    SymbolGroupPtr g = std::make_shared<SymbolGroup>();
    FChar chi, xi;
    Syms() {
        g->declare("chi", 3, true);
        g->declare("xi", 0, true);
        chi = FChar::generator(g, "chi");
        xi = FChar::generator(g, "xi");
    }
};

} // namespace

TEST_CASE("reducible principal series split into Steinberg and trivial") {
    Syms s;
    for (FChar c : {FChar(), s.chi}) {
        Gl2Sum a = gl2_decompose(make_ps(Levi::Alpha, {nu(Rational(1, 2)) * c, nu(Rational(-1, 2)) * c}));
        CHECK(a == Gl2Sum(make_steinberg(Levi::Alpha, c)) + Gl2Sum(make_trivial(Levi::Alpha, c)));
    }
    // L_b coordinates: (chi1 chi2, chi1)
    Gl2Sum b = gl2_decompose(make_ps(Levi::Beta, {nu(Rational(-1, 2)) * s.chi, nu(1)}));
    CHECK(b.size() == 2);
    CHECK(b.total() == 2);
    // (1 (x) chi) o a^v = chi^-1, not nu^{+-1}
    Gl2Sum c = gl2_decompose(make_ps(Levi::Alpha, {FChar(), s.chi}));
    CHECK(c.size() == 1);
    CHECK(c.begin()->first.kind == Gl2Kind::PrincipalSeries);
}

TEST_CASE("Jacquet modules of Steinberg and trivial on L_b") {
    Syms s;
    Rational t(3, 4);
    GL2Class st = make_steinberg(Levi::Beta, nu(t) * s.chi);
    GL2Class tr = make_trivial(Levi::Beta, nu(t) * s.chi);
    // torus coordinates
    CHECK(gl2_restrict(st) == TorusSum(TorusCharacter{nu(t - Rational(1, 2)) * s.chi, nu(1)}));
    CHECK(gl2_restrict(tr) == TorusSum(TorusCharacter{nu(t + Rational(1, 2)) * s.chi, nu(-1)}));
    CHECK(gl2_restrict(make_cuspidal(Levi::Alpha, "sigma", Rational(0))).empty());
    // principal series: the two-element orbit
    TorusCharacter x{nu(Rational(2, 7)), s.xi};
    CHECK(gl2_restrict(make_ps(Levi::Alpha, x)).size() == 2);
}

TEST_CASE("twists") {
    Syms s;
    TorusCharacter x{s.xi, s.chi};
    Rational t(2, 3);
    auto [a1, a2] = to_gl2_coords(Levi::Alpha, x);
    GL2Class ta = gl2_twist(make_ps(Levi::Alpha, x), nu(t));
    CHECK(ta == make_ps(Levi::Alpha, from_gl2_coords(Levi::Alpha, nu(t) * a1, nu(t) * a2)));
    auto [b1, b2] = to_gl2_coords(Levi::Beta, x);
    GL2Class tb = gl2_twist(make_ps(Levi::Beta, x), nu(t));
    CHECK(tb == make_ps(Levi::Beta, from_gl2_coords(Levi::Beta, nu(t) * b1, nu(t) * b2)));
    CHECK(gl2_twist(make_ps(Levi::Beta, x), FChar()) == make_ps(Levi::Beta, x));
}

TEST_CASE("GL2 duality from i o r - id") {
    Syms s;
    for (Levi l : {Levi::Alpha, Levi::Beta})
        for (FChar c : {FChar(), s.chi, s.chi.inverse(), nu(Rational(5, 2)) * s.xi}) {
            CHECK(dualize_gl2(Gl2Sum(make_steinberg(l, c))) == Gl2Sum(make_trivial(l, c)));
            CHECK(dualize_gl2(Gl2Sum(make_trivial(l, c))) == Gl2Sum(make_steinberg(l, c)));
        }
    Gl2Sum ps(make_ps(Levi::Alpha, {nu(Rational(2, 7)), s.xi}));
    CHECK(dualize_gl2(ps) == ps);
    Gl2Sum cusp(make_cuspidal(Levi::Alpha, "sigma", Rational(0)));
    CHECK(dualize_gl2(cusp) == -cusp);
}
