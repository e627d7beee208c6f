#include "g2az/eval.hpp"
#include "g2az/groth.hpp"

#include <doctest.h>

using namespace g2az;

namespace {

FChar nu(Rational s) { return FChar::nu(s); }

struct Fixture {
    IrrDb db;
    Evaluator ev{db};
    FChar xi, chi;
    Fixture() {
        db.symbols()->declare("xi", 0, true);
        db.symbols()->declare("chi", 3, true);
        xi = FChar::generator(db.symbols(), "xi");
        chi = FChar::generator(db.symbols(), "chi");
    }
    std::vector<G2Class> induced() const {
        return {induced_b({nu(Rational(2, 7)), xi}),
                induced_b({nu(-1), xi}),
                induced_b({nu(1) * chi, chi}),
                induced_max(make_steinberg(Levi::Alpha, nu(Rational(1, 2)) * chi)),
                induced_max(make_trivial(Levi::Beta, nu(Rational(3, 2)))),
                induced_max(make_ps(Levi::Beta, {nu(Rational(1, 3)) * xi, chi}))};
    }
};

// Same Jacquet modules for every standard parabolic.
bool same_jacquet(const G2Sum& a, const G2Sum& b) {
    return restrict_torus(a, nullptr) == restrict_torus(b, nullptr) &&
           restrict_levi(Levi::Alpha, a, nullptr) == restrict_levi(Levi::Alpha, b, nullptr) &&
           restrict_levi(Levi::Beta, a, nullptr) == restrict_levi(Levi::Beta, b, nullptr);
}

} // namespace

TEST_CASE("Jacquet functors compose") {
    Fixture f;
    for (const auto& x : f.induced()) {
        TorusSum r0 = restrict_torus(x, nullptr);
        // |W| for the Borel, |W / W_L| per torus character of the inducing datum
        long per = std::holds_alternative<InducedB>(x.v) ? 12 : 6;
        long chars = 1;
        if (auto* m = std::get_if<InducedMax>(&x.v); m && m->arg.kind == Gl2Kind::PrincipalSeries) chars = 2;
        CHECK(r0.total() == per * chars);
        CHECK(gl2_restrict(restrict_levi(Levi::Alpha, x, nullptr)) == r0);
        CHECK(gl2_restrict(restrict_levi(Levi::Beta, x, nullptr)) == r0);
    }
    CHECK(restrict_torus(G2Sum(), nullptr).empty());
    CHECK(induce_torus(TorusSum()).empty());
}

TEST_CASE("regular principal series: 12 distinct characters, self-dual") {
    Fixture f;
    G2Class x = induced_b({nu(Rational(2, 7)), f.xi});
    CHECK(restrict_torus(x, nullptr).size() == 12);
    G2Sum d = dualize_raw(G2Sum(x), nullptr);
    CHECK(equal_in_r(d, G2Sum(x), nullptr));
}

TEST_CASE("duality commutes with maximal parabolic induction") {
    Fixture f;
    std::vector<GL2Class> ys = {make_steinberg(Levi::Alpha, nu(Rational(1, 2)) * f.chi),
                                make_trivial(Levi::Beta, nu(Rational(5, 2))),
                                make_steinberg(Levi::Beta, nu(Rational(2, 7)) * f.xi),
                                make_ps(Levi::Alpha, {nu(Rational(1, 3)) * f.xi, f.chi})};
    for (const auto& y : ys) {
        G2Sum lhs = dualize_raw(G2Sum(induced_max(y)), nullptr);
        G2Sum rhs = induce_levi(dualize_gl2(Gl2Sum(y)));
        CHECK_MESSAGE(same_jacquet(lhs, rhs), str(lhs - rhs));
    }
}

TEST_CASE("induction in stages") {
    Fixture f;
    // I_a(delta(nu^{1/2} chi)) + I_a(nu^{1/2} chi o det) = I(nu chi (x) chi)
    G2Sum pair = G2Sum(induced_max(make_steinberg(Levi::Alpha, nu(Rational(1, 2)) * f.chi))) +
                 G2Sum(induced_max(make_trivial(Levi::Alpha, nu(Rational(1, 2)) * f.chi)));
    G2Sum full(induced_b({nu(1) * f.chi, f.chi}));
    CHECK(same_jacquet(pair, full));
    f.db.register_case("cubic-1/2");
    CHECK(equal_in_r(pair, full, &f.db));
    // I_b(I^b(t)) = I(t)
    TorusCharacter t{nu(1) * f.chi, f.chi};
    CHECK(equal_in_r(induce_levi(gl2_induce(Levi::Beta, t)), G2Sum(induced_b(t)), nullptr));
    // keys stay distinct until canonicalized
    const WeylElement& s = g2_weyl().from_word({0});
    TorusCharacter u{nu(Rational(2, 7)), f.xi};
    G2Class a = induced_b(u), b = induced_b(weyl_act_char(s, u));
    CHECK_FALSE(a == b);
    CHECK(canonical(a) == canonical(b));
}

TEST_CASE("closed forms") {
    Fixture f;
    f.db.register_case("unit-1/2");
    auto same = [&](const std::string& a, const std::string& b) {
        Value x = f.ev.eval(a);
        Value y = f.ev.eval(b, Evaluator::levi_of(x));
        std::string diff;
        bool ok = f.ev.equal(x, y, &diff);
        CHECK_MESSAGE(ok, a << " : " << diff);
    };
    same("r_a(I_a(1/2, delta(1)))", "2 nu^{1/2} delta(1) + nu^{-1/2} delta(1) + nu^{1/2} triv(1) + I^a(nu (x) nu^-1)");
    same("r_b(I_b(5/2, delta(1)))", "nu^{5/2} delta(1) + nu^{-5/2} delta(1) + I^b(nu (x) nu^2) + I^b(nu^-2 (x) nu^3)");
}
