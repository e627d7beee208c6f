#include "g2az/eval.hpp"
#include "g2az/irrdb.hpp"

#include <doctest.h>

using namespace g2az;

namespace {

const std::vector<std::string> kCases = {"unit-1/2",         "unit-3/2",          "quadratic-1/2",
                                         "cubic-1/2",        "generic-length-2",  "case3-length-2",
                                         "intermediate-alpha", "intermediate-beta"};

struct Loaded {
    IrrDb db;
    Evaluator ev{db};
    explicit Loaded(const std::string& tag) { db.register_case(tag); }
    IrrLabel label(const std::string& text) { return Evaluator::single_irr(ev.eval_g2(text), text); }
    G2Sum sum(const std::string& text) { return ev.eval_g2(text); }
};

} // namespace

TEST_CASE("every case is consistent with the geometric lemma") {
    for (const auto& tag : kCases) {
        Loaded l(tag);
        ConsistencyReport rep = l.db.check_consistency();
        CHECK_FALSE(rep.items.empty());
        for (const auto& it : rep.items) CHECK_MESSAGE(it.ok, tag << ": " << it.what << " " << it.detail);
    }
}

TEST_CASE("empty database gives an empty report") {
    IrrDb db;
    CHECK(db.check_consistency().items.empty());
    CHECK(db.labels().empty());
}

TEST_CASE("entry invariants") {
    for (const auto& tag : kCases) {
        Loaded l(tag);
        for (const auto& d : l.db.decompositions()) {
            long total = 0;
            for (const auto& [f, c] : d.factors) {
                CHECK(c >= 1);
                CHECK(f.is_irr());
                total += c;
            }
            CHECK(total == d.length);
            CHECK_FALSE(d.prov.note.empty());
        }
        for (const auto& lab : l.db.labels()) {
            const JacquetEntry* j = l.db.jacquet(lab);
            if (!j) continue;
            CHECK(gl2_restrict(j->r_alpha) == gl2_restrict(j->r_beta));
        }
    }
}

TEST_CASE("D squared is the identity on every label") {
    std::size_t n = 0;
    for (const auto& tag : kCases) {
        Loaded l(tag);
        for (const auto& lab : l.db.labels()) {
            if (!l.db.jacquet(lab) && lab.kind != IrrKind::Supercuspidal) continue;
            SignedIrr d = l.db.dual_of(lab);
            SignedIrr dd = l.db.dual_of(d.label);
            CHECK_MESSAGE(dd.label == lab, tag << ": " << lab.str());
            CHECK(d.sign * dd.sign == 1);
            ++n;
        }
    }
    CHECK(n >= 20);
}

TEST_CASE("registered decompositions") {
    {
        Loaded l("unit-1/2");
        const auto* d = l.db.decomposition(canonical(l.sum("I_b(1/2, delta(1))").begin()->first));
        REQUIRE(d);
        CHECK(d->factors == l.sum("pi(1) + pi'(1) + J_b(1/2, delta(1))"));
        CHECK(d->length == 3);
    }
    {
        Loaded l("unit-3/2");
        const auto* d = l.db.decomposition(canonical(l.sum("I_a(3/2, delta(1))").begin()->first));
        REQUIRE(d);
        CHECK(d->factors == l.sum("St + J_a(3/2, delta(1))"));
    }
    {
        Loaded l("cubic-1/2");
        const auto* d = l.db.decomposition(canonical(l.sum("I_a(1/2, triv(chi))").begin()->first));
        REQUIRE(d);
        CHECK(d->factors == l.sum("J_b(1, pi(chi^-1, chi^-1)) + J_a(1/2, delta(chi^-1))"));
    }
}

TEST_CASE("duals") {
    Loaded u("unit-1/2");
    SignedIrr a = u.db.dual_of(u.label("pi'(1)"));
    CHECK(a.sign == 1);
    CHECK(a.label == u.label("J_b(1, pi(1, 1))"));
    CHECK(u.db.dual_of(u.label("J_b(1/2, delta(1))")).label == u.label("J_b(1/2, delta(1))"));
    CHECK(u.db.dual_of(u.label("pi(1)")).label == u.label("J_a(1/2, delta(1))"));

    Loaded t("unit-3/2");
    CHECK(t.db.dual_of(irr_st()).label == irr_one());

    Loaded i("intermediate-alpha");
    SignedIrr s = i.db.dual_of(i.label("pi(sigma)"));
    CHECK(s.sign == -1);
    CHECK(s.label == i.label("J(sigma)"));
}

TEST_CASE("supercuspidal of G2 is its own dual") {
    IrrDb db;
    db.declare_supercuspidal("rho");
    SignedIrr d = db.dual_of(irr_supercuspidal("rho"));
    CHECK(d.sign == 1);
    CHECK(d.label == irr_supercuspidal("rho"));
}

TEST_CASE("gaps and unknown cases") {
    IrrDb db;
    CHECK_THROWS_AS(db.register_case("no-such-case"), Error);
    db.register_case("unit-1/2");
    CHECK_THROWS_AS(db.dual_of(irr_st()), DatabaseGap);
    Evaluator ev(db);
    CHECK_THROWS_AS(ev.eval("D(I(nu^3 (x) nu^-5))"), DatabaseGap);
}

TEST_CASE("wall sign") {
    auto g = std::make_shared<SymbolGroup>();
    g->declare("xi", 0, true);
    FChar xi = FChar::generator(g, "xi");
    CHECK(wall_sign({FChar::nu(-1), xi}) == -1);
    CHECK(wall_sign({FChar::nu(1), xi}) == 1);
    CHECK(wall_sign({FChar::nu(Rational(2, 7)), xi}) == 0);
    CHECK(wall_sign({FChar::nu(2), FChar::nu(1)}) == 0);  // several roots
}
