#include "g2az/gl2.hpp"

namespace g2az {

IntVec levi_root(Levi l) { return l == Levi::Alpha ? IntVec{1, 0} : IntVec{0, 1}; }

std::pair<FChar, FChar> to_gl2_coords(Levi l, const TorusCharacter& t) {
    if (l == Levi::Alpha) return {t.c1, t.c2};
    return {t.c1 * t.c2, t.c1};
}

TorusCharacter from_gl2_coords(Levi l, const FChar& a, const FChar& b) {
    if (l == Levi::Alpha) return {a, b};
    return {b, a * b.inverse()};
}

TorusCharacter levi_reflect(Levi l, const TorusCharacter& t) {
    auto [a, b] = to_gl2_coords(l, t);
    return from_gl2_coords(l, b, a);
}

namespace {

const FChar& half() {
    static const FChar h = FChar::nu(Rational(1, 2));
    return h;
}
const FChar& minus_half() {
    static const FChar h = FChar::nu(Rational(-1, 2));
    return h;
}

} // namespace

TorusCharacter GL2Class::jacquet_char() const {
    if (kind == Gl2Kind::Steinberg) return from_gl2_coords(levi, half() * c, minus_half() * c);
    if (kind == Gl2Kind::Trivial) return from_gl2_coords(levi, minus_half() * c, half() * c);
    throw Error("jacquet_char needs a Steinberg or trivial class");
}

bool GL2Class::reducible_ps() const {
    if (kind != Gl2Kind::PrincipalSeries) return false;
    auto [a, b] = to_gl2_coords(levi, tau);
    FChar r = a * b.inverse();
    return r.is_finite_trivial() && (r.nu_exponent() == 1 || r.nu_exponent() == -1);
}

namespace {

std::string twist_prefix(const Rational& s) {
    if (s == 0) return "";
    if (s == 1) return "nu ";
    return "nu^{" + to_string(s) + "} ";
}

} // namespace

std::string GL2Class::str() const {
    switch (kind) {
    case Gl2Kind::Steinberg:
        return twist_prefix(c.nu_exponent()) + "delta(" + c.finite_part().str() + ")";
    case Gl2Kind::Trivial:
        return twist_prefix(c.nu_exponent()) + "triv(" + c.finite_part().str() + ")";
    case Gl2Kind::PrincipalSeries:
        return std::string("I^") + levi_letter(levi) + "(" + tau.str() + ")";
    case Gl2Kind::Cuspidal:
        return twist_prefix(c.nu_exponent()) + cusp + (contragredient ? "~" : "");
    }
    return "?";
}

std::string GL2Class::str_with_levi() const { return std::string("[L_") + levi_letter(levi) + "] " + str(); }

GL2Class make_steinberg(Levi l, const FChar& c) {
    GL2Class g;
    g.levi = l;
    g.kind = Gl2Kind::Steinberg;
    g.c = c;
    return g;
}

GL2Class make_trivial(Levi l, const FChar& c) {
    GL2Class g = make_steinberg(l, c);
    g.kind = Gl2Kind::Trivial;
    return g;
}

GL2Class make_ps(Levi l, const TorusCharacter& t) {
    GL2Class g;
    g.levi = l;
    g.kind = Gl2Kind::PrincipalSeries;
    TorusCharacter u = levi_reflect(l, t);
    g.tau = std::min(t, u);
    return g;
}

GL2Class make_cuspidal(Levi l, const std::string& name, const Rational& twist, bool selfdual,
                       bool contragredient) {
    GL2Class g;
    g.levi = l;
    g.kind = Gl2Kind::Cuspidal;
    g.cusp = name;
    g.c = FChar::nu(twist);
    g.selfdual = selfdual;
    g.contragredient = selfdual ? false : contragredient;
    return g;
}

GL2Class from_jacquet_char(Levi l, Gl2Kind kind, const TorusCharacter& t) {
    auto [a, b] = to_gl2_coords(l, t);
    FChar c = kind == Gl2Kind::Steinberg ? a * minus_half() : a * half();
    GL2Class g = kind == Gl2Kind::Steinberg ? make_steinberg(l, c) : make_trivial(l, c);
    if (!(g.jacquet_char() == t)) throw Error("character " + t.str() + " is not a Jacquet character of that type");
    return g;
}

Gl2Sum gl2_decompose(const GL2Class& c) {
    if (!c.reducible_ps()) return Gl2Sum(c);
    auto [a, b] = to_gl2_coords(c.levi, c.tau);
    FChar r = a * b.inverse();
    // a/b = nu: (a, b) = (nu^{1/2} z, nu^{-1/2} z); a/b = nu^{-1}: the reverse.
    FChar z = r.nu_exponent() == 1 ? a * minus_half() : a * half();
    Gl2Sum s;
    s.add(make_steinberg(c.levi, z));
    s.add(make_trivial(c.levi, z));
    return s;
}

Gl2Sum normalize_gl2(const Gl2Sum& s) {
    return s.map_linear<GL2Class>([](const GL2Class& c) { return gl2_decompose(c); });
}

Gl2Sum gl2_induce(Levi l, const TorusCharacter& t) { return gl2_decompose(make_ps(l, t)); }

TorusSum gl2_restrict(const GL2Class& c) {
    TorusSum out;
    switch (c.kind) {
    case Gl2Kind::PrincipalSeries:
        out.add(c.tau);
        out.add(levi_reflect(c.levi, c.tau));
        break;
    case Gl2Kind::Steinberg:
    case Gl2Kind::Trivial:
        out.add(c.jacquet_char());
        break;
    case Gl2Kind::Cuspidal:
        break;
    }
    return out;
}

TorusSum gl2_restrict(const Gl2Sum& s) {
    return s.map_linear<TorusCharacter>([](const GL2Class& c) { return gl2_restrict(c); });
}

GL2Class gl2_twist(const GL2Class& c, const FChar& chi) {
    GL2Class g = c;
    switch (c.kind) {
    case Gl2Kind::PrincipalSeries: {
        auto [a, b] = to_gl2_coords(c.levi, c.tau);
        return make_ps(c.levi, from_gl2_coords(c.levi, a * chi, b * chi));
    }
    case Gl2Kind::Steinberg:
    case Gl2Kind::Trivial:
        g.c = c.c * chi;
        return g;
    case Gl2Kind::Cuspidal:
        if (!chi.is_finite_trivial()) throw Error("only unramified twists of cuspidal symbols are modelled");
        g.c = c.c * chi;
        return g;
    }
    return g;
}

Gl2Sum gl2_twist(const Gl2Sum& s, const FChar& chi) {
    return s.map_linear<GL2Class>([&](const GL2Class& c) { return gl2_decompose(gl2_twist(c, chi)); });
}

Gl2Sum dualize_gl2(const Gl2Sum& s) {
    Gl2Sum out;
    for (const auto& [c, k] : s) {
        Gl2Sum img;
        for (const auto& [t, m] : gl2_restrict(c)) img += gl2_induce(c.levi, t) * m;
        img -= Gl2Sum(c);
        out += img * k;
    }
    return out;
}

GL2Class weyl_transport(const WeylElement& w, const GL2Class& c, Levi target) {
    const auto& W = g2_weyl();
    if (W.act(w, levi_root(c.levi)) != levi_root(target))
        throw Error("Weyl element does not carry the Levi onto the target");
    switch (c.kind) {
    case Gl2Kind::PrincipalSeries:
        return make_ps(target, weyl_act_char(w, c.tau));
    case Gl2Kind::Steinberg:
    case Gl2Kind::Trivial:
        return from_jacquet_char(target, c.kind, weyl_act_char(w, c.jacquet_char()));
    case Gl2Kind::Cuspidal: {
        // Decide whether w inverts the centre by moving nu o det.
        FChar nu1 = FChar::nu(1);
        TorusCharacter det = from_gl2_coords(c.levi, nu1, nu1);
        auto [a, b] = to_gl2_coords(target, weyl_act_char(w, det));
        if (a == nu1 && b == nu1) {
            GL2Class g = c;
            g.levi = target;
            return g;
        }
        if (!(a == nu1.inverse() && b == nu1.inverse())) throw Error("unexpected action on the Levi centre");
        return make_cuspidal(target, c.cusp, -c.twist(), c.selfdual, !c.contragredient);
    }
    }
    throw Error("unreachable");
}

} // namespace g2az
