#include "g2az/g2class.hpp"

namespace g2az {

namespace {

template <class T>
std::strong_ordering cmp_opt(const std::optional<T>& a, const std::optional<T>& b) {
    if (a.has_value() != b.has_value()) return a.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!a) return std::strong_ordering::equal;
    return *a <=> *b;
}

std::string s_str(const Rational& s) { return to_string(s); }

} // namespace

std::strong_ordering IrrLabel::operator<=>(const IrrLabel& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = cmp(s, o.s); c != 0) return c;
    if (auto c = cmp_opt(chi, o.chi); c != 0) return c;
    if (auto c = cmp_opt(tau, o.tau); c != 0) return c;
    if (auto c = cmp_opt(arg, o.arg); c != 0) return c;
    return name <=> o.name;
}

std::string IrrLabel::str() const {
    switch (kind) {
    case IrrKind::Pi: return "pi(" + chi->str() + ")";
    case IrrKind::PiPrime: return "pi'(1)";
    case IrrKind::St: return "St";
    case IrrKind::One: return "one";
    case IrrKind::Jalpha: return "J_a(" + s_str(s) + ", delta(" + chi->str() + "))";
    case IrrKind::Jbeta: return "J_b(" + s_str(s) + ", delta(" + chi->str() + "))";
    case IrrKind::JbetaPS: return "J_b(" + s_str(s) + ", pi(" + tau->c1.str() + ", " + tau->c2.str() + "))";
    case IrrKind::PiSigma: return "pi(" + arg->str() + ")";
    case IrrKind::JSigma: return "J(" + arg->str() + ")";
    case IrrKind::IrrPS: return "Irr(I(" + tau->str() + "))";
    case IrrKind::PiGen: return "pi(" + tau->str() + ")";
    case IrrKind::JGen: return "J(" + tau->str() + ")";
    case IrrKind::IndIrr: return "Irr(" + induced_max(*arg).str() + ")";
    case IrrKind::Supercuspidal: return name;
    }
    return "?";
}

IrrLabel irr_pi(const FChar& chi) {
    if (!chi.is_unitary()) throw Error("pi(chi) needs a unitary chi");
    long n = chi.finite_order();
    if (n != 1 && n != 2 && n != 3) throw Error("pi(chi) is defined for chi of order 1, 2 or 3");
    IrrLabel l;
    l.kind = IrrKind::Pi;
    // pi(chi) and pi(chi^{-1}) coincide in the cubic case
    l.chi = std::min(chi, chi.inverse());
    return l;
}

IrrLabel irr_supercuspidal(const std::string& name) {
    IrrLabel l;
    l.kind = IrrKind::Supercuspidal;
    l.name = name;
    return l;
}

IrrLabel irr_pi_prime() {
    IrrLabel l;
    l.kind = IrrKind::PiPrime;
    return l;
}

IrrLabel irr_st() {
    IrrLabel l;
    l.kind = IrrKind::St;
    return l;
}

IrrLabel irr_one() {
    IrrLabel l;
    l.kind = IrrKind::One;
    return l;
}

namespace {

void check_langlands(const Rational& s) {
    if (s <= 0)
        throw Error("Langlands quotient needs s > 0 (got " + to_string(s) +
                    "); rewrite I_gamma(-s, .) through its Weyl conjugate");
}

} // namespace

IrrLabel irr_j(Levi lv, const Rational& s, const FChar& chi) {
    check_langlands(s);
    if (!chi.is_unitary()) throw Error("J_gamma(s, delta(chi)) needs a unitary chi");
    IrrLabel l;
    l.kind = lv == Levi::Alpha ? IrrKind::Jalpha : IrrKind::Jbeta;
    l.s = s;
    l.chi = chi;
    return l;
}

IrrLabel irr_jbeta_ps(const Rational& s, const FChar& chi1, const FChar& chi2) {
    check_langlands(s);
    if (!chi1.is_unitary() || !chi2.is_unitary()) throw Error("J_b(s, pi(chi1, chi2)) needs unitary chi1, chi2");
    IrrLabel l;
    l.kind = IrrKind::JbetaPS;
    l.s = s;
    l.tau = make_ps(Levi::Beta, TorusCharacter{chi1, chi2}).tau;
    return l;
}

IrrLabel irr_pi_sigma(const GL2Class& sigma) {
    if (sigma.kind != Gl2Kind::Cuspidal) throw Error("pi(sigma) needs a cuspidal sigma");
    IrrLabel l;
    l.kind = IrrKind::PiSigma;
    l.arg = sigma;
    return l;
}

IrrLabel irr_j_sigma(const GL2Class& sigma) {
    IrrLabel l = irr_pi_sigma(sigma);
    l.kind = IrrKind::JSigma;
    return l;
}

IrrLabel irr_ps(const TorusCharacter& t) {
    IrrLabel l;
    l.kind = IrrKind::IrrPS;
    l.tau = orbit_min(t);
    return l;
}

IrrLabel irr_pi_gen(const TorusCharacter& t) {
    IrrLabel l;
    l.kind = IrrKind::PiGen;
    l.tau = t;
    return l;
}

IrrLabel irr_j_gen(const TorusCharacter& t) {
    IrrLabel l = irr_pi_gen(t);
    l.kind = IrrKind::JGen;
    return l;
}

IrrLabel irr_induced(const GL2Class& pi) {
    IrrLabel l;
    l.kind = IrrKind::IndIrr;
    l.arg = pi;
    return l;
}

std::strong_ordering G2Class::operator<=>(const G2Class& o) const {
    if (auto c = v.index() <=> o.v.index(); c != 0) return c;
    return std::visit(
        [&](const auto& a) -> std::strong_ordering {
            using T = std::decay_t<decltype(a)>;
            return a <=> std::get<T>(o.v);
        },
        v);
}

std::string G2Class::str() const {
    if (auto* b = std::get_if<InducedB>(&v)) return "I(" + b->tau.str() + ")";
    if (auto* m = std::get_if<InducedMax>(&v)) {
        const GL2Class& a = m->arg;
        std::string I = std::string("I_") + levi_letter(a.levi);
        switch (a.kind) {
        case Gl2Kind::Steinberg:
            return I + "(" + to_string(a.twist()) + ", delta(" + a.c.finite_part().str() + "))";
        case Gl2Kind::Trivial:
            return I + "(" + to_string(a.twist()) + ", triv(" + a.c.finite_part().str() + "))";
        case Gl2Kind::Cuspidal:
            return I + "(" + to_string(a.twist()) + ", " + a.cusp + (a.contragredient ? "~" : "") + ")";
        case Gl2Kind::PrincipalSeries:
            return I + "(" + a.str() + ")";
        }
    }
    return irr().str();
}

G2Class induced_b(const TorusCharacter& t) { return {InducedB{t}}; }
G2Class induced_max(const GL2Class& pi) { return {InducedMax{pi}}; }
G2Class irr(const IrrLabel& l) { return {Irr{l}}; }

std::string str(const G2Sum& s) {
    return s.str([](const G2Class& c) { return c.str(); });
}
std::string str(const Gl2Sum& s) {
    return s.str([](const GL2Class& c) { return c.str(); });
}
std::string str(const TorusSum& s) {
    return s.str([](const TorusCharacter& t) { return "(" + t.str() + ")"; });
}

} // namespace g2az
