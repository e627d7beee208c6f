// Elements of the Grothendieck group R(G2): induced objects and
// irreducible labels.
#pragma once

#include "g2az/gl2.hpp"

#include <optional>
#include <string>
#include <variant>

namespace g2az {

enum class IrrKind {
    Pi = 0,      // pi(chi), chi of order 1, 2 or 3
    PiPrime,     // pi'(1)
    St,          // Steinberg of G2
    One,         // trivial representation of G2
    Jalpha,      // J_a(s, delta(chi))
    Jbeta,       // J_b(s, delta(chi))
    JbetaPS,     // J_b(s, pi(chi1, chi2))
    PiSigma,     // pi(sigma), sigma cuspidal on a Levi
    JSigma,      // J(sigma)
    IrrPS,       // irreducible full principal series I(chi)
    PiGen,       // subrepresentation pi(chi) of a length-two I(chi)
    JGen,        // quotient J(chi) of a length-two I(chi)
    IndIrr,      // irreducible I_gamma(pi)
    Supercuspidal,  // supercuspidal of G2, by name
};

struct IrrLabel {
    IrrKind kind = IrrKind::St;
    Rational s{0};
    std::optional<FChar> chi;
    std::optional<TorusCharacter> tau;
    std::optional<GL2Class> arg;
    std::string name;

    std::string str() const;
    bool operator==(const IrrLabel& o) const = default;
    std::strong_ordering operator<=>(const IrrLabel& o) const;
};

IrrLabel irr_pi(const FChar& chi);
IrrLabel irr_pi_prime();
IrrLabel irr_st();
IrrLabel irr_one();
// Langlands quotients; s must be positive and chi unitary.
IrrLabel irr_j(Levi l, const Rational& s, const FChar& chi);
IrrLabel irr_jbeta_ps(const Rational& s, const FChar& chi1, const FChar& chi2);
IrrLabel irr_pi_sigma(const GL2Class& sigma);
IrrLabel irr_j_sigma(const GL2Class& sigma);
IrrLabel irr_ps(const TorusCharacter& t);
IrrLabel irr_pi_gen(const TorusCharacter& t);
IrrLabel irr_j_gen(const TorusCharacter& t);
IrrLabel irr_induced(const GL2Class& pi);
IrrLabel irr_supercuspidal(const std::string& name);

struct InducedB {
    TorusCharacter tau;
    bool operator==(const InducedB&) const = default;
    std::strong_ordering operator<=>(const InducedB&) const = default;
};

struct InducedMax {
    GL2Class arg;  // arg.levi is the parabolic
    bool operator==(const InducedMax&) const = default;
    std::strong_ordering operator<=>(const InducedMax&) const = default;
};

struct Irr {
    IrrLabel label;
    bool operator==(const Irr&) const = default;
    std::strong_ordering operator<=>(const Irr& o) const { return label <=> o.label; }
};

struct G2Class {
    std::variant<InducedB, InducedMax, Irr> v;

    bool is_irr() const { return std::holds_alternative<Irr>(v); }
    const IrrLabel& irr() const { return std::get<Irr>(v).label; }
    std::string str() const;
    bool operator==(const G2Class&) const = default;
    std::strong_ordering operator<=>(const G2Class& o) const;
};

using G2Sum = FormalSum<G2Class>;

G2Class induced_b(const TorusCharacter& t);
G2Class induced_max(const GL2Class& pi);
G2Class irr(const IrrLabel& l);
std::string str(const G2Sum& s);
std::string str(const Gl2Sum& s);
std::string str(const TorusSum& s);

} // namespace g2az
