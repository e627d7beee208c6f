// Irreducible classes of the two GL2 Levi subgroups of G2.
//
// Each Levi L_a, L_b is identified with GL2 so that a torus character
// (chi1, chi2) has GL2 coordinates (a, b):
//   L_a: (a, b) = (chi1, chi2)
//   L_b: (a, b) = (chi1 chi2, chi1)
// and a/b is the value on the coroot of the Levi's simple root.
#pragma once

#include "g2az/chars.hpp"

#include <string>
#include <utility>

namespace g2az {

enum class Levi { Alpha = 0, Beta = 1 };

inline int levi_index(Levi l) { return static_cast<int>(l); }
inline const char* levi_letter(Levi l) { return l == Levi::Alpha ? "a" : "b"; }
IntVec levi_root(Levi l);

std::pair<FChar, FChar> to_gl2_coords(Levi l, const TorusCharacter& t);
TorusCharacter from_gl2_coords(Levi l, const FChar& a, const FChar& b);
// The non-trivial Weyl element of the Levi acting on torus characters.
TorusCharacter levi_reflect(Levi l, const TorusCharacter& t);

enum class Gl2Kind { PrincipalSeries = 0, Steinberg = 1, Trivial = 2, Cuspidal = 3 };

struct GL2Class {
    Levi levi = Levi::Alpha;
    Gl2Kind kind = Gl2Kind::Steinberg;
    TorusCharacter tau;       // principal series: canonical inducing character
    FChar c;                  // Steinberg/trivial: nu^s chi, i.e. delta(c) or c o det
                              // cuspidal: nu^s twist
    std::string cusp;         // cuspidal symbol name
    bool contragredient = false;
    bool selfdual = true;

    Rational twist() const { return c.nu_exponent(); }
    // Unique character of the torus Jacquet module (Steinberg / trivial only).
    TorusCharacter jacquet_char() const;
    bool reducible_ps() const;
    std::string str() const;
    std::string str_with_levi() const;

    bool operator==(const GL2Class& o) const = default;
    std::strong_ordering operator<=>(const GL2Class& o) const = default;
};

using Gl2Sum = FormalSum<GL2Class>;

GL2Class make_steinberg(Levi l, const FChar& c);
GL2Class make_trivial(Levi l, const FChar& c);
// Principal series I^gamma(t); may be reducible, see gl2_decompose.
GL2Class make_ps(Levi l, const TorusCharacter& t);
GL2Class make_cuspidal(Levi l, const std::string& name, const Rational& twist, bool selfdual = true,
                       bool contragredient = false);
// Steinberg or trivial class whose torus Jacquet module is t.
GL2Class from_jacquet_char(Levi l, Gl2Kind kind, const TorusCharacter& t);

// Full decomposition into irreducibles: reducible principal series split
// into Steinberg + trivial.
Gl2Sum gl2_decompose(const GL2Class& c);
Gl2Sum normalize_gl2(const Gl2Sum& s);
Gl2Sum gl2_induce(Levi l, const TorusCharacter& t);  // normalized I^gamma(t)

TorusSum gl2_restrict(const GL2Class& c);
TorusSum gl2_restrict(const Gl2Sum& s);

// Twist by chi o det.  Cuspidal classes only take unramified twists.
GL2Class gl2_twist(const GL2Class& c, const FChar& chi);
Gl2Sum gl2_twist(const Gl2Sum& s, const FChar& chi);

// Aubert dual on GL2: i o r - id.
Gl2Sum dualize_gl2(const Gl2Sum& s);

// Transport along a Weyl element w with w(levi root of c) = root of target.
GL2Class weyl_transport(const WeylElement& w, const GL2Class& c, Levi target);

} // namespace g2az
