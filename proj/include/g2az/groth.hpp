// Jacquet restriction, parabolic induction and the Aubert involution on
// R(G2), all computed through the geometric lemma.
#pragma once

#include "g2az/g2class.hpp"

#include <string>
#include <vector>

namespace g2az {

class IrrDb;

// The non-trivial element of W normalizing the Levi.
const WeylElement& levi_normalizer(Levi l);

// r_gamma for gamma in {a, b}; results are fully decomposed in R(L_gamma).
// Irreducible labels need Jacquet data from db (DatabaseGap otherwise).
Gl2Sum restrict_levi(Levi target, const G2Class& x, const IrrDb* db);
Gl2Sum restrict_levi(Levi target, const G2Sum& x, const IrrDb* db);
// r_0, the Jacquet module for the Borel.
TorusSum restrict_torus(const G2Class& x, const IrrDb* db);
TorusSum restrict_torus(const G2Sum& x, const IrrDb* db);

G2Sum induce_torus(const TorusSum& s);
G2Sum induce_levi(const Gl2Sum& s);

// Canonical representative in R(G2): Weyl-orbit minimum for I(chi),
// I_gamma(pi) == I_gamma(w pi) for w normalizing L_gamma (positive-twist
// form preferred), I_gamma(I^gamma(chi)) -> I(chi).
G2Class canonical(const G2Class& x);
G2Sum canonicalize(const G2Sum& s);

struct BasisResult {
    G2Sum value;
    bool complete = true;
    std::vector<std::string> gaps;
};

// Rewrite induced objects through registered decompositions.
BasisResult to_irr_basis(const G2Sum& s, const IrrDb& db);

// D(x) = I(r_0 x) - I_a(r_a x) - I_b(r_b x) + x before any basis change.
G2Sum dualize_raw(const G2Sum& x, const IrrDb* db);

using DualResult = BasisResult;
DualResult dualize(const G2Sum& x, const IrrDb& db);

// Equality in R(G2): canonical forms agree, or the difference vanishes in
// the irreducible basis.  On failure diff holds the surviving terms.
bool equal_in_r(const G2Sum& a, const G2Sum& b, const IrrDb* db, G2Sum* diff = nullptr);

} // namespace g2az
