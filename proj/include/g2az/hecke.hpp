// Extended affine Weyl groups W x| L (L the root or weight lattice) and
// their Iwahori-Hecke algebras in the T_w basis.
//
// Points of V = X (x) Q are written in fundamental-weight coordinates
// v_i = <v, alpha_i^v>.  An element (w, lambda) acts by x -> w(x + lambda).
// Reflection hyperplanes are <x, gamma^v> = k; s0 is the reflection in the
// wall <x, phi^v> = 1 of the fundamental alcove, phi^v the highest coroot.
#pragma once

#include "g2az/laurent.hpp"
#include "g2az/rootdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2az {

enum class LatticeKind { Root, Weight };

struct AffElem {
    int fin = 0;     // index into the finite Weyl group
    IntVec lambda;   // translation, weight coordinates
    bool operator==(const AffElem&) const = default;
    std::strong_ordering operator<=>(const AffElem&) const = default;
};

struct ReducedWord {
    int omega = 0;            // index into the length-zero subgroup
    std::vector<int> letters; // generator indices, 0 = s0
};

class AffineWeylGroup {
public:
    AffineWeylGroup(RootKind kind, LatticeKind lattice);

    const WeylGroup& finite() const { return W_; }
    RootKind kind() const { return W_.roots().kind; }
    LatticeKind lattice() const { return lattice_; }
    std::size_t rank() const { return W_.roots().rank; }
    std::size_t num_generators() const { return rank() + 1; }
    std::string generator_name(std::size_t i) const { return "s" + std::to_string(i); }
    const AffElem& generator(std::size_t i) const { return gens_.at(i); }
    const std::vector<AffElem>& omega() const { return omega_; }
    std::string omega_name(std::size_t k) const { return k == 0 ? "e" : "w" + std::to_string(k); }

    AffElem identity() const;
    AffElem mul(const AffElem& a, const AffElem& b) const;
    AffElem inverse(const AffElem& a) const;
    bool in_lattice(const IntVec& lambda) const;

    // Number of affine hyperplanes separating the fundamental alcove from its image.
    int length(const AffElem& a) const;
    int finite_length(const AffElem& a) const { return static_cast<int>(W_.elements()[a.fin].length()); }
    int finite_sign(const AffElem& a) const { return finite_length(a) % 2 == 0 ? 1 : -1; }

    ReducedWord reduced_word(const AffElem& a) const;
    std::vector<std::vector<int>> all_reduced_words(const AffElem& a) const;
    AffElem from_word(const ReducedWord& w) const;
    // Elements of length <= n, ordered by (length, reduced word).
    std::vector<AffElem> elements_up_to(int n) const;
    // Breadth-first word lengths in the Coxeter generators, for cross-checks.
    std::map<AffElem, int> bfs_lengths(int n) const;

    // Order of s_i s_j; 0 when infinite.
    int coxeter_m(std::size_t i, std::size_t j) const;
    // Generators sharing a Hecke parameter: conjugate in the extended group.
    const std::vector<int>& param_class() const { return param_class_; }
    std::size_t num_params() const { return num_params_; }

    std::string str(const AffElem& a) const;       // reduced word
    std::string describe(const AffElem& a) const;  // finite part and translation

private:
    WeylGroup W_;
    LatticeKind lattice_;
    std::vector<IntMat> wmat_;      // finite elements in weight coordinates
    std::vector<int> inv_;
    std::vector<std::vector<int>> table_;
    std::vector<AffElem> gens_;
    std::vector<AffElem> omega_;
    std::vector<int> param_class_;
    std::size_t num_params_ = 0;
    RatVec probe_;                  // point inside the fundamental alcove
    mutable std::map<AffElem, int> length_cache_;
    std::vector<IntVec> coroots_;   // positive coroots, coroot coordinates

    int fin_index(const IntMat& m) const;
};

using HeckeElement = std::map<AffElem, Laurent>;

class HeckeAlgebra {
public:
    // specialize: parameter class -> fixed value of q_s.
    explicit HeckeAlgebra(const AffineWeylGroup& group, std::map<std::size_t, Rational> specialize = {});

    const AffineWeylGroup& group() const { return G_; }
    const std::vector<std::string>& param_names() const { return names_; }
    std::size_t nvars() const { return names_.size(); }
    bool specialized(std::size_t cls) const { return spec_.count(cls) > 0; }

    Laurent q(std::size_t gen) const;
    Laurent q_inverse(std::size_t gen) const;
    Laurent one_poly() const { return Laurent::constant(names_.size(), Rational(1)); }
    // Product of q_s over a reduced word.
    Laurent q_of(const AffElem& w) const;
    Laurent q_of_word(const std::vector<int>& letters) const;

    HeckeElement basis(const AffElem& w) const;
    HeckeElement one() const { return basis(G_.identity()); }
    HeckeElement word(const std::string& text) const;

    HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
    HeckeElement scale(const HeckeElement& a, const Laurent& c) const;
    HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
    HeckeElement t_inverse(const AffElem& w) const;
    // T_w* = (-1)^{l(w_fin)} q(w) T_{w^{-1}}^{-1}, extended linearly.
    HeckeElement star(const HeckeElement& h) const;
    HeckeElement star_basis(const AffElem& w) const;

    bool equal(const HeckeElement& a, const HeckeElement& b) const;
    std::string str(const HeckeElement& h) const;

private:
    const AffineWeylGroup& G_;
    std::map<std::size_t, Rational> spec_;
    std::vector<std::string> names_;   // unspecialized parameter names
    std::vector<int> var_of_class_;    // class -> variable index or -1
    mutable std::map<AffElem, HeckeElement> inv_cache_;
    mutable std::map<AffElem, HeckeElement> star_cache_;

    void rmul_gen(HeckeElement& h, std::size_t s) const;
    void lmul_gen(HeckeElement& h, std::size_t s) const;
    void rmul_omega(HeckeElement& h, int k) const;
    void lmul_omega(HeckeElement& h, int k) const;
    static void add_to(HeckeElement& h, const AffElem& w, const Laurent& c);
};

} // namespace g2az
