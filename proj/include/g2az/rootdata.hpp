// Rank <= 2 root systems and their finite Weyl groups.
//
// Roots and weights are written in the basis of simple roots, coroots in
// the basis of simple coroots.  cartan[i][j] = <alpha_j, alpha_i^v>.
#pragma once

#include "g2az/common.hpp"

#include <string>
#include <vector>

namespace g2az {

enum class RootKind { A1, A1xA1, A2, C2, G2 };

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& v);
IntMat mat_identity(std::size_t n);
IntMat mat_inverse_unimodular(const IntMat& a);
IntMat mat_transpose(const IntMat& a);

struct RootSystem {
    RootKind kind;
    std::size_t rank = 0;
    std::vector<std::string> names;  // simple root names
    IntMat cartan;
    std::vector<long> length2;       // squared length of each simple root
    std::vector<IntVec> positive;    // positive roots, root coordinates
    std::vector<IntVec> positive_coroots;  // matching coroots, coroot coordinates

    IntVec simple(std::size_t i) const;
    // <lambda, gamma^v> with lambda in root coordinates, gamma^v in coroot coordinates.
    Rational pairing(const RatVec& lambda, const IntVec& coroot) const;
    long pairing(const IntVec& lambda, const IntVec& coroot) const;
    IntVec coroot_of(const IntVec& root) const;
    bool is_root(const IntVec& v) const;
    static bool is_positive(const IntVec& v);
    std::string root_name(const IntVec& v) const;
};

RootSystem make_root_system(RootKind kind);

// Matrix of the simple reflection s_i in root coordinates.
IntMat simple_reflection(const RootSystem& rs, std::size_t i);

struct WeylElement {
    IntMat matrix;          // action on root coordinates
    std::vector<int> word;  // lexicographically least reduced word

    std::size_t length() const { return word.size(); }
    int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    const std::vector<WeylElement>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }

    const WeylElement& identity() const { return elems_.front(); }
    std::size_t index_of(const IntMat& m) const;
    const WeylElement& element(const IntMat& m) const { return elems_[index_of(m)]; }
    const WeylElement& from_word(const std::vector<int>& word) const;
    WeylElement compose(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& w) const;
    const WeylElement& longest() const;

    // Number of positive roots sent to negative roots.
    std::size_t length_of(const IntMat& m) const;

    RatVec act(const WeylElement& w, const RatVec& v) const;
    IntVec act(const WeylElement& w, const IntVec& v) const;

    // Representatives w of W_J \ W / W_I with w(I) > 0 and w^{-1}(J) > 0.
    // I and J are sets of simple root indices.
    std::vector<WeylElement> minimal_double_coset_reps(const std::vector<int>& I,
                                                       const std::vector<int>& J) const;

    std::string word_string(const WeylElement& w) const;

private:
    RootSystem rs_;
    std::vector<WeylElement> elems_;
    std::vector<int> canonical_word(const IntMat& m) const;
};

} // namespace g2az
