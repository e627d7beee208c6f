#include "g2az/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace g2az {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IntMat c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    return c;
}

IntVec mat_apply(const IntMat& a, const IntVec& v) {
    if (!a.empty() && a[0].size() != v.size()) throw Error("dimension mismatch in matrix action");
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

IntMat mat_identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_transpose(const IntMat& a) {
    if (a.empty()) return a;
    IntMat t(a[0].size(), IntVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat mat_inverse_unimodular(const IntMat& a) {
    if (a.size() == 1) {
        if (a[0][0] != 1 && a[0][0] != -1) throw Error("matrix not unimodular");
        return {{a[0][0]}};
    }
    if (a.size() != 2) throw Error("only rank <= 2 supported");
    long det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det != 1 && det != -1) throw Error("matrix not unimodular");
    return {{a[1][1] * det, -a[0][1] * det}, {-a[1][0] * det, a[0][0] * det}};
}

IntVec RootSystem::simple(std::size_t i) const {
    IntVec v(rank, 0);
    v[i] = 1;
    return v;
}

long RootSystem::pairing(const IntVec& lambda, const IntVec& coroot) const {
    long s = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) s += coroot[i] * lambda[j] * cartan[i][j];
    return s;
}

Rational RootSystem::pairing(const RatVec& lambda, const IntVec& coroot) const {
    if (lambda.size() != rank || coroot.size() != rank) throw Error("dimension mismatch in pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) s += Rational(coroot[i] * cartan[i][j]) * lambda[j];
    return s;
}

namespace {

long inner(const RootSystem& rs, const IntVec& a, const IntVec& b) {
    // (alpha_i, alpha_j) = cartan[i][j] * |alpha_i|^2 / 2
    long s = 0;
    for (std::size_t i = 0; i < rs.rank; ++i)
        for (std::size_t j = 0; j < rs.rank; ++j) s += a[i] * b[j] * rs.cartan[i][j] * rs.length2[i];
    return s / 2;
}

} // namespace

IntVec RootSystem::coroot_of(const IntVec& root) const {
    long n = inner(*this, root, root);
    IntVec c(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        long num = root[i] * length2[i];
        if (num % n != 0) throw Error("non-integral coroot");
        c[i] = num / n;
    }
    return c;
}

bool RootSystem::is_positive(const IntVec& v) {
    bool nonzero = false;
    for (long x : v) {
        if (x < 0) return false;
        if (x != 0) nonzero = true;
    }
    return nonzero;
}

bool RootSystem::is_root(const IntVec& v) const {
    IntVec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return std::find(positive.begin(), positive.end(), v) != positive.end() ||
           std::find(positive.begin(), positive.end(), neg) != positive.end();
}

std::string RootSystem::root_name(const IntVec& v) const {
    std::string s;
    for (std::size_t i = 0; i < rank; ++i) {
        long c = v[i];
        if (c == 0) continue;
        if (c < 0) {
            s += "-";
            c = -c;
        } else if (!s.empty()) {
            s += "+";
        }
        if (c != 1) s += std::to_string(c);
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

IntMat simple_reflection(const RootSystem& rs, std::size_t i) {
    IntMat m = mat_identity(rs.rank);
    for (std::size_t j = 0; j < rs.rank; ++j) m[i][j] -= rs.cartan[i][j];
    return m;
}

RootSystem make_root_system(RootKind kind) {
    RootSystem rs;
    rs.kind = kind;
    switch (kind) {
    case RootKind::A1:
        rs.rank = 1;
        rs.names = {"alpha"};
        rs.cartan = {{2}};
        break;
    case RootKind::A1xA1:
        rs.rank = 2;
        rs.names = {"alpha1", "alpha2"};
        rs.cartan = {{2, 0}, {0, 2}};
        break;
    case RootKind::A2:
        rs.rank = 2;
        rs.names = {"alpha1", "alpha2"};
        rs.cartan = {{2, -1}, {-1, 2}};
        break;
    case RootKind::C2:
        // alpha1 short, alpha2 long
        rs.rank = 2;
        rs.names = {"alpha1", "alpha2"};
        rs.cartan = {{2, -2}, {-1, 2}};
        break;
    case RootKind::G2:
        // alpha short, beta long
        rs.rank = 2;
        rs.names = {"alpha", "beta"};
        rs.cartan = {{2, -3}, {-1, 2}};
        break;
    }
    rs.length2.assign(rs.rank, 2);
    if (rs.rank == 2 && rs.cartan[1][0] != 0) rs.length2[1] = 2 * rs.cartan[0][1] / rs.cartan[1][0];

    std::set<IntVec> seen;
    std::deque<IntVec> todo;
    for (std::size_t i = 0; i < rs.rank; ++i) todo.push_back(rs.simple(i));
    while (!todo.empty()) {
        IntVec r = todo.front();
        todo.pop_front();
        if (!seen.insert(r).second) continue;
        for (std::size_t i = 0; i < rs.rank; ++i) todo.push_back(mat_apply(simple_reflection(rs, i), r));
    }
    for (const auto& r : seen)
        if (RootSystem::is_positive(r)) rs.positive.push_back(r);
    std::sort(rs.positive.begin(), rs.positive.end(), [](const IntVec& a, const IntVec& b) {
        long ha = 0, hb = 0;
        for (long x : a) ha += x;
        for (long x : b) hb += x;
        return ha != hb ? ha < hb : a < b;
    });
    for (const auto& r : rs.positive) rs.positive_coroots.push_back(rs.coroot_of(r));
    return rs;
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    std::set<IntMat> seen;
    std::deque<IntMat> todo{mat_identity(rs_.rank)};
    std::vector<IntMat> found;
    while (!todo.empty()) {
        IntMat m = todo.front();
        todo.pop_front();
        if (!seen.insert(m).second) continue;
        found.push_back(m);
        for (std::size_t i = 0; i < rs_.rank; ++i) todo.push_back(mat_mul(simple_reflection(rs_, i), m));
    }
    for (const auto& m : found) elems_.push_back({m, canonical_word(m)});
    std::stable_sort(elems_.begin(), elems_.end(), [](const WeylElement& a, const WeylElement& b) {
        return a.word.size() != b.word.size() ? a.word.size() < b.word.size() : a.word < b.word;
    });
}

std::size_t WeylGroup::length_of(const IntMat& m) const {
    std::size_t n = 0;
    for (const auto& r : rs_.positive)
        if (!RootSystem::is_positive(mat_apply(m, r))) ++n;
    return n;
}

std::vector<int> WeylGroup::canonical_word(const IntMat& m) const {
    std::vector<int> word;
    IntMat cur = m;
    std::size_t len = length_of(cur);
    while (len > 0) {
        for (std::size_t i = 0; i < rs_.rank; ++i) {
            IntMat next = mat_mul(simple_reflection(rs_, i), cur);
            std::size_t l = length_of(next);
            if (l < len) {
                word.push_back(static_cast<int>(i));
                cur = next;
                len = l;
                break;
            }
        }
    }
    return word;
}

std::size_t WeylGroup::index_of(const IntMat& m) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i].matrix == m) return i;
    throw Error("matrix is not a Weyl group element");
}

const WeylElement& WeylGroup::from_word(const std::vector<int>& word) const {
    IntMat m = mat_identity(rs_.rank);
    for (int i : word) {
        if (i < 0 || static_cast<std::size_t>(i) >= rs_.rank) throw Error("generator index out of range");
        m = mat_mul(m, simple_reflection(rs_, static_cast<std::size_t>(i)));
    }
    return elems_[index_of(m)];
}

WeylElement WeylGroup::compose(const WeylElement& a, const WeylElement& b) const {
    return elems_[index_of(mat_mul(a.matrix, b.matrix))];
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
    return elems_[index_of(mat_inverse_unimodular(w.matrix))];
}

const WeylElement& WeylGroup::longest() const { return elems_.back(); }

RatVec WeylGroup::act(const WeylElement& w, const RatVec& v) const {
    if (v.size() != rs_.rank) throw Error("dimension mismatch in Weyl action");
    RatVec r(rs_.rank, Rational(0));
    for (std::size_t i = 0; i < rs_.rank; ++i)
        for (std::size_t j = 0; j < rs_.rank; ++j) r[i] += Rational(w.matrix[i][j]) * v[j];
    return r;
}

IntVec WeylGroup::act(const WeylElement& w, const IntVec& v) const { return mat_apply(w.matrix, v); }

std::vector<WeylElement> WeylGroup::minimal_double_coset_reps(const std::vector<int>& I,
                                                              const std::vector<int>& J) const {
    std::vector<WeylElement> out;
    for (const auto& w : elems_) {
        bool ok = true;
        for (int i : I)
            if (!RootSystem::is_positive(mat_apply(w.matrix, rs_.simple(i)))) ok = false;
        IntMat inv = mat_inverse_unimodular(w.matrix);
        for (int j : J)
            if (!RootSystem::is_positive(mat_apply(inv, rs_.simple(j)))) ok = false;
        if (ok) out.push_back(w);
    }
    // elems_ is already ordered by (length, word); minimality within each
    // double coset follows from the two positivity conditions.
    return out;
}

std::string WeylGroup::word_string(const WeylElement& w) const {
    if (w.word.empty()) return "e";
    std::string s;
    for (int i : w.word) {
        if (!s.empty()) s += " ";
        s += "s_" + rs_.names[i];
    }
    return s;
}

} // namespace g2az
