#include "g2az/rootdata.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

using namespace g2az;

namespace {

// Closure of the simple reflection matrices, independent of WeylGroup.
std::set<IntMat> bfs_closure(const RootSystem& rs) {
    std::set<IntMat> seen;
    std::deque<IntMat> todo{mat_identity(rs.rank)};
    while (!todo.empty()) {
        IntMat m = todo.front();
        todo.pop_front();
        if (!seen.insert(m).second) continue;
        for (std::size_t i = 0; i < rs.rank; ++i) todo.push_back(mat_mul(simple_reflection(rs, i), m));
    }
    return seen;
}

long det(const IntMat& m) {
    if (m.size() == 1) return m[0][0];
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

std::set<IntVec> all_roots(const RootSystem& rs) {
    std::set<IntVec> out;
    for (const auto& r : rs.positive) {
        out.insert(r);
        IntVec n = r;
        for (auto& x : n) x = -x;
        out.insert(n);
    }
    return out;
}

} // namespace

TEST_CASE("G2 positive roots and Cartan matrix") {
    RootSystem rs = make_root_system(RootKind::G2);
    std::set<IntVec> pos(rs.positive.begin(), rs.positive.end());
    CHECK(pos == std::set<IntVec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    CHECK(rs.length2[0] < rs.length2[1]);  // alpha short
    CHECK(rs.pairing(IntVec{0, 1}, IntVec{1, 0}) == -3);
}

TEST_CASE("Cartan matrix shape for every type") {
    for (auto k : {RootKind::A1, RootKind::A1xA1, RootKind::A2, RootKind::C2, RootKind::G2}) {
        RootSystem rs = make_root_system(k);
        for (std::size_t i = 0; i < rs.rank; ++i) {
            CHECK(rs.cartan[i][i] == 2);
            for (std::size_t j = 0; j < rs.rank; ++j) {
                long p = rs.cartan[i][j] * rs.cartan[j][i];
                if (i != j) CHECK((p >= 0 && p <= 3));
            }
        }
    }
}

TEST_CASE("Weyl group orders match a BFS closure") {
    struct Case {
        RootKind k;
        std::size_t order;
    };
    for (auto c : {Case{RootKind::A1, 2}, Case{RootKind::A1xA1, 4}, Case{RootKind::A2, 6}, Case{RootKind::C2, 8},
                   Case{RootKind::G2, 12}}) {
        RootSystem rs = make_root_system(c.k);
        WeylGroup W(rs);
        CHECK(W.order() == c.order);
        CHECK(bfs_closure(rs).size() == c.order);
        CHECK(W.identity().length() == 0);
    }
    CHECK(make_root_system(RootKind::A1).positive == std::vector<IntVec>{{1}});
}

TEST_CASE("G2 lengths, signs and the longest element") {
    WeylGroup W(make_root_system(RootKind::G2));
    int top = 0;
    for (const auto& w : W.elements()) {
        CHECK(W.length_of(w.matrix) == w.length());
        CHECK(w.sign() == det(w.matrix));
        if (w.length() == 6) ++top;
        // canonical word is lexicographically least among reduced words
        CHECK(W.from_word(w.word) == w);
    }
    CHECK(top == 1);
    const WeylElement& w0 = W.longest();
    CHECK(w0.length() == 6);
    CHECK(w0.sign() == 1);
    CHECK(W.act(w0, IntVec{1, 0}) == IntVec{-1, 0});
    CHECK(w0.matrix == IntMat{{-1, 0}, {0, -1}});

    const WeylElement& w5 = W.from_word({0, 1, 0, 1, 0});
    CHECK(w5.length() == 5);
    CHECK(w5.sign() == -1);
}

TEST_CASE("simple reflections on G2 roots") {
    WeylGroup W(make_root_system(RootKind::G2));
    const WeylElement& sa = W.from_word({0});
    CHECK(W.act(sa, IntVec{1, 0}) == IntVec{-1, 0});
    CHECK(W.act(sa, IntVec{0, 1}) == IntVec{3, 1});
    // s_alpha permutes the other positive roots
    std::set<IntVec> rest, img;
    for (const auto& r : W.roots().positive) {
        if (r == IntVec{1, 0}) continue;
        rest.insert(r);
        img.insert(W.act(sa, r));
    }
    CHECK(rest == img);
}

TEST_CASE("action is a group action preserving the root set") {
    WeylGroup W(make_root_system(RootKind::G2));
    auto roots = all_roots(W.roots());
    for (const auto& a : W.elements()) {
        std::set<IntVec> img;
        for (const auto& r : roots) img.insert(W.act(a, r));
        CHECK(img == roots);
        for (const auto& b : W.elements()) {
            WeylElement ab = W.compose(a, b);
            for (const auto& r : W.roots().positive) CHECK(W.act(ab, r) == W.act(a, W.act(b, r)));
        }
        CHECK(W.compose(a, W.inverse(a)) == W.identity());
    }
}

TEST_CASE("minimal double coset representatives") {
    WeylGroup W(make_root_system(RootKind::G2));
    CHECK(W.minimal_double_coset_reps({}, {}).size() == 12);
    CHECK(W.minimal_double_coset_reps({0}, {0}).size() == 4);
    CHECK(W.minimal_double_coset_reps({0}, {1}).size() == 3);
    CHECK(W.minimal_double_coset_reps({1}, {1}).size() == 4);

    for (std::vector<int> I : {std::vector<int>{}, {0}, {1}})
        for (std::vector<int> J : {std::vector<int>{}, {0}, {1}}) {
            auto ij = W.minimal_double_coset_reps(I, J);
            auto ji = W.minimal_double_coset_reps(J, I);
            REQUIRE(ij.size() == ji.size());
            for (const auto& w : ij) {
                WeylElement inv = W.inverse(w);
                CHECK(std::find(ji.begin(), ji.end(), inv) != ji.end());
                for (int i : I) CHECK(RootSystem::is_positive(W.act(w, W.roots().simple(i))));
                for (int j : J) CHECK(RootSystem::is_positive(W.act(inv, W.roots().simple(j))));
            }
        }
}
