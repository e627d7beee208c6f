#include "g2az/hecke.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace g2az {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

AffineWeylGroup::AffineWeylGroup(RootKind kind, LatticeKind lattice)
    : W_(make_root_system(kind)), lattice_(lattice) {
    if (kind == RootKind::A1xA1) throw Error("affine Weyl group needs an irreducible root system");
    const RootSystem& rs = W_.roots();
    const std::size_t r = rs.rank;

    std::vector<IntMat> simple(r);
    for (std::size_t i = 0; i < r; ++i) {
        simple[i] = mat_identity(r);
        for (std::size_t k = 0; k < r; ++k) simple[i][k][i] -= rs.cartan[k][i];
    }
    for (const auto& e : W_.elements()) {
        IntMat m = mat_identity(r);
        for (int i : e.word) m = mat_mul(m, simple[i]);
        wmat_.push_back(m);
    }
    const std::size_t n = wmat_.size();
    table_.assign(n, std::vector<int>(n));
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            table_[a][b] = fin_index(mat_mul(wmat_[a], wmat_[b]));
            if (table_[a][b] == 0) inv_[a] = static_cast<int>(b);
        }

    coroots_ = rs.positive_coroots;
    probe_.assign(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) probe_[i] = Rational(1, 7 * static_cast<long>(i + 2));

    // highest coroot and its root
    std::size_t top = 0;
    long best = -1;
    for (std::size_t k = 0; k < coroots_.size(); ++k) {
        long h = std::accumulate(coroots_[k].begin(), coroots_[k].end(), 0L);
        if (h > best) {
            best = h;
            top = k;
        }
    }
    IntVec phi = rs.positive[top];
    IntVec phiv = coroots_[top];
    IntVec phi_w(r, 0);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j) phi_w[k] += rs.cartan[k][j] * phi[j];
    IntMat sphi = mat_identity(r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j) sphi[k][j] -= phi_w[k] * phiv[j];
    IntVec minus_phi(r);
    for (std::size_t k = 0; k < r; ++k) minus_phi[k] = -phi_w[k];
    gens_.push_back({fin_index(sphi), minus_phi});
    for (std::size_t i = 0; i < r; ++i)
        gens_.push_back({static_cast<int>(W_.index_of(W_.from_word({static_cast<int>(i)}).matrix)), IntVec(r, 0)});

    // length-zero elements
    omega_.push_back(identity());
    if (lattice_ == LatticeKind::Weight) {
        IntVec lam(r, 0);
        std::vector<IntVec> box;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == r) {
                box.push_back(lam);
                return;
            }
            for (long v = -3; v <= 3; ++v) {
                lam[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
        for (std::size_t f = 0; f < n; ++f)
            for (const auto& l : box) {
                AffElem a{static_cast<int>(f), l};
                if (a == identity()) continue;
                if (length(a) == 0 && std::find(omega_.begin(), omega_.end(), a) == omega_.end())
                    omega_.push_back(a);
            }
    }

    // Hecke parameter classes
    std::vector<int> parent(num_generators());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < num_generators(); ++i)
        for (std::size_t j = i + 1; j < num_generators(); ++j) {
            int m = coxeter_m(i, j);
            if (m % 2 == 1) parent[find_root(parent, static_cast<int>(i))] = find_root(parent, static_cast<int>(j));
        }
    for (const auto& g : omega_)
        for (std::size_t i = 0; i < num_generators(); ++i) {
            AffElem c = mul(mul(g, gens_[i]), inverse(g));
            for (std::size_t j = 0; j < num_generators(); ++j)
                if (c == gens_[j]) parent[find_root(parent, static_cast<int>(i))] = find_root(parent, static_cast<int>(j));
        }
    std::map<int, int> cls;
    param_class_.resize(num_generators());
    for (std::size_t i = 0; i < num_generators(); ++i) {
        int root = find_root(parent, static_cast<int>(i));
        auto it = cls.find(root);
        if (it == cls.end()) it = cls.emplace(root, static_cast<int>(cls.size())).first;
        param_class_[i] = it->second;
    }
    num_params_ = cls.size();
}

int AffineWeylGroup::fin_index(const IntMat& m) const {
    for (std::size_t i = 0; i < wmat_.size(); ++i)
        if (wmat_[i] == m) return static_cast<int>(i);
    throw Error("not a finite Weyl group element");
}

AffElem AffineWeylGroup::identity() const { return {0, IntVec(rank(), 0)}; }

AffElem AffineWeylGroup::mul(const AffElem& a, const AffElem& b) const {
    // a(b(x)) = A(B(x + mu) + lambda) = AB(x + mu + B^{-1} lambda)
    IntVec t = mat_apply(wmat_[inv_[b.fin]], a.lambda);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += b.lambda[i];
    return {table_[a.fin][b.fin], t};
}

AffElem AffineWeylGroup::inverse(const AffElem& a) const {
    IntVec t = mat_apply(wmat_[a.fin], a.lambda);
    for (auto& x : t) x = -x;
    return {inv_[a.fin], t};
}

bool AffineWeylGroup::in_lattice(const IntVec& lambda) const {
    if (lattice_ == LatticeKind::Weight) return true;
    // root lattice: cartan^{-1} lambda integral (rank <= 2)
    const IntMat& C = W_.roots().cartan;
    if (rank() == 1) return lambda[0] % C[0][0] == 0;
    long det = C[0][0] * C[1][1] - C[0][1] * C[1][0];
    long u = C[1][1] * lambda[0] - C[0][1] * lambda[1];
    long v = -C[1][0] * lambda[0] + C[0][0] * lambda[1];
    return u % det == 0 && v % det == 0;
}

int AffineWeylGroup::length(const AffElem& a) const {
    if (auto it = length_cache_.find(a); it != length_cache_.end()) return it->second;
    const std::size_t r = rank();
    RatVec x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = probe_[i] + Rational(a.lambda[i]);
    RatVec y(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) y[i] += Rational(wmat_[a.fin][i][j]) * x[j];
    long total = 0;
    for (const auto& c : coroots_) {
        Rational v = 0;
        for (std::size_t i = 0; i < r; ++i) v += Rational(c[i]) * y[i];
        Rational f = v.floor();
        total += std::abs(f.numerator());
    }
    return length_cache_[a] = static_cast<int>(total);
}

ReducedWord AffineWeylGroup::reduced_word(const AffElem& a) const {
    ReducedWord w;
    AffElem cur = a;
    int len = length(cur);
    while (len > 0) {
        bool moved = false;
        for (std::size_t i = 0; i < num_generators(); ++i) {
            AffElem nx = mul(cur, gens_[i]);
            int l = length(nx);
            if (l < len) {
                w.letters.push_back(static_cast<int>(i));
                cur = nx;
                len = l;
                moved = true;
                break;
            }
        }
        if (!moved) throw Error("no descent found; length function inconsistent");
    }
    std::reverse(w.letters.begin(), w.letters.end());
    auto it = std::find(omega_.begin(), omega_.end(), cur);
    if (it == omega_.end()) throw Error("element of length 0 outside the computed Omega");
    w.omega = static_cast<int>(it - omega_.begin());
    return w;
}

std::vector<std::vector<int>> AffineWeylGroup::all_reduced_words(const AffElem& a) const {
    int len = length(a);
    if (len == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < num_generators(); ++i) {
        AffElem nx = mul(a, gens_[i]);
        if (length(nx) >= len) continue;
        for (auto w : all_reduced_words(nx)) {
            w.push_back(static_cast<int>(i));
            out.push_back(std::move(w));
        }
    }
    return out;
}

AffElem AffineWeylGroup::from_word(const ReducedWord& w) const {
    AffElem a = omega_.at(w.omega);
    for (int i : w.letters) a = mul(a, gens_.at(i));
    return a;
}

std::vector<AffElem> AffineWeylGroup::elements_up_to(int n) const {
    std::set<AffElem> seen(omega_.begin(), omega_.end());
    std::vector<AffElem> frontier(omega_.begin(), omega_.end());
    for (int l = 1; l <= n; ++l) {
        std::vector<AffElem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens_) {
                AffElem y = mul(x, g);
                if (length(y) == l && seen.insert(y).second) next.push_back(y);
            }
        frontier = next;
    }
    std::vector<std::pair<std::pair<int, std::vector<int>>, AffElem>> keyed;
    for (const auto& x : seen) {
        ReducedWord w = reduced_word(x);
        std::vector<int> k = w.letters;
        k.insert(k.begin(), w.omega);
        keyed.push_back({{length(x), k}, x});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AffElem> out;
    for (auto& kv : keyed) out.push_back(kv.second);
    return out;
}

std::map<AffElem, int> AffineWeylGroup::bfs_lengths(int n) const {
    std::map<AffElem, int> dist;
    std::deque<AffElem> todo;
    for (const auto& g : omega_) {
        dist[g] = 0;
        todo.push_back(g);
    }
    while (!todo.empty()) {
        AffElem x = todo.front();
        todo.pop_front();
        int d = dist[x];
        if (d == n) continue;
        for (const auto& g : gens_) {
            AffElem y = mul(x, g);
            if (!dist.count(y)) {
                dist[y] = d + 1;
                todo.push_back(y);
            }
        }
    }
    return dist;
}

int AffineWeylGroup::coxeter_m(std::size_t i, std::size_t j) const {
    AffElem x = mul(gens_.at(i), gens_.at(j));
    AffElem p = x;
    for (int k = 1; k <= 24; ++k) {
        if (p == identity()) return k;
        p = mul(p, x);
    }
    return 0;
}

std::string AffineWeylGroup::str(const AffElem& a) const {
    ReducedWord w = reduced_word(a);
    std::string s;
    if (w.omega != 0) s = omega_name(static_cast<std::size_t>(w.omega));
    for (int i : w.letters) {
        if (!s.empty()) s += " ";
        s += generator_name(static_cast<std::size_t>(i));
    }
    return s;
}

std::string AffineWeylGroup::describe(const AffElem& a) const {
    std::ostringstream os;
    os << W_.word_string(W_.elements()[a.fin]) << " t(";
    for (std::size_t i = 0; i < a.lambda.size(); ++i) os << (i ? "," : "") << a.lambda[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(const AffineWeylGroup& group, std::map<std::size_t, Rational> specialize)
    : G_(group), spec_(std::move(specialize)) {
    var_of_class_.assign(G_.num_params(), -1);
    for (const auto& [cls, v] : spec_) {
        if (cls >= G_.num_params()) throw Error("no such Hecke parameter class");
        if (v == 0) throw Error("Hecke parameter cannot be 0");
    }
    for (std::size_t c = 0; c < G_.num_params(); ++c) {
        if (spec_.count(c)) continue;
        std::size_t first = 0;
        while (static_cast<std::size_t>(G_.param_class()[first]) != c) ++first;
        var_of_class_[c] = static_cast<int>(names_.size());
        names_.push_back("q_" + G_.generator_name(first));
    }
}

Laurent HeckeAlgebra::q(std::size_t gen) const {
    std::size_t c = static_cast<std::size_t>(G_.param_class().at(gen));
    if (auto it = spec_.find(c); it != spec_.end()) return Laurent::constant(nvars(), it->second);
    return Laurent::var(nvars(), static_cast<std::size_t>(var_of_class_[c]), 1);
}

Laurent HeckeAlgebra::q_inverse(std::size_t gen) const {
    std::size_t c = static_cast<std::size_t>(G_.param_class().at(gen));
    if (auto it = spec_.find(c); it != spec_.end()) return Laurent::constant(nvars(), Rational(1) / it->second);
    return Laurent::var(nvars(), static_cast<std::size_t>(var_of_class_[c]), -1);
}

Laurent HeckeAlgebra::q_of_word(const std::vector<int>& letters) const {
    Laurent p = one_poly();
    for (int i : letters) p = p * q(static_cast<std::size_t>(i));
    return p;
}

Laurent HeckeAlgebra::q_of(const AffElem& w) const { return q_of_word(G_.reduced_word(w).letters); }

void HeckeAlgebra::add_to(HeckeElement& h, const AffElem& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = h.find(w);
    if (it == h.end()) {
        h.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
}

HeckeElement HeckeAlgebra::basis(const AffElem& w) const {
    HeckeElement h;
    h.emplace(w, one_poly());
    return h;
}

HeckeElement HeckeAlgebra::word(const std::string& text) const {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream is(t);
    std::string tok;
    HeckeElement h = one();
    while (is >> tok) {
        if (tok == "e") continue;
        bool found = false;
        for (std::size_t i = 0; i < G_.num_generators(); ++i)
            if (tok == G_.generator_name(i)) {
                rmul_gen(h, i);
                found = true;
            }
        for (std::size_t k = 1; k < G_.omega().size() && !found; ++k)
            if (tok == G_.omega_name(k)) {
                rmul_omega(h, static_cast<int>(k));
                found = true;
            }
        if (!found) throw Error("unknown Hecke generator '" + tok + "'");
    }
    return h;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
    HeckeElement r = a;
    for (const auto& [w, c] : b) add_to(r, w, c);
    return r;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& a, const Laurent& c) const {
    HeckeElement r;
    for (const auto& [w, x] : a) add_to(r, w, x * c);
    return r;
}

void HeckeAlgebra::rmul_gen(HeckeElement& h, std::size_t s) const {
    HeckeElement r;
    const AffElem& g = G_.generator(s);
    Laurent qs = q(s), qm1 = qs - one_poly();
    for (const auto& [x, c] : h) {
        AffElem xs = G_.mul(x, g);
        if (G_.length(xs) > G_.length(x)) {
            add_to(r, xs, c);
        } else {
            add_to(r, x, c * qm1);
            add_to(r, xs, c * qs);
        }
    }
    h.swap(r);
}

void HeckeAlgebra::lmul_gen(HeckeElement& h, std::size_t s) const {
    HeckeElement r;
    const AffElem& g = G_.generator(s);
    Laurent qs = q(s), qm1 = qs - one_poly();
    for (const auto& [x, c] : h) {
        AffElem sx = G_.mul(g, x);
        if (G_.length(sx) > G_.length(x)) {
            add_to(r, sx, c);
        } else {
            add_to(r, x, c * qm1);
            add_to(r, sx, c * qs);
        }
    }
    h.swap(r);
}

void HeckeAlgebra::rmul_omega(HeckeElement& h, int k) const {
    HeckeElement r;
    for (const auto& [x, c] : h) add_to(r, G_.mul(x, G_.omega()[k]), c);
    h.swap(r);
}

void HeckeAlgebra::lmul_omega(HeckeElement& h, int k) const {
    HeckeElement r;
    for (const auto& [x, c] : h) add_to(r, G_.mul(G_.omega()[k], x), c);
    h.swap(r);
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
    HeckeElement out;
    if (a.size() <= b.size()) {
        for (const auto& [w, c] : a) {
            HeckeElement t = b;
            ReducedWord rw = G_.reduced_word(w);
            for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) lmul_gen(t, static_cast<std::size_t>(*it));
            if (rw.omega != 0) lmul_omega(t, rw.omega);
            for (const auto& [x, d] : t) add_to(out, x, c * d);
        }
    } else {
        for (const auto& [v, d] : b) {
            HeckeElement t = a;
            ReducedWord rw = G_.reduced_word(v);
            if (rw.omega != 0) rmul_omega(t, rw.omega);
            for (int s : rw.letters) rmul_gen(t, static_cast<std::size_t>(s));
            for (const auto& [x, c] : t) add_to(out, x, c * d);
        }
    }
    return out;
}

HeckeElement HeckeAlgebra::t_inverse(const AffElem& w) const {
    if (auto it = inv_cache_.find(w); it != inv_cache_.end()) return it->second;
    ReducedWord rw = G_.reduced_word(w);
    // T_w = T_omega T_s1 ... T_sk, so T_w^{-1} = T_sk^{-1} ... T_s1^{-1} T_{omega^{-1}}
    HeckeElement h = basis(G_.inverse(G_.omega()[rw.omega]));
    for (int s : rw.letters) {
        HeckeElement ts = h;
        lmul_gen(ts, static_cast<std::size_t>(s));
        Laurent qi = q_inverse(static_cast<std::size_t>(s));
        h = add(scale(ts, qi), scale(h, qi - one_poly()));
    }
    inv_cache_[w] = h;
    return h;
}

HeckeElement HeckeAlgebra::star_basis(const AffElem& w) const {
    if (auto it = star_cache_.find(w); it != star_cache_.end()) return it->second;
    Laurent coef = q_of(w) * Rational(G_.finite_sign(w));
    HeckeElement h = scale(t_inverse(G_.inverse(w)), coef);
    star_cache_[w] = h;
    return h;
}

HeckeElement HeckeAlgebra::star(const HeckeElement& h) const {
    HeckeElement out;
    for (const auto& [w, c] : h)
        for (const auto& [x, d] : star_basis(w)) add_to(out, x, c * d);
    return out;
}

bool HeckeAlgebra::equal(const HeckeElement& a, const HeckeElement& b) const { return a == b; }

std::string HeckeAlgebra::str(const HeckeElement& h) const {
    if (h.empty()) return "0";
    std::vector<std::pair<std::pair<int, std::string>, const Laurent*>> terms;
    for (const auto& [w, c] : h) terms.push_back({{G_.length(w), G_.str(w)}, &c});
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string s;
    for (const auto& [k, c] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c->str(names_) + ")*T[" + k.second + "]";
    }
    return s;
}

} // namespace g2az
