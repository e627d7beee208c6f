#include "g2az/irrdb.hpp"

#include <cstdlib>
#include <set>

#ifndef G2AZ_DEFAULT_DATA_DIR
#define G2AZ_DEFAULT_DATA_DIR "data"
#endif

namespace g2az {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("G2AZ_DATA_DIR"); env && *env) return env;
    return G2AZ_DEFAULT_DATA_DIR;
}

IrrDb::IrrDb(SymbolGroupPtr symbols) : symbols_(std::move(symbols)) {}

void IrrDb::declare_cuspidal(const std::string& name, Levi levi, bool selfdual) {
    if (symbols_->find(name) || g2_cusps_.count(name)) throw Error("name already in use: " + name);
    auto it = cusps_.find(name);
    if (it != cusps_.end()) {
        if (it->second.levi != levi || it->second.selfdual != selfdual)
            throw Error("conflicting declaration of cuspidal '" + name + "'");
        return;
    }
    cusps_[name] = {levi, selfdual};
}

void IrrDb::declare_supercuspidal(const std::string& name) {
    if (symbols_->find(name) || cusps_.count(name)) throw Error("name already in use: " + name);
    g2_cusps_.insert(name);
}

const CuspidalInfo* IrrDb::cuspidal(const std::string& name) const {
    auto it = cusps_.find(name);
    return it == cusps_.end() ? nullptr : &it->second;
}

void IrrDb::add_decomposition(DecompositionEntry e) {
    e.induced = canonical(e.induced);
    if (e.induced.is_irr()) throw Error("decomposition key must be an induced object: " + e.induced.str());
    for (const auto& [c, k] : e.factors) {
        if (!c.is_irr()) throw Error("decomposition factor is not irreducible: " + c.str());
        if (k <= 0) throw Error("decomposition multiplicities must be positive");
    }
    if (e.length != e.factors.total())
        throw Error("decomposition of " + e.induced.str() + " has " + std::to_string(e.factors.total()) +
                    " factors, expected length " + std::to_string(e.length));
    auto it = decomp_index_.find(e.induced);
    if (it != decomp_index_.end()) {
        if (!(decomps_[it->second].factors == e.factors))
            throw Error("conflicting decompositions registered for " + e.induced.str());
        return;
    }
    decomp_index_[e.induced] = decomps_.size();
    decomps_.push_back(std::move(e));
}

void IrrDb::add_jacquet(JacquetEntry e) {
    e.r_alpha = normalize_gl2(e.r_alpha);
    e.r_beta = normalize_gl2(e.r_beta);
    for (const auto& [c, k] : e.r_alpha)
        if (c.levi != Levi::Alpha) throw Error("r_a data for " + e.label.str() + " is not on L_a");
    for (const auto& [c, k] : e.r_beta)
        if (c.levi != Levi::Beta) throw Error("r_b data for " + e.label.str() + " is not on L_b");
    if (jacquet_.count(e.label)) throw Error("duplicate Jacquet data for " + e.label.str());
    jacquet_.emplace(e.label, std::move(e));
}

void IrrDb::derive_principal_series(const std::string& case_tag) {
    std::vector<DecompositionEntry> found;
    for (const auto& e : decomps_) {
        if (e.case_tag != case_tag) continue;
        auto* m = std::get_if<InducedMax>(&e.induced.v);
        if (!m || m->arg.kind != Gl2Kind::Steinberg) continue;
        GL2Class t = m->arg;
        t.kind = Gl2Kind::Trivial;
        const DecompositionEntry* other = decomposition(induced_max(t));
        if (!other) continue;
        DecompositionEntry d;
        d.induced = canonical(induced_b(m->arg.jacquet_char()));
        d.factors = e.factors + other->factors;
        d.length = e.length + other->length;
        d.prov = {Provenance::Source::Derived,
                  std::string("I_") + levi_letter(m->arg.levi) + "(delta) + I_" + levi_letter(m->arg.levi) +
                      "(triv) = I(chi)"};
        d.case_tag = case_tag;
        found.push_back(d);
    }
    for (auto& d : found) {
        if (const DecompositionEntry* have = decomposition(d.induced)) {
            if (!(have->factors == d.factors)) ps_conflicts_.push_back({d.induced, d.factors - have->factors});
            continue;
        }
        add_decomposition(d);
    }
}

const DecompositionEntry* IrrDb::decomposition(const G2Class& x) const {
    auto it = decomp_index_.find(canonical(x));
    return it == decomp_index_.end() ? nullptr : &decomps_[it->second];
}

const JacquetEntry* IrrDb::jacquet(const IrrLabel& l) const {
    auto it = jacquet_.find(l);
    return it == jacquet_.end() ? nullptr : &it->second;
}

std::vector<IrrLabel> IrrDb::labels() const {
    std::set<IrrLabel> v;
    for (const auto& [l, e] : jacquet_) v.insert(l);
    for (const auto& d : decomps_)
        for (const auto& [c, k] : d.factors) v.insert(c.irr());
    for (const auto& n : g2_cusps_) v.insert(irr_supercuspidal(n));
    return {v.begin(), v.end()};
}

std::vector<IrrLabel> IrrDb::labels(const std::string& case_tag) const {
    std::set<IrrLabel> v;
    for (const auto& [l, e] : jacquet_)
        if (e.case_tag == case_tag) v.insert(l);
    for (const auto& d : decomps_)
        if (d.case_tag == case_tag)
            for (const auto& [c, k] : d.factors) v.insert(c.irr());
    return {v.begin(), v.end()};
}

int wall_sign(const TorusCharacter& t) {
    int sign = 0, found = 0;
    for (const auto& r : g2_weyl().roots().positive) {
        FChar v = coroot_value(t, r);
        if (!v.is_finite_trivial()) continue;
        if (v.nu_exponent() == 1 || v.nu_exponent() == -1) {
            sign = v.nu_exponent() == 1 ? 1 : -1;
            ++found;
        }
    }
    return found == 1 ? sign : 0;
}

void IrrDb::register_single_wall(const TorusCharacter& tau, const IrrLabel& sub, const IrrLabel& quot,
                                 const Provenance& prov, const std::string& case_tag) {
    int s0 = wall_sign(tau);
    if (s0 == 0) throw Error("I(" + tau.str() + ") is not reducible along exactly one root");
    auto side = [&](int s) { return s == s0 ? sub : quot; };
    auto sign_of = [&](const TorusSum& ts, const std::string& what) {
        int s = 0;
        for (const auto& [t, k] : ts) {
            int u = wall_sign(t);
            if (u == 0 || (s != 0 && u != s)) throw Error("single-wall split fails on " + what);
            s = u;
        }
        return s;
    };

    G2Class whole = induced_b(tau);
    Gl2Sum parts[2][2];  // [levi][sub = 0, quot = 1]
    for (Levi l : {Levi::Alpha, Levi::Beta}) {
        for (const auto& [c, k] : restrict_levi(l, whole, this)) {
            int s = sign_of(gl2_restrict(c), c.str_with_levi());
            parts[levi_index(l)][s == s0 ? 0 : 1].add(c, k);
            if (c.kind == Gl2Kind::Steinberg || c.kind == Gl2Kind::Trivial) {
                G2Class ind = induced_max(c);
                sign_of(restrict_torus(ind, this), ind.str());
                DecompositionEntry d;
                d.induced = ind;
                d.factors = G2Sum(irr(side(s)));
                d.length = 1;
                d.prov = prov;
                d.case_tag = case_tag;
                add_decomposition(d);
            }
        }
    }
    DecompositionEntry d;
    d.induced = whole;
    d.factors = G2Sum(irr(sub)) + G2Sum(irr(quot));
    d.length = 2;
    d.prov = prov;
    d.case_tag = case_tag;
    add_decomposition(d);

    const IrrLabel* labs[2] = {&sub, &quot};
    for (int i = 0; i < 2; ++i) {
        IrrKind k = labs[i]->kind;
        if (k == IrrKind::IrrPS || k == IrrKind::IndIrr) continue;  // restricted directly
        JacquetEntry e;
        e.label = *labs[i];
        e.r_alpha = parts[0][i];
        e.r_beta = parts[1][i];
        e.prov = prov;
        e.case_tag = case_tag;
        add_jacquet(e);
    }
}

bool IrrDb::has_case(const std::string& tag) const {
    for (const auto& c : cases_)
        if (c == tag) return true;
    return false;
}

ConsistencyReport IrrDb::check_consistency() const {
    ConsistencyReport rep;
    for (const auto& e : decomps_) {
        for (Levi l : {Levi::Alpha, Levi::Beta}) {
            CheckItem it;
            it.what = std::string("r_") + levi_letter(l) + " " + e.induced.str() + " [" + e.case_tag + "]";
            try {
                Gl2Sum lhs = restrict_levi(l, e.induced, this);
                Gl2Sum rhs = restrict_levi(l, e.factors, this);
                if (!(lhs == rhs)) {
                    it.ok = false;
                    it.detail = "geometric lemma minus factors: " + str(lhs - rhs);
                }
            } catch (const Error& ex) {
                it.ok = false;
                it.detail = ex.what();
            }
            rep.items.push_back(it);
        }
    }
    for (const auto& [l, e] : jacquet_) {
        CheckItem it;
        it.what = "r_0 via r_a equals r_0 via r_b for " + l.str() + " [" + e.case_tag + "]";
        TorusSum a = gl2_restrict(e.r_alpha), b = gl2_restrict(e.r_beta);
        if (!(a == b)) {
            it.ok = false;
            it.detail = "difference: " + str(a - b);
        }
        rep.items.push_back(it);
    }
    for (const auto& [x, d] : ps_conflicts_) {
        rep.items.push_back({"principal series " + x.str() + " agrees from both Levis", false,
                             "difference: " + str(d)});
    }
    return rep;
}

SignedIrr IrrDb::dual_of(const IrrLabel& l) const {
    DualResult r = dualize(G2Sum(irr(l)), *this);
    if (!r.complete) throw DatabaseGap(r.gaps.front());
    if (r.value.size() != 1 || r.value.begin()->first.is_irr() == false)
        throw Error("dual of " + l.str() + " is not a single irreducible: " + str(r.value));
    long k = r.value.begin()->second;
    if (k != 1 && k != -1) throw Error("dual of " + l.str() + " has coefficient " + std::to_string(k));
    return {static_cast<int>(k), r.value.begin()->first.irr()};
}

} // namespace g2az
