#include "g2az/groth.hpp"

#include "g2az/irrdb.hpp"

namespace g2az {

const WeylElement& levi_normalizer(Levi l) {
    static const WeylElement* cache[2] = {nullptr, nullptr};
    int k = levi_index(l);
    if (!cache[k]) {
        const auto& W = g2_weyl();
        for (const auto& w : W.elements()) {
            if (w.length() > 0 && W.act(w, levi_root(l)) == levi_root(l)) {
                cache[k] = &w;
                break;
            }
        }
    }
    return *cache[k];
}

namespace {

const JacquetEntry& need_jacquet(const IrrLabel& l, const IrrDb* db) {
    const JacquetEntry* e = db ? db->jacquet(l) : nullptr;
    if (!e) throw DatabaseGap("database gap: no Jacquet data registered for " + l.str());
    return *e;
}

std::vector<int> idx(Levi l) { return {levi_index(l)}; }

} // namespace

Gl2Sum restrict_levi(Levi target, const G2Class& x, const IrrDb* db) {
    const auto& W = g2_weyl();
    Gl2Sum out;
    if (auto* b = std::get_if<InducedB>(&x.v)) {
        for (const auto& w : W.minimal_double_coset_reps({}, idx(target)))
            out += gl2_induce(target, weyl_act_char(w, b->tau));
        return out;
    }
    if (auto* m = std::get_if<InducedMax>(&x.v)) {
        const GL2Class& pi = m->arg;
        for (const auto& w : W.minimal_double_coset_reps(idx(pi.levi), idx(target))) {
            if (W.act(w, levi_root(pi.levi)) == levi_root(target)) {
                out += gl2_decompose(weyl_transport(w, pi, target));
            } else {
                for (const auto& [t, k] : gl2_restrict(pi)) out += gl2_induce(target, weyl_act_char(w, t)) * k;
            }
        }
        return out;
    }
    const IrrLabel& l = x.irr();
    if (l.kind == IrrKind::IrrPS) return restrict_levi(target, induced_b(*l.tau), db);
    if (l.kind == IrrKind::IndIrr) return restrict_levi(target, induced_max(*l.arg), db);
    if (l.kind == IrrKind::Supercuspidal) return out;
    const JacquetEntry& e = need_jacquet(l, db);
    return target == Levi::Alpha ? e.r_alpha : e.r_beta;
}

Gl2Sum restrict_levi(Levi target, const G2Sum& x, const IrrDb* db) {
    return x.map_linear<GL2Class>([&](const G2Class& c) { return restrict_levi(target, c, db); });
}

TorusSum restrict_torus(const G2Class& x, const IrrDb* db) {
    const auto& W = g2_weyl();
    TorusSum out;
    if (auto* b = std::get_if<InducedB>(&x.v)) {
        for (const auto& w : W.elements()) out.add(weyl_act_char(w, b->tau));
        return out;
    }
    if (auto* m = std::get_if<InducedMax>(&x.v)) {
        const GL2Class& pi = m->arg;
        for (const auto& w : W.minimal_double_coset_reps(idx(pi.levi), {}))
            for (const auto& [t, k] : gl2_restrict(pi)) out.add(weyl_act_char(w, t), k);
        return out;
    }
    return gl2_restrict(restrict_levi(Levi::Alpha, x, db));
}

TorusSum restrict_torus(const G2Sum& x, const IrrDb* db) {
    return x.map_linear<TorusCharacter>([&](const G2Class& c) { return restrict_torus(c, db); });
}

G2Sum induce_torus(const TorusSum& s) {
    G2Sum out;
    for (const auto& [t, k] : s) out.add(canonical(induced_b(t)), k);
    return out;
}

G2Sum induce_levi(const Gl2Sum& s) {
    G2Sum out;
    for (const auto& [c, k] : s) out.add(canonical(induced_max(c)), k);
    return out;
}

G2Class canonical(const G2Class& x) {
    if (auto* b = std::get_if<InducedB>(&x.v)) return induced_b(orbit_min(b->tau));
    if (auto* m = std::get_if<InducedMax>(&x.v)) {
        const GL2Class& pi = m->arg;
        if (pi.kind == Gl2Kind::PrincipalSeries) return induced_b(orbit_min(pi.tau));
        GL2Class other = weyl_transport(levi_normalizer(pi.levi), pi, pi.levi);
        const GL2Class* pick = &pi;
        if (other.twist() > pi.twist() || (other.twist() == pi.twist() && other < pi)) pick = &other;
        return induced_max(*pick);
    }
    return x;
}

G2Sum canonicalize(const G2Sum& s) {
    G2Sum out;
    for (const auto& [c, k] : s) out.add(canonical(c), k);
    return out;
}

BasisResult to_irr_basis(const G2Sum& s, const IrrDb& db) {
    BasisResult r;
    for (const auto& [c0, k] : s) {
        G2Class c = canonical(c0);
        if (c.is_irr()) {
            r.value.add(c, k);
            continue;
        }
        if (const DecompositionEntry* e = db.decomposition(c)) {
            r.value += e->factors * k;
            continue;
        }
        if (auto* b = std::get_if<InducedB>(&c.v); b && !classify(b->tau).reducible()) {
            r.value.add(irr(irr_ps(b->tau)), k);
            continue;
        }
        r.value.add(c, k);
        r.complete = false;
        r.gaps.push_back("database gap: no decomposition registered for " + c.str());
    }
    return r;
}

G2Sum dualize_raw(const G2Sum& x, const IrrDb* db) {
    G2Sum d = induce_torus(restrict_torus(x, db));
    d -= induce_levi(restrict_levi(Levi::Alpha, x, db));
    d -= induce_levi(restrict_levi(Levi::Beta, x, db));
    d += canonicalize(x);
    return d;
}

DualResult dualize(const G2Sum& x, const IrrDb& db) { return to_irr_basis(dualize_raw(x, &db), db); }

bool equal_in_r(const G2Sum& a, const G2Sum& b, const IrrDb* db, G2Sum* diff) {
    G2Sum d = canonicalize(a - b);
    if (d.empty()) return true;
    if (db) {
        BasisResult r = to_irr_basis(d, *db);
        if (r.value.empty()) return true;
        if (r.complete) d = r.value;
    }
    if (diff) *diff = d;
    return false;
}

} // namespace g2az
