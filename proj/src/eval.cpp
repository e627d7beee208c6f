#include "g2az/eval.hpp"

#include <algorithm>

namespace g2az {

const char* level_name(const Value& v) {
    switch (v.index()) {
    case 0: return "number";
    case 1: return "character";
    case 2: return "torus";
    case 3: return "Levi";
    case 4: return "G2";
    default: return "Hecke";
    }
}

RootKind parse_root_kind(const std::string& name) {
    if (name == "A1") return RootKind::A1;
    if (name == "A1xA1") return RootKind::A1xA1;
    if (name == "A2") return RootKind::A2;
    if (name == "C2" || name == "B2") return RootKind::C2;
    if (name == "G2") return RootKind::G2;
    throw Error("unsupported root datum '" + name + "' (A1, A1xA1, A2, C2, G2)");
}

namespace {

[[noreturn]] void fail(const Expr& e, const std::string& msg) { throw ParseError(msg, e.pos); }

bool is_zero(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return *r == 0;
    return false;
}

FChar as_char(const Value& v, const Expr& where) {
    if (auto* c = std::get_if<FChar>(&v)) return *c;
    if (auto* r = std::get_if<Rational>(&v); r && *r == 1) return FChar();
    fail(where, std::string("expected a character, got a ") + level_name(v) + " value");
}

Rational as_number(const Value& v, const Expr& where) {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    fail(where, std::string("expected a number, got a ") + level_name(v) + " value");
}

TorusSum as_torus(const Value& v, const Expr& where) {
    if (auto* t = std::get_if<TorusSum>(&v)) return *t;
    if (is_zero(v)) return {};
    fail(where, std::string("expected a torus character, got a ") + level_name(v) + " value");
}

Gl2Sum as_gl2(const Value& v, const Expr& where) {
    if (auto* g = std::get_if<Gl2Sum>(&v)) return *g;
    if (is_zero(v)) return {};
    fail(where, std::string("expected a Levi representation, got a ") + level_name(v) + " value");
}

G2Sum as_g2(const Value& v, const Expr& where) {
    if (auto* g = std::get_if<G2Sum>(&v)) return *g;
    if (is_zero(v)) return {};
    fail(where, std::string("expected a G2 representation, got a ") + level_name(v) + " value");
}

const GL2Class& single_gl2(const Value& v, const Expr& where) {
    auto* g = std::get_if<Gl2Sum>(&v);
    if (!g || g->size() != 1 || g->begin()->second != 1)
        fail(where, "expected a single Levi representation");
    return g->begin()->first;
}

const G2Class& single_g2(const Value& v, const Expr& where) {
    auto* g = std::get_if<G2Sum>(&v);
    if (!g || g->size() != 1 || g->begin()->second != 1) fail(where, "expected a single G2 object");
    return g->begin()->first;
}

Levi letter_levi(const std::string& suffix) { return suffix == "a" ? Levi::Alpha : Levi::Beta; }

void need_args(const Expr& e, std::size_t lo, std::size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi)
        fail(e, e.name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                    " argument(s)");
}

G2Sum one_irr(const IrrLabel& l) { return G2Sum(irr(l)); }

} // namespace

Evaluator::Evaluator(IrrDb& db) : db_(db) {}

void Evaluator::set_hecke(const HeckeSetup& setup) {
    alg_.reset();
    group_ = std::make_unique<AffineWeylGroup>(setup.kind, setup.lattice);
    std::map<std::size_t, Rational> spec;
    for (const auto& [name, val] : setup.params) {
        if (name.rfind("q_s", 0) != 0) throw Error("parameter names look like q_s<i>: " + name);
        std::size_t i = std::stoul(name.substr(3));
        if (i >= group_->num_generators()) throw Error("no generator s" + std::to_string(i));
        std::size_t cls = group_->param_class()[i];
        if (spec.count(cls) && spec[cls] != val)
            throw Error("conflicting values for conjugate parameters (" + name + ")");
        spec[cls] = val;
    }
    alg_ = std::make_unique<HeckeAlgebra>(*group_, spec);
    setup_ = setup;
}

const HeckeAlgebra& Evaluator::hecke() {
    if (!alg_) set_hecke(HeckeSetup{});
    return *alg_;
}

Value Evaluator::eval(const std::string& text, std::optional<Levi> hint) { return eval(parse_expr(text), hint); }

G2Sum Evaluator::eval_g2(const std::string& text) {
    Expr e = parse_expr(text);
    return as_g2(eval(e), e);
}

Gl2Sum Evaluator::eval_gl2(const std::string& text, Levi l) {
    Expr e = parse_expr(text);
    Gl2Sum s = as_gl2(eval(e, l), e);
    for (const auto& [c, k] : s)
        if (c.levi != l) fail(e, std::string("expected data on L_") + levi_letter(l) + ", got " + c.str_with_levi());
    return s;
}

Value Evaluator::eval(const Expr& e, std::optional<Levi> hint) {
    switch (e.kind) {
    case Expr::Kind::Number:
        return e.value;
    case Expr::Kind::Ident: {
        const std::string& n = e.name;
        if (n == "nu") return FChar::nu(Rational(1));
        if (n == "St") return one_irr(irr_st());
        if (n == "one") return one_irr(irr_one());
        if (db_.symbols()->find(n)) return FChar::generator(db_.symbols(), n);
        if (db_.is_supercuspidal(n)) return one_irr(irr_supercuspidal(n));
        if (const CuspidalInfo* ci = db_.cuspidal(n)) {
            if (hint && *hint != ci->levi)
                fail(e, "cuspidal " + n + " lives on L_" + levi_letter(ci->levi) + ", not L_" + levi_letter(*hint));
            return Gl2Sum(make_cuspidal(ci->levi, n, Rational(0), ci->selfdual));
        }
        if (n.rfind("q_s", 0) == 0 && n.size() > 3 &&
            std::all_of(n.begin() + 3, n.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            const HeckeAlgebra& H = hecke();
            std::size_t i = std::stoul(n.substr(3));
            if (i >= H.group().num_generators()) fail(e, "no generator s" + std::to_string(i));
            return HeckeValue{H.scale(H.one(), H.q(i))};
        }
        fail(e, "unknown symbol '" + n + "'");
    }
    case Expr::Kind::Call:
        return call(e, hint);
    case Expr::Kind::Hecke: {
        const HeckeAlgebra& H = hecke();
        std::string w;
        for (const auto& g : e.gens) w += (w.empty() ? "" : " ") + g;
        try {
            return HeckeValue{H.word(w)};
        } catch (const ParseError&) {
            throw;
        } catch (const Error& ex) {
            fail(e, ex.what());
        }
    }
    case Expr::Kind::Power:
        return power(eval(e.args[0], hint), e.value, e);
    case Expr::Kind::Dual: {
        Value v = eval(e.args[0], hint);
        if (auto* c = std::get_if<FChar>(&v)) return c->inverse();
        if (auto* g = std::get_if<Gl2Sum>(&v)) {
            Gl2Sum out;
            for (const auto& [c, k] : *g) {
                if (c.kind != Gl2Kind::Cuspidal) fail(e, "~ applies to characters and cuspidal symbols");
                GL2Class d = c;
                if (!c.selfdual) d.contragredient = !d.contragredient;
                d.c = d.c.inverse();
                out.add(d, k);
            }
            return out;
        }
        fail(e, "~ applies to characters and cuspidal symbols");
    }
    case Expr::Kind::Product: {
        Value acc = eval(e.args[0], hint);
        for (std::size_t i = 1; i < e.args.size(); ++i) acc = product(acc, eval(e.args[i], hint), e.args[i]);
        return acc;
    }
    case Expr::Kind::Tensor: {
        Value a = eval(e.args[0], hint), b = eval(e.args[1], hint);
        return TorusSum(TorusCharacter{as_char(a, e.args[0]), as_char(b, e.args[1])});
    }
    case Expr::Kind::Sum: {
        Value acc = eval(e.args[0], hint);
        for (std::size_t i = 1; i < e.args.size(); ++i) acc = add(acc, eval(e.args[i], hint), e.args[i]);
        return acc;
    }
    case Expr::Kind::Neg:
        return negate(eval(e.args[0], hint));
    case Expr::Kind::Scale:
        return scale(eval(e.args[0], hint), e.coeff);
    }
    fail(e, "bad expression");
}

Value Evaluator::call(const Expr& e, std::optional<Levi> hint) {
    const std::string& n = e.name;
    auto arg = [&](std::size_t i, std::optional<Levi> h = std::nullopt) { return eval(e.args.at(i), h); };

    if (n == "delta" || n == "triv") {
        need_args(e, 1, 1);
        FChar c = as_char(arg(0), e.args[0]);
        Levi l = hint.value_or(Levi::Alpha);
        return Gl2Sum(n == "delta" ? make_steinberg(l, c) : make_trivial(l, c));
    }
    if (n == "I") {
        need_args(e, 1, 1);
        Value v = arg(0);
        if (auto* g = std::get_if<Gl2Sum>(&v)) return induce_levi(*g);
        return induce_torus(as_torus(v, e.args[0]));
    }
    if (n == "I_a" || n == "I_b") {
        need_args(e, 1, 2);
        Levi l = letter_levi(n.substr(2));
        Gl2Sum pi;
        if (e.args.size() == 2) {
            Rational s = as_number(arg(0), e.args[0]);
            pi = gl2_twist(as_gl2(arg(1, l), e.args[1]), FChar::nu(s));
        } else {
            pi = as_gl2(arg(0, l), e.args[0]);
        }
        G2Sum out;
        for (const auto& [c, k] : pi) {
            if (c.levi != l) fail(e, n + " needs a representation of L_" + levi_letter(l));
            out.add(induced_max(c), k);
        }
        return out;
    }
    if (n == "I^a" || n == "I^b") {
        need_args(e, 1, 1);
        Levi l = letter_levi(n.substr(2));
        Gl2Sum out;
        for (const auto& [t, k] : as_torus(arg(0), e.args[0])) out += gl2_induce(l, t) * k;
        return out;
    }
    if (n == "r_0") {
        need_args(e, 1, 1);
        Value v = arg(0);
        if (auto* g = std::get_if<Gl2Sum>(&v)) return gl2_restrict(*g);
        return restrict_torus(as_g2(v, e.args[0]), &db_);
    }
    if (n == "r_a" || n == "r_b") {
        need_args(e, 1, 1);
        return restrict_levi(letter_levi(n.substr(2)), as_g2(arg(0), e.args[0]), &db_);
    }
    if (n == "D") {
        need_args(e, 1, 1);
        Value v = arg(0, hint);
        if (auto* g = std::get_if<Gl2Sum>(&v)) return dualize_gl2(*g);
        DualResult r = dualize(as_g2(v, e.args[0]), db_);
        if (!r.complete) throw DatabaseGap(r.gaps.front());
        return r.value;
    }
    if (n == "decomp") {
        need_args(e, 1, 1);
        BasisResult r = to_irr_basis(as_g2(arg(0), e.args[0]), db_);
        if (!r.complete) throw DatabaseGap(r.gaps.front());
        return r.value;
    }
    if (n == "pi") {
        need_args(e, 1, 2);
        if (e.args.size() == 2) {
            FChar a = as_char(arg(0), e.args[0]), b = as_char(arg(1), e.args[1]);
            return Gl2Sum(make_ps(hint.value_or(Levi::Beta), TorusCharacter{a, b}));
        }
        Value v = arg(0);
        if (auto* t = std::get_if<TorusSum>(&v)) {
            if (t->size() != 1) fail(e, "pi(...) needs a single torus character");
            return one_irr(irr_pi_gen(t->begin()->first));
        }
        if (std::holds_alternative<Gl2Sum>(v)) return one_irr(irr_pi_sigma(single_gl2(v, e.args[0])));
        return one_irr(irr_pi(as_char(v, e.args[0])));
    }
    if (n == "pi'") {
        need_args(e, 1, 1);
        if (!as_char(arg(0), e.args[0]).is_trivial()) fail(e, "pi' is only defined at the trivial character");
        return one_irr(irr_pi_prime());
    }
    if (n == "J_a" || n == "J_b") {
        need_args(e, 2, 2);
        Levi l = letter_levi(n.substr(2));
        Rational s = as_number(arg(0), e.args[0]);
        Value v = arg(1, l);
        const GL2Class& c = single_gl2(v, e.args[1]);
        if (c.levi != l) fail(e, n + " needs a representation of L_" + levi_letter(l));
        if (s <= 0)
            fail(e, n + "(" + to_string(s) + ", ...) is not a Langlands quotient; in R(G2), I_" + levi_letter(l) +
                        "(-s, pi) = I_" + levi_letter(l) + "(s, w pi) with w the Levi normalizer, so write the s > 0 form");
        if (c.kind == Gl2Kind::Steinberg) {
            if (!c.c.is_unitary()) fail(e, "write the twist as the first argument of " + n);
            return one_irr(irr_j(l, s, c.c));
        }
        if (c.kind == Gl2Kind::PrincipalSeries && l == Levi::Beta) return one_irr(irr_jbeta_ps(s, c.tau.c1, c.tau.c2));
        fail(e, n + " needs delta(chi)" + std::string(l == Levi::Beta ? " or pi(chi1, chi2)" : ""));
    }
    if (n == "J") {
        need_args(e, 1, 1);
        Value v = arg(0);
        if (auto* t = std::get_if<TorusSum>(&v)) {
            if (t->size() != 1) fail(e, "J(...) needs a single torus character");
            return one_irr(irr_j_gen(t->begin()->first));
        }
        return one_irr(irr_j_sigma(single_gl2(v, e.args[0])));
    }
    if (n == "Irr") {
        need_args(e, 1, 1);
        Value v = arg(0);
        G2Class c = canonical(single_g2(v, e.args[0]));
        if (auto* b = std::get_if<InducedB>(&c.v)) {
            if (classify(b->tau).reducible()) fail(e, "I(" + b->tau.str() + ") is reducible");
            return one_irr(irr_ps(b->tau));
        }
        if (auto* m = std::get_if<InducedMax>(&c.v)) return one_irr(irr_induced(m->arg));
        return v;
    }
    if (n == "star" || n == "inv") {
        need_args(e, 1, 1);
        const HeckeAlgebra& H = hecke();
        HeckeElement h = to_hecke(arg(0), e.args[0]);
        if (n == "star") return HeckeValue{H.star(h)};
        if (h.size() != 1) fail(e, "inv(...) takes a single basis element T[w]");
        const auto& [w, c] = *h.begin();
        if (!(c == H.one_poly())) fail(e, "inv(...) takes a single basis element T[w]");
        return HeckeValue{H.t_inverse(w)};
    }
    fail(e, "unknown function '" + n + "'");
}

HeckeElement Evaluator::to_hecke(const Value& v, const Expr& where) {
    const HeckeAlgebra& H = hecke();
    if (auto* h = std::get_if<HeckeValue>(&v)) return h->h;
    if (auto* r = std::get_if<Rational>(&v)) {
        if (*r == 0) return {};
        return H.scale(H.one(), Laurent::constant(H.nvars(), *r));
    }
    fail(where, std::string("expected a Hecke algebra element, got a ") + level_name(v) + " value");
}

Value Evaluator::product(const Value& a, const Value& b, const Expr& where) {
    if (std::holds_alternative<HeckeValue>(a) || std::holds_alternative<HeckeValue>(b))
        return HeckeValue{hecke().mul(to_hecke(a, where), to_hecke(b, where))};
    auto* ra = std::get_if<Rational>(&a);
    auto* rb = std::get_if<Rational>(&b);
    if (ra && rb) return *ra * *rb;
    auto* ca = std::get_if<FChar>(&a);
    auto* cb = std::get_if<FChar>(&b);
    if ((ca || (ra && *ra == 1)) && (cb || (rb && *rb == 1))) return as_char(a, where) * as_char(b, where);
    if ((ca || ra) && std::holds_alternative<Gl2Sum>(b)) return gl2_twist(std::get<Gl2Sum>(b), as_char(a, where));
    if ((cb || rb) && std::holds_alternative<Gl2Sum>(a)) return gl2_twist(std::get<Gl2Sum>(a), as_char(b, where));
    fail(where, std::string("cannot multiply a ") + level_name(a) + " value by a " + level_name(b) + " value");
}

Value Evaluator::add(const Value& a, const Value& b, const Expr& where) {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (std::holds_alternative<HeckeValue>(a) || std::holds_alternative<HeckeValue>(b))
        return HeckeValue{hecke().add(to_hecke(a, where), to_hecke(b, where))};
    if (a.index() != b.index())
        fail(where, std::string("cannot add a ") + level_name(a) + " value to a " + level_name(b) + " value");
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) return x + std::get<Rational>(b);
            else if constexpr (std::is_same_v<T, FChar> || std::is_same_v<T, HeckeValue>)
                fail(where, "characters multiply; they do not add");
            else return x + std::get<T>(b);
        },
        a);
}

Value Evaluator::negate(const Value& a) { return scale(a, -1); }

Value Evaluator::scale(const Value& a, long k) {
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) return x * Rational(k);
            else if constexpr (std::is_same_v<T, FChar>) throw Error("a character cannot be scaled by an integer");
            else if constexpr (std::is_same_v<T, HeckeValue>)
                return HeckeValue{hecke().scale(x.h, Laurent::constant(hecke().nvars(), Rational(k)))};
            else return x * k;
        },
        a);
}

Value Evaluator::power(const Value& a, const Rational& p, const Expr& where) {
    if (auto* r = std::get_if<Rational>(&a)) {
        if (*r == 1) return Rational(1);
        if (!p.is_integer()) fail(where, "fractional power of a number");
        Rational out(1);
        long n = p.numerator();
        for (long i = 0; i < std::abs(n); ++i) out *= *r;
        return n < 0 ? Rational(1) / out : out;
    }
    if (auto* c = std::get_if<FChar>(&a)) {
        if (p.is_integer()) return c->pow(p.numerator());
        if (!c->is_finite_trivial()) fail(where, "fractional powers are only defined for powers of nu");
        return FChar::nu(c->nu_exponent() * p);
    }
    if (std::holds_alternative<HeckeValue>(a)) {
        if (!p.is_integer()) fail(where, "fractional power of a Hecke element");
        const HeckeAlgebra& H = hecke();
        HeckeElement base = std::get<HeckeValue>(a).h;
        long n = p.numerator();
        if (n < 0) {
            if (base.size() != 1 || !(base.begin()->second == H.one_poly()))
                fail(where, "negative powers need a single basis element T[w]");
            base = H.t_inverse(base.begin()->first);
            n = -n;
        }
        HeckeElement out = H.one();
        for (long i = 0; i < n; ++i) out = H.mul(out, base);
        return HeckeValue{out};
    }
    fail(where, std::string("cannot raise a ") + level_name(a) + " value to a power");
}

IrrLabel Evaluator::single_irr(const G2Sum& s, const std::string& text) {
    if (s.size() != 1 || s.begin()->second != 1 || !s.begin()->first.is_irr())
        throw Error("not a single irreducible label: " + text);
    return s.begin()->first.irr();
}

std::optional<Levi> Evaluator::levi_of(const Value& v) {
    auto* g = std::get_if<Gl2Sum>(&v);
    if (!g || g->empty()) return std::nullopt;
    return g->begin()->first.levi;
}

std::string Evaluator::show(const Value& v) {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) return to_string(x);
            else if constexpr (std::is_same_v<T, FChar>) return x.str();
            else if constexpr (std::is_same_v<T, HeckeValue>) return hecke().str(x.h);
            else return str(x);
        },
        v);
}

bool Evaluator::equal(const Value& a, const Value& b, std::string* diff) {
    auto report = [&](const std::string& d) {
        if (diff) *diff = d;
        return false;
    };
    if (std::holds_alternative<HeckeValue>(a) || std::holds_alternative<HeckeValue>(b)) {
        Expr none;
        HeckeElement x = to_hecke(a, none), y = to_hecke(b, none);
        if (hecke().equal(x, y)) return true;
        return report("lhs - rhs = " + hecke().str(hecke().add(x, hecke().scale(y, Laurent::constant(hecke().nvars(), Rational(-1))))));
    }
    if (is_zero(a) && is_zero(b)) return true;
    Value x = a, y = b;
    if (is_zero(x)) x = std::visit([](const auto& t) -> Value { return std::decay_t<decltype(t)>{}; }, b);
    if (is_zero(y)) y = std::visit([](const auto& t) -> Value { return std::decay_t<decltype(t)>{}; }, a);
    if (x.index() != y.index())
        return report(std::string("level mismatch: ") + level_name(x) + " vs " + level_name(y));
    if (auto* g = std::get_if<G2Sum>(&x)) {
        G2Sum d;
        if (equal_in_r(*g, std::get<G2Sum>(y), &db_, &d)) return true;
        return report("lhs - rhs = " + str(d));
    }
    if (auto* g = std::get_if<Gl2Sum>(&x)) {
        Gl2Sum d = normalize_gl2(*g - std::get<Gl2Sum>(y));
        if (d.empty()) return true;
        std::string s = d.str([](const GL2Class& c) { return c.str_with_levi(); });
        return report("lhs - rhs = " + s);
    }
    if (auto* t = std::get_if<TorusSum>(&x)) {
        TorusSum d = *t - std::get<TorusSum>(y);
        if (d.empty()) return true;
        return report("lhs - rhs = " + str(d));
    }
    if (auto* r = std::get_if<Rational>(&x))
        if (*r == std::get<Rational>(y)) return true;
    if (auto* c = std::get_if<FChar>(&x))
        if (*c == std::get<FChar>(y)) return true;
    return report(show(x) + " != " + show(y));
}

} // namespace g2az
