// Evaluation of parsed expressions against a case database and an optional
// Hecke algebra.
#pragma once

#include "g2az/expr.hpp"
#include "g2az/hecke.hpp"
#include "g2az/irrdb.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace g2az {

struct HeckeValue {
    HeckeElement h;
};

// Plain numbers, F^x characters, and sums at the torus, Levi, G2 and Hecke levels.
using Value = std::variant<Rational, FChar, TorusSum, Gl2Sum, G2Sum, HeckeValue>;

const char* level_name(const Value& v);

struct HeckeSetup {
    RootKind kind = RootKind::G2;
    LatticeKind lattice = LatticeKind::Root;
    // "q_s<i>" -> value; unlisted parameters stay symbolic
    std::map<std::string, Rational> params;
};

RootKind parse_root_kind(const std::string& name);

class Evaluator {
public:
    explicit Evaluator(IrrDb& db);

    IrrDb& db() { return db_; }
    void set_hecke(const HeckeSetup& setup);
    const HeckeAlgebra& hecke();

    // hint: Levi for bare delta/triv/pi(x, y) literals.
    Value eval(const Expr& e, std::optional<Levi> hint = std::nullopt);
    Value eval(const std::string& text, std::optional<Levi> hint = std::nullopt);

    std::string show(const Value& v);
    // Equality at the common level; G2 sums compare in R(G2).
    bool equal(const Value& a, const Value& b, std::string* diff = nullptr);
    // The Levi of a Levi-level value, if it has one.
    static std::optional<Levi> levi_of(const Value& v);
    // The label of a sum that is exactly one irreducible.
    static IrrLabel single_irr(const G2Sum& s, const std::string& text);

    // Evaluate to a G2 sum / Levi sum, with a clear error otherwise.
    G2Sum eval_g2(const std::string& text);
    Gl2Sum eval_gl2(const std::string& text, Levi l);

private:
    IrrDb& db_;
    std::unique_ptr<AffineWeylGroup> group_;
    std::unique_ptr<HeckeAlgebra> alg_;
    HeckeSetup setup_;

    Value call(const Expr& e, std::optional<Levi> hint);
    Value product(const Value& a, const Value& b, const Expr& where);
    Value add(const Value& a, const Value& b, const Expr& where);
    Value negate(const Value& a);
    Value scale(const Value& a, long k);
    Value power(const Value& a, const Rational& p, const Expr& where);
    HeckeElement to_hecke(const Value& v, const Expr& where);
};

} // namespace g2az
