// Characters of F^x and of the maximal torus of G2.
//
// An F^x character is nu^s times a monomial in declared symbol generators.
// A symbol has a finite order n (exponents reduced mod n) or infinite order
// (a free generic parameter).  The torus is F^x x F^x; chi1 (x) chi2 is
// t -> chi1(t1) chi2(t2).
#pragma once

#include "g2az/common.hpp"
#include "g2az/formal_sum.hpp"
#include "g2az/rootdata.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace g2az {

struct SymbolInfo {
    std::string name;
    long order = 0;  // 0 means infinite
    bool ramified = true;
};

class SymbolGroup {
public:
    // Re-declaring an identical symbol is a no-op; a conflicting one throws.
    std::size_t declare(const std::string& name, long order, bool ramified);
    std::optional<std::size_t> find(const std::string& name) const;
    const SymbolInfo& info(std::size_t i) const { return syms_.at(i); }
    std::size_t size() const { return syms_.size(); }

private:
    std::vector<SymbolInfo> syms_;
};

using SymbolGroupPtr = std::shared_ptr<SymbolGroup>;

class FChar {
public:
    FChar() = default;
    static FChar nu(const Rational& s);
    static FChar generator(const SymbolGroupPtr& g, const std::string& name);

    const Rational& nu_exponent() const { return nu_; }
    const std::vector<long>& exponents() const { return exps_; }
    const SymbolGroup* group() const { return group_.get(); }

    FChar finite_part() const;
    bool is_unitary() const { return nu_ == 0; }
    bool is_trivial() const { return nu_ == 0 && exps_.empty(); }
    bool is_finite_trivial() const { return exps_.empty(); }
    // Order of the finite part; 0 when an infinite-order symbol occurs.
    long finite_order() const;
    bool involves_infinite_symbol() const;
    bool ramified() const;

    FChar operator*(const FChar& o) const;
    FChar inverse() const;
    FChar pow(long k) const;
    FChar twist(const Rational& s) const;

    std::string str() const;

    bool operator==(const FChar& o) const;
    std::strong_ordering operator<=>(const FChar& o) const;

private:
    std::shared_ptr<const SymbolGroup> group_;
    std::vector<long> exps_;
    Rational nu_{0};
    void normalize();
    void check_group(const FChar& o) const;
};

FChar char_mul(const FChar& a, const FChar& b);
FChar char_inv(const FChar& a);

struct TorusCharacter {
    FChar c1, c2;

    TorusCharacter operator*(const TorusCharacter& o) const { return {c1 * o.c1, c2 * o.c2}; }
    TorusCharacter inverse() const { return {c1.inverse(), c2.inverse()}; }
    std::string str() const { return c1.str() + " (x) " + c2.str(); }
    bool operator==(const TorusCharacter& o) const = default;
    std::strong_ordering operator<=>(const TorusCharacter& o) const = default;
};

using TorusSum = FormalSum<TorusCharacter>;

// The Weyl group of G2 with alpha short (index 0) and beta long (index 1).
const WeylGroup& g2_weyl();

// How an integer matrix on X acts on character tuples.  Natural: the
// transported character is chi o w^{-1}, matching the sample vectors used
// in the tests.  Contragredient: the dual-lattice variant, kept only so the
// choice can be tested.
enum class ActionConvention { Natural, Contragredient };

// Matrix of w on X = Z e1* + Z e2*.
IntMat x_matrix(const WeylElement& w);
TorusCharacter weyl_act_char(const WeylElement& w, const TorusCharacter& t,
                             ActionConvention conv = ActionConvention::Natural);

// chi o gamma^v for a root gamma given in root coordinates.
FChar coroot_value(const TorusCharacter& t, const IntVec& root);

std::vector<TorusCharacter> weyl_orbit(const TorusCharacter& t);
TorusCharacter orbit_min(const TorusCharacter& t);
std::size_t stabilizer_order(const TorusCharacter& t);

struct CharClass {
    std::set<int> conditions;  // numbered reducibility conditions 1..5
    std::vector<IntVec> reducing_roots;  // positive roots with chi o gamma^v = nu^{+-1}
    bool regular = false;
    bool unramified = true;
    bool generic = false;      // a condition fails only through a free symbol
    long order1 = 1, order2 = 1;
    bool reducible() const { return !conditions.empty(); }
    std::string str() const;
};

CharClass classify(const TorusCharacter& t);

} // namespace g2az
