#include "g2az/chars.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace g2az {

std::size_t SymbolGroup::declare(const std::string& name, long order, bool ramified) {
    if (name.empty() || name == "nu") throw Error("reserved or empty symbol name: '" + name + "'");
    if (order < 0 || order == 1) throw Error("symbol order must be >= 2 or infinite: " + name);
    if (auto i = find(name)) {
        const auto& s = syms_[*i];
        if (s.order != order || s.ramified != ramified)
            throw Error("conflicting declaration of symbol '" + name + "'");
        return *i;
    }
    syms_.push_back({name, order, ramified});
    return syms_.size() - 1;
}

std::optional<std::size_t> SymbolGroup::find(const std::string& name) const {
    for (std::size_t i = 0; i < syms_.size(); ++i)
        if (syms_[i].name == name) return i;
    return std::nullopt;
}

FChar FChar::nu(const Rational& s) {
    FChar c;
    c.nu_ = s;
    return c;
}

FChar FChar::generator(const SymbolGroupPtr& g, const std::string& name) {
    auto i = g->find(name);
    if (!i) throw Error("undeclared symbol '" + name + "'");
    FChar c;
    c.group_ = g;
    c.exps_.assign(*i + 1, 0);
    c.exps_[*i] = 1;
    c.normalize();
    return c;
}

void FChar::normalize() {
    if (group_) {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            long n = group_->info(i).order;
            if (n > 0) exps_[i] = ((exps_[i] % n) + n) % n;
        }
    }
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

void FChar::check_group(const FChar& o) const {
    if (!exps_.empty() && !o.exps_.empty() && group_ != o.group_)
        throw Error("characters from different symbol groups");
}

FChar FChar::finite_part() const {
    FChar c = *this;
    c.nu_ = 0;
    return c;
}

long FChar::finite_order() const {
    long ord = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        long n = group_->info(i).order;
        if (n == 0) return 0;
        long k = n / std::gcd(n, exps_[i]);
        ord = std::lcm(ord, k);
    }
    return ord;
}

bool FChar::involves_infinite_symbol() const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && group_->info(i).order == 0) return true;
    return false;
}

bool FChar::ramified() const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && group_->info(i).ramified) return true;
    return false;
}

FChar FChar::operator*(const FChar& o) const {
    check_group(o);
    FChar r;
    r.group_ = group_ ? group_ : o.group_;
    r.exps_.assign(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += exps_[i];
    for (std::size_t i = 0; i < o.exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.nu_ = nu_ + o.nu_;
    r.normalize();
    return r;
}

FChar FChar::inverse() const { return pow(-1); }

FChar FChar::pow(long k) const {
    FChar r = *this;
    for (auto& e : r.exps_) e *= k;
    r.nu_ *= k;
    r.normalize();
    return r;
}

FChar FChar::twist(const Rational& s) const {
    FChar r = *this;
    r.nu_ += s;
    return r;
}

std::string FChar::str() const {
    std::vector<std::string> parts;
    if (nu_ != 0) {
        if (nu_ == 1)
            parts.push_back("nu");
        else
            parts.push_back("nu^{" + to_string(nu_) + "}");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        long e = exps_[i];
        if (e == 0) continue;
        long n = group_->info(i).order;
        if (n > 0 && 2 * e > n) e -= n;  // symmetric representative
        const std::string& nm = group_->info(i).name;
        parts.push_back(e == 1 ? nm : nm + "^{" + std::to_string(e) + "}");
    }
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " " + parts[i];
    return s;
}

bool FChar::operator==(const FChar& o) const {
    check_group(o);
    return nu_ == o.nu_ && exps_ == o.exps_;
}

std::strong_ordering FChar::operator<=>(const FChar& o) const {
    check_group(o);
    if (auto c = exps_ <=> o.exps_; c != 0) return c;
    return cmp(nu_, o.nu_);
}

FChar char_mul(const FChar& a, const FChar& b) { return a * b; }
FChar char_inv(const FChar& a) { return a.inverse(); }

const WeylGroup& g2_weyl() {
    static const WeylGroup w(make_root_system(RootKind::G2));
    return w;
}

namespace {

// Columns: alpha = e1* - e2*, beta = -e1* + 2 e2*.
const IntMat kP = {{1, -1}, {-1, 2}};
const IntMat kPinv = {{2, 1}, {1, 1}};

FChar mono(const TorusCharacter& t, long a, long b) { return t.c1.pow(a) * t.c2.pow(b); }

// Y-coordinates of the coroot of a root given in root coordinates.
std::pair<long, long> coroot_y(const IntVec& root) {
    const auto& rs = g2_weyl().roots();
    IntVec c = rs.coroot_of(root);
    // alpha^v = (1,-1), beta^v = (0,1)
    return {c[0], -c[0] + c[1]};
}

} // namespace

IntMat x_matrix(const WeylElement& w) {
    if (w.matrix.size() != 2) throw Error("x_matrix needs a G2 Weyl element");
    return mat_mul(mat_mul(kP, w.matrix), kPinv);
}

TorusCharacter weyl_act_char(const WeylElement& w, const TorusCharacter& t, ActionConvention conv) {
    IntMat m = x_matrix(w);
    if (conv == ActionConvention::Contragredient) m = mat_transpose(mat_inverse_unimodular(m));
    return {mono(t, m[0][0], m[0][1]), mono(t, m[1][0], m[1][1])};
}

FChar coroot_value(const TorusCharacter& t, const IntVec& root) {
    auto [a, b] = coroot_y(root);
    return mono(t, a, b);
}

std::vector<TorusCharacter> weyl_orbit(const TorusCharacter& t) {
    std::vector<TorusCharacter> out;
    for (const auto& w : g2_weyl().elements()) {
        TorusCharacter u = weyl_act_char(w, t);
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
    return out;
}

TorusCharacter orbit_min(const TorusCharacter& t) {
    auto orb = weyl_orbit(t);
    return *std::min_element(orb.begin(), orb.end());
}

std::size_t stabilizer_order(const TorusCharacter& t) { return g2_weyl().order() / weyl_orbit(t).size(); }

namespace {

int condition_number(const IntVec& root) {
    auto y = coroot_y(root);
    if (y == std::pair<long, long>{1, 0} || y == std::pair<long, long>{0, 1}) return 1;
    if (y == std::pair<long, long>{1, 1}) return 2;
    if (y == std::pair<long, long>{1, -1}) return 3;
    if (y == std::pair<long, long>{2, 1}) return 4;
    if (y == std::pair<long, long>{1, 2}) return 5;
    throw Error("unexpected G2 coroot");
}

} // namespace

CharClass classify(const TorusCharacter& t) {
    CharClass cc;
    for (const auto& r : g2_weyl().roots().positive) {
        FChar v = coroot_value(t, r);
        bool pm1 = v.nu_exponent() == 1 || v.nu_exponent() == -1;
        if (pm1 && v.is_finite_trivial()) {
            cc.conditions.insert(condition_number(r));
            cc.reducing_roots.push_back(r);
        } else if (pm1 && v.involves_infinite_symbol()) {
            cc.generic = true;
        }
    }
    cc.regular = stabilizer_order(t) == 1;
    cc.unramified = !t.c1.ramified() && !t.c2.ramified();
    cc.order1 = t.c1.finite_order();
    cc.order2 = t.c2.finite_order();
    return cc;
}

std::string CharClass::str() const {
    std::ostringstream os;
    if (conditions.empty()) {
        os << "irreducible";
    } else {
        os << "reducible, conditions";
        for (int c : conditions) os << " (" << c << ")";
    }
    os << "; " << (regular ? "regular" : "singular");
    os << "; " << (unramified ? "unramified" : "ramified");
    auto ord = [](long n) { return n == 0 ? std::string("inf") : std::to_string(n); };
    os << "; finite orders " << ord(order1) << "," << ord(order2);
    if (generic) os << "; generic";
    return os.str();
}

} // namespace g2az
