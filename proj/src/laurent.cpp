#include "g2az/laurent.hpp"

#include <sstream>

namespace g2az {

Laurent Laurent::constant(std::size_t nvars, const Rational& c) {
    Laurent p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Laurent Laurent::var(std::size_t nvars, std::size_t i, int power) {
    if (i >= nvars) throw Error("variable index out of range");
    Laurent p(nvars);
    Monomial m(nvars, 0);
    m[i] = power;
    p.add_term(m, Rational(1));
    return p;
}

void Laurent::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.nvars_ != nvars_) throw Error("Laurent polynomials over different rings");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.nvars_ != nvars_) throw Error("Laurent polynomials over different rings");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.nvars_ != b.nvars_) throw Error("Laurent polynomials over different rings");
    Laurent r(a.nvars_);
    Laurent::Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Laurent Laurent::specialize(std::size_t i, const Rational& value) const {
    if (value == 0) throw Error("cannot specialize a Laurent variable to 0");
    Laurent r(nvars_);
    for (const auto& [m, c] : terms_) {
        Rational f = 1;
        int e = m[i];
        Rational base = e >= 0 ? value : Rational(1) / value;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) f *= base;
        Monomial mm = m;
        mm[i] = 0;
        r.add_term(mm, c * f);
    }
    return r;
}

std::string Laurent::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c0] = *it;
        Rational c = c0;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (m[i] != 1) mono += "^" + (m[i] < 0 ? "(" + std::to_string(m[i]) + ")" : std::to_string(m[i]));
        }
        if (mono.empty()) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << mono;
        }
    }
    return os.str();
}

} // namespace g2az
