// Multivariate Laurent polynomials with exact rational coefficients.
#pragma once

#include "g2az/common.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2az {

class Laurent {
public:
    using Monomial = std::vector<int>;

    Laurent() = default;
    explicit Laurent(std::size_t nvars) : nvars_(nvars) {}
    static Laurent constant(std::size_t nvars, const Rational& c);
    static Laurent var(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Rational& c);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
    Laurent operator-() const { return (*this) * Rational(-1); }

    // Substitute var i := value.
    Laurent specialize(std::size_t i, const Rational& value) const;

    bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
    void add_term(const Monomial& m, const Rational& c);
};

} // namespace g2az
