// Shared numeric types, ordering helpers and error classes.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace g2az {

class Error;

// Exact rational with 64-bit numerator and positive denominator, always in
// lowest terms.  Arithmetic overflow throws.
class Rational {
public:
    Rational(std::int64_t n = 0) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    Rational floor() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    std::int64_t num_, den_;
    struct Reduced {};
    Rational(std::int64_t n, std::int64_t d, Reduced) : num_(n), den_(d) {}
    friend struct RationalAccess;
};

inline std::strong_ordering cmp(const Rational& a, const Rational& b) { return a <=> b; }

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A label or induced object the case database cannot resolve.
class DatabaseGap : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at column " + std::to_string(pos + 1) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace g2az
