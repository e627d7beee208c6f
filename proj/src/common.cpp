#include "g2az/common.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>

namespace g2az {

namespace {

using Wide = boost::multiprecision::checked_int128_t;
using WideQ = boost::rational<Wide>;

WideQ widen(const Rational& r) { return WideQ(Wide(r.numerator()), Wide(r.denominator())); }

} // namespace

struct RationalAccess {
    static Rational narrow(const WideQ& q) {
        constexpr std::int64_t lim = INT64_MAX;
        if (q.numerator() > lim || q.numerator() < -lim || q.denominator() > lim) throw Error("rational overflow");
        return Rational(static_cast<std::int64_t>(q.numerator()), static_cast<std::int64_t>(q.denominator()),
                        Rational::Reduced{});
    }
};

namespace {
Rational narrow(const WideQ& q) { return RationalAccess::narrow(q); }
} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("division by zero in rational arithmetic");
    *this = narrow(WideQ(Wide(n), Wide(d)));
}

Rational Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Rational(q);
}

// Integer operands skip the wide path unless the result overflows.
Rational& Rational::operator+=(const Rational& o) {
    std::int64_t r;
    if (den_ == 1 && o.den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
    }
    return *this = narrow(widen(*this) + widen(o));
}
Rational& Rational::operator-=(const Rational& o) {
    std::int64_t r;
    if (den_ == 1 && o.den_ == 1 && !__builtin_sub_overflow(num_, o.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
    }
    return *this = narrow(widen(*this) - widen(o));
}
Rational& Rational::operator*=(const Rational& o) {
    std::int64_t r;
    if (den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
    }
    return *this = narrow(widen(*this) * widen(o));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("division by zero in rational arithmetic");
    return *this = narrow(widen(*this) / widen(o));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    if (den_ == o.den_) return num_ <=> o.num_;
    WideQ a = widen(*this), b = widen(o);
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(text, &used);
            if (used != text.size()) throw Error("bad rational: " + text);
            return Rational(n);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        long long n = std::stoll(a, &used);
        if (used != a.size()) throw Error("bad rational: " + text);
        long long d = std::stoll(b, &used);
        if (used != b.size() || d == 0) throw Error("bad rational: " + text);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw Error("bad rational: " + text);
    }
}

} // namespace g2az
