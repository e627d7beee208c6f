// Finite Z-linear combinations over an ordered basis.
#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>

namespace g2az {

template <class B>
class FormalSum {
public:
    using map_type = std::map<B, long>;

    FormalSum() = default;
    explicit FormalSum(const B& b, long c = 1) { add(b, c); }

    void add(const B& b, long c = 1) {
        if (c == 0) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    FormalSum& operator*=(long k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= k;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(long k, FormalSum a) { return a *= k; }
    FormalSum operator-() const { return (*this) * -1L; }
    FormalSum operator*(long k) const {
        FormalSum r = *this;
        r *= k;
        return r;
    }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    long coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? 0 : it->second;
    }
    long total() const {
        long t = 0;
        for (const auto& kv : terms_) t += kv.second;
        return t;
    }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    // Apply a linear map defined on basis elements.
    template <class C, class F>
    FormalSum<C> map_linear(F f) const {
        FormalSum<C> out;
        for (const auto& [b, c] : terms_) {
            FormalSum<C> img = f(b);
            out += img * c;
        }
        return out;
    }

    std::string str(const std::function<std::string(const B&)>& show) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            long a = c;
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (a < 0) a = -a;
            if (a != 1) os << a << " ";
            os << show(b);
            first = false;
        }
        return os.str();
    }

private:
    map_type terms_;
};

} // namespace g2az
