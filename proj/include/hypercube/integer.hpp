#pragma once

// Signed integers with a machine-word fast path and automatic promotion to
// arbitrary precision. Arithmetic never wraps.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using i128 = __int128;

inline BigInt to_big(i128 v) {
    bool neg = v < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(m >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(m);
    return neg ? BigInt(-r) : r;
}

inline bool fits_i128(const BigInt& v) {
    return boost::multiprecision::msb(boost::multiprecision::abs(v) + 1) < 127;
}

inline i128 to_i128(const BigInt& v) {
    BigInt m = boost::multiprecision::abs(v);
    auto lo = static_cast<std::uint64_t>(m & BigInt(~std::uint64_t{0}));
    auto hi = static_cast<std::uint64_t>(m >> 64);
    i128 r = static_cast<i128>((static_cast<unsigned __int128>(hi) << 64) | lo);
    return v.sign() < 0 ? -r : r;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (m) {
        s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : small_(v) {}
    Integer(int v) : small_(v) {}
    explicit Integer(const BigInt& v) { assign(v); }

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    static Integer from_i128(i128 v) {
        if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<std::int64_t>(v));
        return Integer(to_big(v));
    }

    static Integer parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("malformed integer literal");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed integer literal: " + std::string(s));
        if (s.size() < 19) return Integer(static_cast<std::int64_t>(std::stoll(std::string(s))));
        std::string digits(s.substr(i));
        BigInt v(digits);
        return Integer(s[0] == '-' ? BigInt(-v) : v);
    }

    bool is_small() const { return !big_; }
    std::int64_t small() const { return small_; }
    BigInt big() const { return big_ ? *big_ : BigInt(small_); }

    bool fits_i128() const { return !big_ || hypercube::fits_i128(*big_); }
    i128 to_i128() const { return big_ ? hypercube::to_i128(*big_) : small_; }

    int sign() const {
        if (big_) return big_->sign();
        return (small_ > 0) - (small_ < 0);
    }
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    Integer operator-() const {
        if (!big_ && small_ != INT64_MIN) return Integer(-small_);
        return Integer(BigInt(-big()));
    }
    Integer abs() const { return sign() < 0 ? -*this : *this; }

    friend Integer operator+(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
        return Integer(BigInt(a.big() + b.big()));
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
        return Integer(BigInt(a.big() - b.big()));
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
        return Integer(BigInt(a.big() * b.big()));
    }
    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    // Quotient and remainder truncated toward zero.
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
            q = Integer(a.small_ / b.small_);
            r = Integer(a.small_ % b.small_);
            return;
        }
        BigInt qq, rr;
        boost::multiprecision::divide_qr(a.big(), b.big(), qq, rr);
        q = Integer(qq);
        r = Integer(rr);
    }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // normalized: big values never fit int64
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        int c = a.big().compare(b.big());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string to_string() const { return big_ ? big_->str() : std::to_string(small_); }
    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

private:
    void assign(const BigInt& v) {
        if (v >= INT64_MIN && v <= INT64_MAX) {
            small_ = static_cast<std::int64_t>(v);
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_unique<BigInt>(v);
        }
    }

    std::int64_t small_ = 0;
    std::unique_ptr<BigInt> big_;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small() != INT64_MIN && b.small() != INT64_MIN) {
        std::int64_t x = a.small() < 0 ? -a.small() : a.small();
        std::int64_t y = b.small() < 0 ? -b.small() : b.small();
        while (y) {
            std::int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(x);
    }
    return Integer(BigInt(boost::multiprecision::gcd(a.big(), b.big())));
}

inline Rational to_rational(const Integer& v) { return Rational(v.big()); }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hypercube
