#pragma once

// Small exact fractions (64-bit components) for quota arithmetic and
// path-length weights. Quota threshold comparisons must be exact: the
// majority-band boundary cases are decided by single-unit ceiling
// differences that floating point would blur.

#include <cstdint>
#include <numeric>
#include <string>

#include "liqdem/common.hpp"

namespace liqdem {

class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}

    constexpr Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)

    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw Error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make_checked(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make_checked(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_checked(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    // ceil(q * count) in exact integer arithmetic; q must be non-negative.
    std::int64_t ceil_mul(std::int64_t count) const {
        if (num_ < 0) throw Error("Rational::ceil_mul: negative fraction");
        __int128 p = static_cast<__int128>(num_) * count;
        __int128 q = (p + den_ - 1) / den_;
        return static_cast<std::int64_t>(q);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "a" or "a/b".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(text));
            return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw InputError("Rational::parse: malformed fraction '" + text + "'");
        }
    }

private:
    void normalize() {
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static Rational make_checked(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw Error("Rational: overflow in exact arithmetic");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        if (r.num_ == 0) r.den_ = 1;
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace liqdem
