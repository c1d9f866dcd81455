#pragma once

// Arbitrary-precision unsigned integers for exact combinatorial counting.
// Schoolbook arithmetic is plenty: the counts handled here stay in the
// thousands of bits.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "liqdem/common.hpp"

namespace liqdem {

class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) { // NOLINT(google-explicit-constructor)
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const BigUint& a, const BigUint& b) = default;

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        }
        return std::strong_ordering::equal;
    }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
            limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    BigUint& mul_small(std::uint64_t v) {
        if (v == 0 || is_zero()) { limbs_.clear(); return *this; }
        return *this *= BigUint(v);
    }

    // Division by a machine word; returns the remainder.
    std::uint32_t divmod_small(std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }

    // Exact division by a machine word; the remainder must be zero.
    BigUint& div_exact_small(std::uint32_t d) {
        std::uint32_t rem = divmod_small(d);
        if (rem != 0) throw Error("BigUint::div_exact_small: inexact division");
        return *this;
    }

    BigUint pow(std::uint64_t e) const {
        BigUint base = *this, result = 1;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top) { ++bits; top >>= 1; }
        return bits;
    }

    double to_double() const {
        double r = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            r = r * 4294967296.0 + static_cast<double>(limbs_[i]);
        return r;
    }

    std::uint64_t to_u64() const {
        std::uint64_t r = 0;
        if (!limbs_.empty()) r = limbs_[0];
        if (limbs_.size() > 1) r |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (limbs_.size() > 2) throw Error("BigUint::to_u64: value does not fit");
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            std::uint32_t chunk = tmp.divmod_small(1'000'000'000u);
            std::string part = std::to_string(chunk);
            if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
            out.insert(0, part);
        }
        return out;
    }

    // Top 64 significant bits together with the exponent such that
    // value ~= mantissa * 2^(bit_length - 64). Used for quotient conversion.
    std::uint64_t top_bits64() const {
        std::size_t bl = bit_length();
        if (bl == 0) return 0;
        std::uint64_t acc = 0;
        int got = 0;
        std::size_t i = limbs_.size();
        while (i-- > 0 && got < 96) {
            acc = (acc << 32) | limbs_[i];
            got += 32;
            if (got >= 64) break;
        }
        int top_bits_in_word = static_cast<int>(bl - (limbs_.size() - 1) * 32);
        int shift = got - 64 - (32 - top_bits_in_word);
        if (shift > 0) acc >>= shift;
        else acc <<= -shift;
        return acc;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_; // little-endian base 2^32
};

inline BigUint big_factorial(std::uint64_t n) {
    BigUint r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

inline BigUint big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return {};
    if (k > n - k) k = n - k;
    BigUint r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.div_exact_small(static_cast<std::uint32_t>(i));
    }
    return r;
}

// num/den as double, safe even when both operands overflow double range.
inline double big_ratio(const BigUint& num, const BigUint& den) {
    if (num.is_zero()) return 0.0;
    if (den.is_zero()) throw Error("big_ratio: zero denominator");
    auto nb = static_cast<long>(num.bit_length());
    auto db = static_cast<long>(den.bit_length());
    double mant = static_cast<double>(num.top_bits64()) / static_cast<double>(den.top_bits64());
    return std::ldexp(mant, static_cast<int>(nb - db));
}

// Exact non-negative rational with big components.
struct BigRational {
    BigUint num;
    BigUint den;

    double to_double() const { return big_ratio(num, den); }
    std::string to_string() const { return num.to_string() + "/" + den.to_string(); }
};

} // namespace liqdem
