#ifndef CHARLAB_RATIONAL_ANGLE_HPP
#define CHARLAB_RATIONAL_ANGLE_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "charlab/numeric.hpp"

namespace charlab {

// The unit complex number e(a/b) = exp(2*pi*i*a/b) kept as an exact reduced
// fraction, 0 <= a < b, gcd(a, b) = 1. Multiplying two angles adds the
// fractions mod 1, so products of roots of unity never accumulate phase error.
class RationalAngle {
public:
    constexpr RationalAngle() : num_(0), den_(1) {}

    RationalAngle(std::int64_t num, std::int64_t den) {
        if (den < 1) throw std::domain_error("RationalAngle: denominator must be >= 1");
        num %= den;
        if (num < 0) num += den;
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_one() const { return num_ == 0; }

    Complex to_complex() const {
        return unit_phase(static_cast<double>(num_) / static_cast<double>(den_));
    }

    RationalAngle conj() const { return RationalAngle(den_ - num_, den_); }

    // e(a/b) * e(c/d) = e(a/b + c/d mod 1)
    friend RationalAngle operator*(const RationalAngle& lhs, const RationalAngle& rhs) {
        const __int128 den = static_cast<__int128>(lhs.den_) * rhs.den_;
        __int128 num = static_cast<__int128>(lhs.num_) * rhs.den_ +
                       static_cast<__int128>(rhs.num_) * lhs.den_;
        num %= den;
        const __int128 g = gcd128(num, den);
        return RationalAngle::reduced(static_cast<std::int64_t>(num / g),
                                      static_cast<std::int64_t>(den / g));
    }

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

    // e(a/b)^k
    friend RationalAngle pow(const RationalAngle& base, std::int64_t k) {
        __int128 num = static_cast<__int128>(base.num_) * k % base.den_;
        if (num < 0) num += base.den_;
        const __int128 g = gcd128(num, base.den_);
        return RationalAngle::reduced(static_cast<std::int64_t>(num / g),
                                      static_cast<std::int64_t>(base.den_ / g));
    }

private:
    static RationalAngle reduced(std::int64_t num, std::int64_t den) {
        RationalAngle a;
        a.num_ = num;
        a.den_ = den;
        return a;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_;
    std::int64_t den_;  // reduced: gcd(num_, den_) == 1, 0 <= num_ < den_
};

}  // namespace charlab

#endif  // CHARLAB_RATIONAL_ANGLE_HPP
