#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gcq {

/// Exact rational with 64-bit numerator and denominator, normalized so that
/// den > 0 and gcd(|num|, den) = 1. Comparisons cross-multiply in 128 bits,
/// so they never overflow for in-range operands.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n) {}

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const auto lhs = static_cast<__int128>(a.num) * b.den;
        const auto rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

} // namespace gcq
