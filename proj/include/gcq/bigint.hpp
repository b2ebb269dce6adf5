#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gcq {

/// Arbitrary-precision unsigned integer covering the exact counting needs of
/// this project: addition, multiplication, and exact division by a machine
/// word. Stored as little-endian base-2^32 limbs with no trailing zero limbs
/// (zero is the empty limb vector).
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);

    bool is_zero() const noexcept { return limbs_.empty(); }

    /// Converts back to a machine word; throws std::overflow_error if the
    /// value does not fit.
    std::uint64_t to_uint64() const;

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator*=(std::uint32_t rhs);
    BigUint& operator*=(const BigUint& rhs);

    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    /// Divides by d, requiring the division to be exact; throws
    /// std::logic_error on a nonzero remainder. Callers arrange divisor
    /// order so that exactness is guaranteed.
    BigUint& div_exact(std::uint32_t d);

    std::strong_ordering operator<=>(const BigUint& rhs) const noexcept;
    bool operator==(const BigUint& rhs) const noexcept = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigUint& v);

private:
    /// In-place division by a word divisor; returns the remainder.
    std::uint32_t div_mod_small(std::uint32_t d);
    void trim();

    std::vector<std::uint32_t> limbs_;
};

} // namespace gcq
