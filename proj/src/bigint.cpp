#include "gcq/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gcq {

BigUint::BigUint(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
}

std::uint64_t BigUint::to_uint64() const {
    if (limbs_.size() > 2)
        throw std::overflow_error("BigUint: value does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() == 2) v = std::uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    const std::size_t m = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(m, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint32_t rhs) {
    if (rhs == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = std::uint64_t(limb) * rhs + carry;
        limb = static_cast<std::uint32_t>(prod & 0xffffffffu);
        carry = prod >> 32;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
        carry >>= 32;
    }
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = std::uint64_t(lhs.limbs_[i]) * rhs.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

std::uint32_t BigUint::div_mod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigUint& BigUint::div_exact(std::uint32_t d) {
    if (d == 0) throw std::logic_error("BigUint: division by zero");
    if (d == 1) return *this;
    if (div_mod_small(d) != 0)
        throw std::logic_error("BigUint: division expected to be exact");
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const noexcept {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.div_mod_small(1000000000u);
        std::string digits = std::to_string(chunk);
        if (!tmp.is_zero()) digits.insert(0, 9 - digits.size(), '0');
        out.insert(0, digits);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) {
    return os << v.to_string();
}

} // namespace gcq
