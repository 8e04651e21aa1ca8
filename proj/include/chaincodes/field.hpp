#ifndef CHAINCODES_FIELD_HPP
#define CHAINCODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace chaincodes {

/// The finite field F_{p^m}, built on a canonical monic irreducible modulus
/// over F_p.  Elements are represented by their index in [0, p^m): the element
/// with coefficient vector (c_0, ..., c_{m-1}) has index sum c_i * p^i.
class Field {
   public:
    /// Builds F_{p^m} with the canonical modulus: the first monic irreducible
    /// polynomial of degree m, coefficient vectors (c_0, ..., c_{m-1})
    /// compared lexicographically.  For m = 1 the modulus is x.
    Field(uint32_t p, uint32_t m);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }

    /// Coefficients of the modulus over F_p, constant term first, length m+1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// i-th coefficient (base-p digit) of element a, 0 <= i < m.
    uint32_t digit(uint32_t a, uint32_t i) const;
    uint32_t from_digits(const std::vector<uint32_t>& digits) const;
    std::vector<uint32_t> digits(uint32_t a) const;

    /// Element from an integer representative of F_p (m arbitrary).
    uint32_t from_int(int64_t v) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    /// Smallest e >= 1 with a^e = 1.  Throws ZeroInputError on a = 0.
    uint64_t mult_order(uint32_t a) const;

    /// The unique a0 with a0^{p^s} = a, computed as a^t with
    /// t = (p^s)^{-1} mod (p^m - 1).  Throws ZeroInputError on a = 0.
    uint32_t ps_root(uint32_t a, uint32_t s) const;

   private:
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    uint32_t p_, m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    // flat q*q tables when q is small, empty otherwise
    std::vector<uint32_t> add_table_, mul_table_, inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw MixedFieldError("operands belong to different fields");
}

}  // namespace chaincodes

#endif
