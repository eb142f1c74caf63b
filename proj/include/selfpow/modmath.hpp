#pragma once

// Exact modular arithmetic for odd prime moduli p < 2^62.
// All products go through a 128-bit intermediate; nothing here can
// silently overflow for moduli below the cap.

#include <cstdint>

namespace selfpow {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest supported modulus (exclusive). Keeps every product of two
// residues inside a 128-bit intermediate.
inline constexpr u64 kModulusCap = u64(1) << 62;

// Throws std::domain_error if m is 0 or >= kModulusCap.
void check_modulus(u64 m);

u64 add_mod(u64 a, u64 b, u64 m);
u64 sub_mod(u64 a, u64 b, u64 m);
u64 mul_mod(u64 a, u64 b, u64 m);

// base^exponent mod m, square-and-multiply; exponent 0 gives 1 (for m > 1).
// The exponent is taken literally; it is never reduced mod (m-1).
u64 pow_mod(u64 base, u64 exponent, u64 m);

// Least positive m* with m*·a ≡ 1 (mod m), by extended Euclid.
// Works for any modulus m >= 2 with gcd(a, m) = 1; throws
// std::domain_error when a ≡ 0 or no inverse exists.
u64 inv_mod(u64 a, u64 m);

// x^x mod p for 1 <= x <= p-1; throws std::domain_error outside that range.
u64 self_power(u64 x, u64 p);

// Montgomery multiplication context for a fixed odd modulus.
// Used by the hot counting loops; produces bit-identical results to
// mul_mod/pow_mod (covered by property tests).
class MontMul {
public:
    explicit MontMul(u64 odd_modulus);

    u64 modulus() const { return p_; }
    u64 one() const { return one_; }

    u64 to_mont(u64 x) const { return reduce(u128(x) * r2_); }
    u64 from_mont(u64 x) const { return reduce(x); }

    // Product of two Montgomery-form values.
    u64 mul(u64 a, u64 b) const { return reduce(u128(a) * b); }

    // base^e with plain-integer input and output.
    u64 pow(u64 base, u64 e) const;

private:
    u64 reduce(u128 t) const {
        u64 m = u64(t) * neg_inv_;
        u64 r = u64((t + u128(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }

    u64 p_;
    u64 neg_inv_;  // -p^{-1} mod 2^64
    u64 one_;      // 2^64 mod p
    u64 r2_;       // 2^128 mod p
};

}  // namespace selfpow
