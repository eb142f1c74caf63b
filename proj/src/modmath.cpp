#include "selfpow/modmath.hpp"

#include <stdexcept>
#include <string>

namespace selfpow {

void check_modulus(u64 m)
{
    if (m == 0)
        throw std::domain_error("modulus must be positive");
    if (m >= kModulusCap)
        throw std::domain_error("modulus " + std::to_string(m) +
                                " exceeds the 2^62 cap");
}

u64 add_mod(u64 a, u64 b, u64 m)
{
    u64 s = a + b;  // a,b < m < 2^62, no overflow
    return s >= m ? s - m : s;
}

u64 sub_mod(u64 a, u64 b, u64 m)
{
    return a >= b ? a - b : a + (m - b);
}

u64 mul_mod(u64 a, u64 b, u64 m)
{
    return u64((u128(a) * b) % m);
}

namespace {

u64 pow_mod_generic(u64 base, u64 e, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

u64 pow_mod(u64 base, u64 exponent, u64 m)
{
    check_modulus(m);
    if (m == 1)
        return 0;
    if ((m & 1) == 0)
        return pow_mod_generic(base, exponent, m);
    return MontMul(m).pow(base % m, exponent);
}

u64 inv_mod(u64 a, u64 m)
{
    check_modulus(m);
    a %= m;
    if (a == 0)
        throw std::domain_error("no inverse: value is 0 mod " + std::to_string(m));

    // Extended Euclid on (a, m); track x with a·x ≡ gcd (mod m).
    i64 old_r = i64(a), r = i64(m);
    i64 old_x = 1, x = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("no inverse: gcd(" + std::to_string(a) + ", " +
                                std::to_string(m) + ") = " + std::to_string(old_r));
    return old_x >= 0 ? u64(old_x) : u64(old_x + i64(m));
}

u64 self_power(u64 x, u64 p)
{
    check_modulus(p);
    if (x < 1 || x > p - 1)
        throw std::domain_error("self_power: x = " + std::to_string(x) +
                                " outside [1, p-1] for p = " + std::to_string(p));
    return pow_mod(x, x, p);
}

MontMul::MontMul(u64 odd_modulus) : p_(odd_modulus)
{
    check_modulus(odd_modulus);
    if ((odd_modulus & 1) == 0)
        throw std::domain_error("MontMul requires an odd modulus");

    // Newton iteration for p^{-1} mod 2^64 (5 steps double the precision).
    u64 inv = p_;
    for (int i = 0; i < 5; ++i)
        inv *= 2 - p_ * inv;
    neg_inv_ = ~inv + 1;

    one_ = (u64(0) - p_) % p_;  // 2^64 mod p
    r2_ = u64((u128(one_) * one_) % p_);
}

u64 MontMul::pow(u64 base, u64 e) const
{
    u64 b = to_mont(base);
    u64 acc = one_;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return from_mont(acc);
}

}  // namespace selfpow
