#pragma once

// The bound-curve exponents, kept as exact rationals in one table so the
// report layer and the expsum layer cannot drift apart.

#include <cmath>

#include "selfpow/modmath.hpp"

namespace selfpow {

struct RationalExponent {
    int num;
    int den;
    double value() const { return double(num) / double(den); }
};

inline constexpr RationalExponent kExpJ1Curve{27, 82};         // J(p;1) curve
inline constexpr RationalExponent kExpPairCountCurve{23, 12};  // I(p) curve
inline constexpr RationalExponent kExpOrderSumP{1, 3};         // t + p^(1/3) t^(1/2)
inline constexpr RationalExponent kExpOrderSumT{1, 2};
inline constexpr RationalExponent kExpClassical{1, 2};         // sqrt(p)
inline constexpr RationalExponent kExpShteinikovP{1, 18};
inline constexpr RationalExponent kExpShteinikovD{101, 126};
inline constexpr RationalExponent kExpShkredovP{1, 6};
inline constexpr RationalExponent kExpShkredovD{1, 2};
inline constexpr RationalExponent kExpFiberT{-1, 12};          // p·t^(-1/12)

inline double rpow(double base, RationalExponent e)
{
    return std::pow(base, e.value());
}

// Exact integer hypothesis checks for the curve validity ranges.
// d < p^(1/2)  <=>  d^2 < p
inline bool below_sqrt(u64 d, u64 p)
{
    return u128(d) * d < p;
}

// d < p^(2/3)  <=>  d^3 < p^2 (guarded so d^3 cannot overflow the u128)
inline bool below_two_thirds(u64 d, u64 p)
{
    if (d >= (u64(1) << 42))
        return false;  // d^3 >= 2^126 > p^2 for every p < 2^62
    return u128(d) * d * d < u128(p) * p;
}

// t < p^(1/3)  <=>  t^3 < p
inline bool below_cbrt(u64 t, u64 p)
{
    if (t >= (u64(1) << 42))
        return false;  // t^3 >= 2^126 > p for every p < 2^62
    return u128(t) * t * t < p;
}

}  // namespace selfpow
