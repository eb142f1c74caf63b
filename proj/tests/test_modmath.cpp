#include <doctest.h>

#include <stdexcept>

#include "selfpow/modmath.hpp"
#include "selfpow/numtheory.hpp"
#include "selfpow/verify.hpp"

using namespace selfpow;

namespace {
// largest prime below the 2^62 modulus cap
constexpr u64 kBigPrime = 4611686018427387847ULL;
}

TEST_CASE("pow_mod basics")
{
    CHECK(pow_mod(3, 0, 7) == 1);
    CHECK(pow_mod(2, 3, 7) == 1);  // 8 ≡ 1
    CHECK(pow_mod(0, 0, 7) == 1);  // empty product
    for (u64 x = 0; x < 7; ++x)
        CHECK(pow_mod(x, 1, 7) == x);
    // even modulus path
    CHECK(pow_mod(3, 4, 16) == 81 % 16);
}

TEST_CASE("pow_mod at the modulus cap")
{
    // frozen against an independent bignum computation
    CHECK(pow_mod(3, kBigPrime - 1, kBigPrime) == 1);
    CHECK(pow_mod(kBigPrime - 12345, (u64(1) << 61) + 5, kBigPrime) ==
          4151446405049858332ULL);
    CHECK(mul_mod(kBigPrime - 12345, kBigPrime - 67890, kBigPrime) ==
          838102050ULL);
    CHECK_THROWS_AS(pow_mod(2, 2, u64(1) << 62), std::domain_error);
}

TEST_CASE("MontMul agrees with the generic kernel")
{
    for (u64 p : {3ULL, 7ULL, 65537ULL, 1000003ULL, kBigPrime}) {
        MontMul mont(p);
        u64 a = 1, b = p - 1;
        for (int i = 0; i < 2000; ++i) {
            a = a * 6364136223846793005ULL + 1442695040888963407ULL;
            b = b * 2862933555777941757ULL + 3037000493ULL;
            u64 am = a % p, bm = b % p;
            CHECK(mont.from_mont(mont.mul(mont.to_mont(am), mont.to_mont(bm))) ==
                  mul_mod(am, bm, p));
        }
        CHECK(mont.pow(2 % p, p - 1) == pow_mod(2, p - 1, p));
    }
}

TEST_CASE("inv_mod examples and involution")
{
    CHECK(inv_mod(1, 97) == 1);
    CHECK(inv_mod(6, 7) == 6);  // (p-1)^2 ≡ 1
    CHECK(inv_mod(4, 7) == 2);  // 4·2 = 8 ≡ 1
    CHECK_THROWS_AS(inv_mod(0, 7), std::domain_error);
    CHECK_THROWS_AS(inv_mod(7, 7), std::domain_error);
    CHECK(inv_mod(kBigPrime - 12345, kBigPrime) == 2397553735623084261ULL);

    // involution + definition over a couple of primes
    for (u64 p : {101ULL, 1009ULL}) {
        for (u64 m = 1; m < p; ++m) {
            u64 inv = inv_mod(m, p);
            CHECK(mul_mod(m, inv, p) == 1);
            CHECK(inv_mod(inv, p) == m);
        }
    }
    // extended Euclid also works for non-prime moduli
    CHECK(inv_mod(3, 10) == 7);
}

TEST_CASE("self_power range and values")
{
    CHECK(self_power(1, 97) == 1);
    CHECK(self_power(6, 7) == 1);   // (-1)^6
    CHECK(self_power(3, 7) == 6);   // 27 mod 7
    CHECK(self_power(987654321987654321ULL, kBigPrime) == 3705220874214802282ULL);
    CHECK_THROWS_AS(self_power(0, 7), std::domain_error);
    CHECK_THROWS_AS(self_power(7, 7), std::domain_error);
    CHECK_THROWS_AS(self_power(8, 7), std::domain_error);
}

TEST_CASE("self_power matches the naive oracle")
{
    for (u64 p : primes_up_to(600)) {
        if (p < 3)
            continue;
        for (u64 x = 1; x < p; ++x)
            CHECK(self_power(x, p) == verify::naive_pow_mod(x, x, p));
        CHECK(self_power(p - 1, p) == 1);
    }
}
