#pragma once

// Structure of F_p*: primality, factorization of p-1, divisors,
// multiplicative orders, primitive roots, subgroups and discrete logs.

#include <optional>
#include <vector>

#include "selfpow/modmath.hpp"

namespace selfpow {

struct PrimeFactor {
    u64 prime;
    int exponent;
    bool operator==(const PrimeFactor&) const = default;
};

// Immutable bundle shared by every computation on one prime:
// p, the factorization of p-1, all divisors of p-1 (ascending),
// and the smallest primitive root g.
struct PrimeContext {
    u64 p = 0;
    std::vector<PrimeFactor> factors;  // of p-1, primes ascending
    std::vector<u64> divisors;         // of p-1, ascending, 1 .. p-1
    u64 g = 0;
};

// Deterministic 64-bit primality (trial division + fixed-base Miller-Rabin).
// Returns a witness of compositeness (a divisor, or a strong witness base),
// or nullopt when n is prime.
std::optional<u64> composite_witness(u64 n);
bool is_prime(u64 n);

// Factorization: trial division below 10^5, Pollard-Brent rho above it.
// The rho walk is seeded deterministically from (n, seed); every reported
// prime is re-checked with is_prime and the product is verified against n.
std::vector<PrimeFactor> factorize(u64 n, u64 seed = 1);

std::vector<u64> divisors_from_factors(const std::vector<PrimeFactor>& factors);

// Builds the full context for an odd prime 3 <= p < 2^62.
// Rejects non-primes naming the witness, and rejects p = 2.
PrimeContext make_context(u64 p, u64 factor_seed = 1);

// ord(a) for 1 <= a < p, by stripping prime factors from p-1.
u64 multiplicative_order(u64 a, const PrimeContext& ctx);

// The unique subgroup H_d of F_p* of order d | p-1, elements ascending.
struct Subgroup {
    u64 order = 0;
    std::vector<u64> elements;
};

inline constexpr u64 kSubgroupElementCap = 100'000'000;

Subgroup subgroup_elements(u64 d, const PrimeContext& ctx);

// ind(a) with respect to ctx.g: the unique k in [0, p-1) with g^k ≡ a.
// Pohlig-Hellman over the factorization of p-1, baby-step giant-step
// inside each prime-power part.
u64 discrete_log(u64 a, const PrimeContext& ctx);

// Simple and segmented Eratosthenes sieves (odd primes only matter here,
// but 2 is included when in range).
std::vector<u64> primes_up_to(u64 n);
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace selfpow
