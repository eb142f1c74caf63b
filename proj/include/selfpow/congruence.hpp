#pragma once

// The counting quantities: J(p;λ) and the full spectrum of the self-power
// map, I(p), order-stratified sums, the divisor-class counters J'_d, J_d,
// T_d (each with two independent algorithms), and the bounded power
// congruence counter.

#include <map>
#include <vector>

#include "selfpow/numtheory.hpp"

namespace selfpow {

inline constexpr u64 kDefaultSpectrumCap = 10'000'000;

// Full histogram λ -> J(p;λ) for one prime, with the derived statistics.
struct Spectrum {
    u64 p = 0;
    std::vector<u64> counts;      // size p; counts[λ] = J(p;λ), counts[0] unused
    u64 image_size = 0;           // #{λ : J(p;λ) > 0}
    u64 second_moment = 0;        // I(p) = Σ J(p;λ)^2 = #{(x,y) : x^x ≡ y^y}
    std::map<u64, u64> by_order;  // t -> Σ_{ord λ = t} J(p;λ)
};

// One pass over x = 1..p-1 (parallelizable; the histogram is a sum of
// integers, so worker count never changes the result).
Spectrum xx_spectrum(const PrimeContext& ctx, u64 cap = kDefaultSpectrumCap,
                     int threads = 1);

// J(p;λ) by direct scan; O(p) time, O(1) memory (no spectrum cap).
u64 count_J(const PrimeContext& ctx, u64 lambda);

enum class StratAlgorithm { via_spectrum, via_x_scan };

// Σ_{ord λ = t} J(p;λ): either from the spectrum's per-order aggregate or
// by scanning x and testing that x^x has order exactly t.
u64 order_stratified_sum(const PrimeContext& ctx, u64 t, StratAlgorithm alg,
                         u64 spectrum_cap = kDefaultSpectrumCap);

enum class CountAlgorithm { direct_scan, subgroup_walk };

// J_d: solutions of z^d ≡ (d^d)* (mod p) with z <= (p-1)/d.
u64 count_Jd(const PrimeContext& ctx, u64 d, CountAlgorithm alg);

// T_d: solutions of z^{dt} ≡ (d^{dt})* (mod p) with z <= (p-1)/d,
// for t | p-1 and d | (p-1)/t.
u64 count_Td(const PrimeContext& ctx, u64 d, u64 t, CountAlgorithm alg);

// Per-divisor decomposition rows. For t = 1 the pair is (J'_d, J_d).
struct DecompositionRow {
    u64 d;
    u64 primary_count;  // J'_d for t = 1
    u64 bound_count;    // J_d (or T_d for general t)
};

struct DecompositionTable {
    u64 p = 0;
    u64 t = 1;
    std::vector<DecompositionRow> rows;  // one per divisor, ascending d
};

// Scans x = 1..p-1, classifying solutions of x^x ≡ 1 by d = gcd(x, p-1),
// and fills the J_d bound column. Verifies Σ J'_d = J(p;1) and
// J'_d <= J_d rowwise (violation would be an implementation bug).
DecompositionTable gcd_class_counts(const PrimeContext& ctx,
                                    u64 cap = kDefaultSpectrumCap);

enum class RootAlgorithm { auto_select, scan, root_enumeration };

struct PowerCountCurve {
    int k;
    double value;  // (1 + M/p^(1/k)) · n^(1/k)
};

struct PowerCount {
    u64 count = 0;
    std::vector<PowerCountCurve> curves;
};

inline constexpr int kDefaultMomentKs[] = {2, 3};

// #{x : x^n ≡ λ (mod p), 1 <= x <= M}, with the comparison curve per k.
// scan iterates x <= M; root_enumeration walks λ's root coset x0·H_c
// with c = gcd(n, p-1) (one discrete log plus the subgroup walk).
PowerCount count_power_congruence(const PrimeContext& ctx, u64 n, u64 lambda,
                                  u64 M,
                                  RootAlgorithm alg = RootAlgorithm::auto_select,
                                  std::vector<int> ks = {2, 3});

}  // namespace selfpow
