#pragma once

// Exponential sums over subgroups of F_p*: S(a, H_d) = sum_{h in H_d} e_p(ah),
// their maxima over a, Parseval totals, the interval L1 sum, and the
// comparison bound curves.

#include <optional>
#include <vector>

#include "selfpow/curves.hpp"
#include "selfpow/numtheory.hpp"

namespace selfpow {

struct ComplexSum {
    double re = 0;
    double im = 0;
    double magnitude = 0;
};

// Compensated accumulation in ascending element order; deterministic.
ComplexSum subgroup_sum(u64 a, const Subgroup& h, u64 p);

enum class MaxSumMode { exhaustive, sampled };

inline constexpr u64 kDefaultExpsumWorkCap = 10'000'000'000ULL;

struct MaxSumOptions {
    MaxSumMode mode = MaxSumMode::exhaustive;
    u64 sample_count = 1000;  // random draws in sampled mode
    u64 seed = 1;
    u64 work_cap = kDefaultExpsumWorkCap;  // exhaustive: (p-1)*d elementary ops
    int threads = 1;
};

struct SubgroupSumStat {
    u64 p = 0;
    u64 d = 0;
    u64 a_max = 0;          // frequency attaining the maximum (smallest on ties)
    double max_magnitude = 0;
    double curve_classical = 0;    // sqrt(p)
    double curve_shteinikov = 0;   // p^(1/18) d^(101/126)
    double curve_shkredov = 0;     // p^(1/6) d^(1/2)
    bool exact = true;             // exhaustive (true) vs sampled lower bound
    u64 sample_size = 0;           // a-values evaluated when sampled
};

// Max of |S(a, H_d)| over a in [1, p-1]. Exhaustive mode scans every a
// (subject to the work cap); sampled mode evaluates {1..min(1000, p-1)}
// plus sample_count seeded random draws and reports a lower bound.
SubgroupSumStat max_subgroup_sum(const Subgroup& h, const PrimeContext& ctx,
                                 const MaxSumOptions& options = {});

// sum_{a=0}^{p-1} |S(a, H_d)|^2; equals p*d by orthogonality.
double parseval_total(const Subgroup& h, const PrimeContext& ctx);

struct IntervalL1 {
    double value = 0;            // sum_{a=1}^{p-1} |sum_{z=U}^{V} e_p(az)|
    double ratio_to_log_bound = 0;  // value / (p·(1 + ln p))
};

// Closed-form evaluator |sin(pi·aL/p)/sin(pi·a/p)| with a shared sine
// table, so sweeps over many (U, V) pairs reuse the per-p setup.
class IntervalL1Evaluator {
public:
    explicit IntervalL1Evaluator(u64 p);
    IntervalL1 eval(i64 U, i64 V) const;

private:
    u64 p_;
    std::vector<double> sin_table_;  // sin(pi k / p), k in [0, p)
};

// Single-shot form; V >= U and V - U < 2^31.
IntervalL1 interval_l1_sum(i64 U, i64 V, u64 p);

struct BoundCurves {
    double classical = 0;
    double shteinikov = 0;
    bool shteinikov_in_range = false;  // d < p^(1/2)
    double shkredov = 0;
    bool shkredov_in_range = false;    // d < p^(2/3)
    std::optional<double> order_sum;   // t + p^(1/2), when t given
    std::optional<double> fiber;       // p·t^(-1/12), when t given
};

BoundCurves bound_curves(u64 p, u64 d, std::optional<u64> t = std::nullopt);

}  // namespace selfpow
