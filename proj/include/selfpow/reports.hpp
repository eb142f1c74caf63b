#pragma once

// Bound evaluation and comparison: observed exact counts vs the curve
// values, plus least-squares exponent fits over prime sweeps.

#include <optional>
#include <string>
#include <vector>

#include "selfpow/congruence.hpp"
#include "selfpow/expsum.hpp"

namespace selfpow {

struct ReportParams {
    std::optional<u64> t, d, n, M, lambda;
    std::optional<int> k;
    std::optional<i64> U, V;
};

struct BoundReportRow {
    u64 p = 0;
    std::string quantity;  // J1, ORDER_SUM_T, I, JD, TD, LEMMA1, EXPSUM_MAX, L1SUM
    ReportParams params;
    double observed = 0;
    std::string bound_name;
    double bound_value = 0;
    double ratio = 0;  // observed / bound_value
    bool in_hypothesis = true;
    bool observed_exact = true;  // false when the observation is a sampled lower bound
};

struct TheoremQuery {
    enum class Kind { J1, OrderSum, PairCount, PowerMoment, IntervalL1 };
    Kind kind = Kind::J1;
    u64 t = 0;                    // OrderSum
    u64 n = 0, M = 0, lambda = 1; // PowerMoment
    i64 U = 0, V = 0;             // IntervalL1
};

struct ReportOptions {
    u64 spectrum_cap = kDefaultSpectrumCap;
    int threads = 1;
};

// Observed quantity (exact) next to every applicable bound curve.
// No pass/fail is attached: each curve hides a p^(o(1)) factor.
std::vector<BoundReportRow> theorem_report(const PrimeContext& ctx,
                                           const TheoremQuery& query,
                                           const ReportOptions& options = {});

// One row per exponential-sum bound curve for the subgroup of order d.
std::vector<BoundReportRow> expsum_report(const PrimeContext& ctx, u64 d,
                                          const MaxSumOptions& options = {});

struct ExponentFit {
    double slope = 0;
    double intercept = 0;   // of log(value) vs log(p)
    double r2 = 0;
    std::size_t used_points = 0;
    std::size_t excluded_points = 0;  // points with value <= 0
};

// Ordinary least squares on (ln p, ln value); needs two usable points.
ExponentFit exponent_fit(const std::vector<std::pair<u64, double>>& points);

}  // namespace selfpow
