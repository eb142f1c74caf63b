#pragma once

// Self-verification suites: every exact identity and unconditional
// inequality in the library, runnable at two scales. Used by the CLI
// `verify` subcommand; the counting suites accept injectable counters so
// tests can prove that violations are detected and reported.

#include <functional>
#include <string>
#include <vector>

#include "selfpow/congruence.hpp"

namespace selfpow::verify {

enum class Level { quick, full };

struct SuiteResult {
    std::string name;
    u64 checks = 0;
    std::vector<std::string> violations;  // "(p=.., d=.., expected .., got ..)"
    bool passed() const { return violations.empty(); }
};

struct Options {
    Level level = Level::quick;
    int threads = 1;
    u64 seed = 1;
};

// All primes in [3, dense_limit], plus `extra` primes at evenly spaced
// index positions in (dense_limit, hi]. Deterministic.
std::vector<u64> sampled_prime_list(u64 dense_limit, u64 hi, std::size_t extra);

// Repeated-multiplication oracle, independent of pow_mod's ladder.
u64 naive_pow_mod(u64 base, u64 exponent, u64 p);

using JdCounter = std::function<u64(const PrimeContext&, u64, CountAlgorithm)>;
using TdCounter = std::function<u64(const PrimeContext&, u64, u64, CountAlgorithm)>;

SuiteResult suite_selfpower_oracle(Level level, int threads);
SuiteResult suite_inverse_involution(Level level);
SuiteResult suite_subgroup_solutions(Level level, int threads);
SuiteResult suite_discrete_log(Level level, u64 seed);
SuiteResult suite_order_gcd_lemma(Level level, int threads);
SuiteResult suite_dual_algorithms(Level level, int threads, JdCounter jd = {},
                                  TdCounter td = {});
SuiteResult suite_gcd_decomposition(Level level, int threads);
SuiteResult suite_order_sum_chain(Level level, int threads);
SuiteResult suite_pair_count_oracle(Level level, int threads);
SuiteResult suite_image_size(Level level, int threads);
SuiteResult suite_root_count_bound(Level level, int threads);
SuiteResult suite_spectrum_mass(Level level, int threads);
SuiteResult suite_gauss_parseval(Level level, int threads);
SuiteResult suite_expsum_symmetry(Level level, int threads);
SuiteResult suite_interval_l1(Level level, u64 seed, int threads);
SuiteResult suite_report_plumbing(Level level);

std::vector<SuiteResult> run_all_suites(const Options& options);

}  // namespace selfpow::verify
