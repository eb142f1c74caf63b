#pragma once

// Deterministic CSV/JSON emission: fixed column orders, 12-significant-digit
// floats, '\n' line endings. Two runs of the same configuration produce
// byte-identical CSV bytes regardless of worker count.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfpow/congruence.hpp"
#include "selfpow/expsum.hpp"

namespace selfpow::emit {

std::string format_double(double x);

// Sweep task names and their fixed CSV headers.
extern const std::vector<std::string> kSweepTasks;  // T1 T2 T3 EXPSUM IMAGE DECOMP
bool is_sweep_task(const std::string& task);
std::string task_header(const std::string& task);

struct SweepConfig {
    std::vector<u64> primes;           // ascending
    std::vector<std::string> tasks;    // subset of kSweepTasks
    int threads = 1;
    u64 seed = 1;
    u64 sample_count = 1000;
    u64 spectrum_cap = kDefaultSpectrumCap;
    u64 expsum_work_cap = kDefaultExpsumWorkCap;
    std::string command_line;          // recorded in the manifest
    bool explicit_prime_list = false;  // manifest: list vs range
};

struct SweepResult {
    std::map<std::string, std::string> csv_by_task;  // header + rows, '\n' endings
    std::map<std::string, u64> rows_by_task;
};

SweepResult run_sweep(const SweepConfig& config);

// Runs the sweep and writes <out_dir>/<task>.csv plus <out_dir>/manifest.json.
// Creates out_dir if needed; throws io_error when the path is unwritable.
void write_sweep_files(const SweepConfig& config, const std::string& out_dir);

// solve emission: one λ or the full spectrum. CSV header p,lambda,J,ord_lambda.
std::string solve_csv(const PrimeContext& ctx, std::optional<u64> lambda,
                      u64 spectrum_cap);
std::string solve_json(const PrimeContext& ctx, std::optional<u64> lambda,
                       u64 spectrum_cap);

// EXPSUM-schema rows for one prime (all d | p-1 or a single d).
std::string expsum_csv(const PrimeContext& ctx, std::optional<u64> d,
                       const MaxSumOptions& options);

}  // namespace selfpow::emit
