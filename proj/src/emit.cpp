#include "selfpow/emit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "selfpow/errors.hpp"
#include "selfpow/parallel.hpp"
#include "selfpow/reports.hpp"
#include "selfpow/version.hpp"

namespace selfpow::emit {

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const std::vector<std::string> kSweepTasks = {"T1", "T2", "T3",
                                              "EXPSUM", "IMAGE", "DECOMP"};

bool is_sweep_task(const std::string& task)
{
    return std::find(kSweepTasks.begin(), kSweepTasks.end(), task) !=
           kSweepTasks.end();
}

std::string task_header(const std::string& task)
{
    if (task == "T1")
        return "p,J1,bound_27_82,ratio";
    if (task == "T2")
        return "p,t,sum,bound,ratio,in_range";
    if (task == "T3")
        return "p,I,bound_23_12,ratio";
    if (task == "EXPSUM")
        return "p,d,max_abs,a_max,exact,classical,shteinikov,in_hyp_sht,"
               "shkredov,in_hyp_shk";
    if (task == "IMAGE")
        return "p,image_size,lower_bound,upper_curve_3p4";
    if (task == "DECOMP")
        return "p,d,Jprime,Jd";
    throw std::domain_error("unknown sweep task: " + task);
}

namespace {

std::string expsum_row(const SubgroupSumStat& stat, const BoundCurves& curves)
{
    std::string row = std::to_string(stat.p) + "," + std::to_string(stat.d) + "," +
                      format_double(stat.max_magnitude) + "," +
                      std::to_string(stat.a_max) + "," +
                      (stat.exact ? "1" : "0") + "," +
                      format_double(curves.classical) + "," +
                      format_double(curves.shteinikov) + "," +
                      (curves.shteinikov_in_range ? "1" : "0") + "," +
                      format_double(curves.shkredov) + "," +
                      (curves.shkredov_in_range ? "1" : "0");
    return row;
}

// Rows of every requested task for one prime.
std::map<std::string, std::string> sweep_prime_rows(u64 p, const SweepConfig& cfg)
{
    PrimeContext ctx = make_context(p);
    const double pd = double(p);

    bool want_t1 = false, want_t2 = false, want_t3 = false;
    bool want_expsum = false, want_image = false, want_decomp = false;
    for (const auto& task : cfg.tasks) {
        want_t1 |= task == "T1";
        want_t2 |= task == "T2";
        want_t3 |= task == "T3";
        want_expsum |= task == "EXPSUM";
        want_image |= task == "IMAGE";
        want_decomp |= task == "DECOMP";
    }

    // One spectrum serves T1/T2/T3/IMAGE when p fits the cap; T1 and T2
    // have streaming fallbacks above it, T3/IMAGE genuinely need it.
    std::optional<Spectrum> spectrum;
    if ((want_t3 || want_image) ||
        ((want_t1 || want_t2) && p <= cfg.spectrum_cap))
        spectrum = xx_spectrum(ctx, cfg.spectrum_cap);

    std::map<std::string, std::string> out;

    if (want_t1) {
        u64 j1 = spectrum ? spectrum->counts[1] : count_J(ctx, 1);
        double bound = rpow(pd, kExpJ1Curve);
        out["T1"] = std::to_string(p) + "," + std::to_string(j1) + "," +
                    format_double(bound) + "," + format_double(double(j1) / bound) +
                    "\n";
    }
    if (want_t2) {
        std::string rows;
        for (u64 t : ctx.divisors) {
            u64 sum;
            if (spectrum) {
                auto it = spectrum->by_order.find(t);
                sum = it == spectrum->by_order.end() ? 0 : it->second;
            } else {
                sum = order_stratified_sum(ctx, t, StratAlgorithm::via_x_scan);
            }
            double bound = double(t) + rpow(pd, kExpOrderSumP) *
                                           rpow(double(t), kExpOrderSumT);
            rows += std::to_string(p) + "," + std::to_string(t) + "," +
                    std::to_string(sum) + "," + format_double(bound) + "," +
                    format_double(double(sum) / bound) + "," +
                    (below_cbrt(t, p) ? "1" : "0") + "\n";
        }
        out["T2"] = std::move(rows);
    }
    if (want_t3) {
        double bound = rpow(pd, kExpPairCountCurve);
        out["T3"] = std::to_string(p) + "," +
                    std::to_string(spectrum->second_moment) + "," +
                    format_double(bound) + "," +
                    format_double(double(spectrum->second_moment) / bound) + "\n";
    }
    if (want_expsum) {
        std::string rows;
        for (u64 d : ctx.divisors) {
            MaxSumOptions opt;
            opt.work_cap = cfg.expsum_work_cap;
            opt.sample_count = cfg.sample_count;
            opt.seed = cfg.seed;
            opt.mode = u128(p - 1) * d <= cfg.expsum_work_cap
                           ? MaxSumMode::exhaustive
                           : MaxSumMode::sampled;
            Subgroup h = subgroup_elements(d, ctx);
            SubgroupSumStat stat = max_subgroup_sum(h, ctx, opt);
            rows += expsum_row(stat, bound_curves(p, d)) + "\n";
        }
        out["EXPSUM"] = std::move(rows);
    }
    if (want_image) {
        double upper = 0.75 * pd + std::sqrt(pd);  // 3p/4 + p^(1/2+o(1)), o(1) -> 0
        out["IMAGE"] = std::to_string(p) + "," +
                       std::to_string(spectrum->image_size) + "," +
                       std::to_string((p - 1) / 2) + "," + format_double(upper) +
                       "\n";
    }
    if (want_decomp) {
        DecompositionTable table = gcd_class_counts(ctx, cfg.spectrum_cap);
        std::string rows;
        for (const auto& row : table.rows)
            rows += std::to_string(p) + "," + std::to_string(row.d) + "," +
                    std::to_string(row.primary_count) + "," +
                    std::to_string(row.bound_count) + "\n";
        out["DECOMP"] = std::move(rows);
    }
    return out;
}

std::string iso_timestamp_utc()
{
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config)
{
    for (const auto& task : config.tasks)
        if (!is_sweep_task(task))
            throw std::domain_error("unknown sweep task: " + task);
    if (config.tasks.empty())
        throw std::domain_error("sweep: tasks must be nonempty");

    // per-prime slots keep the output order independent of scheduling
    std::vector<std::map<std::string, std::string>> slots(config.primes.size());
    std::vector<std::exception_ptr> errors(config.primes.size());
    parallel_items(config.primes.size(), config.threads, [&](std::size_t i) {
        try {
            slots[i] = sweep_prime_rows(config.primes[i], config);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);

    SweepResult result;
    for (const auto& task : kSweepTasks) {
        if (std::find(config.tasks.begin(), config.tasks.end(), task) ==
            config.tasks.end())
            continue;
        std::string csv = task_header(task) + "\n";
        u64 rows = 0;
        for (const auto& slot : slots) {
            auto it = slot.find(task);
            if (it == slot.end())
                continue;
            csv += it->second;
            rows += u64(std::count(it->second.begin(), it->second.end(), '\n'));
        }
        result.csv_by_task[task] = std::move(csv);
        result.rows_by_task[task] = rows;
    }
    return result;
}

void write_sweep_files(const SweepConfig& config, const std::string& out_dir)
{
    namespace fs = std::filesystem;
    const std::string started = iso_timestamp_utc();

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir))
        throw io_error("output path is not a writable directory: " + out_dir);

    SweepResult result = run_sweep(config);

    for (const auto& [task, csv] : result.csv_by_task) {
        fs::path path = fs::path(out_dir) / (task + ".csv");
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw io_error("cannot open for writing: " + path.string());
        f << csv;
        if (!f)
            throw io_error("write failed: " + path.string());
    }

    nlohmann::ordered_json manifest;
    manifest["version"] = kVersion;
    manifest["command"] = config.command_line;
    manifest["seed"] = config.seed;
    manifest["caps"] = {{"spectrum", config.spectrum_cap},
                        {"expsum_work", config.expsum_work_cap}};
    if (config.explicit_prime_list || config.primes.size() <= 64) {
        manifest["primes"] = config.primes;
    } else {
        manifest["primes"] = {{"min", config.primes.front()},
                              {"max", config.primes.back()},
                              {"count", config.primes.size()}};
    }
    manifest["started"] = started;
    manifest["finished"] = iso_timestamp_utc();
    nlohmann::ordered_json suites;
    for (const auto& [task, rows] : result.rows_by_task)
        suites[task] = {{"status", "ok"}, {"rows", rows}};
    manifest["suites"] = suites;

    fs::path mpath = fs::path(out_dir) / "manifest.json";
    std::ofstream mf(mpath, std::ios::binary);
    if (!mf)
        throw io_error("cannot open for writing: " + mpath.string());
    mf << manifest.dump(2) << "\n";
}

std::string solve_csv(const PrimeContext& ctx, std::optional<u64> lambda,
                      u64 spectrum_cap)
{
    std::string csv = "p,lambda,J,ord_lambda\n";
    if (lambda) {
        u64 j = count_J(ctx, *lambda);
        csv += std::to_string(ctx.p) + "," + std::to_string(*lambda) + "," +
               std::to_string(j) + "," +
               std::to_string(multiplicative_order(*lambda, ctx)) + "\n";
    } else {
        Spectrum s = xx_spectrum(ctx, spectrum_cap);
        for (u64 lam = 1; lam < ctx.p; ++lam)
            csv += std::to_string(ctx.p) + "," + std::to_string(lam) + "," +
                   std::to_string(s.counts[lam]) + "," +
                   std::to_string(multiplicative_order(lam, ctx)) + "\n";
    }
    return csv;
}

std::string solve_json(const PrimeContext& ctx, std::optional<u64> lambda,
                       u64 spectrum_cap)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    auto push = [&](u64 lam, u64 j) {
        rows.push_back({{"p", ctx.p},
                        {"lambda", lam},
                        {"J", j},
                        {"ord_lambda", multiplicative_order(lam, ctx)}});
    };
    if (lambda) {
        push(*lambda, count_J(ctx, *lambda));
    } else {
        Spectrum s = xx_spectrum(ctx, spectrum_cap);
        for (u64 lam = 1; lam < ctx.p; ++lam)
            push(lam, s.counts[lam]);
    }
    return rows.dump(2) + "\n";
}

std::string expsum_csv(const PrimeContext& ctx, std::optional<u64> d,
                       const MaxSumOptions& options)
{
    std::string csv = task_header("EXPSUM") + "\n";
    std::vector<u64> ds;
    if (d)
        ds.push_back(*d);
    else
        ds = ctx.divisors;
    for (u64 dv : ds) {
        Subgroup h = subgroup_elements(dv, ctx);
        SubgroupSumStat stat = max_subgroup_sum(h, ctx, options);
        csv += expsum_row(stat, bound_curves(ctx.p, dv)) + "\n";
    }
    return csv;
}

}  // namespace selfpow::emit
