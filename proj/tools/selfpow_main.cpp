// selfpow: exact counting laboratory for the congruence x^x ≡ λ (mod p).
//
// Subcommands:
//   solve    J(p;λ) for one λ, or the full spectrum of one prime
//   sweep    tasks over a prime range, CSV per task plus a JSON manifest
//   expsum   max |S(a, H_d)| rows for one prime
//   report   observed-vs-bound rows for one prime
//   verify   self-verification suites (quick | full)
//
// Exit codes: 0 ok, 1 verification failure / internal check, 2 domain
// error, 3 cap exceeded, 4 unwritable output.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfpow/emit.hpp"
#include "selfpow/errors.hpp"
#include "selfpow/reports.hpp"
#include "selfpow/verify.hpp"
#include "selfpow/version.hpp"

namespace {

using namespace selfpow;

void write_output(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw io_error("cannot open for writing: " + out_path);
    f << text;
    if (!f)
        throw io_error("write failed: " + out_path);
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

struct CommonOpts {
    int threads = 0;  // 0 = hardware
    u64 seed = 1;
    u64 cap_spectrum = kDefaultSpectrumCap;
    u64 cap_expsum_work = kDefaultExpsumWorkCap;
    u64 sample_a = 1000;
    std::string out;
};

int run_solve(u64 p, std::optional<u64> lambda, const std::string& format,
              const CommonOpts& common)
{
    PrimeContext ctx = make_context(p);
    std::string text = format == "json"
                           ? emit::solve_json(ctx, lambda, common.cap_spectrum)
                           : emit::solve_csv(ctx, lambda, common.cap_spectrum);
    write_output(text, common.out);
    return 0;
}

int run_sweep(u64 p_min, u64 p_max, const std::string& primes_csv,
              const std::string& tasks_csv, const CommonOpts& common,
              const std::string& command_line)
{
    emit::SweepConfig cfg;
    cfg.tasks = split_commas(tasks_csv);
    cfg.threads = common.threads;
    cfg.seed = common.seed;
    cfg.sample_count = common.sample_a;
    cfg.spectrum_cap = common.cap_spectrum;
    cfg.expsum_work_cap = common.cap_expsum_work;
    cfg.command_line = command_line;

    if (!primes_csv.empty()) {
        for (const auto& tok : split_commas(primes_csv))
            cfg.primes.push_back(std::stoull(tok));
        std::sort(cfg.primes.begin(), cfg.primes.end());
        cfg.explicit_prime_list = true;
    } else {
        if (p_max < p_min)
            throw std::domain_error("sweep: --p-max must be >= --p-min");
        cfg.primes = primes_in_range(std::max<u64>(p_min, 3), p_max);
    }
    emit::write_sweep_files(cfg, common.out);
    return 0;
}

int run_expsum(u64 p, std::optional<u64> d, bool force_sampled,
               const CommonOpts& common)
{
    PrimeContext ctx = make_context(p);
    MaxSumOptions opt;
    opt.sample_count = common.sample_a;
    opt.seed = common.seed;
    opt.work_cap = common.cap_expsum_work;
    opt.threads = common.threads;
    // per-d mode: exhaustive when the work fits the cap
    std::string csv = emit::task_header("EXPSUM") + "\n";
    std::vector<u64> ds = d ? std::vector<u64>{*d} : ctx.divisors;
    for (u64 dv : ds) {
        opt.mode = (!force_sampled && u128(p - 1) * dv <= opt.work_cap)
                       ? MaxSumMode::exhaustive
                       : MaxSumMode::sampled;
        Subgroup h = subgroup_elements(dv, ctx);
        SubgroupSumStat stat = max_subgroup_sum(h, ctx, opt);
        BoundCurves curves = bound_curves(p, dv);
        csv += std::to_string(stat.p) + "," + std::to_string(stat.d) + "," +
               emit::format_double(stat.max_magnitude) + "," +
               std::to_string(stat.a_max) + "," + (stat.exact ? "1" : "0") + "," +
               emit::format_double(curves.classical) + "," +
               emit::format_double(curves.shteinikov) + "," +
               (curves.shteinikov_in_range ? "1" : "0") + "," +
               emit::format_double(curves.shkredov) + "," +
               (curves.shkredov_in_range ? "1" : "0") + "\n";
    }
    write_output(csv, common.out);
    return 0;
}

std::string params_cell(const std::optional<u64>& v)
{
    return v ? std::to_string(*v) : "";
}

int run_report(u64 p, const std::string& tasks_csv, std::optional<u64> t_opt,
               std::optional<u64> n_opt, std::optional<u64> m_opt, u64 lambda,
               const CommonOpts& common)
{
    PrimeContext ctx = make_context(p);
    ReportOptions ropt;
    ropt.spectrum_cap = common.cap_spectrum;
    ropt.threads = common.threads;

    std::vector<BoundReportRow> rows;
    for (const auto& task : split_commas(tasks_csv)) {
        if (task == "T1") {
            TheoremQuery q;
            q.kind = TheoremQuery::Kind::J1;
            auto r = theorem_report(ctx, q, ropt);
            rows.insert(rows.end(), r.begin(), r.end());
        } else if (task == "T2") {
            std::vector<u64> ts = t_opt ? std::vector<u64>{*t_opt} : ctx.divisors;
            for (u64 t : ts) {
                TheoremQuery q;
                q.kind = TheoremQuery::Kind::OrderSum;
                q.t = t;
                auto r = theorem_report(ctx, q, ropt);
                rows.insert(rows.end(), r.begin(), r.end());
            }
        } else if (task == "T3") {
            TheoremQuery q;
            q.kind = TheoremQuery::Kind::PairCount;
            auto r = theorem_report(ctx, q, ropt);
            rows.insert(rows.end(), r.begin(), r.end());
        } else if (task == "LEMMA1") {
            if (!n_opt || !m_opt)
                throw std::domain_error("report LEMMA1 needs --n and --M");
            TheoremQuery q;
            q.kind = TheoremQuery::Kind::PowerMoment;
            q.n = *n_opt;
            q.M = *m_opt;
            q.lambda = lambda;
            auto r = theorem_report(ctx, q, ropt);
            rows.insert(rows.end(), r.begin(), r.end());
        } else if (task == "L1SUM") {
            TheoremQuery q;
            q.kind = TheoremQuery::Kind::IntervalL1;
            q.U = 1;
            q.V = i64(m_opt ? *m_opt : (p - 1) / 2);
            auto r = theorem_report(ctx, q, ropt);
            rows.insert(rows.end(), r.begin(), r.end());
        } else {
            throw std::domain_error("unknown report task: " + task);
        }
    }

    std::string csv =
        "p,quantity,t,d,n,M,k,U,V,observed,bound_name,bound_value,ratio,"
        "in_hypothesis\n";
    for (const auto& row : rows) {
        csv += std::to_string(row.p) + "," + row.quantity + "," +
               params_cell(row.params.t) + "," + params_cell(row.params.d) + "," +
               params_cell(row.params.n) + "," + params_cell(row.params.M) + "," +
               (row.params.k ? std::to_string(*row.params.k) : "") + "," +
               (row.params.U ? std::to_string(*row.params.U) : "") + "," +
               (row.params.V ? std::to_string(*row.params.V) : "") + "," +
               emit::format_double(row.observed) + "," + row.bound_name + "," +
               emit::format_double(row.bound_value) + "," +
               emit::format_double(row.ratio) + "," +
               (row.in_hypothesis ? "1" : "0") + "\n";
    }
    write_output(csv, common.out);
    return 0;
}

int run_verify(const std::string& level, const CommonOpts& common)
{
    verify::Options opt;
    opt.level = level == "full" ? verify::Level::full : verify::Level::quick;
    opt.threads = common.threads;
    opt.seed = common.seed;

    auto results = verify::run_all_suites(opt);
    bool ok = true;
    for (const auto& suite : results) {
        std::string dots(std::max<int>(2, 44 - int(suite.name.size())), '.');
        if (suite.passed()) {
            std::cout << suite.name << " " << dots << " PASS (" << suite.checks
                      << " checks)\n";
        } else {
            ok = false;
            std::cout << suite.name << " " << dots << " FAIL (" << suite.checks
                      << " checks, " << suite.violations.size() << " violations)\n";
            for (const auto& v : suite.violations)
                std::cout << "    " << v << "\n";
        }
    }
    std::cout << (ok ? "all suites passed\n" : "VERIFICATION FAILED\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        if (i)
            command_line += ' ';
        command_line += argv[i];
    }

    CLI::App app{"exact counting laboratory for x^x ≡ λ (mod p)"};
    app.set_version_flag("--version", std::string(selfpow::kVersion));
    app.require_subcommand(1);

    CommonOpts common;
    u64 p = 0;
    std::optional<u64> lambda_opt, d_opt, t_opt, n_opt, m_opt;
    u64 lambda_val = 1;
    bool all_lambda = false, force_sampled = false;
    std::string format = "csv", tasks, primes_csv, level = "quick";
    u64 p_min = 3, p_max = 0;

    auto add_common = [&common](CLI::App* cmd, bool with_out = true) {
        cmd->add_option("--threads", common.threads, "worker threads (0 = auto)");
        cmd->add_option("--seed", common.seed, "seed for sampled modes");
        cmd->add_option("--cap-spectrum", common.cap_spectrum,
                        "largest p for spectrum construction");
        cmd->add_option("--cap-expsum-work", common.cap_expsum_work,
                        "elementary-operation cap for exhaustive max");
        cmd->add_option("--sample-a", common.sample_a,
                        "random a draws in sampled mode");
        if (with_out)
            cmd->add_option("--out", common.out, "output file or directory");
    };

    CLI::App* solve = app.add_subcommand("solve", "J(p;λ) or the full spectrum");
    solve->add_option("--p", p, "prime modulus")->required();
    auto* lam = solve->add_option("--lambda", lambda_val, "target residue");
    auto* all = solve->add_flag("--all-lambda", all_lambda, "emit every λ row");
    lam->excludes(all);
    solve->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_common(solve);

    CLI::App* sweep = app.add_subcommand("sweep", "tasks over a prime range");
    sweep->add_option("--p-min", p_min, "range start (primes only)");
    sweep->add_option("--p-max", p_max, "range end");
    sweep->add_option("--primes", primes_csv, "explicit comma-separated primes");
    sweep->add_option("--tasks", tasks, "comma list: T1,T2,T3,EXPSUM,IMAGE,DECOMP")
        ->required();
    add_common(sweep, false);
    sweep->add_option("--out", common.out, "output directory")->required();

    CLI::App* expsum = app.add_subcommand("expsum", "max |S(a, H_d)| rows");
    expsum->add_option("--p", p, "prime modulus")->required();
    expsum->add_option("--d", d_opt, "subgroup order (default: all d | p-1)");
    expsum->add_flag("--sampled", force_sampled, "force sampled mode");
    add_common(expsum);

    CLI::App* report = app.add_subcommand("report", "observed vs bound rows");
    report->add_option("--p", p, "prime modulus")->required();
    report->add_option("--tasks", tasks, "comma list: T1,T2,T3,LEMMA1,L1SUM");
    report->add_option("--t", t_opt, "order for T2 (default: all t | p-1)");
    report->add_option("--n", n_opt, "exponent for LEMMA1");
    report->add_option("--M", m_opt, "range bound for LEMMA1 / V for L1SUM");
    report->add_option("--lambda", lambda_val, "target residue for LEMMA1");
    add_common(report);

    CLI::App* verify_cmd = app.add_subcommand("verify", "self-verification suites");
    verify_cmd->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    add_common(verify_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (lam->count())
                lambda_opt = lambda_val;
            if (!all_lambda && !lambda_opt)
                throw std::domain_error("solve: give --lambda or --all-lambda");
            return run_solve(p, all_lambda ? std::nullopt : lambda_opt, format,
                             common);
        }
        if (sweep->parsed())
            return run_sweep(p_min, p_max, primes_csv, tasks, common, command_line);
        if (expsum->parsed())
            return run_expsum(p, d_opt, force_sampled, common);
        if (report->parsed()) {
            if (tasks.empty())
                tasks = "T1,T2,T3";
            return run_report(p, tasks, t_opt, n_opt, m_opt, lambda_val, common);
        }
        if (verify_cmd->parsed())
            return run_verify(level, common);
    } catch (const selfpow::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const selfpow::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
