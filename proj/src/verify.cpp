#include "selfpow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "selfpow/expsum.hpp"
#include "selfpow/parallel.hpp"
#include "selfpow/reports.hpp"

namespace selfpow::verify {

namespace {

constexpr std::size_t kMaxReportedViolations = 25;

// Accumulates checks/violations from per-prime workers in slot order, so
// the report is identical for any worker count.
struct SuiteRunner {
    explicit SuiteRunner(std::string name) { result.name = std::move(name); }

    template <typename Fn>
    void for_each_prime(const std::vector<u64>& primes, int threads, Fn&& fn)
    {
        std::vector<u64> checks(primes.size(), 0);
        std::vector<std::vector<std::string>> viols(primes.size());
        parallel_items(primes.size(), threads, [&](std::size_t i) {
            fn(primes[i], checks[i], viols[i]);
        });
        for (std::size_t i = 0; i < primes.size(); ++i) {
            result.checks += checks[i];
            for (auto& v : viols[i])
                if (result.violations.size() < kMaxReportedViolations)
                    result.violations.push_back(std::move(v));
        }
    }

    SuiteResult result;
};

std::string fail_str(u64 p, const std::string& where, u64 expected, u64 got)
{
    return "p=" + std::to_string(p) + " " + where +
           ": expected " + std::to_string(expected) + ", got " + std::to_string(got);
}

}  // namespace

std::vector<u64> sampled_prime_list(u64 dense_limit, u64 hi, std::size_t extra)
{
    std::vector<u64> list;
    for (u64 p : primes_up_to(dense_limit))
        if (p >= 3)
            list.push_back(p);
    if (hi > dense_limit && extra > 0) {
        std::vector<u64> rest = primes_in_range(dense_limit + 1, hi);
        if (rest.size() <= extra) {
            list.insert(list.end(), rest.begin(), rest.end());
        } else {
            for (std::size_t i = 0; i < extra; ++i)
                list.push_back(rest[i * (rest.size() - 1) / (extra - 1)]);
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }
    return list;
}

u64 naive_pow_mod(u64 base, u64 exponent, u64 p)
{
    u64 r = 1 % p;
    base %= p;
    for (u64 i = 0; i < exponent; ++i)
        r = u64((u128(r) * base) % p);
    return r;
}

SuiteResult suite_selfpower_oracle(Level level, int threads)
{
    SuiteRunner runner("modmath/self-power-oracle");
    u64 limit = level == Level::quick ? 500 : 10'000;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        for (u64 x = 1; x < p; ++x) {
            u64 expected = naive_pow_mod(x, x, p);
            u64 got = self_power(x, p);
            ++checks;
            if (got != expected)
                viols.push_back(fail_str(p, "x=" + std::to_string(x), expected, got));
        }
        if (p > 2 && self_power(p - 1, p) != 1)
            viols.push_back(fail_str(p, "self_power(p-1)", 1, self_power(p - 1, p)));
        ++checks;
    });
    return runner.result;
}

SuiteResult suite_inverse_involution(Level level)
{
    SuiteRunner runner("modmath/inverse-involution");
    u64 limit = level == Level::quick ? 200 : 1000;
    for (u64 p : sampled_prime_list(limit, limit, 0)) {
        for (u64 m = 1; m < p; ++m) {
            u64 inv = inv_mod(m, p);
            ++runner.result.checks;
            if (mul_mod(m, inv, p) != 1 || inv_mod(inv, p) != m) {
                runner.result.violations.push_back(
                    fail_str(p, "inv_mod(" + std::to_string(m) + ")", m, inv_mod(inv, p)));
                if (runner.result.violations.size() >= kMaxReportedViolations)
                    return runner.result;
            }
        }
    }
    return runner.result;
}

SuiteResult suite_subgroup_solutions(Level level, int threads)
{
    SuiteRunner runner("numtheory/subgroup-solutions");
    u64 limit = level == Level::quick ? 300 : 2000;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        MontMul mont(p);
        for (u64 d : ctx.divisors) {
            Subgroup h = subgroup_elements(d, ctx);
            // full scan over [1, p): solutions of h^d ≡ 1 must be exactly h
            std::vector<u64> scan;
            for (u64 a = 1; a < p; ++a)
                if (mont.pow(a, d) == 1)
                    scan.push_back(a);
            ++checks;
            if (scan != h.elements)
                viols.push_back(fail_str(p, "subgroup d=" + std::to_string(d), d,
                                         u64(scan.size())));
        }
    });
    return runner.result;
}

SuiteResult suite_discrete_log(Level level, u64 seed)
{
    SuiteRunner runner("numtheory/discrete-log");
    // smooth and non-smooth p-1 cases on both scales
    std::vector<u64> primes =
        level == Level::quick
            ? std::vector<u64>{1009, 65537, 1'000'003}
            : std::vector<u64>{1009, 65537, 1'000'003, 999'999'937, 1'000'000'007,
                               3'221'225'473ULL};
    u64 draws = level == Level::quick ? 100 : 1000;
    for (u64 p : primes) {
        PrimeContext ctx = make_context(p);
        std::mt19937_64 rng(seed ^ p);
        std::uniform_int_distribution<u64> dist(1, p - 1);
        for (u64 i = 0; i < draws; ++i) {
            u64 a = dist(rng);
            u64 k = discrete_log(a, ctx);
            ++runner.result.checks;
            if (pow_mod(ctx.g, k, p) != a) {
                runner.result.violations.push_back(
                    fail_str(p, "dlog(" + std::to_string(a) + ")", a, pow_mod(ctx.g, k, p)));
                if (runner.result.violations.size() >= kMaxReportedViolations)
                    return runner.result;
            }
        }
    }
    // ord(a) = (p-1)/gcd(ind a, p-1) exhaustively at small scale
    u64 limit = level == Level::quick ? 100 : 500;
    for (u64 p : sampled_prime_list(limit, limit, 0)) {
        PrimeContext ctx = make_context(p);
        for (u64 a = 1; a < p; ++a) {
            u64 expected = (p - 1) / std::gcd(discrete_log(a, ctx), p - 1);
            u64 got = multiplicative_order(a, ctx);
            ++runner.result.checks;
            if (got != expected) {
                runner.result.violations.push_back(
                    fail_str(p, "ord(" + std::to_string(a) + ")", expected, got));
                if (runner.result.violations.size() >= kMaxReportedViolations)
                    return runner.result;
            }
        }
    }
    return runner.result;
}

SuiteResult suite_order_gcd_lemma(Level level, int threads)
{
    SuiteRunner runner("numtheory/order-gcd-lemma");
    u64 limit = level == Level::quick ? 100 : 300;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        MontMul mont(p);
        // a^x ≡ 1 implies a^gcd(x, p-1) ≡ 1, exhaustively over (a, x)
        for (u64 x = 1; x < p; ++x) {
            for (u64 a = 1; a < p; ++a) {
                if (mont.pow(a, x) != 1)
                    continue;
                ++checks;
                u64 d = std::gcd(x, p - 1);
                if (mont.pow(a, d) != 1)
                    viols.push_back(fail_str(
                        p, "a=" + std::to_string(a) + " x=" + std::to_string(x), 1,
                        mont.pow(a, d)));
            }
        }
    });
    return runner.result;
}

SuiteResult suite_dual_algorithms(Level level, int threads, JdCounter jd, TdCounter td)
{
    if (!jd)
        jd = [](const PrimeContext& c, u64 d, CountAlgorithm a) { return count_Jd(c, d, a); };
    if (!td)
        td = [](const PrimeContext& c, u64 d, u64 t, CountAlgorithm a) {
            return count_Td(c, d, t, a);
        };

    SuiteRunner runner("congruence/dual-algorithms");
    std::vector<u64> primes =
        level == Level::quick ? sampled_prime_list(500, 500, 0)
                              : sampled_prime_list(2000, 100'000, 120);
    runner.for_each_prime(primes, threads, [&](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        for (u64 d : ctx.divisors) {
            u64 direct = jd(ctx, d, CountAlgorithm::direct_scan);
            u64 walk = jd(ctx, d, CountAlgorithm::subgroup_walk);
            ++checks;
            if (direct != walk)
                viols.push_back(fail_str(p, "J_d d=" + std::to_string(d), direct, walk));
        }
        // T_d over every valid (t, d) pair at the smaller scale
        if (p <= 10'000) {
            for (u64 t : ctx.divisors) {
                u64 m = (p - 1) / t;
                for (u64 d : ctx.divisors) {
                    if (m % d != 0)
                        continue;
                    u64 direct = td(ctx, d, t, CountAlgorithm::direct_scan);
                    u64 walk = td(ctx, d, t, CountAlgorithm::subgroup_walk);
                    ++checks;
                    if (direct != walk)
                        viols.push_back(fail_str(p,
                                                 "T_d d=" + std::to_string(d) +
                                                     " t=" + std::to_string(t),
                                                 direct, walk));
                }
            }
        }
    });
    return runner.result;
}

SuiteResult suite_gcd_decomposition(Level level, int threads)
{
    SuiteRunner runner("congruence/gcd-decomposition");
    std::vector<u64> primes =
        level == Level::quick ? sampled_prime_list(500, 500, 0)
                              : sampled_prime_list(2000, 100'000, 250);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        DecompositionTable table = gcd_class_counts(ctx);
        u64 j1 = count_J(ctx, 1);
        u64 sum = 0;
        for (const auto& row : table.rows) {
            sum += row.primary_count;
            ++checks;
            if (row.primary_count > row.bound_count)
                viols.push_back(fail_str(p, "J'_d <= J_d at d=" + std::to_string(row.d),
                                         row.bound_count, row.primary_count));
        }
        ++checks;
        if (sum != j1)
            viols.push_back(fail_str(p, "sum J'_d", j1, sum));
    });
    return runner.result;
}

SuiteResult suite_order_sum_chain(Level level, int threads)
{
    SuiteRunner runner("congruence/order-sum-chain");
    u64 limit = level == Level::quick ? 300 : 10'000;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        Spectrum s = xx_spectrum(ctx);
        for (u64 t : ctx.divisors) {
            auto it = s.by_order.find(t);
            u64 via_spec = it == s.by_order.end() ? 0 : it->second;
            u64 via_scan = order_stratified_sum(ctx, t, StratAlgorithm::via_x_scan);
            ++checks;
            if (via_spec != via_scan) {
                viols.push_back(fail_str(p, "order sum t=" + std::to_string(t),
                                         via_spec, via_scan));
                continue;
            }
            u64 td_sum = 0;
            u64 m = (p - 1) / t;
            for (u64 d : ctx.divisors)
                if (m % d == 0)
                    td_sum += count_Td(ctx, d, t,
                                       d * d <= p ? CountAlgorithm::subgroup_walk
                                                  : CountAlgorithm::direct_scan);
            ++checks;
            if (via_scan > td_sum)
                viols.push_back(fail_str(p, "sum T_d >= order sum, t=" + std::to_string(t),
                                         via_scan, td_sum));
        }
    });
    return runner.result;
}

SuiteResult suite_pair_count_oracle(Level level, int threads)
{
    SuiteRunner runner("congruence/pair-count-oracle");
    u64 limit = level == Level::quick ? 200 : 500;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        Spectrum s = xx_spectrum(ctx);
        // O(p^2) pairwise oracle on naive self-powers
        std::vector<u64> values(p);
        for (u64 x = 1; x < p; ++x)
            values[x] = naive_pow_mod(x, x, p);
        u64 pairs = 0;
        for (u64 x = 1; x < p; ++x)
            for (u64 y = 1; y < p; ++y)
                if (values[x] == values[y])
                    ++pairs;
        ++checks;
        if (pairs != s.second_moment)
            viols.push_back(fail_str(p, "I(p)", pairs, s.second_moment));
    });
    return runner.result;
}

SuiteResult suite_image_size(Level level, int threads)
{
    SuiteRunner runner("congruence/image-size");
    std::vector<u64> primes =
        level == Level::quick ? sampled_prime_list(500, 500, 0)
                              : sampled_prime_list(2000, 100'000, 250);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        Spectrum s = xx_spectrum(make_context(p));
        ++checks;
        if (s.image_size < (p - 1) / 2)
            viols.push_back(fail_str(p, "image size >= floor((p-1)/2)", (p - 1) / 2,
                                     s.image_size));
    });
    return runner.result;
}

SuiteResult suite_root_count_bound(Level level, int threads)
{
    SuiteRunner runner("congruence/root-count-bound");
    u64 limit = level == Level::quick ? 100 : 300;
    u64 n_max = level == Level::quick ? 20 : 50;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [n_max](u64 p, u64& checks, auto& viols) {
        MontMul mont(p);
        for (u64 n = 1; n <= n_max; ++n) {
            std::vector<u64> count(p, 0);
            for (u64 x = 1; x <= p; ++x)
                ++count[mont.pow(x % p, n)];
            u64 bound = std::gcd(n, p - 1);
            for (u64 mu = 1; mu < p; ++mu) {
                ++checks;
                if (count[mu] > bound)
                    viols.push_back(fail_str(p,
                                             "roots of x^" + std::to_string(n) + "=" +
                                                 std::to_string(mu),
                                             bound, count[mu]));
            }
        }
    });
    return runner.result;
}

SuiteResult suite_spectrum_mass(Level level, int threads)
{
    SuiteRunner runner("congruence/spectrum-mass");
    std::vector<u64> primes =
        level == Level::quick ? sampled_prime_list(2000, 2000, 0)
                              : sampled_prime_list(2000, 100'000, 250);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        Spectrum s = xx_spectrum(ctx);
        u64 mass = 0;
        for (u64 lam = 1; lam < p; ++lam)
            mass += s.counts[lam];
        ++checks;
        if (mass != p - 1)
            viols.push_back(fail_str(p, "sum J(p;.)", p - 1, mass));
        u64 order_mass = 0;
        for (const auto& [t, v] : s.by_order) {
            order_mass += v;
            if ((p - 1) % t != 0)
                viols.push_back(fail_str(p, "by_order key " + std::to_string(t), 0, t));
        }
        ++checks;
        if (order_mass != p - 1)
            viols.push_back(fail_str(p, "sum by_order", p - 1, order_mass));
        ++checks;
        if (s.counts[1] < 2 && p > 2)
            viols.push_back(fail_str(p, "J(p;1) >= 2", 2, s.counts[1]));
    });
    return runner.result;
}

SuiteResult suite_gauss_parseval(Level level, int threads)
{
    SuiteRunner runner("expsum/gauss-parseval");
    u64 limit = level == Level::quick ? 300 : 2000;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        for (u64 d : ctx.divisors) {
            Subgroup h = subgroup_elements(d, ctx);
            MaxSumOptions opt;
            opt.threads = 1;
            SubgroupSumStat stat = max_subgroup_sum(h, ctx, opt);
            ++checks;
            if (stat.max_magnitude > std::sqrt(double(p)) + 1e-6)
                viols.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                ": |S| = " + std::to_string(stat.max_magnitude) +
                                " exceeds sqrt(p)");
            double total = parseval_total(h, ctx);
            double expected = double(p) * double(d);
            ++checks;
            if (std::abs(total - expected) > 1e-9 * expected)
                viols.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                ": parseval " + std::to_string(total) + " != " +
                                std::to_string(expected));
        }
    });
    return runner.result;
}

SuiteResult suite_expsum_symmetry(Level level, int threads)
{
    SuiteRunner runner("expsum/symmetry");
    u64 limit = level == Level::quick ? 200 : 500;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [](u64 p, u64& checks, auto& viols) {
        PrimeContext ctx = make_context(p);
        for (u64 d : ctx.divisors) {
            Subgroup h = subgroup_elements(d, ctx);
            u64 h0 = pow_mod(ctx.g, (p - 1) / d, p);  // generates H_d
            for (u64 a = 1; a < p; ++a) {
                double sa = subgroup_sum(a, h, p).magnitude;
                double conj = subgroup_sum(p - a, h, p).magnitude;
                ++checks;
                if (std::abs(sa - conj) > 1e-9)
                    viols.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                    " a=" + std::to_string(a) + ": |S(a)| != |S(p-a)|");
                double coset = subgroup_sum(mul_mod(a, h0, p), h, p).magnitude;
                ++checks;
                if (std::abs(sa - coset) > 1e-9)
                    viols.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                    " a=" + std::to_string(a) + ": |S(a h0)| != |S(a)|");
            }
        }
    });
    return runner.result;
}

SuiteResult suite_interval_l1(Level level, u64 seed, int threads)
{
    SuiteRunner runner("expsum/interval-l1");
    u64 limit = level == Level::quick ? 500 : 10'000;
    u64 pairs = level == Level::quick ? 20 : 100;
    auto primes = sampled_prime_list(limit, limit, 0);
    runner.for_each_prime(primes, threads, [seed, pairs](u64 p, u64& checks, auto& viols) {
        IntervalL1Evaluator eval(p);
        std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ULL));
        std::uniform_int_distribution<i64> u_dist(-1'000'000, 1'000'000);
        std::uniform_int_distribution<i64> len_dist(0, 2'000'000);
        double bound = double(p) * (1.0 + std::log(double(p)));
        for (u64 i = 0; i < pairs; ++i) {
            i64 U = u_dist(rng);
            i64 V = U + len_dist(rng);
            IntervalL1 r = eval.eval(U, V);
            ++checks;
            if (r.value > bound)
                viols.push_back("p=" + std::to_string(p) + " U=" + std::to_string(U) +
                                " V=" + std::to_string(V) + ": L1 " +
                                std::to_string(r.value) + " exceeds p(1+ln p)");
        }
    });
    return runner.result;
}

SuiteResult suite_report_plumbing(Level level)
{
    (void)level;
    SuiteRunner runner("reports/plumbing");
    auto& res = runner.result;

    // exponent recovery on exact power-law data
    const std::vector<u64> ps = {101, 1009, 10007, 100003};
    for (double alpha : {0.0, 1.0 / 3.0, 27.0 / 82.0, 0.5, 23.0 / 12.0}) {
        std::vector<std::pair<u64, double>> pts;
        for (u64 p : ps)
            pts.emplace_back(p, std::pow(double(p), alpha));
        ExponentFit fit = exponent_fit(pts);
        ++res.checks;
        if (std::abs(fit.slope - alpha) > 1e-9)
            res.violations.push_back("exponent_fit alpha=" + std::to_string(alpha) +
                                     ": got slope " + std::to_string(fit.slope));
    }

    // ratio recomputation on a sample of theorem rows
    PrimeContext ctx = make_context(101);
    for (auto kind : {TheoremQuery::Kind::J1, TheoremQuery::Kind::PairCount}) {
        TheoremQuery q;
        q.kind = kind;
        for (const auto& row : theorem_report(ctx, q)) {
            ++res.checks;
            double recomputed = row.observed / row.bound_value;
            if (std::abs(recomputed - row.ratio) > 1e-12 * std::abs(row.ratio))
                res.violations.push_back("ratio drift in " + row.quantity);
        }
    }

    // hypothesis flags at integer boundaries
    struct Case {
        u64 p, d;
        bool sht, shk;
    };
    u64 p = 10007;
    u64 root = u64(std::sqrt(double(p)));  // 100; 100^2 = 10000 < p
    std::vector<Case> cases = {
        {p, root, true, true},       // d^2 = 10000 < p
        {p, root + 1, false, true},  // 101^2 = 10201 > p
        {p, 464, false, true},       // 464^3 < p^2
        {p, 465, false, false},      // 465^3 > p^2
    };
    for (const auto& c : cases) {
        BoundCurves curves = bound_curves(c.p, c.d);
        ++res.checks;
        if (curves.shteinikov_in_range != c.sht || curves.shkredov_in_range != c.shk)
            res.violations.push_back("hypothesis flag wrong at d=" + std::to_string(c.d));
    }
    return runner.result;
}

std::vector<SuiteResult> run_all_suites(const Options& options)
{
    const Level lv = options.level;
    const int th = options.threads;
    std::vector<SuiteResult> results;
    results.push_back(suite_selfpower_oracle(lv, th));
    results.push_back(suite_inverse_involution(lv));
    results.push_back(suite_subgroup_solutions(lv, th));
    results.push_back(suite_discrete_log(lv, options.seed));
    results.push_back(suite_order_gcd_lemma(lv, th));
    results.push_back(suite_dual_algorithms(lv, th));
    results.push_back(suite_gcd_decomposition(lv, th));
    results.push_back(suite_order_sum_chain(lv, th));
    results.push_back(suite_pair_count_oracle(lv, th));
    results.push_back(suite_image_size(lv, th));
    results.push_back(suite_root_count_bound(lv, th));
    results.push_back(suite_spectrum_mass(lv, th));
    results.push_back(suite_gauss_parseval(lv, th));
    results.push_back(suite_expsum_symmetry(lv, th));
    results.push_back(suite_interval_l1(lv, options.seed, th));
    results.push_back(suite_report_plumbing(lv));
    return results;
}

}  // namespace selfpow::verify
