#include <doctest.h>

#include "selfpow/verify.hpp"

using namespace selfpow;
using namespace selfpow::verify;

TEST_CASE("quick suites all pass")
{
    Options opt;
    opt.level = Level::quick;
    opt.threads = 2;
    for (const auto& suite : run_all_suites(opt)) {
        INFO(suite.name);
        CHECK(suite.passed());
        CHECK(suite.checks > 0);
    }
}

TEST_CASE("injected fault is detected and named")
{
    // off-by-one in the direct-scan J_d: the suite must fail and the report
    // must name a violating (p, d) pair
    JdCounter faulty = [](const PrimeContext& ctx, u64 d, CountAlgorithm alg) {
        u64 v = count_Jd(ctx, d, alg);
        if (alg == CountAlgorithm::direct_scan && ctx.p == 97 && d == 6)
            return v + 1;
        return v;
    };
    SuiteResult r = suite_dual_algorithms(Level::quick, 1, faulty);
    CHECK_FALSE(r.passed());
    REQUIRE(!r.violations.empty());
    CHECK(r.violations[0].find("p=97") != std::string::npos);
    CHECK(r.violations[0].find("d=6") != std::string::npos);

    TdCounter faulty_td = [](const PrimeContext& ctx, u64 d, u64 t,
                             CountAlgorithm alg) {
        u64 v = count_Td(ctx, d, t, alg);
        if (alg == CountAlgorithm::subgroup_walk && ctx.p == 61 && d == 5 && t == 3)
            return v + 1;
        return v;
    };
    SuiteResult rt = suite_dual_algorithms(Level::quick, 1, {}, faulty_td);
    CHECK_FALSE(rt.passed());
    bool named = false;
    for (const auto& v : rt.violations)
        named |= v.find("p=61") != std::string::npos &&
                 v.find("d=5") != std::string::npos &&
                 v.find("t=3") != std::string::npos;
    CHECK(named);
}

TEST_CASE("sampled prime list")
{
    auto list = sampled_prime_list(2000, 100000, 250);
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(list.front() == 3);
    CHECK(list.back() <= 100000);
    u64 dense = 0, sparse = 0;
    for (u64 p : list)
        (p <= 2000 ? dense : sparse)++;
    CHECK(dense == 302);   // all odd primes <= 2000
    CHECK(sparse >= 200);  // the spanning sample
    // deterministic
    CHECK(list == sampled_prime_list(2000, 100000, 250));
}
