#include <doctest.h>

#include <numeric>

#include "selfpow/congruence.hpp"
#include "selfpow/errors.hpp"
#include "selfpow/verify.hpp"

using namespace selfpow;

TEST_CASE("xx_spectrum small primes")
{
    PrimeContext c5 = make_context(5);
    Spectrum s5 = xx_spectrum(c5);
    CHECK(s5.counts[1] == 2);
    CHECK(s5.counts[2] == 1);
    CHECK(s5.counts[4] == 1);
    CHECK(s5.counts[3] == 0);
    CHECK(s5.image_size == 3);
    CHECK(s5.second_moment == 6);

    PrimeContext c7 = make_context(7);
    Spectrum s7 = xx_spectrum(c7);
    CHECK(s7.counts[1] == 2);
    CHECK(s7.counts[4] == 2);
    CHECK(s7.counts[6] == 1);
    CHECK(s7.counts[3] == 1);
    CHECK(s7.image_size == 4);
    CHECK(s7.second_moment == 10);
    // by_order: ord(1)=1, ord(4)=3, ord(6)=2, ord(3)=6
    CHECK(s7.by_order.at(1) == 2);
    CHECK(s7.by_order.at(3) == 2);
    CHECK(s7.by_order.at(2) == 1);
    CHECK(s7.by_order.at(6) == 1);

    PrimeContext c3 = make_context(3);
    Spectrum s3 = xx_spectrum(c3);
    CHECK(s3.counts[1] == 2);
    CHECK(s3.image_size == 1);
    CHECK(s3.second_moment == 4);

    // mass and cap behavior
    u64 mass = 0;
    for (u64 lam = 1; lam < 7; ++lam)
        mass += s7.counts[lam];
    CHECK(mass == 6);
    CHECK_THROWS_AS(xx_spectrum(make_context(1009), 100), cap_exceeded);
}

TEST_CASE("spectrum is identical across thread counts")
{
    PrimeContext ctx = make_context(1009);
    Spectrum a = xx_spectrum(ctx, kDefaultSpectrumCap, 1);
    Spectrum b = xx_spectrum(ctx, kDefaultSpectrumCap, 4);
    CHECK(a.counts == b.counts);
    CHECK(a.second_moment == b.second_moment);
    CHECK(a.by_order == b.by_order);
}

TEST_CASE("count_J")
{
    PrimeContext c7 = make_context(7);
    CHECK(count_J(c7, 1) == 2);
    CHECK(count_J(make_context(5), 3) == 0);
    CHECK_THROWS_AS(count_J(c7, 0), std::domain_error);
    CHECK_THROWS_AS(count_J(c7, 7), std::domain_error);
    for (u64 p : {11ULL, 101ULL, 997ULL})
        CHECK(count_J(make_context(p), 1) >= 2);

    // matches the spectrum entry for every λ
    Spectrum s = xx_spectrum(c7);
    for (u64 lam = 1; lam < 7; ++lam)
        CHECK(count_J(c7, lam) == s.counts[lam]);
}

TEST_CASE("order_stratified_sum")
{
    PrimeContext c7 = make_context(7);
    CHECK(order_stratified_sum(c7, 3, StratAlgorithm::via_spectrum) == 2);
    CHECK(order_stratified_sum(c7, 3, StratAlgorithm::via_x_scan) == 2);
    CHECK(order_stratified_sum(c7, 1, StratAlgorithm::via_spectrum) == 2);
    CHECK_THROWS_AS(order_stratified_sum(c7, 4, StratAlgorithm::via_x_scan),
                    std::domain_error);

    // partition of the x-range over all t | p-1
    for (u64 p : {7ULL, 101ULL, 313ULL}) {
        PrimeContext ctx = make_context(p);
        u64 total = 0;
        for (u64 t : ctx.divisors) {
            u64 a = order_stratified_sum(ctx, t, StratAlgorithm::via_spectrum);
            u64 b = order_stratified_sum(ctx, t, StratAlgorithm::via_x_scan);
            CHECK(a == b);
            total += a;
        }
        CHECK(total == p - 1);
    }
}

TEST_CASE("count_Jd")
{
    PrimeContext c7 = make_context(7);
    for (auto alg : {CountAlgorithm::direct_scan, CountAlgorithm::subgroup_walk}) {
        CHECK(count_Jd(c7, 1, alg) == 1);
        CHECK(count_Jd(c7, 2, alg) == 1);  // z^2 ≡ 2, z <= 3 -> z = 3
        CHECK(count_Jd(c7, 3, alg) == 0);  // z^3 ≡ 6, z <= 2 -> none
        CHECK(count_Jd(c7, 6, alg) == 1);
    }
    CHECK_THROWS_AS(count_Jd(c7, 4, CountAlgorithm::direct_scan), std::domain_error);

    // dual-algorithm agreement on a sample
    for (u64 p : {11ULL, 97ULL, 1009ULL}) {
        PrimeContext ctx = make_context(p);
        for (u64 d : ctx.divisors)
            CHECK(count_Jd(ctx, d, CountAlgorithm::direct_scan) ==
                  count_Jd(ctx, d, CountAlgorithm::subgroup_walk));
    }
}

TEST_CASE("count_Td")
{
    PrimeContext c7 = make_context(7);
    for (auto alg : {CountAlgorithm::direct_scan, CountAlgorithm::subgroup_walk}) {
        CHECK(count_Td(c7, 2, 3, alg) == 3);  // z^6 ≡ 1, z <= 3
        CHECK(count_Td(c7, 1, 6, alg) == 6);  // z^6 ≡ 1, z <= 6
    }
    // t = 1 reduces to J_d
    for (u64 p : {7ULL, 101ULL}) {
        PrimeContext ctx = make_context(p);
        for (u64 d : ctx.divisors)
            CHECK(count_Td(ctx, d, 1, CountAlgorithm::direct_scan) ==
                  count_Jd(ctx, d, CountAlgorithm::direct_scan));
    }
    CHECK_THROWS_AS(count_Td(c7, 2, 4, CountAlgorithm::direct_scan),
                    std::domain_error);
    CHECK_THROWS_AS(count_Td(c7, 4, 3, CountAlgorithm::direct_scan),
                    std::domain_error);

    // agreement over every valid (d, t) for a couple of primes
    for (u64 p : {61ULL, 97ULL}) {
        PrimeContext ctx = make_context(p);
        for (u64 t : ctx.divisors)
            for (u64 d : ctx.divisors) {
                if (((p - 1) / t) % d != 0)
                    continue;
                CHECK(count_Td(ctx, d, t, CountAlgorithm::direct_scan) ==
                      count_Td(ctx, d, t, CountAlgorithm::subgroup_walk));
            }
    }
}

TEST_CASE("gcd_class_counts")
{
    PrimeContext c7 = make_context(7);
    DecompositionTable t7 = gcd_class_counts(c7);
    REQUIRE(t7.rows.size() == 4);
    CHECK(t7.rows[0].d == 1);
    CHECK(t7.rows[0].primary_count == 1);
    CHECK(t7.rows[0].bound_count == 1);
    CHECK(t7.rows[1].d == 2);
    CHECK(t7.rows[1].primary_count == 0);
    CHECK(t7.rows[1].bound_count == 1);
    CHECK(t7.rows[2].d == 3);
    CHECK(t7.rows[2].primary_count == 0);
    CHECK(t7.rows[2].bound_count == 0);
    CHECK(t7.rows[3].d == 6);
    CHECK(t7.rows[3].primary_count == 1);
    CHECK(t7.rows[3].bound_count == 1);

    DecompositionTable t5 = gcd_class_counts(make_context(5));
    bool saw_d4 = false;
    for (const auto& row : t5.rows)
        if (row.d == 4) {
            saw_d4 = true;
            CHECK(row.primary_count == 1);  // x = 4
        }
    CHECK(saw_d4);

    // row d = 1 always counts x = 1; sums reproduce J(p;1)
    for (u64 p : {11ULL, 101ULL, 997ULL}) {
        PrimeContext ctx = make_context(p);
        DecompositionTable table = gcd_class_counts(ctx);
        CHECK(table.rows.front().primary_count >= 1);
        u64 sum = 0;
        for (const auto& row : table.rows) {
            CHECK(row.primary_count <= row.bound_count);
            sum += row.primary_count;
        }
        CHECK(sum == count_J(ctx, 1));
    }
}

TEST_CASE("count_power_congruence")
{
    PrimeContext c7 = make_context(7);
    CHECK(count_power_congruence(c7, 3, 1, 6).count == 3);  // {1, 2, 4}
    CHECK(count_power_congruence(c7, 3, 1, 3).count == 2);  // {1, 2}
    CHECK(count_power_congruence(c7, 1, 4, 6).count == 1);  // x = 4
    CHECK(count_power_congruence(c7, 1, 4, 3).count == 0);
    CHECK_THROWS_AS(count_power_congruence(c7, 3, 0, 6), std::domain_error);
    CHECK_THROWS_AS(count_power_congruence(c7, 0, 1, 6), std::domain_error);
    CHECK_THROWS_AS(count_power_congruence(c7, 3, 1, 0), std::domain_error);
    CHECK_THROWS_AS(count_power_congruence(c7, 3, 1, 8), std::domain_error);

    // curve values: (1 + M/p^(1/k)) n^(1/k) for k = 2, 3
    auto pc = count_power_congruence(c7, 3, 1, 6);
    REQUIRE(pc.curves.size() == 2);
    CHECK(pc.curves[0].k == 2);
    CHECK(pc.curves[0].value ==
          doctest::Approx((1 + 6.0 / std::sqrt(7.0)) * std::sqrt(3.0)));
    CHECK(pc.curves[1].k == 3);

    // scan and root-enumeration agree for every (n, λ, M) at small scale
    for (u64 p : {13ULL, 61ULL}) {
        PrimeContext ctx = make_context(p);
        for (u64 n = 1; n <= 10; ++n)
            for (u64 lam = 1; lam < p; ++lam)
                for (u64 M : {u64(1), p / 3, p - 1, p}) {
                    if (M == 0)
                        continue;
                    u64 a = count_power_congruence(ctx, n, lam, M,
                                                   RootAlgorithm::scan).count;
                    u64 b = count_power_congruence(ctx, n, lam, M,
                                                   RootAlgorithm::root_enumeration)
                                .count;
                    CHECK(a == b);
                }
    }
}

TEST_CASE("pairwise oracle for I(p)")
{
    for (u64 p : {11ULL, 61ULL, 101ULL}) {
        PrimeContext ctx = make_context(p);
        Spectrum s = xx_spectrum(ctx);
        std::vector<u64> values(p);
        for (u64 x = 1; x < p; ++x)
            values[x] = verify::naive_pow_mod(x, x, p);
        u64 pairs = 0;
        for (u64 x = 1; x < p; ++x)
            for (u64 y = 1; y < p; ++y)
                if (values[x] == values[y])
                    ++pairs;
        CHECK(pairs == s.second_moment);
    }
}
