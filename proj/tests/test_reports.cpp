#include <doctest.h>

#include <cmath>

#include "selfpow/reports.hpp"

using namespace selfpow;

TEST_CASE("theorem_report at p = 7")
{
    PrimeContext ctx = make_context(7);

    TheoremQuery t1;
    t1.kind = TheoremQuery::Kind::J1;
    auto r1 = theorem_report(ctx, t1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].quantity == "J1");
    CHECK(r1[0].observed == 2.0);
    CHECK(r1[0].bound_value == doctest::Approx(std::pow(7.0, 27.0 / 82.0)));
    CHECK(r1[0].bound_value == doctest::Approx(1.898).epsilon(1e-3));
    CHECK(r1[0].ratio == doctest::Approx(1.054).epsilon(1e-3));

    TheoremQuery t2;
    t2.kind = TheoremQuery::Kind::OrderSum;
    t2.t = 3;
    auto r2 = theorem_report(ctx, t2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].observed == 2.0);
    CHECK(r2[0].bound_value ==
          doctest::Approx(3.0 + std::pow(7.0, 1.0 / 3.0) * std::sqrt(3.0)));
    CHECK(r2[0].bound_value == doctest::Approx(6.313).epsilon(1e-3));
    CHECK(r2[0].params.t == 3);

    TheoremQuery t3;
    t3.kind = TheoremQuery::Kind::PairCount;
    auto r3 = theorem_report(ctx, t3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].observed == 10.0);
    CHECK(r3[0].bound_value == doctest::Approx(std::pow(7.0, 23.0 / 12.0)));
    CHECK(r3[0].bound_value == doctest::Approx(41.65).epsilon(1e-3));

    TheoremQuery lem1;
    lem1.kind = TheoremQuery::Kind::PowerMoment;
    lem1.n = 3;
    lem1.M = 6;
    lem1.lambda = 1;
    auto rl = theorem_report(ctx, lem1);
    REQUIRE(rl.size() == 2);  // k = 2 and k = 3
    CHECK(rl[0].observed == 3.0);
    CHECK(rl[0].bound_name == "moment_k2");
    CHECK(rl[1].bound_name == "moment_k3");

    TheoremQuery l1;
    l1.kind = TheoremQuery::Kind::IntervalL1;
    l1.U = 1;
    l1.V = 3;
    auto rl1 = theorem_report(ctx, l1);
    REQUIRE(rl1.size() == 1);
    CHECK(rl1[0].observed == doctest::Approx(7.2078).epsilon(1e-4));
    CHECK(rl1[0].bound_value == doctest::Approx(7.0 * (1.0 + std::log(7.0))));

    // every ratio recomputes from its own row
    for (const auto& rows : {r1, r2, r3, rl, rl1})
        for (const auto& row : rows) {
            CHECK(row.bound_value > 0);
            CHECK(std::abs(row.ratio - row.observed / row.bound_value) <=
                  1e-12 * std::abs(row.ratio));
        }
}

TEST_CASE("order-sum hypothesis flag")
{
    // in_hypothesis reflects t < p^(1/3)
    PrimeContext ctx = make_context(1009);  // 1009^(1/3) ≈ 10.03
    for (u64 t : ctx.divisors) {
        TheoremQuery q;
        q.kind = TheoremQuery::Kind::OrderSum;
        q.t = t;
        auto rows = theorem_report(ctx, q);
        CHECK(rows[0].in_hypothesis == (t * t * t < 1009));
    }
}

TEST_CASE("expsum_report")
{
    PrimeContext ctx = make_context(7);

    auto full = expsum_report(ctx, 6);
    REQUIRE(full.size() == 3);
    CHECK(full[0].bound_name == "classical");
    CHECK(full[0].observed == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(full[0].ratio == doctest::Approx(0.378).epsilon(1e-3));

    auto qr = expsum_report(ctx, 3);
    CHECK(qr[0].observed == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(qr[0].ratio == doctest::Approx(0.535).epsilon(1e-3));
    CHECK(qr[1].bound_name == "shteinikov");
    CHECK_FALSE(qr[1].in_hypothesis);  // 3 > sqrt(7)
    CHECK(qr[2].bound_name == "shkredov");
    CHECK(qr[2].in_hypothesis);

    auto triv = expsum_report(ctx, 1);
    CHECK(triv[0].observed == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(triv[0].ratio == doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-9));
    for (const auto& row : triv)
        CHECK(row.observed_exact);
}

TEST_CASE("exponent_fit")
{
    std::vector<std::pair<u64, double>> sqrt_points;
    for (u64 p : {101ULL, 1009ULL, 10007ULL})
        sqrt_points.emplace_back(p, std::sqrt(double(p)));
    ExponentFit fit = exponent_fit(sqrt_points);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.used_points == 3);

    // scale invariance of the slope
    for (double c : {0.001, 3.7, 1e6}) {
        std::vector<std::pair<u64, double>> scaled;
        for (auto [p, v] : sqrt_points)
            scaled.emplace_back(p, c * v);
        ExponentFit f2 = exponent_fit(scaled);
        CHECK(f2.slope == doctest::Approx(fit.slope).epsilon(1e-9));
    }

    // exact recovery for the artifact's exponents
    for (double alpha : {1.0 / 3.0, 27.0 / 82.0, 23.0 / 12.0}) {
        std::vector<std::pair<u64, double>> pts;
        for (u64 p : {101ULL, 1009ULL, 10007ULL, 100003ULL})
            pts.emplace_back(p, std::pow(double(p), alpha));
        CHECK(std::abs(exponent_fit(pts).slope - alpha) < 1e-9);
    }

    // zero values excluded and reported; errors on unusable input
    std::vector<std::pair<u64, double>> with_zero = {{101, 0.0}, {1009, 2.0},
                                                     {10007, 3.0}};
    ExponentFit fz = exponent_fit(with_zero);
    CHECK(fz.excluded_points == 1);
    CHECK(fz.used_points == 2);
    CHECK_THROWS_AS(exponent_fit({{101, 1.0}}), std::domain_error);
    CHECK_THROWS_AS(exponent_fit({{101, 1.0}, {101, 2.0}}), std::domain_error);
    CHECK_THROWS_AS(exponent_fit({{101, 0.0}, {1009, 0.0}}), std::domain_error);
}
