#include "selfpow/reports.hpp"

#include <cmath>
#include <stdexcept>

namespace selfpow {

namespace {

BoundReportRow make_row(u64 p, std::string quantity, double observed,
                        std::string bound_name, double bound_value,
                        bool in_hypothesis)
{
    BoundReportRow row;
    row.p = p;
    row.quantity = std::move(quantity);
    row.observed = observed;
    row.bound_name = std::move(bound_name);
    row.bound_value = bound_value;
    row.ratio = observed / bound_value;
    row.in_hypothesis = in_hypothesis;
    return row;
}

}  // namespace

std::vector<BoundReportRow> theorem_report(const PrimeContext& ctx,
                                           const TheoremQuery& query,
                                           const ReportOptions& options)
{
    const u64 p = ctx.p;
    const double pd = double(p);
    std::vector<BoundReportRow> rows;

    switch (query.kind) {
    case TheoremQuery::Kind::J1: {
        double observed = double(count_J(ctx, 1));
        rows.push_back(make_row(p, "J1", observed, "p_27_82",
                                rpow(pd, kExpJ1Curve), true));
        break;
    }
    case TheoremQuery::Kind::OrderSum: {
        double observed = double(order_stratified_sum(
            ctx, query.t, StratAlgorithm::via_x_scan, options.spectrum_cap));
        double bound = double(query.t) +
                       rpow(pd, kExpOrderSumP) * rpow(double(query.t), kExpOrderSumT);
        auto row = make_row(p, "ORDER_SUM_T", observed, "t_plus_p13_t12", bound,
                            below_cbrt(query.t, p));
        row.params.t = query.t;
        rows.push_back(row);
        break;
    }
    case TheoremQuery::Kind::PairCount: {
        Spectrum s = xx_spectrum(ctx, options.spectrum_cap, options.threads);
        rows.push_back(make_row(p, "I", double(s.second_moment), "p_23_12",
                                rpow(pd, kExpPairCountCurve), true));
        break;
    }
    case TheoremQuery::Kind::PowerMoment: {
        PowerCount pc = count_power_congruence(ctx, query.n, query.lambda, query.M);
        for (const auto& curve : pc.curves) {
            auto row = make_row(p, "LEMMA1", double(pc.count),
                                "moment_k" + std::to_string(curve.k), curve.value,
                                true);
            row.params.n = query.n;
            row.params.M = query.M;
            row.params.lambda = query.lambda;
            row.params.k = curve.k;
            rows.push_back(row);
        }
        break;
    }
    case TheoremQuery::Kind::IntervalL1: {
        IntervalL1 l1 = interval_l1_sum(query.U, query.V, p);
        double bound = pd * (1.0 + std::log(pd));
        auto row = make_row(p, "L1SUM", l1.value, "p_1_plus_ln_p", bound, true);
        row.params.U = query.U;
        row.params.V = query.V;
        rows.push_back(row);
        break;
    }
    }
    return rows;
}

std::vector<BoundReportRow> expsum_report(const PrimeContext& ctx, u64 d,
                                          const MaxSumOptions& options)
{
    Subgroup h = subgroup_elements(d, ctx);
    SubgroupSumStat stat = max_subgroup_sum(h, ctx, options);
    BoundCurves curves = bound_curves(ctx.p, d);

    std::vector<BoundReportRow> rows;
    auto add = [&](const char* name, double value, bool in_hyp) {
        auto row = make_row(ctx.p, "EXPSUM_MAX", stat.max_magnitude, name, value, in_hyp);
        row.params.d = d;
        row.observed_exact = stat.exact;
        rows.push_back(row);
    };
    add("classical", curves.classical, true);
    add("shteinikov", curves.shteinikov, curves.shteinikov_in_range);
    add("shkredov", curves.shkredov, curves.shkredov_in_range);
    return rows;
}

ExponentFit exponent_fit(const std::vector<std::pair<u64, double>>& points)
{
    std::vector<std::pair<double, double>> logs;
    std::size_t excluded = 0;
    for (const auto& [p, value] : points) {
        if (value > 0)
            logs.emplace_back(std::log(double(p)), std::log(value));
        else
            ++excluded;
    }
    if (logs.size() < 2)
        throw std::domain_error("exponent_fit: needs at least 2 points with value > 0");

    double mx = 0, my = 0;
    for (const auto& [x, y] : logs) {
        mx += x;
        my += y;
    }
    mx /= double(logs.size());
    my /= double(logs.size());

    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : logs) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0)
        throw std::domain_error("exponent_fit: needs at least 2 distinct p values");

    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.used_points = logs.size();
    fit.excluded_points = excluded;
    double ss_res = syy - sxy * sxy / sxx;
    fit.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

}  // namespace selfpow
