#include "selfpow/expsum.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "selfpow/errors.hpp"
#include "selfpow/parallel.hpp"

namespace selfpow {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Kahan {
    double sum = 0;
    double c = 0;
    void add(double x)
    {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Angle tables make the O(p·d) scans cheap; entries are computed with the
// same expression the direct path uses, so both paths agree bit for bit.
constexpr u64 kAngleTableCap = 1u << 22;

struct AngleTable {
    std::vector<double> cos_v, sin_v;
    explicit AngleTable(u64 p)
    {
        cos_v.resize(p);
        sin_v.resize(p);
        for (u64 k = 0; k < p; ++k) {
            double angle = kTwoPi * double(k) / double(p);
            cos_v[k] = std::cos(angle);
            sin_v[k] = std::sin(angle);
        }
    }
};

double magnitude_at(u64 a, const std::vector<u64>& elements, u64 p,
                    const AngleTable* table)
{
    Kahan re, im;
    if (table) {
        for (u64 h : elements) {
            u64 k = mul_mod(a, h, p);
            re.add(table->cos_v[k]);
            im.add(table->sin_v[k]);
        }
    } else {
        for (u64 h : elements) {
            u64 k = mul_mod(a, h, p);
            double angle = kTwoPi * double(k) / double(p);
            re.add(std::cos(angle));
            im.add(std::sin(angle));
        }
    }
    return std::hypot(re.sum, im.sum);
}

}  // namespace

ComplexSum subgroup_sum(u64 a, const Subgroup& h, u64 p)
{
    check_modulus(p);
    if (a >= p)
        throw std::domain_error("subgroup_sum: a must be in [0, p-1]");
    Kahan re, im;
    for (u64 e : h.elements) {
        u64 k = mul_mod(a, e, p);
        double angle = kTwoPi * double(k) / double(p);
        re.add(std::cos(angle));
        im.add(std::sin(angle));
    }
    ComplexSum s;
    s.re = re.sum;
    s.im = im.sum;
    s.magnitude = std::hypot(s.re, s.im);
    return s;
}

SubgroupSumStat max_subgroup_sum(const Subgroup& h, const PrimeContext& ctx,
                                 const MaxSumOptions& options)
{
    const u64 p = ctx.p;
    const u64 d = h.order;
    SubgroupSumStat stat;
    stat.p = p;
    stat.d = d;
    BoundCurves curves = bound_curves(p, d);
    stat.curve_classical = curves.classical;
    stat.curve_shteinikov = curves.shteinikov;
    stat.curve_shkredov = curves.shkredov;

    std::unique_ptr<AngleTable> table;
    if (p <= kAngleTableCap)
        table = std::make_unique<AngleTable>(p);

    struct Best {
        double mag = -1;
        u64 a = 0;
        void consider(double m, u64 cand)
        {
            if (m > mag || (m == mag && cand < a)) {
                mag = m;
                a = cand;
            }
        }
    };

    if (options.mode == MaxSumMode::exhaustive) {
        u128 work = u128(p - 1) * d;
        if (work > options.work_cap)
            throw cap_exceeded(
                "exhaustive max over a needs " + std::to_string(u64(work / 1000000)) +
                "M operations, above the cap (raise --cap-expsum-work or use sampled mode)");

        int threads = effective_threads(options.threads);
        std::vector<Best> per_chunk(size_t(threads) + 1);
        parallel_chunks(1, p, threads,
                        [&](std::size_t chunk, u64 lo, u64 hi) {
                            Best best;
                            for (u64 a = lo; a < hi; ++a)
                                best.consider(magnitude_at(a, h.elements, p, table.get()), a);
                            per_chunk[chunk] = best;
                        });
        Best overall;
        for (const Best& b : per_chunk)
            if (b.mag >= 0)
                overall.consider(b.mag, b.a);
        stat.a_max = overall.a;
        stat.max_magnitude = overall.mag;
        stat.exact = true;
        stat.sample_size = p - 1;
    } else {
        Best best;
        u64 det_count = std::min<u64>(1000, p - 1);
        for (u64 a = 1; a <= det_count; ++a)
            best.consider(magnitude_at(a, h.elements, p, table.get()), a);
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<u64> dist(1, p - 1);
        for (u64 i = 0; i < options.sample_count; ++i) {
            u64 a = dist(rng);
            best.consider(magnitude_at(a, h.elements, p, table.get()), a);
        }
        stat.a_max = best.a;
        stat.max_magnitude = best.mag;
        stat.exact = false;
        stat.sample_size = det_count + options.sample_count;
    }
    return stat;
}

double parseval_total(const Subgroup& h, const PrimeContext& ctx)
{
    const u64 p = ctx.p;
    std::unique_ptr<AngleTable> table;
    if (p <= kAngleTableCap)
        table = std::make_unique<AngleTable>(p);
    Kahan total;
    for (u64 a = 0; a < p; ++a) {
        double m = magnitude_at(a, h.elements, p, table.get());
        total.add(m * m);
    }
    return total.sum;
}

IntervalL1Evaluator::IntervalL1Evaluator(u64 p) : p_(p)
{
    check_modulus(p);
    if (p < 2)
        throw std::domain_error("interval_l1_sum: p must be at least 2");
    sin_table_.resize(p);
    for (u64 k = 0; k < p; ++k)
        sin_table_[k] = std::sin(M_PI * double(k) / double(p));
}

IntervalL1 IntervalL1Evaluator::eval(i64 U, i64 V) const
{
    if (V < U)
        throw std::domain_error("interval_l1_sum: V must be >= U");
    u64 len = u64(V - U) + 1;  // number of terms in the inner sum
    if (len - 1 >= (u64(1) << 31))
        throw std::domain_error("interval_l1_sum: V - U must be below 2^31");

    const u64 l_mod = len % p_;
    Kahan total;
    for (u64 a = 1; a < p_; ++a) {
        u64 k = u64((u128(a) * l_mod) % p_);
        // |sin(pi a L / p)| / |sin(pi a / p)|; numerator 0 when p | aL
        total.add(k == 0 ? 0.0 : sin_table_[k] / sin_table_[a]);
    }
    IntervalL1 out;
    out.value = total.sum;
    out.ratio_to_log_bound = out.value / (double(p_) * (1.0 + std::log(double(p_))));
    return out;
}

IntervalL1 interval_l1_sum(i64 U, i64 V, u64 p)
{
    return IntervalL1Evaluator(p).eval(U, V);
}

BoundCurves bound_curves(u64 p, u64 d, std::optional<u64> t)
{
    BoundCurves c;
    c.classical = rpow(double(p), kExpClassical);
    c.shteinikov = rpow(double(p), kExpShteinikovP) * rpow(double(d), kExpShteinikovD);
    c.shteinikov_in_range = below_sqrt(d, p);
    c.shkredov = rpow(double(p), kExpShkredovP) * rpow(double(d), kExpShkredovD);
    c.shkredov_in_range = below_two_thirds(d, p);
    if (t) {
        c.order_sum = double(*t) + c.classical;
        c.fiber = double(p) * rpow(double(*t), kExpFiberT);
    }
    return c;
}

}  // namespace selfpow
