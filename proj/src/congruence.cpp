#include "selfpow/congruence.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "selfpow/errors.hpp"
#include "selfpow/parallel.hpp"

namespace selfpow {

namespace {

void check_spectrum_cap(u64 p, u64 cap)
{
    if (p > cap)
        throw cap_exceeded("p = " + std::to_string(p) +
                           " exceeds the spectrum cap " + std::to_string(cap) +
                           " (raise --cap-spectrum)");
}

void check_divides(u64 d, u64 m, const char* what)
{
    if (d == 0 || m % d != 0)
        throw std::domain_error(std::string(what) + " = " + std::to_string(d) +
                                " does not divide " + std::to_string(m));
}

// Order of mu is exactly t, given mu^t == 1 was already established.
bool order_is_exactly(u64 mu, u64 t, const PrimeContext& ctx, const MontMul& mont)
{
    for (const auto& [q, e] : ctx.factors) {
        if (t % q == 0 && mont.pow(mu, t / q) == 1)
            return false;
    }
    return true;
}

}  // namespace

Spectrum xx_spectrum(const PrimeContext& ctx, u64 cap, int threads)
{
    const u64 p = ctx.p;
    check_spectrum_cap(p, cap);

    Spectrum s;
    s.p = p;
    s.counts.assign(p, 0);

    threads = effective_threads(threads);
    if (threads <= 1) {
        MontMul mont(p);
        for (u64 x = 1; x < p; ++x)
            ++s.counts[mont.pow(x, x)];
    } else {
        parallel_chunks(1, p, threads, [&](std::size_t, u64 lo, u64 hi) {
            MontMul mont(p);
            for (u64 x = lo; x < hi; ++x) {
                std::atomic_ref<u64> slot(s.counts[mont.pow(x, x)]);
                slot.fetch_add(1, std::memory_order_relaxed);
            }
        });
    }

    for (u64 lam = 1; lam < p; ++lam) {
        u64 j = s.counts[lam];
        if (j == 0)
            continue;
        ++s.image_size;
        s.second_moment += j * j;
        s.by_order[multiplicative_order(lam, ctx)] += j;
    }
    return s;
}

u64 count_J(const PrimeContext& ctx, u64 lambda)
{
    const u64 p = ctx.p;
    if (lambda == 0 || lambda >= p)
        throw std::domain_error("count_J: lambda must be in [1, p-1]");
    MontMul mont(p);
    u64 count = 0;
    for (u64 x = 1; x < p; ++x)
        if (mont.pow(x, x) == lambda)
            ++count;
    return count;
}

u64 order_stratified_sum(const PrimeContext& ctx, u64 t, StratAlgorithm alg,
                         u64 spectrum_cap)
{
    const u64 p = ctx.p;
    check_divides(t, p - 1, "t");

    if (alg == StratAlgorithm::via_spectrum) {
        Spectrum s = xx_spectrum(ctx, spectrum_cap);
        auto it = s.by_order.find(t);
        return it == s.by_order.end() ? 0 : it->second;
    }

    // x-scan: x contributes iff x^{tx} ≡ 1 and ord(x^x) is exactly t.
    MontMul mont(p);
    u64 count = 0;
    for (u64 x = 1; x < p; ++x) {
        u64 mu = mont.pow(x, x);
        if (mont.pow(mu, t) != 1)
            continue;
        if (order_is_exactly(mu, t, ctx, mont))
            ++count;
    }
    return count;
}

namespace {

u64 count_root_congruence(const PrimeContext& ctx, u64 exponent, u64 zmax,
                          u64 d, CountAlgorithm alg)
{
    const u64 p = ctx.p;
    MontMul mont(p);
    const u64 rhs = inv_mod(mont.pow(d % p, exponent), p);

    if (alg == CountAlgorithm::direct_scan) {
        u64 count = 0;
        for (u64 z = 1; z <= zmax; ++z)
            if (mont.pow(z, exponent) == rhs)
                ++count;
        return count;
    }

    // membership view: z counts iff dz mod p lies in H_exponent, so count
    // h in the subgroup with h·d^{-1} mod p <= zmax
    Subgroup h = subgroup_elements(exponent, ctx);
    const u64 dinv = inv_mod(d % p, p);
    u64 count = 0;
    for (u64 e : h.elements)
        if (mul_mod(e, dinv, p) <= zmax)
            ++count;
    return count;
}

}  // namespace

u64 count_Jd(const PrimeContext& ctx, u64 d, CountAlgorithm alg)
{
    check_divides(d, ctx.p - 1, "d");
    return count_root_congruence(ctx, d, (ctx.p - 1) / d, d, alg);
}

u64 count_Td(const PrimeContext& ctx, u64 d, u64 t, CountAlgorithm alg)
{
    check_divides(t, ctx.p - 1, "t");
    check_divides(d, (ctx.p - 1) / t, "d");
    return count_root_congruence(ctx, d * t, (ctx.p - 1) / d, d, alg);
}

DecompositionTable gcd_class_counts(const PrimeContext& ctx, u64 cap)
{
    const u64 p = ctx.p;
    check_spectrum_cap(p, cap);

    DecompositionTable table;
    table.p = p;
    table.t = 1;

    std::map<u64, u64> jprime;
    MontMul mont(p);
    u64 j1 = 0;
    for (u64 x = 1; x < p; ++x) {
        if (mont.pow(x, x) == 1) {
            ++j1;
            ++jprime[std::gcd(x, p - 1)];
        }
    }

    u64 jprime_sum = 0;
    for (u64 d : ctx.divisors) {
        DecompositionRow row;
        row.d = d;
        row.primary_count = jprime.count(d) ? jprime[d] : 0;
        // either algorithm works here; pick the cheaper side
        CountAlgorithm alg = d * d <= p ? CountAlgorithm::subgroup_walk
                                        : CountAlgorithm::direct_scan;
        row.bound_count = count_Jd(ctx, d, alg);
        jprime_sum += row.primary_count;
        if (row.primary_count > row.bound_count)
            throw std::logic_error("gcd_class_counts: J'_d > J_d at p = " +
                                   std::to_string(p) + ", d = " + std::to_string(d));
        table.rows.push_back(row);
    }
    if (jprime_sum != j1)
        throw std::logic_error("gcd_class_counts: sum of J'_d != J(p;1) at p = " +
                               std::to_string(p));
    return table;
}

PowerCount count_power_congruence(const PrimeContext& ctx, u64 n, u64 lambda,
                                  u64 M, RootAlgorithm alg, std::vector<int> ks)
{
    const u64 p = ctx.p;
    if (lambda == 0 || lambda >= p)
        throw std::domain_error("count_power_congruence: lambda must be in [1, p-1]");
    if (n == 0)
        throw std::domain_error("count_power_congruence: n must be positive");
    if (M == 0 || M > p)
        throw std::domain_error("count_power_congruence: M must be in [1, p]");

    const u64 c = std::gcd(n, p - 1);

    if (alg == RootAlgorithm::auto_select) {
        // root path: one discrete log (≈ e·sqrt(q) per prime power) + c walk
        u64 dlog_cost = 0;
        for (const auto& [q, e] : ctx.factors)
            dlog_cost += u64(e) * (u64(std::sqrt(double(q))) + 1);
        alg = (c <= kSubgroupElementCap && dlog_cost + c < M)
                  ? RootAlgorithm::root_enumeration
                  : RootAlgorithm::scan;
    }

    PowerCount out;
    if (alg == RootAlgorithm::scan) {
        MontMul mont(p);
        for (u64 x = 1; x <= M; ++x)
            if (mont.pow(x % p, n) == lambda)
                ++out.count;
    } else {
        // x^n ≡ λ is solvable iff λ^((p-1)/c) = 1; then the solutions in
        // [1, p-1] form the coset x0·H_c
        if (pow_mod(lambda, (p - 1) / c, p) == 1) {
            u64 k = discrete_log(lambda, ctx);
            u64 mc = (p - 1) / c;
            // one exponent solving n·y ≡ k (mod p-1)
            u64 y0 = mc == 1 ? 0
                             : mul_mod((k / c) % mc, inv_mod((n / c) % mc, mc), mc);
            u64 x0 = pow_mod(ctx.g, y0, p);
            Subgroup h = subgroup_elements(c, ctx);
            for (u64 e : h.elements)
                if (mul_mod(x0, e, p) <= M)
                    ++out.count;
        }
    }

    for (int k : ks) {
        double curve = (1.0 + double(M) / std::pow(double(p), 1.0 / k)) *
                       std::pow(double(n), 1.0 / k);
        out.curves.push_back({k, curve});
    }
    return out;
}

}  // namespace selfpow
