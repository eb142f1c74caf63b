#include "selfpow/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "selfpow/errors.hpp"

namespace selfpow {

namespace {

// Deterministic Miller-Rabin witness set, sufficient for all n < 3.3e24
// (so in particular for the whole 64-bit range).
constexpr u64 kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Strong-probable-prime test to base a for odd n > 2.
bool is_sprp(u64 a, u64 n)
{
    a %= n;
    if (a == 0)
        return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    MontMul mont(n);
    u64 x = mont.pow(a, d);
    if (x == 1 || x == n - 1)
        return true;
    u64 xm = mont.to_mont(x);
    for (int i = 1; i < s; ++i) {
        xm = mont.mul(xm, xm);
        x = mont.from_mont(xm);
        if (x == n - 1)
            return true;
    }
    return false;
}

u64 splitmix64(u64 x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Pollard-Brent rho; returns a proper factor of composite odd n, or n on
// a failed round (caller retries with the next round counter).
u64 pollard_brent(u64 n, u64 round_seed)
{
    const u64 c = splitmix64(round_seed) % (n - 1) + 1;
    u64 y = splitmix64(round_seed ^ 0x9e3779b97f4a7c15ULL) % n;
    auto step = [n, c](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };

    const u64 m = 128;
    u64 g = 1, r = 1, q = 1;
    u64 x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i)
            y = step(y);
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                q = mul_mod(q, sub_mod(x, y, n), n);
            }
            g = std::gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = std::gcd(sub_mod(x, ys, n), n);
        } while (g == 1);
    }
    return g;
}

void factor_recursive(u64 n, u64 seed, u64& round, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = n;
    while (d == n) {
        d = pollard_brent(n, splitmix64(n ^ seed) + round);
        ++round;
    }
    factor_recursive(d, seed, round, out);
    factor_recursive(n / d, seed, round, out);
}

}  // namespace

std::optional<u64> composite_witness(u64 n)
{
    if (n < 2)
        return n;  // 0 and 1 are non-prime; the value itself as witness
    if (n == 2)
        return std::nullopt;
    if ((n & 1) == 0)
        return 2;
    for (u64 q : kMillerRabinBases) {
        if (n == q)
            return std::nullopt;
        if (n % q == 0)
            return q;
    }
    for (u64 a : kMillerRabinBases)
        if (!is_sprp(a, n))
            return a;
    return std::nullopt;
}

bool is_prime(u64 n)
{
    return !composite_witness(n).has_value();
}

std::vector<PrimeFactor> factorize(u64 n, u64 seed)
{
    std::vector<PrimeFactor> result;
    if (n <= 1)
        return result;

    auto push = [&result](u64 q) {
        if (!result.empty() && result.back().prime == q)
            ++result.back().exponent;
        else
            result.push_back({q, 1});
    };

    const u64 original = n;
    for (u64 q = 2; q < 100'000 && q * q <= n; q = (q == 2 ? 3 : q + 2)) {
        while (n % q == 0) {
            push(q);
            n /= q;
        }
    }
    if (n > 1) {
        std::vector<u64> rest;
        u64 round = 0;
        factor_recursive(n, seed, round, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 q : rest)
            push(q);
    }

    u64 check = 1;
    for (const auto& [q, e] : result)
        for (int i = 0; i < e; ++i)
            check *= q;
    if (check != original)
        throw std::logic_error("factorize: product check failed for " +
                               std::to_string(original));
    return result;
}

std::vector<u64> divisors_from_factors(const std::vector<PrimeFactor>& factors)
{
    std::vector<u64> divisors{1};
    for (const auto& [q, e] : factors) {
        size_t base = divisors.size();
        u64 qk = 1;
        for (int i = 1; i <= e; ++i) {
            qk *= q;
            for (size_t j = 0; j < base; ++j)
                divisors.push_back(divisors[j] * qk);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

PrimeContext make_context(u64 p, u64 factor_seed)
{
    if (p < 3)
        throw std::domain_error(p == 2
                                    ? "p = 2 is excluded (trivial group)"
                                    : "p must be at least 3");
    check_modulus(p);
    if (auto w = composite_witness(p))
        throw std::domain_error("p = " + std::to_string(p) +
                                " is not prime (witness " + std::to_string(*w) + ")");

    PrimeContext ctx;
    ctx.p = p;
    ctx.factors = factorize(p - 1, factor_seed);
    ctx.divisors = divisors_from_factors(ctx.factors);

    // Smallest primitive root: classical criterion g^((p-1)/q) != 1.
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (const auto& [q, e] : ctx.factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ctx.g = g;
            break;
        }
    }
    return ctx;
}

u64 multiplicative_order(u64 a, const PrimeContext& ctx)
{
    if (a == 0 || a >= ctx.p)
        throw std::domain_error("multiplicative_order: a must be in [1, p-1]");
    u64 order = ctx.p - 1;
    for (const auto& [q, e] : ctx.factors) {
        for (int i = 0; i < e; ++i) {
            if (order % q == 0 && pow_mod(a, order / q, ctx.p) == 1)
                order /= q;
            else
                break;
        }
    }
    return order;
}

Subgroup subgroup_elements(u64 d, const PrimeContext& ctx)
{
    if (d == 0 || (ctx.p - 1) % d != 0)
        throw std::domain_error("subgroup_elements: d = " + std::to_string(d) +
                                " does not divide p-1");
    if (d > kSubgroupElementCap)
        throw cap_exceeded("subgroup of order " + std::to_string(d) +
                           " exceeds the materialization cap " +
                           std::to_string(kSubgroupElementCap));

    Subgroup h;
    h.order = d;
    h.elements.reserve(d);
    MontMul mont(ctx.p);
    u64 gen = mont.pow(ctx.g, (ctx.p - 1) / d);
    u64 gen_m = mont.to_mont(gen);
    u64 cur = mont.one();
    for (u64 k = 0; k < d; ++k) {
        h.elements.push_back(mont.from_mont(cur));
        cur = mont.mul(cur, gen_m);
    }
    std::sort(h.elements.begin(), h.elements.end());
    return h;
}

namespace {

// gamma^e = beta in the cyclic group of order q generated by gamma;
// baby-step giant-step, O(sqrt(q)) time and space.
u64 bsgs_prime_order(u64 gamma, u64 beta, u64 q, const MontMul& mont)
{
    if (beta == 1)
        return 0;
    u64 m = u64(std::sqrt(double(q))) + 1;
    std::unordered_map<u64, u64> baby;
    baby.reserve(size_t(m) * 2);
    u64 gm = mont.to_mont(gamma);
    u64 cur = mont.one();
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(cur, j);  // keeps the smallest j on duplicates
        cur = mont.mul(cur, gm);
    }
    // giant step: gamma^{-m}
    u64 giant = mont.to_mont(inv_mod(mont.pow(gamma, m), mont.modulus()));
    u64 probe = mont.to_mont(beta);
    for (u64 i = 0; i * m <= q; ++i) {
        auto it = baby.find(probe);
        if (it != baby.end())
            return (i * m + it->second) % q;
        probe = mont.mul(probe, giant);
    }
    throw std::logic_error("bsgs: target not in the subgroup");
}

}  // namespace

u64 discrete_log(u64 a, const PrimeContext& ctx)
{
    if (a == 0 || a >= ctx.p)
        throw std::domain_error("discrete_log: a must be in [1, p-1]");
    const u64 p = ctx.p;
    const u64 n = p - 1;
    MontMul mont(p);

    // Pohlig-Hellman: solve ind(a) modulo each prime power q^e | p-1,
    // then combine by CRT.
    u64 x = 0;   // running solution
    u64 mod = 1; // modulus of the running solution
    for (const auto& [q, e] : ctx.factors) {
        u64 qe = 1;
        for (int i = 0; i < e; ++i)
            qe *= q;

        // digits of ind(a) mod q^e, lifted one at a time
        u64 gamma_q = mont.pow(ctx.g, n / q);  // order q
        u64 xk = 0;
        u64 qi = 1;  // q^i
        for (int i = 0; i < e; ++i) {
            // strip the known digits, then drop into the order-q subgroup
            u64 exponent_clear = n / (qi * q);
            u64 shifted = mul_mod(mont.pow(a, exponent_clear),
                                  mont.pow(inv_mod(mont.pow(ctx.g, xk), p), exponent_clear), p);
            u64 digit = bsgs_prime_order(gamma_q, shifted, q, mont);
            xk += digit * qi;
            qi *= q;
        }

        // CRT: x ≡ xk (mod qe), with previous x mod `mod`
        u64 delta = sub_mod(xk % qe, x % qe, qe);
        u64 k = mul_mod(delta, inv_mod(mod % qe, qe), qe);
        x += mod * k;
        mod *= qe;
    }
    return x;
}

std::vector<u64> primes_up_to(u64 n)
{
    std::vector<u64> primes;
    if (n < 2)
        return primes;
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= n; j += i)
                composite[j] = true;
    for (u64 i = 2; i <= n; ++i)
        if (!composite[i])
            primes.push_back(i);
    return primes;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi)
{
    std::vector<u64> primes;
    if (hi < 2 || hi < lo)
        return primes;
    lo = std::max<u64>(lo, 2);

    u64 root = u64(std::sqrt(double(hi))) + 1;
    while (root * root > hi)
        --root;
    std::vector<u64> base = primes_up_to(root);

    const u64 segment = 1 << 20;
    for (u64 start = lo; start <= hi; start += segment) {
        u64 end = std::min(hi, start + segment - 1);
        std::vector<bool> composite(end - start + 1, false);
        for (u64 q : base) {
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 m = first; m <= end; m += q)
                composite[m - start] = true;
        }
        for (u64 v = start; v <= end; ++v)
            if (!composite[v - start])
                primes.push_back(v);
        if (end == hi)
            break;
    }
    return primes;
}

}  // namespace selfpow
