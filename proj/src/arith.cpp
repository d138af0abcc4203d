#include "qmds/arith.hpp"

#include "qmds/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace qmds {

u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m)
{
    if (m == 1)
        return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 checked_mul(u64 a, u64 b)
{
    u64 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw BudgetExceeded("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

u64 checked_pow(u64 base, unsigned exp)
{
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i)
        result = checked_mul(result, base);
    return result;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 small : { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 }) {
        if (n % small == 0)
            return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit integers.
    for (u64 a : { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 }) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

namespace {

// Brent's variant of Pollard rho; n must be odd and composite.
u64 find_factor(u64 n)
{
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(u64 n, std::map<u64, unsigned>& out)
{
    if (n == 1)
        return;
    for (u64 small = 2; small < 1000 && small * small <= n; ++small) {
        while (n % small == 0) {
            ++out[small];
            n /= small;
        }
    }
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = find_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

Factorization factorize(u64 n)
{
    if (n == 0)
        throw InvalidArgument("cannot factorize 0");
    std::map<u64, unsigned> acc;
    factor_into(n, acc);
    return { acc.begin(), acc.end() };
}

std::optional<PrimePower> as_prime_power(u64 q)
{
    if (q < 2)
        return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1)
        return std::nullopt;
    return PrimePower{ f[0].first, f[0].second };
}

bool is_prime_power(u64 q) { return as_prime_power(q).has_value(); }

bool is_odd_prime_power(u64 q) { return q % 2 == 1 && is_prime_power(q); }

u64 multiplicative_order(u64 a, u64 m)
{
    if (m == 0)
        throw InvalidArgument("order modulo 0 is undefined");
    if (m == 1)
        return 1;
    if (std::gcd(a % m, m) != 1)
        throw InvalidArgument("multiplicative order requires gcd(a, m) = 1");
    // Order divides Carmichael-style bound; use the group order phi(m).
    u64 phi = m;
    for (auto [p, k] : factorize(m))
        phi = phi / p * (p - 1);
    u64 order = phi;
    for (auto [p, k] : factorize(phi)) {
        for (unsigned i = 0; i < k && order % p == 0; ++i) {
            if (pow_mod(a, order / p, m) == 1)
                order /= p;
            else
                break;
        }
    }
    return order;
}

unsigned two_adic_valuation(u64 n)
{
    if (n == 0)
        throw InvalidArgument("2-adic valuation of 0 is undefined");
    return static_cast<unsigned>(__builtin_ctzll(n));
}

std::vector<u64> divisors(u64 n)
{
    std::vector<u64> out{ 1 };
    for (auto [p, k] : factorize(n)) {
        const auto base = out.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qmds
