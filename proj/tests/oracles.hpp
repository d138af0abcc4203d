#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// algorithms; they only share the element encoding.

#include "qmds/field.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

inline u64 order_mod(u64 a, u64 m)
{
    if (m == 1)
        return 1;
    u64 x = a % m;
    for (u64 k = 1; k <= m; ++k) {
        if (x == 1)
            return k;
        x = x * (a % m) % m;
    }
    return 0;
}

inline unsigned v2(u64 n)
{
    unsigned v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

// Polynomials over Z_p, constant term first, no trailing zeros.
using ZpPoly = std::vector<u64>;

inline void trim(ZpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

inline u64 zp_inv(u64 a, u64 p)
{
    for (u64 x = 1; x < p; ++x) {
        if (a * x % p == 1)
            return x;
    }
    return 0;
}

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, u64 p)
{
    trim(a);
    const u64 inv = zp_inv(f.back(), p);
    while (a.size() >= f.size()) {
        const u64 c = a.back() * inv % p;
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = (a[shift + i] + p * p - c * f[i] % p) % p;
        trim(a);
    }
    return a;
}

// All monic polynomials of the given degree, in the same lex order the
// library promises (constant term most significant).
inline std::vector<ZpPoly> monic_of_degree(u64 p, unsigned deg)
{
    std::vector<ZpPoly> out;
    u64 total = 1;
    for (unsigned i = 0; i < deg; ++i)
        total *= p;
    for (u64 code = 0; code < total; ++code) {
        ZpPoly f(deg + 1, 0);
        u64 c = code;
        for (unsigned i = deg; i-- > 0;) {
            f[i] = c % p;
            c /= p;
        }
        f[deg] = 1;
        out.push_back(f);
    }
    return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool zp_irreducible(const ZpPoly& f, u64 p)
{
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        for (const auto& g : monic_of_degree(p, d)) {
            if (zp_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

// Independent multiplication of packed field elements given the modulus.
inline u64 field_mul(u64 a, u64 b, u64 p, const std::vector<u64>& modulus)
{
    const std::size_t m = modulus.size() - 1;
    auto unpack = [&](u64 code) {
        ZpPoly v(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = code % p;
            code /= p;
        }
        trim(v);
        return v;
    };
    ZpPoly c = zp_mod(zp_mul(unpack(a), unpack(b), p), modulus, p);
    u64 code = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        code = code * p + c[i];
    return code;
}

inline u64 field_pow(u64 a, u64 e, u64 p, const std::vector<u64>& modulus)
{
    u64 acc = 1;
    for (u64 i = 0; i < e; ++i)
        acc = field_mul(acc, a, p, modulus);
    return acc;
}

// Orbits of x -> q^2 x mod rn on {1 + r i}, as a set of sets.
inline std::set<std::set<u64>> coset_partition(u64 q, u64 n, u64 r)
{
    const u64 rn = r * n;
    std::set<std::set<u64>> out;
    for (u64 i = 0; i < n; ++i) {
        std::set<u64> orbit;
        u64 x = (1 + r * i) % rn;
        while (orbit.insert(x).second)
            x = x * (q * q % rn) % rn;
        out.insert(orbit);
    }
    return out;
}

// Does some union of cosets Z, neither empty nor everything, satisfy
// Z and -qZ disjoint? Enumerates every union when there are few cosets.
inline bool some_dual_containing_union(u64 q, u64 n, u64 r)
{
    const u64 rn = r * n;
    const auto parts = coset_partition(q, n, r);
    std::vector<std::set<u64>> cs(parts.begin(), parts.end());
    const std::size_t c = cs.size();
    for (u64 mask = 1; mask + 1 < (u64{ 1 } << c); ++mask) {
        std::set<u64> z;
        for (std::size_t i = 0; i < c; ++i) {
            if (mask >> i & 1)
                z.insert(cs[i].begin(), cs[i].end());
        }
        bool disjoint = true;
        for (u64 x : z) {
            const u64 y = (rn - (q % rn) * x % rn) % rn;
            if (z.count(y)) {
                disjoint = false;
                break;
            }
        }
        if (disjoint)
            return true;
    }
    return false;
}

// Gaussian elimination rank over a library field (field ops only).
inline std::size_t rank(const qmds::PrimePowerField& F, std::vector<std::vector<qmds::FieldElement>> rows)
{
    std::size_t rk = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][c].code == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rk]);
        const auto inv = F.inv(rows[rk][c]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rk || rows[i][c].code == 0)
                continue;
            const auto f = F.mul(rows[i][c], inv);
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rk][j]));
        }
        ++rk;
    }
    return rk;
}

// Basis of {y : sum_j G[i][j] * conj(y_j) = 0 for every row i}, by solving
// G x = 0 and conjugating x.
inline std::vector<std::vector<qmds::FieldElement>> hermitian_dual_basis(
    const qmds::PrimePowerField& F, u64 q, std::vector<std::vector<qmds::FieldElement>> g, std::size_t n)
{
    // Reduced row echelon form of G.
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < n && rk < g.size(); ++c) {
        std::size_t piv = rk;
        while (piv < g.size() && g[piv][c].code == 0)
            ++piv;
        if (piv == g.size())
            continue;
        std::swap(g[piv], g[rk]);
        const auto inv = F.inv(g[rk][c]);
        for (auto& x : g[rk])
            x = F.mul(x, inv);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i == rk || g[i][c].code == 0)
                continue;
            const auto f = g[i][c];
            for (std::size_t j = 0; j < n; ++j)
                g[i][j] = F.sub(g[i][j], F.mul(f, g[rk][j]));
        }
        pivots.push_back(c);
        ++rk;
    }
    std::vector<std::vector<qmds::FieldElement>> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
            continue;
        std::vector<qmds::FieldElement> x(n);
        x[f] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = F.neg(g[i][f]);
        for (auto& e : x)
            e = F.pow(e, q);  // conj is an involution, so conj(x) solves the Hermitian system
        out.push_back(x);
    }
    return out;
}

// Minimum nonzero weight over all q^(2k) codewords of the row space.
inline u64 min_weight_by_enumeration(const qmds::PrimePowerField& F,
                                     const std::vector<std::vector<qmds::FieldElement>>& g)
{
    const std::size_t k = g.size();
    const std::size_t n = k ? g[0].size() : 0;
    const u64 Q = F.order();
    u64 total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= Q;
    u64 best = n + 1;
    for (u64 code = 1; code < total; ++code) {
        std::vector<qmds::FieldElement> w(n);
        u64 c = code;
        for (std::size_t i = 0; i < k; ++i) {
            const qmds::FieldElement coef{ c % Q };
            c /= Q;
            if (coef.code == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                w[j] = F.add(w[j], F.mul(coef, g[i][j]));
        }
        const auto wt = static_cast<u64>(std::count_if(w.begin(), w.end(), [](auto e) { return e.code != 0; }));
        best = std::min(best, wt);
    }
    return best;
}

// Literal reading of the class-3 length/distance table row.
inline long class3_by_enumeration(u64 n, u64 q)
{
    long best = -1;
    for (u64 m = 1; m <= q; ++m) {
        for (u64 l = 0; l <= q - 1; ++l) {
            if (m * q - l != n)
                continue;
            const long d = static_cast<long>((q + 1 - l / m) / 2);
            best = std::max(best, d);
        }
    }
    return best;
}

} // namespace oracle
