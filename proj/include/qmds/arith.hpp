#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qmds {

using u64 = std::uint64_t;

/// Largest field order (and integer modulus) the library is willing to touch.
inline constexpr u64 kExactBudget = u64{1} << 60;

struct PrimePower {
    u64 p = 0;
    unsigned m = 0;
};

using Factorization = std::vector<std::pair<u64, unsigned>>;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Throw BudgetExceeded instead of wrapping.
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);

bool is_prime(u64 n);

/// Prime factorization in ascending prime order; factorize(1) is empty.
Factorization factorize(u64 n);

std::optional<PrimePower> as_prime_power(u64 q);
bool is_prime_power(u64 q);
bool is_odd_prime_power(u64 q);

/// Multiplicative order of a modulo m. Requires gcd(a, m) = 1; ord mod 1 is 1.
u64 multiplicative_order(u64 a, u64 m);

unsigned two_adic_valuation(u64 n);

std::vector<u64> divisors(u64 n);

} // namespace qmds
