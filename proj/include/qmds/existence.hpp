#pragma once

#include "qmds/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmds {

/// One odd prime power p^k exactly dividing rn, with ord_{p^k}(q) = 2^x y, y odd.
struct OddPrimePart {
    u64 p = 0;
    unsigned k = 0;
    unsigned x = 0;
    u64 y = 0;
};

/// rn = 2^{a_plus_b} * prod p_j^{k_j}, and 2^e exactly divides q + 1.
struct RnStructure {
    u64 q = 0, r = 0, n = 0, rn = 0;
    unsigned a_plus_b = 0;
    unsigned e = 0;
    std::vector<OddPrimePart> odd_primes;  // ascending p

    std::size_t s_count() const { return odd_primes.size(); }
};

/// Requires q a prime power, n >= 1, gcd(n, q) = 1 and r | q + 1. Throws
/// VerificationFailure if ord_p(q) and ord_{p^k}(q) have different 2-adic
/// valuations.
RnStructure analyze_rn(u64 q, u64 r, u64 n);

enum class ExistenceRule {
    // a + b <= 1
    some_order_odd,
    equal_orders_above_two,
    distinct_orders_all_even,
    low_two_power_none,
    // a + b >= 2
    q_one_mod_four,
    two_power_exceeds_q_plus_one,
    some_order_odd_high_two_power,
    some_order_divisible_by_four,
    high_two_power_none,
    // rn a power of two
    decided_by_cosets,
};

const char* rule_name(ExistenceRule rule);

struct TheoremVerdict {
    bool exists = false;
    /// rn has no odd prime factor, so the criterion does not apply and the
    /// coset oracle decided.
    bool oracle_decided = false;
    ExistenceRule rule = ExistenceRule::low_two_power_none;
};

/// Number-theoretic decision, split by a + b <= 1 versus a + b >= 2.
/// Throws InvalidArgument when r does not divide q + 1.
TheoremVerdict exists_by_theorem(u64 q, u64 r, u64 n);

/// Some coset C_e of theta differs from C_{-qe}. Throws VerificationFailure
/// if C_1 = C_{-q} but some other coset is not fixed by -q.
bool exists_by_coset_oracle(u64 q, u64 r, u64 n);

/// Some factor of X^n - lambda forms a sigma-pair. Throws BudgetExceeded
/// when the extension hosting eta cannot be realized.
bool exists_by_factor_oracle(u64 q, u64 r, u64 n);
bool factor_oracle_supported(u64 q, u64 r, u64 n);
/// Whether eta's extension fits a PrimePowerField of order <= 2^60.
bool factor_oracle_within_direct_budget(u64 q, u64 r, u64 n);

struct ExistenceInstance {
    u64 q = 0, r = 0, n = 0;
};

struct CorollaryCheck {
    ExistenceInstance instance;
    /// "full-length" for n = (q^2 - 1)/r, "tenth-length" for n = (q^2 + 1)/10.
    std::string corollary;
    TheoremVerdict verdict;
};

struct CorollarySweep {
    std::vector<CorollaryCheck> checked;
    std::vector<CorollaryCheck> failures;
};

/// Every odd prime power q <= q_max: all r | q + 1 with n = (q^2 - 1)/r, and
/// r = q + 1 with n = (q^2 + 1)/10 when 10 | q^2 + 1 and n > 1. Sorted by
/// (q, r, n).
CorollarySweep corollary_sweeps(u64 q_max);

struct AgreementRecord {
    ExistenceInstance instance;
    TheoremVerdict theorem;
    bool coset = false;
    std::optional<bool> factor;  // absent when the oracle was not run

    bool agrees() const { return theorem.exists == coset && (!factor || *factor == coset); }
};

struct AgreementSweep {
    std::size_t instances = 0;
    std::size_t factor_checked = 0;
    std::size_t oracle_decided = 0;
    std::vector<AgreementRecord> disagreements;
};

/// All (q, r, n) with q in qs, r | q + 1, gcd(n, q) = 1 and rn <= rn_max.
/// The factor oracle runs where eta's extension fits 2^60.
AgreementSweep agreement_sweep(const std::vector<u64>& qs, u64 rn_max);

} // namespace qmds
