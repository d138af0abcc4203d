#include "qmds/existence.hpp"

#include "qmds/cosets.hpp"
#include "qmds/errors.hpp"
#include "qmds/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace qmds {

namespace {

void require_hermitian_setting(u64 q, u64 r, u64 n)
{
    if (!is_prime_power(q))
        throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    if (n == 0 || std::gcd(n, q) != 1)
        throw InvalidArgument("length must be positive and coprime to q");
    if (r == 0 || (q + 1) % r != 0)
        throw InvalidArgument("r = " + std::to_string(r) + " does not divide q + 1");
}

} // namespace

RnStructure analyze_rn(u64 q, u64 r, u64 n)
{
    require_hermitian_setting(q, r, n);
    RnStructure s;
    s.q = q;
    s.r = r;
    s.n = n;
    s.rn = checked_mul(r, n);
    s.a_plus_b = two_adic_valuation(s.rn);
    s.e = two_adic_valuation(q + 1);
    for (const auto& [p, k] : factorize(s.rn)) {
        if (p == 2)
            continue;
        const u64 pk = checked_pow(p, k);
        const u64 ord = multiplicative_order(q % pk, pk);
        OddPrimePart part;
        part.p = p;
        part.k = k;
        part.x = two_adic_valuation(ord);
        part.y = ord >> part.x;
        if (two_adic_valuation(multiplicative_order(q % p, p)) != part.x)
            throw VerificationFailure("2-adic part of ord_p(q) differs from that of ord_{p^k}(q) for p = " +
                                      std::to_string(p));
        s.odd_primes.push_back(part);
    }
    return s;
}

const char* rule_name(ExistenceRule rule)
{
    switch (rule) {
    case ExistenceRule::some_order_odd: return "some_order_odd";
    case ExistenceRule::equal_orders_above_two: return "equal_orders_above_two";
    case ExistenceRule::distinct_orders_all_even: return "distinct_orders_all_even";
    case ExistenceRule::low_two_power_none: return "low_two_power_none";
    case ExistenceRule::q_one_mod_four: return "q_one_mod_four";
    case ExistenceRule::two_power_exceeds_q_plus_one: return "two_power_exceeds_q_plus_one";
    case ExistenceRule::some_order_odd_high_two_power: return "some_order_odd_high_two_power";
    case ExistenceRule::some_order_divisible_by_four: return "some_order_divisible_by_four";
    case ExistenceRule::high_two_power_none: return "high_two_power_none";
    case ExistenceRule::decided_by_cosets: return "decided_by_cosets";
    }
    return "unknown";
}

TheoremVerdict exists_by_theorem(u64 q, u64 r, u64 n)
{
    const RnStructure s = analyze_rn(q, r, n);
    TheoremVerdict v;
    if (s.s_count() == 0) {
        v.oracle_decided = true;
        v.rule = ExistenceRule::decided_by_cosets;
        v.exists = exists_by_coset_oracle(q, r, n);
        return v;
    }
    const auto& xs = s.odd_primes;
    const bool some_zero = std::any_of(xs.begin(), xs.end(), [](const auto& o) { return o.x == 0; });

    if (s.a_plus_b <= 1) {
        const bool all_above_one = std::all_of(xs.begin(), xs.end(), [](const auto& o) { return o.x > 1; });
        const bool all_positive = std::all_of(xs.begin(), xs.end(), [](const auto& o) { return o.x > 0; });
        const bool all_equal = std::all_of(xs.begin(), xs.end(), [&](const auto& o) { return o.x == xs.front().x; });
        if (some_zero)
            v.rule = ExistenceRule::some_order_odd;
        else if (all_above_one && all_equal)
            v.rule = ExistenceRule::equal_orders_above_two;
        else if (s.s_count() >= 2 && all_positive && !all_equal)
            v.rule = ExistenceRule::distinct_orders_all_even;
        else
            v.rule = ExistenceRule::low_two_power_none;
        v.exists = v.rule != ExistenceRule::low_two_power_none;
        return v;
    }

    const bool some_ge_two = std::any_of(xs.begin(), xs.end(), [](const auto& o) { return o.x >= 2; });
    if (q % 4 == 1)
        v.rule = ExistenceRule::q_one_mod_four;
    else if (q % 4 == 3 && s.a_plus_b > s.e)
        v.rule = ExistenceRule::two_power_exceeds_q_plus_one;
    else if (some_zero)
        v.rule = ExistenceRule::some_order_odd_high_two_power;
    else if (some_ge_two)
        v.rule = ExistenceRule::some_order_divisible_by_four;
    else
        v.rule = ExistenceRule::high_two_power_none;
    v.exists = v.rule != ExistenceRule::high_two_power_none;
    return v;
}

bool exists_by_coset_oracle(u64 q, u64 r, u64 n)
{
    require_hermitian_setting(q, r, n);
    const CosetSystem sys(q, n, r);
    bool any_moved = false;
    for (const auto& c : sys.cosets()) {
        if (sys.coset_index(sys.neg_q(c.front())) != sys.coset_index(c.front())) {
            any_moved = true;
            break;
        }
    }
    const bool one_fixed = sys.coset_index(sys.neg_q(1 % sys.modulus())) == sys.coset_index(1 % sys.modulus());
    if (one_fixed && any_moved)
        throw VerificationFailure("C_1 = C_{-q} but some coset is moved by -q");
    return any_moved;
}

bool factor_oracle_within_direct_budget(u64 q, u64 r, u64 n)
{
    require_hermitian_setting(q, r, n);
    return root_context_within_budget(q, n, r);
}

bool factor_oracle_supported(u64 q, u64 r, u64 n)
{
    require_hermitian_setting(q, r, n);
    return factorization_supported(q, n, r);
}

bool exists_by_factor_oracle(u64 q, u64 r, u64 n)
{
    require_hermitian_setting(q, r, n);
    const FactorizationReport rep = factor_xn_minus_lambda(q, n, r);
    if (!rep.unmatched.empty())
        throw VerificationFailure("sigma image of a factor is not a factor although r | q + 1");
    if (rep.u + 2 * rep.v != rep.factors.size())
        throw VerificationFailure("factor classification does not cover every factor");
    return rep.v > 0;
}

CorollarySweep corollary_sweeps(u64 q_max)
{
    CorollarySweep out;
    for (u64 q = 3; q <= q_max; q += 2) {
        if (!is_odd_prime_power(q))
            continue;
        const u64 q2 = checked_mul(q, q);
        for (u64 r : divisors(q + 1))
            out.checked.push_back({ { q, r, (q2 - 1) / r }, "full-length", {} });
        if ((q2 + 1) % 10 == 0 && (q2 + 1) / 10 > 1)
            out.checked.push_back({ { q, q + 1, (q2 + 1) / 10 }, "tenth-length", {} });
    }
    std::sort(out.checked.begin(), out.checked.end(), [](const auto& a, const auto& b) {
        return std::tie(a.instance.q, a.instance.r, a.instance.n) < std::tie(b.instance.q, b.instance.r, b.instance.n);
    });
    for (auto& c : out.checked) {
        c.verdict = exists_by_theorem(c.instance.q, c.instance.r, c.instance.n);
        if (!c.verdict.exists)
            out.failures.push_back(c);
    }
    return out;
}

AgreementSweep agreement_sweep(const std::vector<u64>& qs, u64 rn_max)
{
    std::vector<u64> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    AgreementSweep out;
    for (u64 q : sorted) {
        for (u64 r : divisors(q + 1)) {
            for (u64 n = 1; r * n <= rn_max; ++n) {
                if (std::gcd(n, q) != 1)
                    continue;
                AgreementRecord rec;
                rec.instance = { q, r, n };
                rec.theorem = exists_by_theorem(q, r, n);
                rec.coset = exists_by_coset_oracle(q, r, n);
                if (root_context_within_budget(q, n, r)) {
                    rec.factor = exists_by_factor_oracle(q, r, n);
                    ++out.factor_checked;
                }
                ++out.instances;
                if (rec.theorem.oracle_decided)
                    ++out.oracle_decided;
                if (!rec.agrees())
                    out.disagreements.push_back(rec);
            }
        }
    }
    return out;
}

} // namespace qmds
