#include "oracles.hpp"

#include "qmds/errors.hpp"
#include "qmds/existence.hpp"

#include <doctest.h>

using namespace qmds;

TEST_CASE("rn structure examples")
{
    const auto a = analyze_rn(11, 12, 27);
    CHECK(a.rn == 324);
    CHECK(a.a_plus_b == 2);
    CHECK(a.e == 2);
    REQUIRE(a.s_count() == 1);
    CHECK(a.odd_primes[0].p == 3);
    CHECK(a.odd_primes[0].k == 4);
    CHECK(a.odd_primes[0].x == 1);

    const auto b = analyze_rn(9, 10, 5);
    CHECK(b.rn == 50);
    CHECK(b.a_plus_b == 1);
    REQUIRE(b.s_count() == 1);
    CHECK(b.odd_primes[0].p == 5);
    CHECK(b.odd_primes[0].x == 1);

    const auto c = analyze_rn(9, 10, 10);
    CHECK(c.a_plus_b == 2);
    CHECK(c.e == 1);

    CHECK_THROWS_AS(analyze_rn(9, 4, 5), InvalidArgument);
    CHECK_THROWS_AS(analyze_rn(9, 10, 3), InvalidArgument);
}

TEST_CASE("odd prime parts agree with independently computed orders")
{
    for (u64 q : { 3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27 }) {
        for (u64 r : divisors(q + 1)) {
            for (u64 n = 1; r * n <= 3000; ++n) {
                if (std::gcd(n, q) != 1)
                    continue;
                const auto s = analyze_rn(q, r, n);
                u64 rest = s.rn >> s.a_plus_b;
                REQUIRE(oracle::v2(s.rn) == s.a_plus_b);
                REQUIRE(oracle::v2(q + 1) == s.e);
                for (const auto& part : s.odd_primes) {
                    u64 pk = 1;
                    for (unsigned i = 0; i < part.k; ++i)
                        pk *= part.p;
                    REQUIRE(rest % pk == 0);
                    rest /= pk;
                    REQUIRE(rest % part.p != 0);
                    const u64 o = oracle::order_mod(q, pk);
                    REQUIRE(oracle::v2(o) == part.x);
                    REQUIRE(oracle::v2(oracle::order_mod(q, part.p)) == part.x);
                    REQUIRE(o == (u64{ 1 } << part.x) * part.y);
                }
                REQUIRE(rest == 1);
            }
        }
    }
}

TEST_CASE("existence examples by every method")
{
    for (auto [q, r, n, expect] : std::vector<std::tuple<u64, u64, u64, bool>>{
             { 11, 12, 27, false }, { 9, 10, 5, false }, { 9, 10, 10, true }, { 5, 3, 8, true }, { 13, 14, 17, true } }) {
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(exists_by_theorem(q, r, n).exists == expect);
        CHECK(exists_by_coset_oracle(q, r, n) == expect);
        CHECK(exists_by_factor_oracle(q, r, n) == expect);
    }
    CHECK(exists_by_theorem(11, 12, 27).rule == ExistenceRule::high_two_power_none);
    CHECK(exists_by_theorem(9, 10, 5).rule == ExistenceRule::low_two_power_none);
    CHECK(exists_by_theorem(9, 10, 10).rule == ExistenceRule::q_one_mod_four);
}

TEST_CASE("rn a power of two is decided by the coset oracle")
{
    for (auto [q, r, n] : std::vector<std::tuple<u64, u64, u64>>{ { 3, 4, 2 }, { 7, 8, 1 }, { 7, 4, 4 }, { 5, 2, 8 } }) {
        const auto v = exists_by_theorem(q, r, n);
        CHECK(v.oracle_decided);
        CHECK(v.rule == ExistenceRule::decided_by_cosets);
        CHECK(v.exists == exists_by_coset_oracle(q, r, n));
    }
}

TEST_CASE("theorem against enumeration of every coset union")
{
    std::size_t checked = 0;
    for (u64 q : { 3, 5, 7, 9, 11, 13 }) {
        for (u64 r : divisors(q + 1)) {
            for (u64 n = 1; r * n <= 400; ++n) {
                if (std::gcd(n, q) != 1 || oracle::coset_partition(q, n, r).size() > 14)
                    continue;
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(n);
                const bool brute = oracle::some_dual_containing_union(q, n, r);
                REQUIRE(exists_by_theorem(q, r, n).exists == brute);
                REQUIRE(exists_by_coset_oracle(q, r, n) == brute);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("three-way agreement on a reduced grid")
{
    const auto sweep = agreement_sweep({ 3, 5, 7, 9, 11 }, 400);
    CHECK(sweep.disagreements.empty());
    CHECK(sweep.instances > 200);
    CHECK(sweep.factor_checked > 0);
    CHECK(sweep.oracle_decided > 0);
}

TEST_CASE("corollary instances all report existence")
{
    const auto sweep = corollary_sweeps(128);
    CHECK(sweep.failures.empty());
    bool saw_40 = false, saw_17 = false, saw_5 = false, saw_q3_tenth = false;
    for (const auto& c : sweep.checked) {
        const auto [q, r, n] = c.instance;
        saw_40 |= q == 11 && r == 3 && n == 40;
        saw_17 |= q == 13 && r == 14 && n == 17 && c.corollary == "tenth-length";
        saw_5 |= q == 7 && r == 8 && n == 5;
        saw_q3_tenth |= q == 3 && c.corollary == "tenth-length";
    }
    CHECK(saw_40);
    CHECK(saw_17);
    CHECK(saw_5);
    CHECK_FALSE(saw_q3_tenth);
    for (std::size_t i = 1; i < sweep.checked.size(); ++i) {
        const auto& a = sweep.checked[i - 1].instance;
        const auto& b = sweep.checked[i].instance;
        REQUIRE(std::tie(a.q, a.r, a.n) <= std::tie(b.q, b.r, b.n));
    }
}

TEST_CASE("existence rejects r not dividing q + 1")
{
    CHECK_THROWS_AS(exists_by_theorem(5, 4, 3), InvalidArgument);
    CHECK_THROWS_AS(exists_by_coset_oracle(5, 4, 3), InvalidArgument);
    CHECK(std::string(rule_name(ExistenceRule::q_one_mod_four)).size() > 0);
}
