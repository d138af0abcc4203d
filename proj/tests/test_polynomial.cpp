#include "oracles.hpp"

#include "qmds/errors.hpp"
#include "qmds/existence.hpp"
#include "qmds/polynomial.hpp"
#include "qmds/tower.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qmds;

namespace {

Polynomial poly(const FieldPtr& F, std::vector<long long> coeffs)
{
    std::vector<FieldElement> c;
    for (auto v : coeffs)
        c.push_back(F->from_int(v));
    return Polynomial(F, c);
}

Polynomial random_monic(const FieldPtr& F, std::size_t deg, std::mt19937_64& rng)
{
    std::uniform_int_distribution<u64> pick(0, F->order() - 1);
    std::uniform_int_distribution<u64> nonzero(1, F->order() - 1);
    std::vector<FieldElement> c(deg + 1);
    c[0] = FieldElement{ nonzero(rng) };
    for (std::size_t i = 1; i < deg; ++i)
        c[i] = FieldElement{ pick(rng) };
    c[deg] = F->one();
    return Polynomial(F, c);
}

FieldPtr quadratic_field(u64 q)
{
    const auto pp = *as_prime_power(q);
    return build_field(pp.p, 2 * pp.m);
}

bool same_factor_multiset(std::vector<Polynomial> a, std::vector<Polynomial> b)
{
    if (a.size() != b.size())
        return false;
    for (const auto& f : a) {
        auto it = std::find(b.begin(), b.end(), f);
        if (it == b.end())
            return false;
        b.erase(it);
    }
    return true;
}

} // namespace

TEST_CASE("gcd and remainder examples")
{
    const auto F9 = build_field(3, 2);
    CHECK(gcd(poly(F9, { -1, 0, 1 }), poly(F9, { -1, 1 })) == poly(F9, { -1, 1 }));
    CHECK(gcd(Polynomial(F9), Polynomial(F9)).is_zero());

    const auto F3 = build_field(3, 1);
    auto [quo, rem] = divrem(poly(F3, { 0, 0, 0, 1 }), poly(F3, { 1, 0, 1 }));
    CHECK(rem == poly(F3, { 0, 2 }));
    CHECK(quo == poly(F3, { 0, 1 }));
    CHECK_THROWS_AS(divrem(poly(F3, { 1 }), Polynomial(F3)), InvalidArgument);
}

TEST_CASE("division identity on random polynomials")
{
    std::mt19937_64 rng(7);
    const auto F = build_field(5, 2);
    for (int it = 0; it < 200; ++it) {
        const auto a = random_monic(F, rng() % 12, rng).scaled(FieldElement{ 1 + rng() % 24 });
        const auto b = random_monic(F, 1 + rng() % 6, rng);
        auto [quo, rem] = divrem(a, b);
        REQUIRE(quo * b + rem == a);
        REQUIRE(rem.degree() < b.degree());
        const auto g = gcd(a, b);
        REQUIRE(g.is_monic());
        REQUIRE(divides(g, a));
        REQUIRE(divides(g, b));
    }
}

TEST_CASE("evaluation matches Horner by hand")
{
    const auto F = build_field(7, 2);
    const auto f = poly(F, { 3, 0, 2, 1 });
    for (u64 x = 0; x < F->order(); ++x) {
        const FieldElement X{ x };
        const auto expect =
            F->add(F->from_int(3), F->add(F->mul(F->from_int(2), F->mul(X, X)), F->pow(X, 3)));
        REQUIRE(f.eval(X) == expect);
    }
}

TEST_CASE("reciprocal examples")
{
    const auto F = build_field(5, 2);
    CHECK(reciprocal_star(poly(F, { -1, 1 })) == poly(F, { -1, 1 }));
    // (X - a)* = X - a^{-1}
    for (u64 a = 1; a < F->order(); ++a) {
        const FieldElement A{ a };
        REQUIRE(reciprocal_star(Polynomial::linear_root(F, A)) == Polynomial::linear_root(F, F->inv(A)));
    }
    // X^2 + 2X + 3 -> 3^{-1}(3X^2 + 2X + 1)
    CHECK(reciprocal_star(poly(F, { 3, 2, 1 })) == poly(F, { 1, 2, 3 }).scaled(F->inv(F->from_int(3))));
    CHECK_THROWS_AS(reciprocal_star(poly(F, { 0, 1 })), InvalidArgument);
    CHECK_THROWS_AS(reciprocal_star(poly(F, { 1, 2 })), InvalidArgument);
}

TEST_CASE("sigma is an involution for q^2 <= 169")
{
    std::mt19937_64 rng(2024);
    for (u64 q : { 3, 5, 7, 9, 11, 13 }) {
        const auto F = quadratic_field(q);
        for (int it = 0; it < 100; ++it) {
            const auto f = random_monic(F, 1 + rng() % 10, rng);
            REQUIRE(sigma(sigma(f)) == f);
            REQUIRE(conjugate(conjugate(f)) == f);
            REQUIRE(sigma(f).degree() == f.degree());
            // Roots map to conjugate inverses.
            for (u64 x = 1; x < F->order(); ++x) {
                const FieldElement X{ x };
                if (f.eval(X) == F->zero())
                    REQUIRE(sigma(f).eval(F->inv(frobenius_conj(*F, X))) == F->zero());
            }
        }
    }
}

TEST_CASE("sigma on base-field coefficients is the reciprocal")
{
    const auto F = build_field(3, 2);
    const auto f = poly(F, { 2, 1, 0, 1 });
    CHECK(sigma(f) == reciprocal_star(f));
    CHECK(conjugate(f) == f);
}

TEST_CASE("X^n - lambda splits into linear factors over F_25 for n = 8, r = 3")
{
    const auto rep = factor_xn_minus_lambda(5, 8, 3);
    REQUIRE(rep.factors.size() == 8);
    CHECK(rep.u == 2);
    CHECK(rep.v == 3);
    // Independent check: the roots are the eighth roots of lambda in F_25.
    const auto F = build_field(5, 2);
    const auto lam = element_of_order(*F, 3);
    std::vector<Polynomial> expect;
    for (u64 x = 1; x < F->order(); ++x) {
        if (F->pow(FieldElement{ x }, 8) == lam)
            expect.push_back(Polynomial::linear_root(F, FieldElement{ x }));
    }
    CHECK(same_factor_multiset(rep.factors, expect));
}

TEST_CASE("X^2 - lambda over F_9 for r = 4")
{
    const auto rep = factor_xn_minus_lambda(3, 2, 4);
    const auto F = build_field(3, 2);
    const auto lam = element_of_order(*F, 4);
    std::vector<Polynomial> expect;
    for (u64 x = 0; x < F->order(); ++x) {
        if (F->mul(FieldElement{ x }, FieldElement{ x }) == lam)
            expect.push_back(Polynomial::linear_root(F, FieldElement{ x }));
    }
    REQUIRE(expect.size() == 2);
    CHECK(same_factor_multiset(rep.factors, expect));
}

TEST_CASE("factorization: product, divisibility, degrees and roots")
{
    for (u64 q : { 3, 5, 7, 9, 11, 13 }) {
        for (u64 r : divisors(q + 1)) {
            for (u64 n = 1; r * n <= 200; ++n) {
                if (std::gcd(n, q) != 1 || !root_context_within_budget(q, n, r))
                    continue;
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(n);
                const auto ctx = make_root_context(q, n, r);
                const auto cs = build_cosets(q, n, r);
                const auto rep = factor_xn_minus_lambda(ctx, *cs);
                const auto target = x_pow_minus(ctx.base, n, ctx.lambda);
                Polynomial prod = Polynomial::constant(ctx.base, ctx.base->one());
                REQUIRE(rep.factors.size() == cs->cosets().size());
                for (std::size_t i = 0; i < rep.factors.size(); ++i) {
                    REQUIRE(divides(rep.factors[i], target));
                    REQUIRE(static_cast<std::size_t>(rep.factors[i].degree()) == cs->cosets()[i].size());
                    prod = prod * rep.factors[i];
                }
                REQUIRE(prod == target);
                REQUIRE(rep.u + 2 * rep.v == rep.factors.size());
                REQUIRE(rep.unmatched.empty());
                // eta^{1 + r i} are roots of X^n - lambda in the extension.
                const auto& E = ctx.big();
                const auto lam = ctx.ext.embedding.apply(ctx.lambda);
                for (u64 s : cs->theta())
                    REQUIRE(E.pow(ctx.eta_pow(s), n) == lam);
                REQUIRE(E.element_order(ctx.eta) == r * n);
                // v > 0 exactly when a nontrivial dual-containing code exists.
                REQUIRE((rep.v > 0) == exists_by_theorem(q, r, n).exists);
            }
        }
    }
}

TEST_CASE("tower realization produces the same factors as the direct one")
{
    for (auto [q, n, r] : std::vector<std::tuple<u64, u64, u64>>{
             { 3, 10, 4 }, { 5, 7, 3 }, { 5, 8, 3 }, { 7, 9, 4 }, { 11, 12, 4 }, { 9, 7, 5 } }) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(r);
        const auto cs = build_cosets(q, n, r);
        const auto direct = factor_xn_minus_lambda(make_root_context(q, n, r), *cs);
        const auto tower = factor_xn_minus_lambda(make_tower_root_context(q, n, r), *cs);
        REQUIRE(same_factor_multiset(direct.factors, tower.factors));
        REQUIRE(direct.u == tower.u);
        REQUIRE(direct.v == tower.v);
    }
}

TEST_CASE("tower field arithmetic")
{
    const auto base = build_field(3, 2);
    const TowerField T(base, 3);
    REQUIRE(T.modulus().size() == 4);
    const auto y = T.variable();
    // Y^(729 - 1) = 1 for the unit Y.
    CHECK(T.is_one(T.pow(y, 728)));
    CHECK(T.project(T.constant(FieldElement{ 5 })) == FieldElement{ 5 });
    CHECK_FALSE(T.project(y).has_value());
    CHECK(T.pow_cofactor(T.constant(base->generator()), 8) == T.pow(T.constant(base->generator()), 91));
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        TowerField::Element a(3), b(3), c(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = FieldElement{ rng() % 9 };
            b[i] = FieldElement{ rng() % 9 };
            c[i] = FieldElement{ rng() % 9 };
        }
        REQUIRE(T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c)));
        REQUIRE(T.mul(a, T.add(b, c)) == T.add(T.mul(a, b), T.mul(a, c)));
        REQUIRE(T.sub(T.add(a, b), b) == a);
    }
}

TEST_CASE("factorization beyond 2^60 uses the tower")
{
    REQUIRE_FALSE(root_context_within_budget(11, 27, 12));
    REQUIRE(factorization_supported(11, 27, 12));
    const auto rep = factor_xn_minus_lambda(11, 27, 12);
    const auto F = quadratic_field(11);
    Polynomial prod = Polynomial::constant(F, F->one());
    for (const auto& f : rep.factors)
        prod = prod * f;
    CHECK(prod == x_pow_minus(F, 27, element_of_order(*F, 12)));
    CHECK(rep.v == 0);
}

TEST_CASE("root context rejects bad parameters")
{
    CHECK_THROWS_AS(make_root_context(9, 3, 10), InvalidArgument);
    CHECK_THROWS_AS(make_root_context(5, 8, 7), InvalidArgument);
    CHECK(eta_extension_degree(11, 27, 12) == 27);
    CHECK(eta_extension_degree(13, 238 / 14, 14) == 2);
}
