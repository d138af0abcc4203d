#include "qmds/tower.hpp"

#include "qmds/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>

namespace qmds {

namespace {

using BigInt = boost::multiprecision::cpp_int;

using Coeffs = std::vector<FieldElement>;

// a * b mod monic g, all over the base field; inputs have size < deg g.
Coeffs mulmod(const PrimePowerField& F, const Coeffs& a, const Coeffs& b, const Coeffs& g)
{
    const std::size_t t = g.size() - 1;
    Coeffs prod(2 * t, FieldElement{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].code == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].code != 0)
                prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
        }
    }
    for (std::size_t i = prod.size(); i-- > t;) {
        const FieldElement c = prod[i];
        if (c.code == 0)
            continue;
        for (std::size_t j = 0; j < t; ++j)
            prod[i - t + j] = F.sub(prod[i - t + j], F.mul(c, g[j]));
        prod[i] = FieldElement{};
    }
    prod.resize(t);
    return prod;
}

Coeffs powmod(const PrimePowerField& F, Coeffs a, u64 e, const Coeffs& g)
{
    Coeffs acc(g.size() - 1, FieldElement{});
    acc[0] = F.one();
    while (e > 0) {
        if (e & 1)
            acc = mulmod(F, acc, a, g);
        e >>= 1;
        if (e > 0)
            a = mulmod(F, a, a, g);
    }
    return acc;
}

// Ben-Or: g is irreducible iff gcd(Y^{Q^i} - Y, g) = 1 for i <= deg/2.
bool irreducible_over(const FieldPtr& F, const Coeffs& g)
{
    const std::size_t t = g.size() - 1;
    if (t == 1)
        return true;
    const Polynomial gp(F, g);
    const u64 Q = F->order();
    Coeffs y(t, FieldElement{});
    y[1] = F->one();
    Coeffs h = y;
    for (std::size_t i = 1; i <= t / 2; ++i) {
        h = powmod(*F, h, Q, g);
        Coeffs diff(t);
        for (std::size_t j = 0; j < t; ++j)
            diff[j] = F->sub(h[j], y[j]);
        if (gcd(Polynomial(F, diff), gp).degree() != 0)
            return false;
    }
    return true;
}

bool next_code_tuple(std::vector<FieldElement>& digits, u64 order)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i].code < order)
            return true;
        digits[i].code = 0;
    }
    return false;
}

std::vector<FieldElement> smallest_irreducible_over(const FieldPtr& F, unsigned t)
{
    std::vector<FieldElement> lower(t, FieldElement{});
    if (t > 1)
        lower[0] = F->one();
    do {
        if (t > 1 && lower[0].code == 0)
            continue;
        Coeffs g = lower;
        g.push_back(F->one());
        if (irreducible_over(F, g))
            return g;
    } while (next_code_tuple(lower, F->order()));
    throw VerificationFailure("no irreducible polynomial of degree " + std::to_string(t));
}

} // namespace

TowerField::TowerField(FieldPtr base, unsigned t)
    : base_(std::move(base)), t_(t)
{
    if (t == 0)
        throw InvalidArgument("tower degree must be at least 1");
    if (t > kMaxDegree)
        throw BudgetExceeded("tower degree " + std::to_string(t) + " exceeds supported maximum");
    if (base_->order() > PrimePowerField::kTableLimit)
        throw BudgetExceeded("tower base field too large");
    g_ = smallest_irreducible_over(base_, t);
}

TowerField::Element TowerField::one() const { return constant(base_->one()); }

TowerField::Element TowerField::constant(FieldElement c) const
{
    Element e(t_);
    e[0] = c;
    return e;
}

TowerField::Element TowerField::variable() const
{
    if (t_ == 1)
        return constant(base_->neg(g_[0]));
    Element e(t_);
    e[1] = base_->one();
    return e;
}

TowerField::Element TowerField::add(const Element& a, const Element& b) const
{
    Element out(t_);
    for (unsigned i = 0; i < t_; ++i)
        out[i] = base_->add(a[i], b[i]);
    return out;
}

TowerField::Element TowerField::sub(const Element& a, const Element& b) const
{
    Element out(t_);
    for (unsigned i = 0; i < t_; ++i)
        out[i] = base_->sub(a[i], b[i]);
    return out;
}

TowerField::Element TowerField::mul(const Element& a, const Element& b) const { return mulmod(*base_, a, b, g_); }

TowerField::Element TowerField::pow(const Element& a, u64 e) const { return powmod(*base_, a, e, g_); }

TowerField::Element TowerField::pow_cofactor(const Element& a, u64 divisor) const
{
    BigInt order = 1;
    for (unsigned i = 0; i < t_; ++i)
        order *= base_->order();
    BigInt e = order - 1;
    if (divisor == 0 || e % divisor != 0)
        throw InvalidArgument("divisor does not divide the tower's group order");
    e /= divisor;
    Element acc = one();
    Element x = a;
    while (e > 0) {
        if ((e & 1) != 0)
            acc = mul(acc, x);
        e >>= 1;
        if (e > 0)
            x = mul(x, x);
    }
    return acc;
}

bool TowerField::is_one(const Element& a) const
{
    if (a[0] != base_->one())
        return false;
    for (unsigned i = 1; i < t_; ++i) {
        if (a[i].code != 0)
            return false;
    }
    return true;
}

std::optional<FieldElement> TowerField::project(const Element& a) const
{
    for (unsigned i = 1; i < t_; ++i) {
        if (a[i].code != 0)
            return std::nullopt;
    }
    return a[0];
}

TowerField::Element TowerRootContext::eta_pow(u64 s) const { return tower.pow(eta, s % (r * n)); }

Polynomial TowerRootContext::root_product(const std::vector<u64>& residues) const
{
    std::vector<TowerField::Element> acc{ tower.one() };
    for (u64 s : residues) {
        const auto root = eta_pow(s);
        std::vector<TowerField::Element> next(acc.size() + 1, tower.zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = tower.add(next[i + 1], acc[i]);
            next[i] = tower.sub(next[i], tower.mul(acc[i], root));
        }
        acc = std::move(next);
    }
    std::vector<FieldElement> down(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        auto c = tower.project(acc[i]);
        if (!c)
            throw VerificationFailure("root product has a coefficient outside F_{q^2}");
        down[i] = *c;
    }
    return Polynomial(base, std::move(down));
}

bool tower_context_supported(u64 q, u64 n, u64 r)
{
    if (!is_prime_power(q) || checked_mul(q, q) > PrimePowerField::kTableLimit)
        return false;
    return eta_extension_degree(q, n, r) <= TowerField::kMaxDegree;
}

TowerRootContext make_tower_root_context(u64 q, u64 n, u64 r)
{
    const auto pp = as_prime_power(q);
    if (!pp)
        throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    if (n == 0 || std::gcd(n, q) != 1)
        throw InvalidArgument("length must be positive and coprime to q");
    const u64 q2 = checked_mul(q, q);
    if (r == 0 || (q2 - 1) % r != 0)
        throw InvalidArgument("r = " + std::to_string(r) + " does not divide q^2 - 1");

    FieldPtr base = cached_field(pp->p, 2 * pp->m);
    const unsigned t = eta_extension_degree(q, n, r);
    TowerRootContext ctx{ q, n, r, base, TowerField(base, t), element_of_order(*base, r), {} };
    const TowerField& T = ctx.tower;
    const u64 rn = r * n;
    const Factorization rn_factors = factorize(rn);

    // First candidate Y + c (then Y^2 + c, ...) whose cofactor power has full order rn.
    std::optional<TowerField::Element> omega;
    for (u64 c = 0; c < base->order() && !omega; ++c) {
        TowerField::Element y = T.variable();
        y[0] = base->add(y[0], FieldElement{ c });
        if (y == T.zero())
            continue;
        TowerField::Element w = T.pow_cofactor(y, rn);
        bool full = true;
        for (const auto& [p, k] : rn_factors) {
            if (T.is_one(T.pow(w, rn / p))) {
                full = false;
                break;
            }
        }
        if (full)
            omega = std::move(w);
    }
    if (!omega)
        throw VerificationFailure("no primitive rn-th root of unity found in the tower");

    const TowerField::Element lambda_up = T.constant(ctx.lambda);
    const TowerField::Element omega_n = T.pow(*omega, n);
    std::optional<u64> j0;
    TowerField::Element x = T.one();
    for (u64 j = 0; j < r; ++j) {
        if (x == lambda_up) {
            j0 = j;
            break;
        }
        x = T.mul(x, omega_n);
    }
    if (!j0)
        throw VerificationFailure("lambda is not a power of omega^n");
    u64 j = *j0;
    while (std::gcd(j, rn) != 1)
        j += r;
    ctx.eta = T.pow(*omega, j);
    if (T.pow(ctx.eta, n) != lambda_up)
        throw VerificationFailure("eta^n differs from lambda");
    return ctx;
}

FactorizationReport factor_xn_minus_lambda(const TowerRootContext& ctx, const CosetSystem& cosets)
{
    if (cosets.q() != ctx.q || cosets.n() != ctx.n || cosets.r() != ctx.r)
        throw InvalidArgument("coset system does not match the root context");
    std::vector<Polynomial> factors;
    std::vector<u64> reps;
    for (const auto& c : cosets.cosets()) {
        factors.push_back(ctx.root_product(c));
        reps.push_back(c.front());
    }
    return classify_factors(std::move(factors), std::move(reps));
}

} // namespace qmds
