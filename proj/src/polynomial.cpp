#include "qmds/polynomial.hpp"

#include "qmds/errors.hpp"
#include "qmds/tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace qmds {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b)
{
    if (a.field() != b.field() && !a.field()->same_as(*b.field()))
        throw InvalidArgument("polynomials over different fields");
}

} // namespace

Polynomial::Polynomial(FieldPtr field)
    : field_(std::move(field))
{
    if (!field_)
        throw InvalidArgument("polynomial needs a field");
}

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (!field_)
        throw InvalidArgument("polynomial needs a field");
    for (auto c : coeffs_) {
        if (!field_->contains(c))
            throw InvalidArgument("coefficient outside the field");
    }
    normalize();
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().code == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldPtr field, FieldElement c) { return Polynomial(std::move(field), { c }); }

Polynomial Polynomial::monomial(FieldPtr field, FieldElement c, std::size_t degree)
{
    std::vector<FieldElement> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::linear_root(FieldPtr field, FieldElement a)
{
    const FieldElement c0 = field->neg(a);
    const FieldElement one = field->one();
    return Polynomial(std::move(field), { c0, one });
}

FieldElement Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }

FieldElement Polynomial::leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

FieldElement Polynomial::eval(FieldElement x) const
{
    const auto& F = *field_;
    FieldElement acc = F.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), coeffs_[i]);
    return acc;
}

Polynomial Polynomial::scaled(FieldElement c) const
{
    std::vector<FieldElement> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = field_->mul(coeffs_[i], c);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    return scaled(field_->inv(leading()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    const auto& F = *a.field_;
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    const auto& F = *a.field_;
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.field_);
    const auto& F = *a.field_;
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].code == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(a.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.field_ != b.field_ && !a.field_->same_as(*b.field_))
        return false;
    return a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    if (b.is_zero())
        throw InvalidArgument("division by the zero polynomial");
    const auto& F = *a.field();
    if (a.degree() < b.degree())
        return { Polynomial(a.field()), a };

    std::vector<FieldElement> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const FieldElement lead_inv = F.inv(d.back());
    std::vector<FieldElement> quot(rem.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const FieldElement c = F.mul(rem[i + db], lead_inv);
        quot[i] = c;
        if (c.code == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i + j] = F.sub(rem[i + j], F.mul(c, d[j]));
    }
    rem.resize(db);
    return { Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem)) };
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    require_same_field(a, b);
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool divides(const Polynomial& d, const Polynomial& a) { return divrem(a, d).second.is_zero(); }

Polynomial x_pow_minus(FieldPtr field, u64 n, FieldElement c)
{
    std::vector<FieldElement> v(n + 1);
    v[0] = field->neg(c);
    v[n] = field->add(v[n], field->one());
    return Polynomial(std::move(field), std::move(v));
}

Polynomial reciprocal_star(const Polynomial& f)
{
    if (!f.is_monic())
        throw InvalidArgument("reciprocal needs a monic polynomial");
    if (f.coeff(0).code == 0)
        throw InvalidArgument("reciprocal needs a nonzero constant term");
    std::vector<FieldElement> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return Polynomial(f.field(), std::move(rev)).scaled(f.field()->inv(f.coeff(0)));
}

Polynomial conjugate(const Polynomial& f)
{
    const auto& F = *f.field();
    return f.map_coeffs(f.field(), [&](FieldElement c) { return frobenius_conj(F, c); });
}

Polynomial sigma(const Polynomial& f) { return reciprocal_star(conjugate(f)); }

FieldElement RootContext::eta_pow(u64 s) const { return big().pow(eta, s % (r * n)); }

Polynomial RootContext::root_product(const std::vector<u64>& residues) const
{
    const auto& E = big();
    std::vector<FieldElement> acc{ E.one() };
    for (u64 s : residues) {
        const FieldElement root = eta_pow(s);
        std::vector<FieldElement> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = E.add(next[i + 1], acc[i]);
            next[i] = E.sub(next[i], E.mul(acc[i], root));
        }
        acc = std::move(next);
    }
    std::vector<FieldElement> down(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        auto c = ext.embedding.project(acc[i]);
        if (!c)
            throw VerificationFailure("root product has a coefficient outside F_{q^2}");
        down[i] = *c;
    }
    return Polynomial(base, std::move(down));
}

unsigned eta_extension_degree(u64 q, u64 n, u64 r)
{
    const u64 rn = checked_mul(r, n);
    if (std::gcd(rn, q) != 1)
        throw InvalidArgument("rn is not coprime to q");
    return static_cast<unsigned>(multiplicative_order(mul_mod(q, q, rn), rn));
}

bool root_context_within_budget(u64 q, u64 n, u64 r)
{
    const auto pp = as_prime_power(q);
    if (!pp)
        return false;
    const unsigned t = eta_extension_degree(q, n, r);
    return extension_within_budget(*cached_field(pp->p, 2 * pp->m), t);
}

RootContext make_root_context(u64 q, u64 n, u64 r)
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
    if (!extension_within_budget(*base, t))
        throw BudgetExceeded("extension hosting eta exceeds 2^60");
    RootContext ctx{ q, n, r, base, cached_extension(base, t), t, {}, {} };
    ctx.lambda = element_of_order(*ctx.base, r);

    const auto& E = ctx.big();
    const u64 rn = r * n;
    const FieldElement omega = E.pow(E.generator(), E.group_order() / rn);
    const FieldElement lambda_up = ctx.ext.embedding.apply(ctx.lambda);
    // omega^n has order r; find the power of it that equals lambda.
    const FieldElement omega_n = E.pow(omega, n);
    u64 j0 = 0;
    FieldElement x = E.one();
    for (u64 j = 0; j < r; ++j) {
        if (x == lambda_up) {
            j0 = j;
            break;
        }
        x = E.mul(x, omega_n);
    }
    if (x != lambda_up)
        throw VerificationFailure("lambda is not a power of omega^n");
    u64 j = j0;
    while (std::gcd(j, rn) != 1)
        j += r;
    ctx.eta = E.pow(omega, j);
    if (E.pow(ctx.eta, n) != lambda_up || E.element_order(ctx.eta) != rn)
        throw VerificationFailure("eta is not a primitive rn-th root with eta^n = lambda");
    return ctx;
}

FactorizationReport classify_factors(std::vector<Polynomial> factors, std::vector<u64> coset_representatives)
{
    FactorizationReport rep;
    rep.factors = std::move(factors);
    rep.coset_representatives = std::move(coset_representatives);
    std::map<std::vector<FieldElement>, std::size_t> index;
    for (std::size_t i = 0; i < rep.factors.size(); ++i)
        index.emplace(rep.factors[i].coeffs(), i);
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        const Polynomial s = sigma(rep.factors[i]);
        auto it = index.find(s.coeffs());
        if (it == index.end())
            rep.unmatched.push_back(rep.factors[i]);
        else if (it->second == i)
            rep.self_reciprocal.push_back(rep.factors[i]);
        else if (it->second > i)
            rep.pairs.emplace_back(rep.factors[i], rep.factors[it->second]);
    }
    rep.u = rep.self_reciprocal.size();
    rep.v = rep.pairs.size();
    return rep;
}

FactorizationReport factor_xn_minus_lambda(const RootContext& ctx, const CosetSystem& cosets)
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

bool factorization_supported(u64 q, u64 n, u64 r)
{
    return root_context_within_budget(q, n, r) || tower_context_supported(q, n, r);
}

FactorizationReport factor_xn_minus_lambda(u64 q, u64 n, u64 r)
{
    const CosetSystem cosets(q, n, r);
    if (root_context_within_budget(q, n, r))
        return factor_xn_minus_lambda(make_root_context(q, n, r), cosets);
    if (tower_context_supported(q, n, r))
        return factor_xn_minus_lambda(make_tower_root_context(q, n, r), cosets);
    throw BudgetExceeded("no realization of the extension hosting eta fits the budget");
}

} // namespace qmds
