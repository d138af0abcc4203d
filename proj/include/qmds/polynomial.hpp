#pragma once

#include "qmds/cosets.hpp"
#include "qmds/field.hpp"

#include <utility>
#include <vector>

namespace qmds {

/// Dense univariate polynomial over a PrimePowerField, constant term first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field);
    Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

    static Polynomial constant(FieldPtr field, FieldElement c);
    /// c X^degree
    static Polynomial monomial(FieldPtr field, FieldElement c, std::size_t degree);
    /// X - a
    static Polynomial linear_root(FieldPtr field, FieldElement a);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;
    bool is_monic() const;

    FieldElement eval(FieldElement x) const;
    Polynomial monic() const;
    Polynomial scaled(FieldElement c) const;
    /// Apply a coefficientwise map into another field (e.g. an embedding).
    template <typename F>
    Polynomial map_coeffs(FieldPtr target, F&& f) const
    {
        std::vector<FieldElement> out;
        out.reserve(coeffs_.size());
        for (auto c : coeffs_)
            out.push_back(f(c));
        return Polynomial(std::move(target), std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void normalize();

    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

/// X^n - c
Polynomial x_pow_minus(FieldPtr field, u64 n, FieldElement c);

/// Monic reciprocal f(0)^{-1} X^deg f(1/X). Requires f monic with f(0) != 0.
Polynomial reciprocal_star(const Polynomial& f);
/// Coefficientwise x -> x^q over a field of order q^2.
Polynomial conjugate(const Polynomial& f);
/// Conjugation composed with the monic reciprocal.
Polynomial sigma(const Polynomial& f);

/**
 * Everything needed to write X^n - lambda as a product of (X - eta^s):
 * the base field F_{q^2}, lambda of order r in it, and a primitive rn-th
 * root of unity eta with eta^n = lambda, living in the smallest extension
 * F_{q^{2t}}, t = ord_{rn}(q^2).
 */
struct RootContext {
    u64 q, n, r;
    FieldPtr base;
    FieldExtension ext;
    unsigned t;
    FieldElement lambda;
    FieldElement eta;

    const PrimePowerField& big() const { return *ext.field; }
    /// eta^s in the extension field.
    FieldElement eta_pow(u64 s) const;
    /// Monic product of (X - eta^s) over the residues, projected to F_{q^2}.
    /// Throws VerificationFailure if a coefficient falls outside the base.
    Polynomial root_product(const std::vector<u64>& residues) const;
};

/// ord_{rn}(q^2), the extension degree hosting eta.
unsigned eta_extension_degree(u64 q, u64 n, u64 r);
/// Whether the extension hosting eta stays within the 2^60 field budget.
bool root_context_within_budget(u64 q, u64 n, u64 r);
RootContext make_root_context(u64 q, u64 n, u64 r);

/// The irreducible factors M_e of X^n - lambda over F_{q^2}, one per coset,
/// sorted into conjugate-self-reciprocal factors and sigma-pairs.
struct FactorizationReport {
    std::vector<Polynomial> factors;        // one per coset, coset order
    std::vector<u64> coset_representatives; // parallel to factors
    std::vector<Polynomial> self_reciprocal;
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    /// Factors whose sigma image is not itself a factor; only possible when
    /// r does not divide q + 1.
    std::vector<Polynomial> unmatched;
    std::size_t u = 0;
    std::size_t v = 0;
};

/// Sort coset-ordered factors into self-reciprocal ones and sigma-pairs.
FactorizationReport classify_factors(std::vector<Polynomial> factors, std::vector<u64> coset_representatives);

/// Uses a PrimePowerField extension when it fits 2^60 and a TowerField
/// otherwise; throws BudgetExceeded when neither applies.
FactorizationReport factor_xn_minus_lambda(u64 q, u64 n, u64 r);
FactorizationReport factor_xn_minus_lambda(const RootContext& ctx, const CosetSystem& cosets);

/// Whether factor_xn_minus_lambda(q, n, r) can run.
bool factorization_supported(u64 q, u64 n, u64 r);

} // namespace qmds
