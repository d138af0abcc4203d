#pragma once

#include "qmds/polynomial.hpp"

#include <vector>

namespace qmds {

/**
 * F_{q^{2t}} realized as F_{q^2}[Y]/(g) for the lex-smallest monic
 * irreducible g of degree t (constant term first, constant term nonzero).
 * Elements are coefficient vectors of length t. The embedding of F_{q^2} is
 * the constants, so projection is a degree check.
 *
 * This realization carries no 2^60 order limit and serves factorizations
 * whose eta-extension is too large for PrimePowerField.
 */
class TowerField {
public:
    using Element = std::vector<FieldElement>;

    static constexpr unsigned kMaxDegree = 64;

    TowerField(FieldPtr base, unsigned t);

    const FieldPtr& base() const { return base_; }
    unsigned degree() const { return t_; }
    /// Monic modulus over the base, constant term first, size t + 1.
    const std::vector<FieldElement>& modulus() const { return g_; }

    Element zero() const { return Element(t_); }
    Element one() const;
    Element constant(FieldElement c) const;
    Element variable() const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& a, u64 e) const;
    /// a^((|F|^t - 1) / divisor), with the exponent computed exactly.
    Element pow_cofactor(const Element& a, u64 divisor) const;
    bool is_one(const Element& a) const;

    /// The base-field value of a constant element, or nullopt.
    std::optional<FieldElement> project(const Element& a) const;

private:
    FieldPtr base_;
    unsigned t_;
    std::vector<FieldElement> g_;
};

/// Same role as RootContext, with eta living in a TowerField.
struct TowerRootContext {
    u64 q, n, r;
    FieldPtr base;
    TowerField tower;
    FieldElement lambda;
    TowerField::Element eta;

    TowerField::Element eta_pow(u64 s) const;
    Polynomial root_product(const std::vector<u64>& residues) const;
};

/// Whether the eta-extension degree fits the tower's degree cap.
bool tower_context_supported(u64 q, u64 n, u64 r);
TowerRootContext make_tower_root_context(u64 q, u64 n, u64 r);

FactorizationReport factor_xn_minus_lambda(const TowerRootContext& ctx, const CosetSystem& cosets);

} // namespace qmds
