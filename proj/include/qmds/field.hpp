#pragma once

#include "qmds/arith.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace qmds {

/**
 * An element of a prime-power field, stored as its polynomial-basis
 * coordinates packed in base p: code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
 *
 * Elements carry no reference to their field; all arithmetic goes through
 * the owning PrimePowerField, which validates membership.
 */
struct FieldElement {
    u64 code = 0;

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/**
 * F_{p^m} realized as Z_p[X]/(f) for the lexicographically smallest monic
 * irreducible f (coefficients compared constant term first), with the
 * lexicographically smallest primitive element as generator.
 *
 * Fields of order up to kTableLimit use exp/log tables for multiplication;
 * larger ones fall back to schoolbook multiplication modulo f.
 */
class PrimePowerField {
public:
    static constexpr unsigned kMaxDegree = 64;
    static constexpr u64 kTableLimit = u64{1} << 20;

    PrimePowerField(u64 p, unsigned m);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    u64 order() const { return order_; }
    u64 group_order() const { return order_ - 1; }

    /// Monic modulus, constant term first, size degree() + 1.
    const std::vector<u64>& modulus() const { return modulus_; }
    FieldElement generator() const { return generator_; }
    const Factorization& group_order_factors() const { return group_factors_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return { 1 }; }
    /// Image of an integer in the prime subfield.
    FieldElement from_int(long long v) const;
    FieldElement from_coords(std::span<const u64> coords) const;
    std::vector<u64> coords(FieldElement x) const;

    bool contains(FieldElement x) const { return x.code < order_; }
    bool is_zero(FieldElement x) const { return x.code == 0; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, u64 e) const;

    /// Multiplicative order of a nonzero element.
    u64 element_order(FieldElement x) const;
    bool is_primitive(FieldElement x) const;

    /// True when both describe the same concrete realization.
    bool same_as(const PrimePowerField& other) const;

    std::string to_string(FieldElement x) const;

private:
    void unpack(u64 code, u64* out) const;
    u64 pack(const u64* digits) const;
    FieldElement mul_reduce(FieldElement a, FieldElement b) const;
    FieldElement pow_reduce(FieldElement a, u64 e) const;

    u64 p_;
    unsigned m_;
    u64 order_;
    std::vector<u64> modulus_;
    FieldElement generator_;
    Factorization group_factors_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const PrimePowerField>;

/// Deterministic construction of F_{p^m}. Throws InvalidArgument for a
/// non-prime p or m = 0 and BudgetExceeded when p^m exceeds 2^60.
FieldPtr build_field(u64 p, unsigned m);

/// Memoized build_field; safe to call from several threads.
FieldPtr cached_field(u64 p, unsigned m);

/// generator^((p^m - 1) / r), an element of exact order r.
FieldElement element_of_order(const PrimePowerField& field, u64 r);

/// x -> x^q on a field of order q^2. Throws InvalidArgument on odd degree.
FieldElement frobenius_conj(const PrimePowerField& field, FieldElement x);

/// Injective ring map from a subfield realization into a larger field.
class Embedding {
public:
    Embedding(FieldPtr base, FieldPtr target, std::vector<FieldElement> image);

    static Embedding identity(const FieldPtr& field);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& target() const { return target_; }

    FieldElement apply(FieldElement x) const;
    /// Preimage of y, or nullopt when y lies outside the image.
    std::optional<FieldElement> project(FieldElement y) const;

private:
    FieldPtr base_;
    FieldPtr target_;
    // Shared so copies of an embedding stay cheap.
    std::shared_ptr<const std::vector<FieldElement>> image_;
    std::shared_ptr<const std::unordered_map<u64, u64>> preimage_;
};

struct FieldExtension {
    FieldPtr field;
    Embedding embedding;
};

/// The degree-t extension of base, built directly over the prime field,
/// together with the embedding of base into it.
FieldExtension extension_field(const FieldPtr& base, unsigned t);

/// Memoized extension_field.
FieldExtension cached_extension(const FieldPtr& base, unsigned t);

/// Whether (p^m)^t stays within the 2^60 exact budget.
bool extension_within_budget(const PrimePowerField& base, unsigned t);

} // namespace qmds
