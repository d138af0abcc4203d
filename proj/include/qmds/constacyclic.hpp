#pragma once

#include "qmds/cosets.hpp"
#include "qmds/polynomial.hpp"

#include <memory>

namespace qmds {

/// [[n, k, d]]_q. When distance_is_lower_bound is set, d is only the BCH bound.
struct QuantumParams {
    u64 n = 0;
    u64 k = 0;
    u64 d = 0;
    u64 q = 0;
    bool is_mds = false;
    bool distance_is_lower_bound = false;

    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

/**
 * A lambda-constacyclic code of length n over F_{q^2}, identified by its
 * coset-closed defining set Z. The generator polynomial is built on first
 * request and cached; copies share the cache.
 */
class ConstaCode {
public:
    explicit ConstaCode(DefiningSet z);

    u64 q() const { return z_.system()->q(); }
    u64 n() const { return z_.system()->n(); }
    u64 r() const { return z_.system()->r(); }
    const DefiningSet& defining_set() const { return z_; }
    const CosetSystemPtr& system() const { return z_.system(); }
    u64 k() const { return n() - z_.size(); }
    u64 bch() const { return bch_; }

    /// Monic product of the minimal polynomials over the cosets in Z.
    /// Throws BudgetExceeded when the extension hosting eta is too large.
    const Polynomial& generator() const;
    /// Shared root context for this (q, n, r).
    const RootContext& roots() const;

private:
    struct Lazy;

    DefiningSet z_;
    u64 bch_;
    std::shared_ptr<Lazy> lazy_;
};

ConstaCode code_from_defining_set(const DefiningSet& z);
ConstaCode code_from_defining_set(u64 q, u64 n, u64 r, const std::vector<u64>& residues);

/// 1 + the longest circular run of consecutive i-indices (mod n) among the
/// residues 1 + r i in Z. A full run over all n indices gives n + 1.
u64 bch_bound(const DefiningSet& z);

/// BCH bound meets the Singleton bound, so d = n - k + 1 exactly.
bool certify_mds(const ConstaCode& code);

const Polynomial& generator_polynomial(const ConstaCode& code);

/// (X^n - lambda) / g.
Polynomial check_polynomial(const ConstaCode& code);

/// The code with defining set theta minus -qZ. Requires r | q + 1.
ConstaCode hermitian_dual(const ConstaCode& code);

/// Z and -qZ are disjoint. For r not dividing q + 1 the trivial codes
/// answer directly and any other code raises LambdaOrderError.
bool is_dual_containing(const ConstaCode& code);

/// g divides sigma(h): the polynomial form of the same test.
bool is_dual_containing_by_divisibility(const ConstaCode& code);

/// [[n, 2k - n, d]]_q from a dual-containing code with 2k >= n.
QuantumParams hermitian_quantum_params(const ConstaCode& code);

} // namespace qmds
