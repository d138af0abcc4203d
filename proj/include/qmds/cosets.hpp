#pragma once

#include "qmds/arith.hpp"

#include <array>
#include <memory>
#include <vector>

namespace qmds {

/**
 * The exponent set theta = {1 + r i : 0 <= i < n} of the roots of X^n - lambda
 * (as powers of a primitive rn-th root of unity), partitioned into orbits of
 * x -> q^2 x mod rn.
 *
 * Cosets are stored sorted, each led by its minimal element, and the list of
 * cosets is ordered by that representative.
 */
class CosetSystem {
public:
    CosetSystem(u64 q, u64 n, u64 r);

    u64 q() const { return q_; }
    u64 n() const { return n_; }
    u64 r() const { return r_; }
    u64 modulus() const { return rn_; }

    const std::vector<u64>& theta() const { return theta_; }
    const std::vector<std::vector<u64>>& cosets() const { return cosets_; }

    bool in_theta(u64 residue) const;
    /// i such that residue = 1 + r i; throws for residues outside theta.
    u64 index_of(u64 residue) const;
    std::size_t coset_index(u64 residue) const;
    const std::vector<u64>& coset_of(u64 residue) const { return cosets_[coset_index(residue)]; }

    /// -q * residue mod rn.
    u64 neg_q(u64 residue) const;

private:
    u64 q_, n_, r_, rn_;
    std::vector<u64> theta_;
    std::vector<std::vector<u64>> cosets_;
    std::vector<std::int64_t> coset_id_;  // by residue, -1 outside theta
};

using CosetSystemPtr = std::shared_ptr<const CosetSystem>;

/// Requires q a prime power, n >= 1 with gcd(n, q) = 1, and r | q^2 - 1.
CosetSystemPtr build_cosets(u64 q, u64 n, u64 r);

/// A sorted set of residues modulo rn attached to a coset system.
class DefiningSet {
public:
    DefiningSet(CosetSystemPtr system, std::vector<u64> members);

    static DefiningSet empty(CosetSystemPtr system);
    static DefiningSet full(CosetSystemPtr system);
    /// Union of the cosets containing the given residues.
    static DefiningSet from_cosets(CosetSystemPtr system, const std::vector<u64>& residues);

    const CosetSystemPtr& system() const { return system_; }
    const std::vector<u64>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool is_empty() const { return members_.empty(); }
    bool contains(u64 residue) const;

    bool within_theta() const;
    /// Every member lies in theta and every coset touched is fully present.
    bool is_coset_closed() const;

    DefiningSet complement() const;
    DefiningSet intersect(const DefiningSet& other) const;

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) { return a.members_ == b.members_; }

private:
    CosetSystemPtr system_;
    std::vector<u64> members_;
};

/// Elementwise image z -> -q z mod rn.
DefiningSet neg_q_image(const DefiningSet& z);

/// Partition of theta for n = (q^2+1)/10, r = q+1: the fixed residue s =
/// (q^2+1)/2 and the two-element cosets {s - (q+1)t, s + (q+1)t}, listed for
/// t = (n-1)/2 down to 1.
struct TenthLengthPartition {
    u64 q, n, r, s;
    std::vector<std::array<u64, 2>> pair_cosets;
};

/// Throws InvalidArgument unless q is an odd prime power with 10 | q^2 + 1;
/// throws VerificationFailure if the closed form disagrees with orbit
/// enumeration.
TenthLengthPartition partition_q2plus1_over_10(u64 q);

} // namespace qmds
