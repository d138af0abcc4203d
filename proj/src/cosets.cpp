#include "qmds/cosets.hpp"

#include "qmds/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qmds {

CosetSystem::CosetSystem(u64 q, u64 n, u64 r)
    : q_(q), n_(n), r_(r)
{
    if (!is_prime_power(q))
        throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    if (n == 0)
        throw InvalidArgument("length must be positive");
    if (std::gcd(n, q) != 1)
        throw InvalidArgument("length " + std::to_string(n) + " is not coprime to q");
    const u64 q2m1 = checked_mul(q, q) - 1;
    if (r == 0 || q2m1 % r != 0)
        throw InvalidArgument("r = " + std::to_string(r) + " does not divide q^2 - 1");
    rn_ = checked_mul(r, n);
    if (rn_ > (u64{1} << 26))
        throw BudgetExceeded("rn too large for a coset table");

    theta_.resize(n);
    for (u64 i = 0; i < n; ++i)
        theta_[i] = (1 + r * i) % rn_;
    std::sort(theta_.begin(), theta_.end());

    const u64 mult = mul_mod(q, q, rn_);
    coset_id_.assign(rn_, -1);
    std::vector<bool> in_theta(rn_, false);
    for (u64 t : theta_)
        in_theta[t] = true;
    for (u64 t : theta_) {
        if (coset_id_[t] >= 0)
            continue;
        std::vector<u64> orbit;
        u64 x = t;
        do {
            if (!in_theta[x])
                throw VerificationFailure("theta is not closed under multiplication by q^2");
            orbit.push_back(x);
            coset_id_[x] = static_cast<std::int64_t>(cosets_.size());
            x = mul_mod(x, mult, rn_);
        } while (x != t);
        std::sort(orbit.begin(), orbit.end());
        cosets_.push_back(std::move(orbit));
    }
    // theta is visited in increasing order, so cosets are already sorted by
    // their minimal element.
}

bool CosetSystem::in_theta(u64 residue) const { return residue < rn_ && coset_id_[residue] >= 0; }

u64 CosetSystem::index_of(u64 residue) const
{
    if (!in_theta(residue))
        throw InvalidArgument("residue " + std::to_string(residue) + " is not in theta");
    // residue = 1 + r i (mod rn); the residue 0 only occurs for r = 1.
    return (residue + rn_ - 1) % rn_ / r_;
}

std::size_t CosetSystem::coset_index(u64 residue) const
{
    if (!in_theta(residue))
        throw InvalidArgument("residue " + std::to_string(residue) + " is not in theta");
    return static_cast<std::size_t>(coset_id_[residue]);
}

u64 CosetSystem::neg_q(u64 residue) const
{
    const u64 x = mul_mod(q_ % rn_, residue % rn_, rn_);
    return x == 0 ? 0 : rn_ - x;
}

CosetSystemPtr build_cosets(u64 q, u64 n, u64 r) { return std::make_shared<const CosetSystem>(q, n, r); }

DefiningSet::DefiningSet(CosetSystemPtr system, std::vector<u64> members)
    : system_(std::move(system)), members_(std::move(members))
{
    if (!system_)
        throw InvalidArgument("defining set needs a coset system");
    for (u64 z : members_) {
        if (z >= system_->modulus())
            throw InvalidArgument("residue " + std::to_string(z) + " is not reduced mod rn");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

DefiningSet DefiningSet::empty(CosetSystemPtr system) { return DefiningSet(std::move(system), {}); }

DefiningSet DefiningSet::full(CosetSystemPtr system)
{
    auto members = system->theta();
    return DefiningSet(std::move(system), std::move(members));
}

DefiningSet DefiningSet::from_cosets(CosetSystemPtr system, const std::vector<u64>& residues)
{
    std::vector<u64> members;
    for (u64 z : residues) {
        const auto& c = system->coset_of(z);
        members.insert(members.end(), c.begin(), c.end());
    }
    return DefiningSet(std::move(system), std::move(members));
}

bool DefiningSet::contains(u64 residue) const
{
    return std::binary_search(members_.begin(), members_.end(), residue);
}

bool DefiningSet::within_theta() const
{
    return std::all_of(members_.begin(), members_.end(), [&](u64 z) { return system_->in_theta(z); });
}

bool DefiningSet::is_coset_closed() const
{
    if (!within_theta())
        return false;
    for (u64 z : members_) {
        for (u64 w : system_->coset_of(z)) {
            if (!contains(w))
                return false;
        }
    }
    return true;
}

DefiningSet DefiningSet::complement() const
{
    std::vector<u64> out;
    std::set_difference(system_->theta().begin(), system_->theta().end(), members_.begin(), members_.end(),
                        std::back_inserter(out));
    return DefiningSet(system_, std::move(out));
}

DefiningSet DefiningSet::intersect(const DefiningSet& other) const
{
    std::vector<u64> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    return DefiningSet(system_, std::move(out));
}

DefiningSet neg_q_image(const DefiningSet& z)
{
    std::vector<u64> out;
    out.reserve(z.size());
    for (u64 x : z.members())
        out.push_back(z.system()->neg_q(x));
    return DefiningSet(z.system(), std::move(out));
}

TenthLengthPartition partition_q2plus1_over_10(u64 q)
{
    if (!is_odd_prime_power(q))
        throw InvalidArgument("q = " + std::to_string(q) + " is not an odd prime power");
    const u64 q2p1 = checked_mul(q, q) + 1;
    if (q2p1 % 10 != 0)
        throw InvalidArgument("10 does not divide q^2 + 1 for q = " + std::to_string(q));

    TenthLengthPartition part;
    part.q = q;
    part.n = q2p1 / 10;
    part.r = q + 1;
    const u64 rn = checked_mul(part.r, part.n);
    part.s = (q2p1 / 2) % rn;

    const u64 half = (part.n - 1) / 2;
    for (u64 k = 0; k < half; ++k) {
        const u64 step = mul_mod(part.r, half - k, rn);
        const u64 lo = (part.s + rn - step) % rn;
        const u64 hi = (part.s + step) % rn;
        part.pair_cosets.push_back({ lo, hi });
    }

    // Cross-check against orbit enumeration.
    const auto system = build_cosets(q, part.n, part.r);
    const auto& singleton = system->coset_of(part.s);
    if (singleton.size() != 1)
        throw VerificationFailure("fixed residue s does not form a singleton coset");
    std::size_t covered = 1;
    for (const auto& pair : part.pair_cosets) {
        const auto& c = system->coset_of(pair[0]);
        std::vector<u64> expected{ pair[0], pair[1] };
        std::sort(expected.begin(), expected.end());
        if (c != expected)
            throw VerificationFailure("closed-form coset disagrees with orbit enumeration");
        covered += 2;
    }
    if (covered != part.n || system->cosets().size() != part.pair_cosets.size() + 1)
        throw VerificationFailure("closed-form partition does not cover theta");
    return part;
}

} // namespace qmds
