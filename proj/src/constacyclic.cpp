#include "qmds/constacyclic.hpp"

#include "qmds/errors.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>

namespace qmds {

struct ConstaCode::Lazy {
    std::once_flag ctx_once;
    std::optional<RootContext> ctx;
    std::once_flag gen_once;
    std::optional<Polynomial> gen;
};

ConstaCode::ConstaCode(DefiningSet z)
    : z_(std::move(z)), bch_(bch_bound(z_)), lazy_(std::make_shared<Lazy>())
{
    if (!z_.within_theta())
        throw InvalidArgument("defining set is not contained in theta");
    if (!z_.is_coset_closed())
        throw InvalidArgument("defining set is not a union of q^2-cyclotomic cosets");
}

const RootContext& ConstaCode::roots() const
{
    std::call_once(lazy_->ctx_once, [this] { lazy_->ctx = make_root_context(q(), n(), r()); });
    return *lazy_->ctx;
}

const Polynomial& ConstaCode::generator() const
{
    std::call_once(lazy_->gen_once, [this] {
        const RootContext& ctx = roots();
        Polynomial g = Polynomial::constant(ctx.base, ctx.base->one());
        const auto& sys = *system();
        std::vector<bool> seen(sys.cosets().size(), false);
        for (u64 z : z_.members()) {
            const std::size_t c = sys.coset_index(z);
            if (seen[c])
                continue;
            seen[c] = true;
            g = g * ctx.root_product(sys.cosets()[c]);
        }
        lazy_->gen = std::move(g);
    });
    return *lazy_->gen;
}

ConstaCode code_from_defining_set(const DefiningSet& z) { return ConstaCode(z); }

ConstaCode code_from_defining_set(u64 q, u64 n, u64 r, const std::vector<u64>& residues)
{
    return ConstaCode(DefiningSet(build_cosets(q, n, r), residues));
}

u64 bch_bound(const DefiningSet& z)
{
    const auto& sys = *z.system();
    const u64 n = sys.n();
    std::vector<bool> hit(n, false);
    for (u64 x : z.members()) {
        if (sys.in_theta(x))
            hit[sys.index_of(x)] = true;
    }
    const auto count = static_cast<u64>(std::count(hit.begin(), hit.end(), true));
    if (count == n)
        return n + 1;
    if (count == 0)
        return 1;
    // Start scanning just after a gap so the circular run is never split.
    u64 start = 0;
    while (hit[start])
        ++start;
    u64 best = 0, run = 0;
    for (u64 step = 1; step <= n; ++step) {
        if (hit[(start + step) % n]) {
            best = std::max(best, ++run);
        } else {
            run = 0;
        }
    }
    return best + 1;
}

bool certify_mds(const ConstaCode& code) { return code.bch() == code.n() - code.k() + 1; }

const Polynomial& generator_polynomial(const ConstaCode& code) { return code.generator(); }

Polynomial check_polynomial(const ConstaCode& code)
{
    const RootContext& ctx = code.roots();
    auto [h, rem] = divrem(x_pow_minus(ctx.base, code.n(), ctx.lambda), code.generator());
    if (!rem.is_zero())
        throw VerificationFailure("generator does not divide X^n - lambda");
    return h;
}

ConstaCode hermitian_dual(const ConstaCode& code)
{
    if ((code.q() + 1) % code.r() != 0)
        throw InvalidArgument("r = " + std::to_string(code.r()) +
                              " does not divide q + 1; the Hermitian dual is not lambda-constacyclic");
    return ConstaCode(neg_q_image(code.defining_set()).complement());
}

bool is_dual_containing(const ConstaCode& code)
{
    const auto& z = code.defining_set();
    if ((code.q() + 1) % code.r() != 0) {
        if (z.is_empty())
            return true;
        if (z.size() == code.n())
            return false;
        throw LambdaOrderError("r = " + std::to_string(code.r()) +
                               " does not divide q + 1, so no nontrivial code contains its Hermitian dual");
    }
    return z.intersect(neg_q_image(z)).is_empty();
}

bool is_dual_containing_by_divisibility(const ConstaCode& code)
{
    const Polynomial h = check_polynomial(code);
    return divides(code.generator(), sigma(h));
}

QuantumParams hermitian_quantum_params(const ConstaCode& code)
{
    if (!is_dual_containing(code))
        throw InvalidArgument("code does not contain its Hermitian dual");
    if (2 * code.k() < code.n())
        throw InvalidArgument("dimension below n/2 gives no quantum code");
    QuantumParams p;
    p.n = code.n();
    p.k = 2 * code.k() - code.n();
    p.q = code.q();
    if (certify_mds(code)) {
        p.d = code.n() - code.k() + 1;
    } else {
        p.d = code.bch();
        p.distance_is_lower_bound = true;
    }
    p.is_mds = 2 * p.d == p.n - p.k + 2;
    return p;
}

} // namespace qmds
