#include "qmds/families.hpp"

#include "qmds/errors.hpp"

#include <algorithm>
#include <string>

namespace qmds {

const char* family_name(FamilyId id)
{
    switch (id) {
    case FamilyId::r3: return "r3";
    case FamilyId::r5: return "r5";
    case FamilyId::r7: return "r7";
    case FamilyId::r10: return "r10";
    }
    return "unknown";
}

std::optional<FamilyId> parse_family(const std::string& name)
{
    for (FamilyId id : { FamilyId::r3, FamilyId::r5, FamilyId::r7, FamilyId::r10 }) {
        if (name == family_name(id))
            return id;
    }
    return std::nullopt;
}

FamilySpec make_family(FamilyId id, u64 q)
{
    if (!is_odd_prime_power(q))
        throw InvalidArgument("q = " + std::to_string(q) + " is not an odd prime power");
    const u64 q2 = checked_mul(q, q);
    FamilySpec s{ id };
    s.q = q;
    switch (id) {
    case FamilyId::r3:
    case FamilyId::r5:
    case FamilyId::r7: {
        const u64 r = id == FamilyId::r3 ? 3 : id == FamilyId::r5 ? 5 : 7;
        if ((q + 1) % r != 0)
            throw InvalidArgument(std::to_string(r) + " does not divide q + 1 for q = " + std::to_string(q));
        s.r = r;
        s.n = (q2 - 1) / r;
        s.d_min = 2;
        if (id == FamilyId::r3)
            s.d_max = 2 * (q - 2) / 3 + 1;
        else if (id == FamilyId::r5)
            s.d_max = 3 * (q + 1) / 5 - 1;
        else
            s.d_max = 4 * (q + 1) / 7 - 1;
        break;
    }
    case FamilyId::r10: {
        if ((q2 + 1) % 10 != 0)
            throw InvalidArgument("10 does not divide q^2 + 1 for q = " + std::to_string(q));
        s.m = q % 10 == 3 ? (q - 3) / 10 : (q - 7) / 10;
        if (s.m == 0)
            throw InvalidArgument("q = " + std::to_string(q) + " gives m = 0");
        s.r = q + 1;
        s.n = (q2 + 1) / 10;
        s.d_min = 3;
        s.d_max = 4 * s.m + 1;
        s.odd_distances_only = true;
        break;
    }
    }
    if (s.d_max < s.d_min)
        throw InvalidArgument("no admissible distance for q = " + std::to_string(q));
    return s;
}

bool family_applies(FamilyId id, u64 q)
{
    try {
        make_family(id, q);
        return true;
    } catch (const InvalidArgument&) {
        return false;
    }
}

std::vector<u64> admissible_distances(const FamilySpec& spec)
{
    std::vector<u64> out;
    for (u64 d = spec.d_max; d >= spec.d_min; --d) {
        if (!spec.odd_distances_only || d % 2 == 1)
            out.push_back(d);
    }
    return out;
}

std::vector<u64> family_full_sequence(const FamilySpec& spec)
{
    const u64 q = spec.q;
    const u64 r = spec.r;
    const u64 rn = r * spec.n;
    std::vector<u64> out;
    if (spec.id == FamilyId::r10) {
        for (const auto& pair : partition_q2plus1_over_10(q).pair_cosets) {
            out.push_back(pair[0]);
            out.push_back(pair[1]);
        }
        out.resize(spec.d_max - 1);
        return out;
    }
    u64 offset = 0, count = 0;
    if (spec.id == FamilyId::r3) {
        offset = (q - 2) / 3;
        count = 2 * (q - 2) / 3;
    } else if (spec.id == FamilyId::r5) {
        offset = 2 * (q + 1) / 5 - 1;
        count = 3 * (q + 1) / 5 - 2;
    } else {
        offset = 3 * (q + 1) / 7 - 1;
        count = 4 * (q + 1) / 7 - 2;
    }
    if (offset + count >= spec.n || offset + count == 0)
        throw VerificationFailure("family index interval leaves [1, n)");
    for (u64 j = 1; j <= count; ++j)
        out.push_back((1 + r * (offset + j)) % rn);
    return out;
}

DefiningSet family_defining_set(const FamilySpec& spec, u64 d)
{
    const auto ds = admissible_distances(spec);
    if (std::find(ds.begin(), ds.end(), d) == ds.end())
        throw InvalidArgument("distance " + std::to_string(d) + " is not admissible for " + family_name(spec.id) +
                              " with q = " + std::to_string(spec.q));
    auto seq = family_full_sequence(spec);
    seq.resize(d - 1);
    const auto system = build_cosets(spec.q, spec.n, spec.r);
    if (spec.id != FamilyId::r10 && system->cosets().size() != spec.n)
        throw VerificationFailure("cosets modulo q^2 - 1 are not all singletons");
    DefiningSet z(system, std::move(seq));
    if (!z.is_coset_closed())
        throw VerificationFailure("family defining set is not a union of cosets");
    return z;
}

bool verify_family_dual_containing(const FamilySpec& spec, u64 d)
{
    return is_dual_containing(ConstaCode(family_defining_set(spec, d)));
}

QuantumParams family_quantum_code(const FamilySpec& spec, u64 d)
{
    const ConstaCode code(family_defining_set(spec, d));
    if (!is_dual_containing(code))
        throw VerificationFailure(std::string(family_name(spec.id)) + " code with q = " + std::to_string(spec.q) +
                                  ", d = " + std::to_string(d) + " is not dual-containing");
    if (!certify_mds(code) || code.n() - code.k() + 1 != d)
        throw VerificationFailure(std::string(family_name(spec.id)) + " code with q = " + std::to_string(spec.q) +
                                  ", d = " + std::to_string(d) + " is not certified MDS");
    const QuantumParams p = hermitian_quantum_params(code);
    if (p.k != spec.n - 2 * d + 2 || p.d != d || !p.is_mds || 2 * p.d != p.n - p.k + 2)
        throw VerificationFailure("quantum parameters disagree with [[n, n - 2d + 2, d]]");
    return p;
}

std::vector<QuantumParams> family_quantum_codes(const FamilySpec& spec)
{
    std::vector<QuantumParams> out;
    for (u64 d : admissible_distances(spec))
        out.push_back(family_quantum_code(spec, d));
    return out;
}

std::optional<u64> class3_max_distance(u64 n, u64 q)
{
    std::optional<u64> best;
    for (u64 m = 1; m <= q; ++m) {
        const u64 mq = checked_mul(m, q);
        if (mq < n || mq - n > q - 1)
            continue;
        const u64 l = mq - n;
        const u64 d = (q + 1 - l / m) / 2;
        if (!best || d > *best)
            best = d;
    }
    return best;
}

FamilySweep families_sweep(u64 q_max)
{
    FamilySweep out;
    for (u64 q = 3; q <= q_max; q += 2) {
        if (!is_odd_prime_power(q))
            continue;
        if (checked_mul(q, q) % 10 == 9) {
            try {
                partition_q2plus1_over_10(q);
            } catch (const std::exception& e) {
                out.failures.push_back("partition " + std::to_string(q) + ": " + e.what());
            }
        }
        for (FamilyId id : { FamilyId::r3, FamilyId::r5, FamilyId::r7, FamilyId::r10 }) {
            if (!family_applies(id, q))
                continue;
            const FamilySpec spec = make_family(id, q);
            for (u64 d : admissible_distances(spec)) {
                ++out.codes_checked;
                try {
                    family_quantum_code(spec, d);
                } catch (const std::exception& e) {
                    out.failures.push_back(std::string(family_name(id)) + " " + std::to_string(q) + " " +
                                           std::to_string(d) + ": " + e.what());
                }
            }
        }
    }
    return out;
}

std::vector<ComparisonTable> comparison_tables()
{
    const std::vector<std::pair<FamilyId, std::vector<u64>>> layout{
        { FamilyId::r3, { 11, 17, 23 } },
        { FamilyId::r5, { 9, 19, 29 } },
        { FamilyId::r7, { 13, 27 } },
        { FamilyId::r10, { 13, 23 } },
    };
    std::vector<ComparisonTable> out;
    for (const auto& [id, qs] : layout) {
        ComparisonTable t{ id, {} };
        for (u64 q : qs) {
            const FamilySpec spec = make_family(id, q);
            const QuantumParams best = family_quantum_code(spec, spec.d_max);
            t.rows.push_back({ q, spec.n, best.d, class3_max_distance(spec.n, q) });
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<ComparisonTable> published_tables()
{
    return {
        { FamilyId::r3, { { 11, 40, 7, 5 }, { 17, 96, 11, 8 }, { 23, 176, 15, 11 } } },
        { FamilyId::r5, { { 9, 16, 5, 4 }, { 19, 72, 11, 9 }, { 29, 168, 17, 14 } } },
        { FamilyId::r7, { { 13, 24, 7, 6 }, { 27, 104, 15, 13 } } },
        { FamilyId::r10, { { 13, 17, 5, 5 }, { 23, 53, 9, 8 } } },
    };
}

std::vector<TableMismatch> compare_tables(const std::vector<ComparisonTable>& computed,
                                          const std::vector<ComparisonTable>& published)
{
    std::vector<TableMismatch> out;
    for (const auto& pub : published) {
        auto it = std::find_if(computed.begin(), computed.end(), [&](const auto& t) { return t.family == pub.family; });
        for (const auto& row : pub.rows) {
            TableRow got{ row.q, 0, 0, std::nullopt };
            if (it != computed.end()) {
                auto r = std::find_if(it->rows.begin(), it->rows.end(), [&](const auto& x) { return x.q == row.q; });
                if (r != it->rows.end())
                    got = *r;
            }
            if (!(got == row))
                out.push_back({ pub.family, got, row });
        }
    }
    return out;
}

} // namespace qmds
