#pragma once

#include "qmds/constacyclic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmds {

enum class FamilyId { r3, r5, r7, r10 };

const char* family_name(FamilyId id);
std::optional<FamilyId> parse_family(const std::string& name);

/**
 * One of the four dual-containing MDS families:
 *   r3:  n = (q^2-1)/3, r = 3,     2 <= d <= 2(q-2)/3 + 1,  3 | q+1
 *   r5:  n = (q^2-1)/5, r = 5,     2 <= d <= 3(q+1)/5 - 1,  5 | q+1
 *   r7:  n = (q^2-1)/7, r = 7,     2 <= d <= 4(q+1)/7 - 1,  7 | q+1
 *   r10: n = (q^2+1)/10, r = q+1,  d odd, 3 <= d <= 4m+1,   q = 10m+3 or 10m+7, m >= 1
 */
struct FamilySpec {
    FamilyId id;
    u64 q = 0, n = 0, r = 0;
    u64 d_min = 0, d_max = 0;
    bool odd_distances_only = false;
    u64 m = 0;  // r10 only
};

/// Throws InvalidArgument when q violates the family's constraints.
FamilySpec make_family(FamilyId id, u64 q);
bool family_applies(FamilyId id, u64 q);

/// Admissible distances, largest first.
std::vector<u64> admissible_distances(const FamilySpec& spec);

/// The full defining set in construction order: the consecutive residues for
/// r3/r5/r7, the pair cosets for r10.
std::vector<u64> family_full_sequence(const FamilySpec& spec);

/// Prefix of d - 1 residues (r3/r5/r7) or union of the first (d-1)/2 pair
/// cosets (r10). Throws InvalidArgument for inadmissible d.
DefiningSet family_defining_set(const FamilySpec& spec, u64 d);

bool verify_family_dual_containing(const FamilySpec& spec, u64 d);

/// [[n, n - 2d + 2, d]]_q; throws VerificationFailure if the classical code
/// is not dual-containing MDS with the expected parameters.
QuantumParams family_quantum_code(const FamilySpec& spec, u64 d);

/// All admissible codes, largest distance first.
std::vector<QuantumParams> family_quantum_codes(const FamilySpec& spec);

/// max floor((q + 1 - floor(l/m)) / 2) over n = mq - l, 1 <= m <= q,
/// 0 <= l <= q - 1; nullopt when n has no such representation.
std::optional<u64> class3_max_distance(u64 n, u64 q);

struct FamilySweep {
    std::size_t codes_checked = 0;
    /// "family q d: message" per failing construction, in sweep order.
    std::vector<std::string> failures;
};

/// Every family and admissible d for odd prime powers q <= q_max, plus the
/// closed-form tenth-length partition for every q it applies to.
FamilySweep families_sweep(u64 q_max);

struct TableRow {
    u64 q = 0;
    u64 n = 0;
    u64 family_d = 0;
    std::optional<u64> class3_d;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ComparisonTable {
    FamilyId family;
    std::vector<TableRow> rows;
};

/// The four comparison tables, regenerated from the constructions.
std::vector<ComparisonTable> comparison_tables();

/// The published rows of the same tables.
std::vector<ComparisonTable> published_tables();

struct TableMismatch {
    FamilyId family;
    TableRow computed;
    TableRow published;
};

std::vector<TableMismatch> compare_tables(const std::vector<ComparisonTable>& computed,
                                          const std::vector<ComparisonTable>& published);

} // namespace qmds
