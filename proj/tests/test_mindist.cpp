#include "oracles.hpp"

#include "qmds/errors.hpp"
#include "qmds/families.hpp"
#include "qmds/mindist.hpp"

#include <doctest.h>

#include <random>

using namespace qmds;

namespace {

std::vector<std::vector<FieldElement>> rows_of(const Matrix& m)
{
    std::vector<std::vector<FieldElement>> out(m.rows, std::vector<FieldElement>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out[i][j] = m.at(i, j);
    return out;
}

void check_orthogonal(const Matrix& g, const Matrix& h)
{
    const auto& F = *g.field;
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = 0; j < h.rows; ++j) {
            FieldElement acc{};
            for (std::size_t c = 0; c < g.cols; ++c)
                acc = F.add(acc, F.mul(g.at(i, c), h.at(j, c)));
            REQUIRE(acc == F.zero());
        }
    }
}

} // namespace

TEST_CASE("generator matrix rows are shifts of g")
{
    const auto code = code_from_defining_set(5, 8, 3, { 7, 10 });
    const auto G = generator_matrix(code);
    REQUIRE(G.rows == 6);
    REQUIRE(G.cols == 8);
    const auto& g = code.generator();
    for (std::size_t i = 0; i < G.rows; ++i)
        for (std::size_t j = 0; j < G.cols; ++j)
            REQUIRE(G.at(i, j) == (j >= i && j - i <= 2 ? g.coeff(j - i) : FieldElement{}));
    CHECK(rank(G) == 6);
    const auto H = parity_check_matrix(G);
    CHECK(H.rows == 2);
    CHECK(rank(H) == 2);
    check_orthogonal(G, H);
}

TEST_CASE("exact distances of small MDS codes")
{
    const auto r3 = make_family(FamilyId::r3, 5);
    for (u64 d : { 3, 2 }) {
        const ConstaCode code(family_defining_set(r3, d));
        const auto res = min_distance_exact(generator_matrix(code));
        CHECK(res.exact);
        CHECK(res.value == d);
        CHECK(res.value == code.n() - code.k() + 1);
    }
    const ConstaCode r5(family_defining_set(make_family(FamilyId::r5, 9), 5));
    CHECK(min_distance_exact(generator_matrix(r5)).value == 5);
    const ConstaCode r10(family_defining_set(make_family(FamilyId::r10, 13), 5));
    CHECK(min_distance_exact(generator_matrix(r10)).value == 5);
}

TEST_CASE("distance agrees with codeword enumeration on small codes")
{
    std::size_t checked = 0;
    for (u64 q : { 3, 5 }) {
        for (u64 r : divisors(q + 1)) {
            for (u64 n = 2; n <= 8; ++n) {
                if (std::gcd(n, q) != 1)
                    continue;
                const auto cs = build_cosets(q, n, r);
                const auto& cos = cs->cosets();
                for (u64 mask = 1; mask + 1 < (u64{ 1 } << cos.size()); ++mask) {
                    std::vector<u64> m;
                    for (std::size_t i = 0; i < cos.size(); ++i) {
                        if (mask >> i & 1)
                            m.insert(m.end(), cos[i].begin(), cos[i].end());
                    }
                    const ConstaCode code(DefiningSet(cs, m));
                    const u64 qk = checked_pow(q * q, static_cast<unsigned>(code.k()));
                    if (qk > 20000)
                        continue;
                    CAPTURE(q);
                    CAPTURE(r);
                    CAPTURE(n);
                    CAPTURE(m.size());
                    const auto G = generator_matrix(code);
                    const auto res = min_distance_exact(G);
                    REQUIRE(res.exact);
                    REQUIRE(res.value == oracle::min_weight_by_enumeration(*G.field, rows_of(G)));
                    REQUIRE(code.bch() <= res.value);
                    REQUIRE(res.value <= n - code.k() + 1);
                    if (certify_mds(code))
                        REQUIRE(res.value == n - code.k() + 1);
                    check_orthogonal(G, parity_check_matrix(G));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("columns of H below the distance are independent")
{
    const ConstaCode code(family_defining_set(make_family(FamilyId::r5, 9), 5));
    const auto G = generator_matrix(code);
    const auto H = parity_check_matrix(G);
    const auto d = min_distance_exact(G).value;
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        std::vector<std::size_t> cols(H.cols);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(cols.begin(), cols.end(), rng);
        const std::size_t w = 1 + rng() % (d - 1);
        Matrix sub(H.field, H.rows, w);
        for (std::size_t i = 0; i < H.rows; ++i)
            for (std::size_t j = 0; j < w; ++j)
                sub.at(i, j) = H.at(i, cols[j]);
        REQUIRE(rank(sub) == w);
    }
}

TEST_CASE("search limits")
{
    const ConstaCode code(family_defining_set(make_family(FamilyId::r3, 11), 7));
    const auto G = generator_matrix(code);
    const auto bound = min_distance_exact(G, 3);
    CHECK_FALSE(bound.exact);
    CHECK(bound.value == 4);
    CHECK_THROWS_AS(min_distance_exact(G, 0, 1000), BudgetExceeded);
}

TEST_CASE("degenerate codes")
{
    const auto cs = build_cosets(5, 8, 3);
    const ConstaCode whole(DefiningSet::empty(cs));
    CHECK(min_distance_exact(generator_matrix(whole)).value == 1);
    // k = 1: only multiples of one word.
    std::vector<u64> most(cs->theta().begin(), cs->theta().end() - 1);
    const ConstaCode single(DefiningSet(cs, most));
    CHECK(min_distance_exact(generator_matrix(single)).value ==
          oracle::min_weight_by_enumeration(*build_field(5, 2), rows_of(generator_matrix(single))));
}
