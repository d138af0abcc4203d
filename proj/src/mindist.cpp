#include "qmds/mindist.hpp"

#include "qmds/errors.hpp"

#include <algorithm>

namespace qmds {

Matrix::Matrix(FieldPtr f, std::size_t r, std::size_t c)
    : field(std::move(f)), rows(r), cols(c), data(r * c)
{
}

Matrix generator_matrix(const ConstaCode& code)
{
    const Polynomial& g = code.generator();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (static_cast<std::size_t>(g.degree()) + k != n)
        throw VerificationFailure("deg g + k differs from n");
    Matrix G(g.field(), k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            G.at(i, i + j) = g.coeffs()[j];
    }
    return G;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m)
{
    const auto& F = *m.field;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col).code == 0)
            ++sel;
        if (sel == m.rows)
            continue;
        if (sel != row) {
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        }
        const FieldElement inv = F.inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(row, j) = F.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).code == 0)
                continue;
            const FieldElement c = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Incrementally maintained echelon basis of column vectors.
struct Basis {
    const PrimePowerField* F;
    std::vector<std::vector<FieldElement>> vecs;
    std::vector<std::size_t> pivots;

    // Returns false when v lies in the span; counts one step per reduction.
    bool insert(std::vector<FieldElement> v, u64& steps)
    {
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            ++steps;
            const FieldElement c = v[pivots[i]];
            if (c.code == 0)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = F->sub(v[j], F->mul(c, vecs[i][j]));
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].code == 0)
            ++p;
        if (p == v.size())
            return false;
        const FieldElement inv = F->inv(v[p]);
        for (auto& x : v)
            x = F->mul(x, inv);
        vecs.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }

    void pop()
    {
        vecs.pop_back();
        pivots.pop_back();
    }
};

} // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix parity_check_matrix(const Matrix& g)
{
    Matrix r = g;
    const auto pivots = rref(r);
    const auto& F = *g.field;
    std::vector<bool> is_pivot(g.cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    Matrix H(g.field, g.cols - pivots.size(), g.cols);
    std::size_t row = 0;
    for (std::size_t f = 0; f < g.cols; ++f) {
        if (is_pivot[f])
            continue;
        H.at(row, f) = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            H.at(row, pivots[i]) = F.neg(r.at(i, f));
        ++row;
    }
    return H;
}

DistanceResult min_distance_exact(const Matrix& g, u64 w_max, u64 budget)
{
    const Matrix H = parity_check_matrix(g);
    const std::size_t n = H.cols;
    if (w_max == 0)
        w_max = H.rows + 1;
    const u64 w_cap = std::min<u64>(w_max, n);

    std::vector<std::vector<FieldElement>> columns(n, std::vector<FieldElement>(H.rows));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < H.rows; ++i)
            columns[j][i] = H.at(i, j);
    }

    DistanceResult res;
    for (u64 w = 1; w <= w_cap; ++w) {
        Basis basis{ g.field.get(), {}, {} };
        bool found = false;
        // Depth-first over increasing column tuples; every proper prefix is
        // independent because smaller w found nothing.
        auto dfs = [&](auto&& self, std::size_t start, u64 depth) -> void {
            for (std::size_t c = start; c + (w - depth) <= n && !found; ++c) {
                if (res.steps > budget)
                    throw BudgetExceeded("minimum distance search exceeded " + std::to_string(budget) + " steps");
                if (!basis.insert(columns[c], res.steps)) {
                    if (depth + 1 == w)
                        found = true;
                    continue;
                }
                if (depth + 1 < w)
                    self(self, c + 1, depth + 1);
                basis.pop();
            }
        };
        dfs(dfs, 0, 0);
        if (found) {
            res.value = w;
            res.exact = true;
            return res;
        }
    }
    res.value = w_cap + 1;
    res.exact = false;
    return res;
}

} // namespace qmds
