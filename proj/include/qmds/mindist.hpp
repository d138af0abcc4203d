#pragma once

#include "qmds/constacyclic.hpp"

#include <vector>

namespace qmds {

/// Dense matrix over a PrimePowerField, row-major.
struct Matrix {
    FieldPtr field;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FieldElement> data;

    Matrix(FieldPtr f, std::size_t r, std::size_t c);
    FieldElement& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    FieldElement at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Rows are the coefficient vectors of g(X) X^i, 0 <= i < k.
Matrix generator_matrix(const ConstaCode& code);

/// Gaussian elimination with the first nonzero entry as pivot.
std::size_t rank(Matrix m);

/// H with G H^T = 0 and rank n - rank(G), from the reduced row echelon
/// form of G.
Matrix parity_check_matrix(const Matrix& g);

struct DistanceResult {
    /// Exact d when exact, otherwise w_max + 1 as a lower bound.
    u64 value = 0;
    bool exact = false;
    u64 steps = 0;
};

inline constexpr u64 kDefaultDistanceBudget = 10'000'000;

/// Smallest w <= w_max such that some w columns of H are dependent, where H
/// is the parity-check matrix of G. w_max = 0 means n - k + 1. Each column
/// subset costs one step per elimination row operation; exceeding the
/// budget throws BudgetExceeded.
DistanceResult min_distance_exact(const Matrix& g, u64 w_max = 0, u64 budget = kDefaultDistanceBudget);

} // namespace qmds
