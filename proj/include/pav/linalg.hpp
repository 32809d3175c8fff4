#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pav/rational.hpp"

namespace pav {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate value stays an exact integer: the update
/// m[i][j] <- (pivot*m[i][j] - m[i][k]*m[k][j]) / prev_pivot divides exactly,
/// because the result is a minor of the original matrix. Exact rank, no
/// rounding, singular submatrices detected precisely.
inline int bareiss_rank(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    int rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot_row = rows;
        for (std::size_t i = static_cast<std::size_t>(rank); i < rows; ++i) {
            if (m[i][col] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows) continue;  // column already eliminated
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot_row]);
        const std::size_t r = static_cast<std::size_t>(rank);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++rank;
    }
    return rank;
}

/// Rank of a matrix with rational entries: each row is scaled by the product
/// of its denominators (rank-preserving) and the integer routine does the
/// rest.
inline int rational_matrix_rank(const std::vector<std::vector<Rational>>& rows) {
    IntMatrix m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        BigInt scale = 1;
        for (const Rational& x : row) scale *= denominator(x);
        std::vector<BigInt> out;
        out.reserve(row.size());
        for (const Rational& x : row)
            out.push_back(numerator(x) * (scale / denominator(x)));
        m.push_back(std::move(out));
    }
    return bareiss_rank(std::move(m));
}

}  // namespace pav
