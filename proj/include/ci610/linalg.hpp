#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ci610/errors.hpp"
#include "ci610/field.hpp"

namespace ci610 {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free (Bareiss) elimination. Works over any integral domain with
// exact division, so the same code serves Q, F_p and F[t] entries; over the
// rationals it keeps intermediate entries integral when the input is.
// Returns the rank; if `det_out` is given the matrix must be square and the
// determinant is stored there (zero when rank-deficient).
template <typename T, typename DivFn>
std::size_t bareiss_rank(Matrix<T> m, T one, DivFn exact_division, T* det_out = nullptr) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    T prev = one;
    bool negated = false;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
            negated = !negated;
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = exact_division(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = m[rank][col] - m[rank][col]; // zero of the right field
        }
        prev = m[rank][col];
        ++rank;
    }
    if (det_out) {
        if (rows != cols) throw Error("determinant of a non-square matrix");
        if (rank < rows) {
            *det_out = one - one;
        } else {
            *det_out = negated ? (one - one) - prev : prev;
        }
    }
    return rank;
}

template <typename F>
std::size_t rank_of(const Matrix<F>& m, const F& one_proto) {
    if (m.empty() || m[0].empty()) return 0;
    return bareiss_rank<F>(m, one_like(one_proto), [](const F& a, const F& b) { return a / b; });
}

template <typename F>
F determinant_of(const Matrix<F>& m, const F& one_proto) {
    F det = zero_like(one_proto);
    if (m.empty()) return one_like(one_proto);
    bareiss_rank<F>(m, one_like(one_proto), [](const F& a, const F& b) { return a / b; }, &det);
    return det;
}

} // namespace ci610
