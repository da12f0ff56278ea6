#pragma once

// Exact dense elimination over the rationals (and a fraction-free variant
// over the integers). Pivoting is deterministic: the first nonzero entry in
// column order wins, so identical inputs give identical reductions.

#include <vector>

#include "dp5/numeric.hpp"

namespace dp5 {

// In-place reduced row echelon form. Returns the pivot columns.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Rat inv = m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

// Basis of the right kernel, one column vector per free column of m.
inline std::vector<RatVec> nullspace(RatMat m) {
    const int cols = static_cast<int>(m.cols());
    const std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v = RatVec::Zero(cols);
        v(free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -m(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free Gaussian elimination (Bareiss). Exact rank of an integer
// matrix without leaving the integers.
inline int rank_bareiss(IntMat m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Determinant of a square integer matrix, Bareiss with row-swap sign.
inline Int det_bareiss(IntMat m) {
    const int n = static_cast<int>(m.rows());
    assert(m.cols() == n);
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) return 0;
        if (p != c) {
            m.row(p).swap(m.row(c));
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) m(i, j) = (m(c, c) * m(i, j) - m(i, c) * m(c, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(c, c);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

} // namespace dp5
