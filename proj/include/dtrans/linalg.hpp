#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace dtrans {

/// Exact Gaussian elimination over any field type with +,-,*,/ and is_zero().
template <class F>
struct LinearSolution {
    bool consistent = false;
    std::vector<F> particular;                // one solution of A x = b
    std::vector<std::vector<F>> nullspace;    // basis of A x = 0
};

template <class F>
LinearSolution<F> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        F inv = F(1L) / a[rank][col];
        for (size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        b[rank] = b[rank] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            F factor = a[r][col];
            for (size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - factor * a[rank][c];
            b[r] = b[r] - factor * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    LinearSolution<F> out;
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return out;  // inconsistent
    out.consistent = true;
    out.particular.assign(cols, F(0L));
    for (size_t r = 0; r < rank; ++r) out.particular[pivot_col[r]] = b[r];
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0L));
        v[free] = F(1L);
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = F(0L) - a[r][free];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

template <class F>
std::vector<std::vector<F>> nullspace(const std::vector<std::vector<F>>& a) {
    if (a.empty()) return {};
    std::vector<F> zero(a.size(), F(0L));
    return solve_linear(a, zero).nullspace;
}

template <class F>
F determinant(std::vector<std::vector<F>> a) {
    const size_t n = a.size();
    F det(1L);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return F(0L);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = F(0L) - det;
        }
        det = det * a[col][col];
        F inv = F(1L) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            F factor = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
        }
    }
    return det;
}

}  // namespace dtrans
