#pragma once

#include <optional>
#include <vector>

#include "sintk/rational.hpp"

namespace sintk {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix int_identity(size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, size_t inner, size_t cols) {
    IntMatrix r(a.size(), std::vector<Integer>(cols, Integer(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

struct SmithForm {
    IntMatrix d;                       // U * A * V
    std::optional<IntMatrix> u, v;     // present when transforms were requested
    std::vector<Integer> diagonal;     // nonzero invariant factors d_1 | d_2 | ...
    size_t rank() const { return diagonal.size(); }
};

// Smith normal form by unimodular row and column operations. Pivots are chosen
// with minimal absolute value to keep entries small.
inline SmithForm smith_normal_form(IntMatrix a, size_t rows, size_t cols, bool transforms = true) {
    SmithForm out;
    IntMatrix u, v;
    if (transforms) {
        u = int_identity(rows);
        v = int_identity(cols);
    }
    auto swap_rows = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (transforms) std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        if (transforms)
            for (auto& row : v) std::swap(row[i], row[j]);
    };
    // row_i += f * row_j
    auto add_row = [&](size_t i, size_t j, const Integer& f) {
        for (size_t c = 0; c < cols; ++c)
            if (a[j][c] != 0) a[i][c] += f * a[j][c];
        if (transforms)
            for (size_t c = 0; c < rows; ++c)
                if (u[j][c] != 0) u[i][c] += f * u[j][c];
    };
    // col_i += f * col_j
    auto add_col = [&](size_t i, size_t j, const Integer& f) {
        for (size_t r = 0; r < rows; ++r)
            if (a[r][j] != 0) a[r][i] += f * a[r][j];
        if (transforms)
            for (size_t r = 0; r < cols; ++r)
                if (v[r][j] != 0) v[r][i] += f * v[r][j];
    };

    size_t lim = std::min(rows, cols);
    for (size_t t = 0; t < lim; ++t) {
        bool empty = false;
        while (true) {
            size_t pi = rows, pj = cols;
            Integer best;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                empty = true;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            size_t bad = rows;
            for (size_t i = t + 1; i < rows && bad == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row(t, bad, 1);
        }
        if (empty) break;
        if (a[t][t] < 0) {
            for (size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
            if (transforms)
                for (size_t c = 0; c < rows; ++c) u[t][c] = -u[t][c];
        }
        out.diagonal.push_back(a[t][t]);
    }
    out.d = std::move(a);
    if (transforms) {
        out.u = std::move(u);
        out.v = std::move(v);
    }
    return out;
}

inline SmithForm smith_normal_form(const IntMatrix& a, bool transforms = true) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    return smith_normal_form(a, rows, cols, transforms);
}

// Determinant of a square integer matrix by fraction-free elimination (Bareiss).
inline Integer int_determinant(IntMatrix m) {
    size_t n = m.size();
    Integer prev = 1, sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n ? sgn * m[n - 1][n - 1] : Integer(1);
}

} // namespace sintk
