#pragma once

#include "lieform/rational.hpp"

#include <vector>

namespace lieform {

/// Dense matrices over the Gaussian rationals; exact Gauss elimination.
using GMat = std::vector<std::vector<GaussRat>>;
using GVec = std::vector<GaussRat>;

inline GMat gmat_identity(int n) {
    GMat m(n, GVec(n));
    for (int i = 0; i < n; ++i) m[i][i] = GaussRat(1);
    return m;
}

inline GMat gmat_mul(const GMat& a, const GMat& b) {
    int n = (int)a.size(), k = (int)b.size(), p = (int)b[0].size();
    GMat r(n, GVec(p));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) {
            GaussRat s;
            for (int t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

inline GVec gmat_apply(const GMat& a, const GVec& v) {
    GVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        GaussRat s;
        for (size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

inline GaussRat gmat_det(GMat m) {
    int n = (int)m.size();
    GaussRat det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return GaussRat(0);
        if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
        det *= m[c][c];
        GaussRat inv = GaussRat(1) / m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            GaussRat f = m[r][c] * inv;
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

inline GMat gmat_inverse(GMat m) {
    int n = (int)m.size();
    GMat inv = gmat_identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) throw error("gmat_inverse: singular matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        GaussRat f = GaussRat(1) / m[c][c];
        for (int j = 0; j < n; ++j) { m[c][j] *= f; inv[c][j] *= f; }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            GaussRat g = m[r][c];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= g * m[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

struct LinearSolution {
    bool consistent = true;
    int kernel_dim = 0;
    GVec particular;  // one solution when consistent
};

/// Solves A x = b exactly, reporting the solution-space dimension.
inline LinearSolution gmat_solve(GMat a, GVec b) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        GaussRat f = GaussRat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= f;
        b[r] *= f;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat g = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= g * a[r][j];
            b[i] -= g * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution sol;
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) { sol.consistent = false; return sol; }
    sol.kernel_dim = cols - r;
    sol.particular.assign(cols, GaussRat(0));
    for (int i = 0; i < r; ++i) sol.particular[pivot_col[i]] = b[i];
    return sol;
}

}  // namespace lieform
