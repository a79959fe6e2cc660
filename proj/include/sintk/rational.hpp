#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sintk/errors.hpp"

namespace sintk {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// Canonical a/b.
inline Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw InvalidInput("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw InvalidInput("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw InvalidInput("expected a machine integer, got " + r.get_str());
    return r.get_num().get_si();
}

inline Rational dot(const QVec& a, const QVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator*(const Rational& s, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline QVec& operator+=(QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline QVec zero_vec(size_t n) { return QVec(n, Rational(0)); }

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
    QVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

inline QMat identity(size_t n) {
    QMat r(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(QMat m) { return rref(m).size(); }

// Solves A x = b for square invertible A.
inline QVec solve(const QMat& a, const QVec& b) {
    size_t n = a.size();
    QMat aug(n, QVec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    auto piv = rref(aug);
    if (piv.size() != n || (n && piv.back() >= n))
        throw InvalidInput("singular linear system");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

inline QMat inverse(const QMat& a) {
    size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] >= n) throw InvalidInput("singular matrix");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline std::string to_string(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace sintk
