#pragma once

#include "qk/qscalar.hpp"

#include <cassert>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qk {

// Field glue: the matrix code works over GRat, Ext2, QScalar or complex<double>.
inline bool fz(const GRat &x) { return x.is_zero(); }
inline bool fz(const Ext2 &x) { return x.is_zero(); }
inline bool fz(const QScalar &x) { return x.is_zero(); }
inline bool fz(const std::complex<double> &x) { return std::abs(x) < 1e-12; }
inline GRat fconj(const GRat &x) { return x.conj(); }
inline Ext2 fconj(const Ext2 &x) { return x.conj(); }
inline QScalar fconj(const QScalar &x) { return x.conj(); }
inline std::complex<double> fconj(const std::complex<double> &x) { return std::conj(x); }

template <class F> struct Matrix {
    int rows = 0, cols = 0;
    std::vector<F> a; // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    F &operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const F &operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    bool is_zero() const {
        for (auto &x : a)
            if (!fz(x)) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto &x : r.a) x = -x;
        return r;
    }
    friend Matrix operator+(const Matrix &x, const Matrix &y) {
        assert(x.rows == y.rows && x.cols == y.cols);
        Matrix r = x;
        for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
        return r;
    }
    friend Matrix operator-(const Matrix &x, const Matrix &y) {
        assert(x.rows == y.rows && x.cols == y.cols);
        Matrix r = x;
        for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
        return r;
    }
    friend Matrix operator*(const Matrix &x, const Matrix &y) {
        assert(x.cols == y.rows);
        Matrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const F &v = x(i, k);
                if (fz(v)) continue;
                for (int j = 0; j < y.cols; ++j) {
                    if (fz(y(k, j))) continue;
                    r(i, j) += v * y(k, j);
                }
            }
        return r;
    }
    friend Matrix operator*(const F &c, const Matrix &x) {
        Matrix r = x;
        for (auto &v : r.a) v = c * v;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix dagger() const {
        Matrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r(j, i) = fconj((*this)(i, j));
        return r;
    }
};

/// Row echelon reduction in place; returns rank, optionally records pivot columns.
template <class F> int row_reduce(Matrix<F> &m, std::vector<int> *pivots = nullptr) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!fz(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) = inv * m(r, j);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || fz(m(i, c))) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

template <class F> int rank(Matrix<F> m) { return row_reduce(m); }

/// Basis of the right nullspace, one column per kernel vector.
template <class F> Matrix<F> nullspace(Matrix<F> m) {
    std::vector<int> piv;
    int r = row_reduce(m, &piv);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    Matrix<F> ker(m.cols, m.cols - r);
    int k = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        ker(c, k) = F(1);
        for (int i = 0; i < r; ++i) ker(piv[i], k) = -m(i, c);
        ++k;
    }
    return ker;
}

/// Solve A X = B exactly; throws if inconsistent or underdetermined pivots missing.
template <class F> Matrix<F> solve(const Matrix<F> &A, const Matrix<F> &B) {
    assert(A.rows == B.rows);
    Matrix<F> aug(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        for (int j = 0; j < B.cols; ++j) aug(i, A.cols + j) = B(i, j);
    }
    std::vector<int> piv;
    int r = row_reduce(aug, &piv);
    Matrix<F> X(A.cols, B.cols);
    for (int i = 0; i < r; ++i) {
        if (piv[i] >= A.cols) throw std::runtime_error("solve: inconsistent system");
        for (int j = 0; j < B.cols; ++j) X(piv[i], j) = aug(i, A.cols + j);
    }
    // verify (also covers rank-deficient A with consistent B)
    Matrix<F> chk = A * X - B;
    if (!chk.is_zero()) throw std::runtime_error("solve: no exact solution");
    return X;
}

template <class F> Matrix<F> inverse(const Matrix<F> &A) {
    assert(A.rows == A.cols);
    return solve(A, Matrix<F>::identity(A.rows));
}

/// Hermitian positive-definiteness via exact LDL pivots (fields with real sign).
/// Returns +1 definite, 0 semidefinite-with-kernel, -1 indefinite.
template <class F> int hermitian_definiteness(Matrix<F> m, int (*sign_real)(const F &)) {
    assert(m.rows == m.cols);
    int n = m.rows;
    bool kernel = false;
    for (int k = 0; k < n; ++k) {
        // find a nonzero diagonal pivot among remaining
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!fz(m(i, i))) {
                p = i;
                break;
            }
        if (p < 0) {
            // all remaining diagonal zero: Hermitian PSD forces whole block zero
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (!fz(m(i, j))) return -1;
            kernel = true;
            break;
        }
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            for (int i = 0; i < n; ++i) std::swap(m(i, p), m(i, k));
        }
        int s = sign_real(m(k, k));
        if (s < 0) return -1;
        F d = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (fz(m(i, k))) continue;
            F f = m(i, k) / d;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
        for (int i = k + 1; i < n; ++i) m(k, i) = F(0);
    }
    return kernel ? 0 : 1;
}

} // namespace qk
