/**
 * @file linalg.hpp
 * @brief Dense exact matrices over Scalar: products, inverse, rank, nullspace.
 */

#pragma once

#include "scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace statesum {

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const Scalar& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    Matrix scaled(const Scalar& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }

    Vec apply(const Vec& v) const {
        Vec out(r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct RowEchelon {
    Matrix m;
    std::vector<int> pivots;  // pivot column per row
};

// Reduced row echelon form.
inline RowEchelon rref(Matrix m) {
    RowEchelon out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (int k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
        Scalar inv = m(row, col).inverse();
        for (int k = col; k < m.cols(); ++k)
            if (!m(row, k).is_zero()) m(row, k) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (int k = col; k < m.cols(); ++k)
                if (!m(row, k).is_zero()) m(i, k) -= f * m(row, k);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.m = std::move(m);
    return out;
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

// Basis of {v : m v = 0}.
inline std::vector<Vec> nullspace(const Matrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : e.pivots) is_piv[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse, or nullopt when singular.
inline std::optional<Matrix> try_inverse(const Matrix& m) {
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    RowEchelon e = rref(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
    return inv;
}

// Solve m x = b for one solution, or nullopt.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.m(static_cast<int>(r), m.cols());
    return x;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace statesum
