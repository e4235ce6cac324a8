// Dense matrices over an arbitrary ring, plus exact Gaussian elimination over
// fields and the truncated-Novikov rank used as a cross-check oracle.
#pragma once

#include "novikov.hpp"
#include "upoly.hpp"

#include <cstddef>
#include <vector>

namespace thf {

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols != b.rows) fail("shape", "matrix product shape mismatch");
        Matrix r(a.rows, b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t k = 0; k < a.cols; ++k) {
                if (is_zero(a.at(i, k))) continue;
                for (std::size_t j = 0; j < b.cols; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }

    bool all_zero() const {
        for (const auto& x : data)
            if (!is_zero(x)) return false;
        return true;
    }

    template <class U, class Fn>
    Matrix<U> map(Fn fn) const {
        Matrix<U> m(rows, cols);
        for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = fn(data[i]);
        return m;
    }
};

// Exact rank over a field (needs field_inv for F).
template <class F>
std::size_t field_rank(Matrix<F> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = m.rows;
        for (std::size_t i = rank; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        F inv = field_inv(m.at(rank, col));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || is_zero(m.at(i, col))) continue;
            F f = m.at(i, col) * inv;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Solve the square full-rank system a x = rhs over a field (used to express
// boundaries in kernel coordinates); errors if a is singular.
template <class F>
Matrix<F> field_solve(Matrix<F> a, Matrix<F> rhs) {
    if (a.rows != a.cols || a.rows != rhs.rows) fail("shape", "field_solve shape");
    std::size_t n = a.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!is_zero(a.at(i, col))) {
                piv = i;
                break;
            }
        if (piv == n) fail("shape", "field_solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (std::size_t j = 0; j < rhs.cols; ++j) std::swap(rhs.at(piv, j), rhs.at(col, j));
        }
        F inv = field_inv(a.at(col, col));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(a.at(i, col))) continue;
            F f = a.at(i, col) * inv;
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
            for (std::size_t j = 0; j < rhs.cols; ++j)
                rhs.at(i, j) = rhs.at(i, j) - f * rhs.at(col, j);
        }
        for (std::size_t j = 0; j < rhs.cols; ++j) rhs.at(col, j) = rhs.at(col, j) * inv;
        a.at(col, col) = F(1);
    }
    return rhs;
}

// Rank of a matrix over a Euclidean domain, computed in its fraction field.
template <class R>
std::size_t fraction_field_rank(const Matrix<R>& m) {
    Matrix<Frac<R>> f = m.template map<Frac<R>>([](const R& x) { return Frac<R>(x); });
    return field_rank(f);
}

// Rank over Novikov coefficients by truncated Gaussian elimination: all
// elements are kept modulo exponents >= horizon.  Adequate (and tested) for
// Laurent-polynomial matrices with horizon >= 3 * max exponent spread.
std::size_t novikov_rank_truncated(Matrix<NovikovElem> m, const Rational& horizon);

}  // namespace thf
