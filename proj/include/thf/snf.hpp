// Smith normal form over a Euclidean domain, with both transforms and their
// inverses tracked, plus exact symmetric-matrix signature by congruence
// diagonalization over the rationals.
#pragma once

#include "matrix.hpp"

namespace thf {

template <class R>
struct SnfResult {
    std::vector<R> diag;  // nonzero invariant factors, d1 | d2 | ...
    std::size_t rank = 0;
    // left * input * right = D (diagonal, canonical entries)
    Matrix<R> left, right, left_inv, right_inv;
};

namespace detail {

template <class R>
struct SnfOps {
    Matrix<R>&a, &left, &right, &left_inv, &right_inv;

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(i, j), a.at(k, j));
        for (std::size_t j = 0; j < left.cols; ++j) std::swap(left.at(i, j), left.at(k, j));
        for (std::size_t r = 0; r < left_inv.rows; ++r)
            std::swap(left_inv.at(r, i), left_inv.at(r, k));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, j), a.at(i, k));
        for (std::size_t i = 0; i < right.rows; ++i) std::swap(right.at(i, j), right.at(i, k));
        for (std::size_t c = 0; c < right_inv.cols; ++c)
            std::swap(right_inv.at(j, c), right_inv.at(k, c));
    }
    // row_i += q * row_k
    void add_row(std::size_t i, std::size_t k, const R& q) {
        if (is_zero(q)) return;
        for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) = a.at(i, j) + q * a.at(k, j);
        for (std::size_t j = 0; j < left.cols; ++j)
            left.at(i, j) = left.at(i, j) + q * left.at(k, j);
        // inverse op: col_k -= q * col_i on left_inv
        for (std::size_t r = 0; r < left_inv.rows; ++r)
            left_inv.at(r, k) = left_inv.at(r, k) - q * left_inv.at(r, i);
    }
    // col_j += q * col_k
    void add_col(std::size_t j, std::size_t k, const R& q) {
        if (is_zero(q)) return;
        for (std::size_t i = 0; i < a.rows; ++i) a.at(i, j) = a.at(i, j) + q * a.at(i, k);
        for (std::size_t i = 0; i < right.rows; ++i)
            right.at(i, j) = right.at(i, j) + q * right.at(i, k);
        for (std::size_t c = 0; c < right_inv.cols; ++c)
            right_inv.at(k, c) = right_inv.at(k, c) - q * right_inv.at(j, c);
    }
    void scale_row(std::size_t i, const R& u) {  // u a unit
        R uinv = euclid<R>::unit_inv(u);
        for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) = u * a.at(i, j);
        for (std::size_t j = 0; j < left.cols; ++j) left.at(i, j) = u * left.at(i, j);
        for (std::size_t r = 0; r < left_inv.rows; ++r)
            left_inv.at(r, i) = left_inv.at(r, i) * uinv;
    }
    void scale_col(std::size_t j, const R& u) {  // u a unit
        R uinv = euclid<R>::unit_inv(u);
        for (std::size_t i = 0; i < a.rows; ++i) a.at(i, j) = a.at(i, j) * u;
        for (std::size_t i = 0; i < right.rows; ++i) right.at(i, j) = right.at(i, j) * u;
        for (std::size_t c = 0; c < right_inv.cols; ++c)
            right_inv.at(j, c) = right_inv.at(j, c) * uinv;
    }

    // unimodular 2x2 row mix: rows (k,i) <- [[s,t],[u,v]] * rows (k,i),
    // with s*v - t*u = 1
    void rot_rows(std::size_t k, std::size_t i, const R& s, const R& t, const R& u,
                  const R& v) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            R x = a.at(k, j), y = a.at(i, j);
            a.at(k, j) = s * x + t * y;
            a.at(i, j) = u * x + v * y;
        }
        for (std::size_t j = 0; j < left.cols; ++j) {
            R x = left.at(k, j), y = left.at(i, j);
            left.at(k, j) = s * x + t * y;
            left.at(i, j) = u * x + v * y;
        }
        for (std::size_t r = 0; r < left_inv.rows; ++r) {
            R x = left_inv.at(r, k), y = left_inv.at(r, i);
            left_inv.at(r, k) = x * v - y * u;
            left_inv.at(r, i) = y * s - x * t;
        }
    }
    // unimodular 2x2 column mix: cols (k,j) <- cols (k,j) * [[s,u],[t,v]]
    // (new col k = s*col_k + t*col_j, new col j = u*col_k + v*col_j)
    void rot_cols(std::size_t k, std::size_t j, const R& s, const R& t, const R& u,
                  const R& v) {
        for (std::size_t i = 0; i < a.rows; ++i) {
            R x = a.at(i, k), y = a.at(i, j);
            a.at(i, k) = x * s + y * t;
            a.at(i, j) = x * u + y * v;
        }
        for (std::size_t i = 0; i < right.rows; ++i) {
            R x = right.at(i, k), y = right.at(i, j);
            right.at(i, k) = x * s + y * t;
            right.at(i, j) = x * u + y * v;
        }
        for (std::size_t c = 0; c < right_inv.cols; ++c) {
            R x = right_inv.at(k, c), y = right_inv.at(j, c);
            right_inv.at(k, c) = v * x - u * y;
            right_inv.at(j, c) = s * y - t * x;
        }
    }

    // Content stripping (rings with unit content only, e.g. F2(t)[U]): keeps
    // the remainder cascade from exploding coefficient degrees.
    static constexpr bool kStripContent = requires(const std::vector<R>& v) {
        { euclid<R>::content_unit_many(v) } -> std::convertible_to<R>;
    };
    void reduce_row(std::size_t i) {
        if constexpr (kStripContent) {
            std::vector<R> xs;
            for (std::size_t j = 0; j < a.cols; ++j)
                if (!is_zero(a.at(i, j))) xs.push_back(a.at(i, j));
            if (xs.empty()) return;
            R u = euclid<R>::content_unit_many(xs);
            if (!(u == R(1))) scale_row(i, u);
        }
    }
    void reduce_col(std::size_t j) {
        if constexpr (kStripContent) {
            std::vector<R> xs;
            for (std::size_t i = 0; i < a.rows; ++i)
                if (!is_zero(a.at(i, j))) xs.push_back(a.at(i, j));
            if (xs.empty()) return;
            R u = euclid<R>::content_unit_many(xs);
            if (!(u == R(1))) scale_col(j, u);
        }
    }
};

}  // namespace detail

template <class R>
SnfResult<R> smith_normal_form(Matrix<R> a) {
    std::size_t n = a.rows, m = a.cols;
    SnfResult<R> res;
    res.left = Matrix<R>::identity(n);
    res.left_inv = Matrix<R>::identity(n);
    res.right = Matrix<R>::identity(m);
    res.right_inv = Matrix<R>::identity(m);
    detail::SnfOps<R> ops{a, res.left, res.right, res.left_inv, res.right_inv};

    std::size_t bound = std::min(n, m);
    for (std::size_t k = 0; k < bound; ++k) {
        // deterministic pivot: minimal norm, ties by lowest (row, col)
        bool found = false;
        std::size_t pi = k, pj = k;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < m; ++j) {
                if (is_zero(a.at(i, j))) continue;
                if (!found || euclid<R>::norm_less(a.at(i, j), a.at(pi, pj))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        ops.swap_rows(pi, k);
        ops.swap_cols(pj, k);
        ops.reduce_row(k);

        for (;;) {
            // clear column k: exact division when possible, otherwise a
            // unimodular 2x2 mix that replaces the pivot by the gcd
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (is_zero(a.at(i, k))) continue;
                if (divides(a.at(k, k), a.at(i, k))) {
                    ops.add_row(i, k, R(0) - exact_div(a.at(i, k), a.at(k, k)));
                } else {
                    Egcd<R> e = extended_gcd(a.at(k, k), a.at(i, k));
                    R u = R(0) - exact_div(a.at(i, k), e.g);
                    R v = exact_div(a.at(k, k), e.g);
                    ops.rot_rows(k, i, e.s, e.t, u, v);
                }
                ops.reduce_row(i);
            }
            ops.reduce_row(k);
            // clear row k
            for (std::size_t j = k + 1; j < m; ++j) {
                if (is_zero(a.at(k, j))) continue;
                if (divides(a.at(k, k), a.at(k, j))) {
                    ops.add_col(j, k, R(0) - exact_div(a.at(k, j), a.at(k, k)));
                } else {
                    Egcd<R> e = extended_gcd(a.at(k, k), a.at(k, j));
                    R u = R(0) - exact_div(a.at(k, j), e.g);
                    R v = exact_div(a.at(k, k), e.g);
                    ops.rot_cols(k, j, e.s, e.t, u, v);
                    clean = false;  // column k may have been dirtied
                }
                ops.reduce_col(j);
            }
            ops.reduce_col(k);
            if (!clean) continue;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!is_zero(a.at(i, k))) clean = false;
            if (!clean) continue;
            // enforce the divisibility chain
            bool fixed = false;
            for (std::size_t i = k + 1; i < n && !fixed; ++i)
                for (std::size_t j = k + 1; j < m && !fixed; ++j)
                    if (!divides(a.at(k, k), a.at(i, j))) {
                        ops.add_row(k, i, R(1));
                        ops.reduce_row(k);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        ops.scale_row(k, euclid<R>::canonical_unit(a.at(k, k)));
    }

    for (std::size_t k = 0; k < bound; ++k) {
        if (is_zero(a.at(k, k))) break;
        res.diag.push_back(a.at(k, k));
    }
    res.rank = res.diag.size();
    return res;
}

// Signature of a symmetric integer matrix: congruence diagonalization over Q.
int signature(const Matrix<BigInt>& m);

}  // namespace thf
