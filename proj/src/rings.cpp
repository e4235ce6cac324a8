#include "thf/snf.hpp"

namespace thf {

NovikovElem novikov_invert_truncated(const NovikovElem& a, const Rational& horizon) {
    if (a.is_zero()) fail("division-by-zero", "truncated inverse of 0");
    Rational m = a.min_exp();
    // a = t^m (1 + u), u supported in strictly positive exponents, so
    // b = t^-m * sum_k u^k.  Writing b = t^-m s, a*b - 1 = (1+u)s - 1; both the
    // geometric tail and any term of s we drop land at exponent >= keep, so
    // truncating s below the horizon keeps the residual above it.
    NovikovElem u;
    for (std::size_t i = 1; i < a.exps.size(); ++i) u.exps.push_back(a.exps[i] - m);
    Rational keep = horizon;
    NovikovElem s(1), power(1);
    for (;;) {
        power = (power * u).truncated(keep);
        if (power.is_zero()) break;
        s = s + power;
    }
    NovikovElem b;
    for (const auto& e : s.exps) b.exps.push_back(e - m);
    return b;
}

std::size_t novikov_rank_truncated(Matrix<NovikovElem> m, const Rational& horizon) {
    // Gaussian elimination where "zero" means "no terms below the horizon".
    auto trunc = [&](const NovikovElem& x) { return x.truncated(horizon); };
    for (auto& x : m.data) x = trunc(x);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        // pivot: nonzero entry with smallest leading exponent (best conditioned)
        std::size_t piv = m.rows;
        for (std::size_t i = rank; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            if (piv == m.rows || m.at(i, col).min_exp() < m.at(piv, col).min_exp()) piv = i;
        }
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        NovikovElem inv = novikov_invert_truncated(m.at(rank, col), horizon);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            NovikovElem f = trunc(m.at(i, col) * inv);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = trunc(m.at(i, j) + f * m.at(rank, j));
        }
        ++rank;
    }
    return rank;
}

int signature(const Matrix<BigInt>& m) {
    if (m.rows != m.cols) fail("shape", "signature requires a square matrix");
    if (!(m == m.transpose())) fail("shape", "signature requires a symmetric matrix");
    std::size_t n = m.rows;
    Matrix<Rational> a = m.map<Rational>([](const BigInt& x) { return Rational(x); });

    auto sym_swap = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(i, j), a.at(k, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(j, i), a.at(j, k));
    };
    auto sym_add = [&](std::size_t i, std::size_t k, const Rational& c) {
        // row_i += c row_k, col_i += c col_k
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j) + c * a.at(k, j);
        for (std::size_t j = 0; j < n; ++j) a.at(j, i) = a.at(j, i) + c * a.at(j, k);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(a.at(k, k))) {
            // bring a nonzero diagonal entry (or create one) into position k
            std::size_t pick = n;
            for (std::size_t i = k; i < n; ++i)
                if (!is_zero(a.at(i, i))) {
                    pick = i;
                    break;
                }
            if (pick == n) {
                bool made = false;
                for (std::size_t i = k; i < n && !made; ++i)
                    for (std::size_t j = i + 1; j < n && !made; ++j)
                        if (!is_zero(a.at(i, j))) {
                            sym_add(i, j, Rational(1));  // a(i,i) becomes 2*a(i,j)
                            pick = i;
                            made = true;
                        }
                if (!made) break;  // remaining block is zero
            }
            sym_swap(pick, k);
        }
        Rational d = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a.at(i, k))) continue;
            sym_add(i, k, Rational(0) - a.at(i, k) / d);
        }
    }
    int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(a.at(k, k))) continue;
        sig += (a.at(k, k).num > 0) ? 1 : -1;
    }
    return sig;
}

}  // namespace thf
