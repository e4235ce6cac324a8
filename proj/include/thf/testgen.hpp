// Deterministic random generators for matrices, graded complexes, thin-knot
// specs and modules.  Used by the verification sweep and by the test suite;
// everything is seeded explicitly so runs are reproducible.
#pragma once

#include "complex.hpp"
#include "graded.hpp"
#include "knots.hpp"
#include "matrix.hpp"

#include <random>

namespace thf {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng); }
};

inline Matrix<BigInt> random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long amp = 9) {
    Matrix<BigInt> m(r, c);
    for (auto& x : m.data) x = BigInt(rng.uniform(-amp, amp));
    return m;
}

inline F2Poly random_f2poly(Rng& rng, long maxdeg) {
    F2Poly p;
    long d = rng.uniform(-1, maxdeg);  // -1 gives the zero polynomial
    if (d < 0) return p;
    for (long i = 0; i < d; ++i)
        if (rng.coin()) p = p + F2Poly::monomial(i);
    return p + F2Poly::monomial(d);
}

inline Matrix<F2Poly> random_f2poly_matrix(Rng& rng, std::size_t r, std::size_t c,
                                           long maxdeg = 3) {
    Matrix<F2Poly> m(r, c);
    for (auto& x : m.data) x = random_f2poly(rng, maxdeg);
    return m;
}

inline LaurentPoly random_laurent(Rng& rng, long maxdeg = 3) {
    return LaurentPoly(random_f2poly(rng, maxdeg), rng.uniform(-2, 2));
}

inline Matrix<LaurentPoly> random_laurent_matrix(Rng& rng, std::size_t r, std::size_t c,
                                                 long maxdeg = 3) {
    Matrix<LaurentPoly> m(r, c);
    for (auto& x : m.data) x = random_laurent(rng, maxdeg);
    return m;
}

inline UPoly random_upoly(Rng& rng, long maxdeg_u = 2, long maxdeg_t = 2) {
    UPoly p;
    long d = rng.uniform(-1, maxdeg_u);
    if (d < 0) return p;
    for (long k = 0; k <= d; ++k)
        p.coeffs.push_back(RatFunc(random_f2poly(rng, maxdeg_t)));
    if (is_zero(p.coeffs.back())) p.coeffs.back() = RatFunc(1);
    p.trim();
    return p;
}

inline Matrix<UPoly> random_upoly_matrix(Rng& rng, std::size_t r, std::size_t c) {
    Matrix<UPoly> m(r, c);
    for (auto& x : m.data) x = random_upoly(rng);
    return m;
}

// random unimodular integer matrix (product of transvections and sign flips)
inline Matrix<BigInt> random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
    Matrix<BigInt> s = Matrix<BigInt>::identity(n);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (i == j) {
            for (std::size_t c = 0; c < n; ++c) s.at(i, c) = -s.at(i, c);
            continue;
        }
        BigInt q(rng.uniform(-2, 2));
        for (std::size_t c = 0; c < n; ++c) s.at(i, c) = s.at(i, c) + q * s.at(j, c);
    }
    return s;
}

// Random graded complex over F2(t)[U]: direct sum of free generators and
// two-generator cones of lambda*U^m, scrambled by a random grading-preserving
// change of basis (which preserves d^2 = 0 and the homology).
inline ChainComplex<UPoly> random_graded_upoly_complex(Rng& rng, std::size_t max_gens) {
    ChainComplex<UPoly> c;
    c.u_var = "U_z";
    std::size_t target = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_gens)));
    std::vector<std::pair<std::size_t, UPoly>> cones;  // (source index, entry)
    while (c.gens.size() < target) {
        Rational g(rng.uniform(-3, 4));
        if (rng.coin(0.4) || c.gens.size() + 2 > target) {
            c.gens.push_back({"f" + std::to_string(c.gens.size()), g});
        } else {
            long m = rng.uniform(0, 2);
            std::size_t x = c.gens.size();
            c.gens.push_back({"c" + std::to_string(x), g});
            c.gens.push_back({"c" + std::to_string(x + 1), g - Rational(1) + Rational(2 * m)});
            static const int kCoef[3][2] = {{1, 0}, {0, 1}, {1, 1}};  // 1, t, 1+t
            int pick = static_cast<int>(rng.uniform(0, 2));
            F2Poly lam;
            if (kCoef[pick][0]) lam = lam + F2Poly(1);
            if (kCoef[pick][1]) lam = lam + F2Poly::monomial(1);
            cones.push_back({x, UPoly::monomial(RatFunc(lam), m)});
        }
    }
    std::size_t n = c.gens.size();
    c.diff = Matrix<UPoly>(n, n);
    for (const auto& [x, e] : cones) c.diff.at(x + 1, x) = e;
    // scramble: D -> E D E^-1 for homogeneous transvections E = I + q e_ij
    int ops = static_cast<int>(rng.uniform(0, static_cast<long>(3 * n)));
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (i == j) continue;
        Rational m2 = c.gens[i].grading - c.gens[j].grading;
        if (!is_integer(m2) || m2.num < 0 || m2.num % 2 != 0) continue;
        UPoly q = UPoly::monomial(RatFunc(rng.coin() ? F2Poly(1) : F2Poly::monomial(1)),
                                  static_cast<long>(m2.num / 2));
        // row_i += q row_j then col_j += q col_i (inverse column op, char 2)
        for (std::size_t col = 0; col < n; ++col)
            c.diff.at(i, col) = c.diff.at(i, col) + q * c.diff.at(j, col);
        for (std::size_t row = 0; row < n; ++row)
            c.diff.at(row, j) = c.diff.at(row, j) + q * c.diff.at(row, i);
    }
    check_d_squared(c);
    check_graded_upoly(c);
    return c;
}

// random realizable thin spec with genus <= max_genus (built from an actual
// staircase + boxes, so the builder must accept it)
inline ThinKnotSpec random_thin_spec(Rng& rng, long max_genus = 3) {
    long gmax = rng.uniform(0, max_genus);
    long tau = rng.uniform(-gmax, gmax);
    std::map<long, long> counts;
    for (long s = -std::labs(tau); s <= std::labs(tau); ++s) counts[s] += 1;
    // boxes placed symmetrically so the Alexander polynomial stays palindromic
    for (long s = 0; s <= gmax - 1; ++s) {
        long b = rng.uniform(0, 2);
        for (long c : {s, -s}) {
            counts[c + 1] += b;
            counts[c] += 2 * b;
            counts[c - 1] += b;
            if (s == 0) break;
        }
    }
    long g = 0;
    for (const auto& [s, c] : counts)
        if (c != 0) g = std::max(g, std::labs(s));
    long sigma = -2 * tau;
    int eps = rng.coin() ? 1 : -1;
    ThinKnotSpec spec;
    spec.sigma = sigma;
    for (long s = -g; s <= g; ++s) {
        long c = counts.count(s) ? counts[s] : 0;
        int sign = ((s - tau) % 2 + 2) % 2 == 0 ? 1 : -1;  // (-1)^(s + sigma/2)
        spec.alexander.push_back(eps * sign * c);
    }
    return spec;
}

// random Lambda[U]-module without towers
inline GradedModule random_lambda_u_module(Rng& rng, int max_summands = 5) {
    GradedModule m;
    int n = static_cast<int>(rng.uniform(1, max_summands));
    for (int i = 0; i < n; ++i) {
        Rational g = Rational(rng.uniform(-8, 8)) / Rational(2);
        if (rng.coin()) {
            Summand s = GradedModule::free_field(RingTag::LambdaU, rng.uniform(1, 3), g);
            s.free_over_u = true;
            m.summands.push_back(s);
        } else {
            Summand s = GradedModule::u_torsion(rng.uniform(1, 4), g);
            s.rank = rng.uniform(1, 3);
            m.summands.push_back(s);
        }
    }
    m.normalize();
    return m;
}

// random graded complex over F2 plus a null-homotopic chain map out of it
struct RandomMapData {
    ChainComplex<F2> a, b;
    Matrix<F2> f;
};

inline ChainComplex<F2> random_f2_complex(Rng& rng, std::size_t max_gens) {
    ChainComplex<F2> c;
    std::size_t target = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_gens)));
    std::vector<std::size_t> cone_src;
    while (c.gens.size() < target) {
        Rational g(rng.uniform(-2, 3));
        if (rng.coin(0.4) || c.gens.size() + 2 > target) {
            c.gens.push_back({"f" + std::to_string(c.gens.size()), g});
        } else {
            std::size_t x = c.gens.size();
            c.gens.push_back({"c" + std::to_string(x), g});
            c.gens.push_back({"c" + std::to_string(x + 1), g - Rational(1)});
            cone_src.push_back(x);
        }
    }
    std::size_t n = c.gens.size();
    c.diff = Matrix<F2>(n, n);
    for (std::size_t x : cone_src) c.diff.at(x + 1, x) = F2(1);
    int ops = static_cast<int>(rng.uniform(0, static_cast<long>(3 * n)));
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (i == j || !(c.gens[i].grading == c.gens[j].grading)) continue;
        for (std::size_t col = 0; col < n; ++col)
            c.diff.at(i, col) = c.diff.at(i, col) + c.diff.at(j, col);
        for (std::size_t row = 0; row < n; ++row)
            c.diff.at(row, j) = c.diff.at(row, j) + c.diff.at(row, i);
    }
    check_d_squared(c);
    check_graded_field(c);
    return c;
}

inline RandomMapData random_chain_map(Rng& rng, std::size_t max_gens) {
    RandomMapData d;
    d.a = random_f2_complex(rng, max_gens);
    d.b = random_f2_complex(rng, max_gens);
    // h : A -> B of degree -1; f = d_B h + h d_A is then a null-homotopic chain
    // map of degree -2, the degree the mapping-cone grading convention expects
    Matrix<F2> h(d.b.size(), d.a.size());
    for (std::size_t i = 0; i < d.b.size(); ++i)
        for (std::size_t j = 0; j < d.a.size(); ++j)
            if (d.b.gens[i].grading == d.a.gens[j].grading - Rational(1) && rng.coin())
                h.at(i, j) = F2(1);
    d.f = d.b.diff * h;
    Matrix<F2> hd = h * d.a.diff;
    for (std::size_t i = 0; i < d.f.data.size(); ++i)
        d.f.data[i] = d.f.data[i] + hd.data[i];
    return d;
}

}  // namespace thf
