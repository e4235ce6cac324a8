#include "thf/complex.hpp"
#include "thf/snf.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace thf {

void GradedModule::normalize() {
    std::vector<Summand> merged;
    for (const auto& s : summands) {
        if (s.rank == 0) continue;
        bool hit = false;
        for (auto& t : merged) {
            Summand probe = t;
            probe.rank = s.rank;
            if (probe == s) {
                t.rank += s.rank;
                hit = true;
                break;
            }
        }
        if (!hit) merged.push_back(s);
    }
    std::sort(merged.begin(), merged.end(), [](const Summand& a, const Summand& b) {
        auto key = [](const Summand& s) {
            return std::make_tuple(static_cast<int>(s.kind), static_cast<int>(s.ring), s.k,
                                   s.free_over_u, s.trivial_t_action);
        };
        if (a.has_grading != b.has_grading) return a.has_grading < b.has_grading;
        if (a.has_grading && a.grading != b.grading) return a.grading < b.grading;
        return key(a) < key(b);
    });
    summands = std::move(merged);
}

GradedDims expand_graded_dims(const GradedModule& m, const Rational& lo, const Rational& hi) {
    GradedDims out;
    out.ring = RingTag::RatFuncT;
    for (const auto& s : m.summands) {
        if (!s.has_grading) fail("unsupported", "cannot expand relatively graded summand");
        switch (s.kind) {
            case Summand::FreeField:
                if (s.free_over_u) {
                    for (Rational g = s.grading; !(g < lo); g = g - Rational(2))
                        if (!(hi < g)) out.add(g, s.rank);
                } else if (!(s.grading < lo) && !(hi < s.grading)) {
                    out.add(s.grading, s.rank);
                }
                break;
            case Summand::Tower:
                for (Rational g = s.grading; !(hi < g); g = g + Rational(2))
                    if (!(g < lo)) out.add(g, s.rank);
                break;
            case Summand::UTorsion: {
                Rational g = s.grading;
                for (long i = 0; i < s.k; ++i, g = g - Rational(2))
                    if (!(g < lo) && !(hi < g)) out.add(g, s.rank);
                break;
            }
        }
    }
    return out;
}

namespace {

// Grading of a homogeneous vector over F2(t)[U] whose rows carry the given
// gradings; errors if the vector is not homogeneous.
Rational vector_grading(const Matrix<UPoly>& cols, std::size_t col,
                        const std::vector<Generator>& gens) {
    bool seen = false;
    Rational g(0);
    for (std::size_t i = 0; i < cols.rows; ++i) {
        const UPoly& e = cols.at(i, col);
        if (is_zero(e)) continue;
        if (!e.is_monomial())
            fail("unsupported", "non-homogeneous basis vector in graded homology");
        Rational gi = gens[i].grading - Rational(2) * Rational(e.low());
        if (!seen) {
            g = gi;
            seen = true;
        } else if (!(g == gi)) {
            fail("unsupported", "basis vector mixes gradings");
        }
    }
    if (!seen) fail("unsupported", "zero basis vector in graded homology");
    return g;
}

}  // namespace

GradedModule homology_upoly(const ChainComplex<UPoly>& c, RingTag tag) {
    check_d_squared(c);
    check_graded_upoly(c);
    std::size_t n = c.size();
    GradedModule out;
    if (n == 0) return out;

    SnfResult<UPoly> snf = smith_normal_form(c.diff);
    std::size_t r = snf.rank;

    // kernel basis: columns r..n-1 of the right transform
    std::size_t nk = n - r;
    Matrix<UPoly> ker(n, nk);
    for (std::size_t j = 0; j < nk; ++j)
        for (std::size_t i = 0; i < n; ++i) ker.at(i, j) = snf.right.at(i, r + j);

    // boundaries: diag_j * (column j of left_inv), expressed in kernel
    // coordinates via right_inv (their first r coordinates must vanish)
    Matrix<UPoly> rel(nk, r);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t q = 0; q < n; ++q) {
            UPoly y(0);
            for (std::size_t p = 0; p < n; ++p)
                y = y + snf.right_inv.at(q, p) * (snf.diag[j] * snf.left_inv.at(p, j));
            if (q < r) {
                if (!is_zero(y)) fail("invalid-complex", "image escapes the kernel");
            } else {
                rel.at(q - r, j) = y;
            }
        }
    }

    SnfResult<UPoly> snf2 = smith_normal_form(rel);

    // cokernel basis vectors in the ambient complex: ker * (left_inv columns)
    Matrix<UPoly> basis(n, nk);
    for (std::size_t j = 0; j < nk; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            UPoly v(0);
            for (std::size_t q = 0; q < nk; ++q)
                v = v + ker.at(i, q) * snf2.left_inv.at(q, j);
            basis.at(i, j) = v;
        }

    for (std::size_t j = 0; j < nk; ++j) {
        if (j < snf2.rank) {
            const UPoly& d = snf2.diag[j];
            if (d.degree() == 0) continue;  // unit: summand dies
            if (!d.is_monomial())
                fail("unsupported", "non-monomial invariant factor in graded homology");
            out.summands.push_back(
                GradedModule::u_torsion(d.degree(), vector_grading(basis, j, c.gens), tag));
        } else {
            Summand s = GradedModule::free_field(tag, 1, vector_grading(basis, j, c.gens));
            s.free_over_u = true;
            out.summands.push_back(s);
        }
    }
    out.normalize();
    return out;
}

Stabilized stabilize(const ChainComplex<UPoly>& c) {
    if (c.u_var.empty())
        fail("tag", "stabilize requires a complex tagged with a U_z basepoint variable");
    check_d_squared(c);
    check_graded_upoly(c);
    std::size_t n = c.size();
    Stabilized st;
    ChainComplex<BiPoly>& s = st.complex;
    s.u_var = c.u_var + ",U_w0";
    // theta^- copies first (cone source, grading shifted by -1), theta^+ after
    for (const auto& g : c.gens)
        s.gens.push_back({g.name + "*th-", g.grading - Rational(1)});
    for (const auto& g : c.gens) s.gens.push_back({g.name + "*th+", g.grading});
    s.diff = Matrix<BiPoly>(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BiPoly e = BiPoly::from_upoly(c.diff.at(i, j));
            s.diff.at(i, j) = e;
            s.diff.at(n + i, n + j) = e;
        }
    BiPoly uz = BiPoly::monomial(RatFunc(1), 1, 0);
    BiPoly uw = BiPoly::monomial(RatFunc(1), 0, 1);
    for (std::size_t i = 0; i < n; ++i) s.diff.at(n + i, i) = uz + uw;
    for (std::size_t i = 0; i < n; ++i) {
        st.from_theta_minus.push_back(i);
        st.incl_theta_plus.push_back(n + i);
    }
    check_d_squared(s);
    check_graded_bipoly(s);
    return st;
}

long slice_homology_dim(const ChainComplex<BiPoly>& c, const Rational& g) {
    struct Basis {
        std::map<std::tuple<std::size_t, long, long>, std::size_t> index;
        std::size_t count = 0;
    };
    auto build = [&](const Rational& h) {
        Basis b;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Rational diff = c.gens[k].grading - h;
            if (!is_integer(diff) || diff.num < 0 || diff.num % 2 != 0) continue;
            long s = static_cast<long>(diff.num / 2);
            for (long i = 0; i <= s; ++i) b.index[{k, i, s - i}] = b.count++;
        }
        return b;
    };
    auto block = [&](const Basis& src, const Basis& dst) {
        Matrix<RatFunc> m(dst.count, src.count);
        for (const auto& [key, col] : src.index) {
            auto [k, i, j] = key;
            for (std::size_t p = 0; p < c.size(); ++p) {
                const BiPoly& e = c.diff.at(p, k);
                for (const auto& [exp, coef] : e.terms) {
                    auto it = dst.index.find({p, i + exp.first, j + exp.second});
                    if (it == dst.index.end())
                        continue;  // grading bookkeeping guarantees presence; be safe
                    m.at(it->second, col) = m.at(it->second, col) + coef;
                }
            }
        }
        return m;
    };
    Basis here = build(g), below = build(g - Rational(1)), above = build(g + Rational(1));
    std::size_t r1 = field_rank(block(here, below));
    std::size_t r2 = field_rank(block(above, here));
    return static_cast<long>(here.count) - static_cast<long>(r1) - static_cast<long>(r2);
}

}  // namespace thf
