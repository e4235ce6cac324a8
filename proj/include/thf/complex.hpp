// Finitely generated free chain complexes with rational gradings.
//
// Differential convention: diff.at(i, j) is the coefficient of generator i in
// the boundary of generator j.  The differential has homological degree -1,
// and each power of a U-variable carries degree -2, so a nonzero entry from
// generator j (grading g_j) to generator i (grading g_i) must be homogeneous
// of U-degree (g_i - g_j + 1)/2.
#pragma once

#include "graded.hpp"
#include "matrix.hpp"
#include "upoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace thf {

struct Generator {
    std::string name;
    Rational grading;
};

template <class R>
struct ChainComplex {
    std::vector<Generator> gens;
    Matrix<R> diff;
    std::string u_var;  // basepoint variable tag, e.g. "U_z" (empty if none)

    std::size_t size() const { return gens.size(); }
};

template <class R>
void check_d_squared(const ChainComplex<R>& c) {
    if (c.diff.rows != c.size() || c.diff.cols != c.size())
        fail("invalid-complex", "differential shape does not match generators");
    if (!(c.diff * c.diff).all_zero()) fail("invalid-complex", "d^2 != 0");
}

// grading homogeneity checks -------------------------------------------------

// over a plain field: entries only between gradings differing by exactly 1
template <class F>
void check_graded_field(const ChainComplex<F>& c) {
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (is_zero(c.diff.at(i, j))) continue;
            if (c.gens[j].grading - Rational(1) != c.gens[i].grading)
                fail("invalid-complex", "entry breaks the degree -1 convention");
        }
}

// over F2(t)[U]: each entry a monomial c*U^m with m = (g_i - g_j + 1)/2
inline void check_graded_upoly(const ChainComplex<UPoly>& c) {
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i) {
            const UPoly& e = c.diff.at(i, j);
            if (is_zero(e)) continue;
            Rational m2 = c.gens[i].grading - c.gens[j].grading + Rational(1);
            if (!is_integer(m2) || m2.num % 2 != 0 || m2.num < 0)
                fail("invalid-complex", "entry grading not realizable by U-powers");
            long m = static_cast<long>(m2.num / 2);
            if (!(e.is_monomial() && e.low() == m))
                fail("invalid-complex", "entry not homogeneous of forced U-degree");
        }
}

inline void check_graded_bipoly(const ChainComplex<BiPoly>& c) {
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i) {
            const BiPoly& e = c.diff.at(i, j);
            if (is_zero(e)) continue;
            Rational m2 = c.gens[i].grading - c.gens[j].grading + Rational(1);
            if (!is_integer(m2) || m2.num % 2 != 0 || m2.num < 0)
                fail("invalid-complex", "entry grading not realizable by U-powers");
            if (e.homogeneous_degree() != static_cast<long>(m2.num / 2))
                fail("invalid-complex", "entry not homogeneous of forced total degree");
        }
}

// homology -------------------------------------------------------------------

// Over a field: dimension of H_g = dim C_g - rank d|_g - rank d|_{g+1}.
template <class F>
GradedDims homology_field(const ChainComplex<F>& c, RingTag tag) {
    check_d_squared(c);
    check_graded_field(c);
    GradedDims h;
    h.ring = tag;
    std::map<Rational, std::vector<std::size_t>> slices;
    for (std::size_t i = 0; i < c.size(); ++i) slices[c.gens[i].grading].push_back(i);
    auto block_rank = [&](const Rational& g) -> std::size_t {
        auto src = slices.find(g);
        auto dst = slices.find(g - Rational(1));
        if (src == slices.end() || dst == slices.end()) return 0;
        Matrix<F> b(dst->second.size(), src->second.size());
        for (std::size_t jj = 0; jj < src->second.size(); ++jj)
            for (std::size_t ii = 0; ii < dst->second.size(); ++ii)
                b.at(ii, jj) = c.diff.at(dst->second[ii], src->second[jj]);
        return field_rank(b);
    };
    for (const auto& [g, idx] : slices) {
        long d = static_cast<long>(idx.size()) - static_cast<long>(block_rank(g)) -
                 static_cast<long>(block_rank(g + Rational(1)));
        h.add(g, d);
    }
    return h;
}

// Over F2(t)[U]: full decomposition into free and U-torsion summands with the
// gradings of their generators, via Smith normal form twice (kernel basis,
// then the relation matrix of the image inside it).
GradedModule homology_upoly(const ChainComplex<UPoly>& c, RingTag tag = RingTag::LambdaU);

// constructions --------------------------------------------------------------

// Mapping cone of a chain map f : A -> B (entries of f follow the same row =
// target convention).  A-part gradings are shifted by -1; A-part generator
// names get a trailing apostrophe.
template <class R>
ChainComplex<R> mapping_cone(const ChainComplex<R>& a, const ChainComplex<R>& b,
                             const Matrix<R>& f) {
    if (f.rows != b.size() || f.cols != a.size()) fail("shape", "chain map shape mismatch");
    // commutation: d_B f = f d_A  (characteristic-2 friendly comparison)
    Matrix<R> lhs = b.diff * f, rhs = f * a.diff;
    if (!(lhs == rhs)) fail("commutation", "f is not a chain map");
    ChainComplex<R> cone;
    std::size_t na = a.size(), nb = b.size();
    for (const auto& g : a.gens) cone.gens.push_back({g.name + "'", g.grading - Rational(1)});
    for (const auto& g : b.gens) cone.gens.push_back(g);
    cone.diff = Matrix<R>(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) cone.diff.at(i, j) = a.diff.at(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) cone.diff.at(na + i, na + j) = b.diff.at(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < na; ++j) cone.diff.at(na + i, j) = f.at(i, j);
    cone.u_var = a.u_var.empty() ? b.u_var : a.u_var;
    return cone;
}

// Dual complex: transposed differential, negated gradings.
template <class R>
ChainComplex<R> dualize(const ChainComplex<R>& c) {
    ChainComplex<R> d;
    for (const auto& g : c.gens) d.gens.push_back({g.name + "*", Rational(0) - g.grading});
    d.diff = c.diff.transpose();
    d.u_var = c.u_var;
    return d;
}

// Free stabilization: adjoin a basepoint variable U_{w0} and tensor with the
// two-generator vertical complex <theta^+, theta^->, gr(theta^+, theta^-) = 1.
// The result is the mapping cone of (U_{w0} + U_z) : C[U_{w0}] -> C[U_{w0}]
// with theta^- spanning the source copy.
struct Stabilized {
    ChainComplex<BiPoly> complex;
    // index maps realizing the inclusion x -> x theta^+ and the projection
    // x theta^- -> x (everything else to zero)
    std::vector<std::size_t> incl_theta_plus;   // gen i of c -> index in complex
    std::vector<std::size_t> from_theta_minus;  // gen i of c -> index in complex
};

Stabilized stabilize(const ChainComplex<UPoly>& c);

// slice homology -------------------------------------------------------------

// Exact dimension over F2(t) of H_g for a complex over F2(t)[U_z, U_{w0}]:
// each grading slice is finite dimensional because both variables lower the
// grading by 2.
long slice_homology_dim(const ChainComplex<BiPoly>& c, const Rational& g);

inline ChainComplex<BiPoly> to_bipoly(const ChainComplex<UPoly>& c) {
    ChainComplex<BiPoly> r;
    r.gens = c.gens;
    r.u_var = c.u_var;
    r.diff = c.diff.map<BiPoly>([](const UPoly& p) { return BiPoly::from_upoly(p); });
    return r;
}

}  // namespace thf
