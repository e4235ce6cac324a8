// Laurent polynomials over F2: the group ring F2[t,t^-1].  Stored as an
// ordinary F2 polynomial times t^shift, with the polynomial part having a
// nonzero constant term (so shift is the lowest exponent).  Units are the
// monomials t^k; Euclidean norm is the degree span of the polynomial part.
#pragma once

#include "f2poly.hpp"

namespace thf {

struct LaurentPoly {
    F2Poly poly;  // constant term 1 unless zero
    long shift = 0;

    LaurentPoly() = default;
    LaurentPoly(int c) : poly(c) {}
    LaurentPoly(F2Poly p, long s) : poly(std::move(p)), shift(s) { normalize(); }
    static LaurentPoly monomial(long e) { return LaurentPoly(F2Poly(1), e); }

    void normalize() {
        if (poly.is_zero()) {
            shift = 0;
            return;
        }
        long v = poly.low();
        if (v > 0) {
            poly = poly.shifted(-v);
            shift += v;
        }
    }

    bool is_zero() const { return poly.is_zero(); }
    long min_exp() const { return shift; }                   // valid when nonzero
    long max_exp() const { return shift + poly.degree(); }   // valid when nonzero
    int coeff(long e) const { return poly.coeff(e - shift); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long s = std::min(a.shift, b.shift);
        F2Poly pa = a.poly, pb = b.poly;
        // multiply by t^(shift-s) inside the plain-poly world
        if (a.shift > s) pa = pa * F2Poly::monomial(a.shift - s);
        if (b.shift > s) pb = pb * F2Poly::monomial(b.shift - s);
        return LaurentPoly(pa + pb, s);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        return LaurentPoly(a.poly * b.poly, a.shift + b.shift);
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.poly == b.poly && (a.is_zero() || a.shift == b.shift);
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
};

inline bool is_zero(const LaurentPoly& a) { return a.is_zero(); }

template <>
struct euclid<LaurentPoly> {
    static constexpr const char* name = "F2[t,t^-1]";
    static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                                      const LaurentPoly& b) {
        if (b.is_zero()) fail("division-by-zero", "Laurent divmod by zero");
        if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
        auto [q, r] = euclid<F2Poly>::divmod(a.poly, b.poly);
        // a = t^sa pa = (q pb + r) t^sa = (q t^(sa-sb)) b + r t^sa
        return {LaurentPoly(q, a.shift - b.shift), LaurentPoly(r, a.shift)};
    }
    static bool norm_less(const LaurentPoly& a, const LaurentPoly& b) {
        return a.poly.degree() < b.poly.degree();
    }
    static LaurentPoly canonical_unit(const LaurentPoly& a) {
        return LaurentPoly::monomial(-a.shift);
    }
    static LaurentPoly unit_inv(const LaurentPoly& u) {
        if (u.poly.degree() != 0) fail("unsupported", "non-monomial Laurent unit");
        return LaurentPoly::monomial(-u.shift);
    }
};

}  // namespace thf
