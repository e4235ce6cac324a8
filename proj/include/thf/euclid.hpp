// Euclidean-domain traits used by the generic Smith normal form and by the
// generic fraction field.  Each supported ring specializes thf::euclid<R>.
//
// Conventions:
//   divmod(a,b)        -> (q,r) with a = q*b + r and (r == 0 or norm(r) < norm(b))
//   norm_less(a,b)     -> strict comparison of Euclidean norms (a,b nonzero)
//   canonical_unit(a)  -> unit u such that u*a is the canonical associate
//                         (positive for integers, monic / shift-free for polys)
//   unit_inv(u)        -> inverse of a unit
#pragma once

#include "common.hpp"

#include <concepts>
#include <utility>

namespace thf {

template <class R>
struct euclid;  // specialized per ring

template <>
struct euclid<BigInt> {
    static constexpr const char* name = "Z";
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        BigInt q = a / b, r = a % b;
        // round so the remainder is small in magnitude but nonnegative
        if (r < 0) {
            if (b > 0) { q -= 1; r += b; }
            else       { q += 1; r -= b; }
        }
        return {q, r};
    }
    static bool norm_less(const BigInt& a, const BigInt& b) {
        return abs(a) < abs(b);
    }
    static BigInt canonical_unit(const BigInt& a) { return a < 0 ? BigInt(-1) : BigInt(1); }
    static BigInt unit_inv(const BigInt& u) { return u; }
};

// Rings whose elements carry removable "content" (e.g. F2(t)[U], where every
// nonzero scalar is a unit) expose content_unit(x): a unit u with x*u reduced.
// Stripping content after each remainder keeps coefficient growth polynomial
// (primitive remainder sequence); for the other rings this is a no-op.
template <class R>
concept has_content_unit = requires(const R& x) {
    { euclid<R>::content_unit(x) } -> std::convertible_to<R>;
};

template <class R>
R strip_content(R x) {
    if constexpr (has_content_unit<R>) {
        if (!is_zero(x)) x = x * euclid<R>::content_unit(x);
    }
    return x;
}

template <class R>
R euclid_gcd(R a, R b) {
    a = strip_content(std::move(a));
    b = strip_content(std::move(b));
    while (!is_zero(b)) {
        R r = strip_content(euclid<R>::divmod(a, b).second);
        a = b;
        b = r;
    }
    if (is_zero(a)) return a;
    return euclid<R>::canonical_unit(a) * a;
}

// Extended gcd: g = s*a + t*b with g canonical.  Remainders are content-
// stripped with their Bezout pair scaled alike, so coefficient growth stays
// polynomial (primitive remainder sequence).
template <class R>
struct Egcd {
    R g, s, t;
};

template <class R>
Egcd<R> extended_gcd(R a, R b) {
    R s0(1), t0(0), s1(0), t1(1);
    while (!is_zero(b)) {
        auto [q, r] = euclid<R>::divmod(a, b);
        R s2 = s0 - q * s1, t2 = t0 - q * t1;
        if constexpr (has_content_unit<R>) {
            if (!is_zero(r)) {
                R u = euclid<R>::content_unit(r);
                r = r * u;
                s2 = s2 * u;
                t2 = t2 * u;
            }
        }
        a = b;
        s0 = s1;
        t0 = t1;
        b = r;
        s1 = s2;
        t1 = t2;
    }
    R u = euclid<R>::canonical_unit(a);
    return {a * u, s0 * u, t0 * u};
}

// exact division helper (errors if not divisible)
template <class R>
R exact_div(const R& a, const R& b) {
    auto [q, r] = euclid<R>::divmod(a, b);
    if (!is_zero(r)) fail("inexact-division", "exact_div with nonzero remainder");
    return q;
}

template <class R>
bool divides(const R& b, const R& a) {  // b | a
    if (is_zero(a)) return true;
    if (is_zero(b)) return false;
    return is_zero(euclid<R>::divmod(a, b).second);
}

}  // namespace thf
