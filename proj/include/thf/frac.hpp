// Generic fraction field over a Euclidean domain, and the two instances the
// toolkit leans on: exact rationals (gradings, Novikov exponents) and F2(t),
// the computational stand-in for the Novikov field.
#pragma once

#include "euclid.hpp"
#include "laurent.hpp"

#include <string>

namespace thf {

template <class R>
struct Frac {
    R num{0};
    R den{1};

    Frac() = default;
    Frac(int n) : num(n), den(1) {}
    Frac(R n) : num(std::move(n)), den(1) {}
    Frac(R n, R d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    void reduce() {
        if (is_zero(den)) fail("division-by-zero", "fraction with zero denominator");
        if (is_zero(num)) {
            den = R(1);
            return;
        }
        R g = euclid_gcd(num, den);
        num = exact_div(num, g);
        den = exact_div(den, g);
        R u = euclid<R>::canonical_unit(den);
        num = num * u;
        den = den * u;
    }

    bool is_zero_val() const { return is_zero(num); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (is_zero(b.num)) fail("division-by-zero", "fraction division by zero");
        return Frac(a.num * b.den, a.den * b.num);
    }
    friend Frac operator-(const Frac& a) { return Frac(R(0) - a.num, a.den); }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
};

template <class R>
bool is_zero(const Frac<R>& a) {
    return a.is_zero_val();
}

template <class R>
Frac<R> field_inv(const Frac<R>& a) {
    if (is_zero(a.num)) fail("division-by-zero", "inverse of zero fraction");
    return Frac<R>(a.den, a.num);
}

// ---------------------------------------------------------------------------
// Exact rationals (denominators positive).
using Rational = Frac<BigInt>;

inline bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;  // denominators are positive
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline bool is_integer(const Rational& a) { return a.den == 1; }

// is (a - b) an even integer?
inline bool same_parity(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return is_integer(d) && d.num % 2 == 0;
}

inline std::string to_string(const Rational& a) {
    std::string s = a.num.str();
    if (a.den != 1) s += "/" + a.den.str();
    return s;
}

Rational parse_rational(const std::string& s);  // serialize.cpp

// ---------------------------------------------------------------------------
// F2(t): reduced fractions of F2[t] polynomials.  Every Laurent polynomial
// embeds (negative exponents become denominators); this is the fraction field
// of F2[t,t^-1] sitting inside the Novikov field.
using RatFunc = Frac<F2Poly>;

inline RatFunc ratfunc_t(long e) {  // t^e as a rational function
    if (e >= 0) return RatFunc(F2Poly::monomial(e));
    return RatFunc(F2Poly(1), F2Poly::monomial(-e));
}

inline RatFunc to_ratfunc(const LaurentPoly& a) {
    if (a.is_zero()) return RatFunc(0);
    return RatFunc(a.poly) * ratfunc_t(a.shift);
}

}  // namespace thf
