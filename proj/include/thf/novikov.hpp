// Finite-support elements of the Novikov field: formal sums of t^r with exact
// rational exponents and F2 coefficients.  Inversion is truncated (geometric
// series), which is all the rank computations ever need; exact rank work is
// done over F2(t) instead (see frac.hpp).
#pragma once

#include "frac.hpp"

#include <algorithm>
#include <vector>

namespace thf {

struct NovikovElem {
    std::vector<Rational> exps;  // sorted ascending, distinct (F2 coefficients)

    NovikovElem() = default;
    NovikovElem(int c) {
        if (c % 2) exps.assign(1, Rational(0));
    }
    static NovikovElem monomial(const Rational& r) {
        NovikovElem e;
        e.exps.assign(1, r);
        return e;
    }
    static NovikovElem from_laurent(const LaurentPoly& p) {
        NovikovElem e;
        if (p.is_zero()) return e;
        for (long k = p.min_exp(); k <= p.max_exp(); ++k)
            if (p.coeff(k)) e.exps.push_back(Rational(k));
        return e;
    }

    bool is_zero() const { return exps.empty(); }
    const Rational& min_exp() const { return exps.front(); }  // nonzero only
    const Rational& max_exp() const { return exps.back(); }

    friend NovikovElem operator+(const NovikovElem& a, const NovikovElem& b) {
        // symmetric difference of supports (characteristic 2)
        NovikovElem r;
        std::size_t i = 0, j = 0;
        while (i < a.exps.size() || j < b.exps.size()) {
            if (j == b.exps.size() || (i < a.exps.size() && a.exps[i] < b.exps[j]))
                r.exps.push_back(a.exps[i++]);
            else if (i == a.exps.size() || b.exps[j] < a.exps[i])
                r.exps.push_back(b.exps[j++]);
            else {
                ++i;
                ++j;
            }
        }
        return r;
    }
    friend NovikovElem operator-(const NovikovElem& a, const NovikovElem& b) { return a + b; }
    friend NovikovElem operator*(const NovikovElem& a, const NovikovElem& b) {
        NovikovElem r;
        for (const auto& x : a.exps)
            for (const auto& y : b.exps) r = r + monomial(x + y);
        return r;
    }
    friend bool operator==(const NovikovElem& a, const NovikovElem& b) {
        return a.exps == b.exps;
    }
    friend bool operator!=(const NovikovElem& a, const NovikovElem& b) { return !(a == b); }

    // drop all terms with exponent >= h
    NovikovElem truncated(const Rational& h) const {
        NovikovElem r;
        for (const auto& e : exps)
            if (e < h) r.exps.push_back(e);
        return r;
    }
};

inline bool is_zero(const NovikovElem& a) { return a.is_zero(); }

// Truncated inverse: returns b with every exponent of (a*b - 1) >= horizon
// and min_exp(b) = -min_exp(a).  Geometric series over F2.
NovikovElem novikov_invert_truncated(const NovikovElem& a, const Rational& horizon);

struct TwistClass {
    Rational d;  // weight of the twisting class
    bool nonzero() const { return !is_zero(d); }
};

// the action t^eta . x with <eta, omega> = k*d: shift all exponents by k*d
inline NovikovElem twist_action(const TwistClass& w, long k, const NovikovElem& x) {
    NovikovElem r;
    Rational s = w.d * Rational(k);
    for (const auto& e : x.exps) r.exps.push_back(e + s);
    return r;
}

}  // namespace thf
