// Polynomials in the formal variable U with F2(t) coefficients -- the ring
// F2(t)[U] over which minus-flavor style complexes live -- plus a small
// two-variable cousin used by the stabilization construction, where a second
// basepoint variable U_{w0} is adjoined.
#pragma once

#include "frac.hpp"

#include <map>
#include <utility>
#include <vector>

namespace thf {

struct UPoly {
    std::vector<RatFunc> coeffs;  // coeffs[k] multiplies U^k; trimmed

    UPoly() = default;
    UPoly(int c) {
        if (c % 2) coeffs.assign(1, RatFunc(1));
    }
    UPoly(RatFunc c) {
        if (!thf::is_zero(c)) coeffs.assign(1, std::move(c));
    }
    static UPoly monomial(RatFunc c, long k) {
        UPoly p;
        if (thf::is_zero(c)) return p;
        p.coeffs.assign(static_cast<std::size_t>(k) + 1, RatFunc(0));
        p.coeffs.back() = std::move(c);
        return p;
    }

    void trim() {
        while (!coeffs.empty() && thf::is_zero(coeffs.back())) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return is_zero() ? -1 : static_cast<long>(coeffs.size()) - 1; }
    RatFunc coeff(long k) const {
        return (k >= 0 && k < static_cast<long>(coeffs.size())) ? coeffs[k] : RatFunc(0);
    }
    RatFunc lead() const { return coeffs.back(); }
    // number of nonzero coefficients
    int terms() const {
        int n = 0;
        for (const auto& c : coeffs)
            if (!thf::is_zero(c)) ++n;
        return n;
    }
    bool is_monomial() const { return terms() == 1; }
    long low() const {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!thf::is_zero(coeffs[k])) return static_cast<long>(k);
        return -1;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), RatFunc(0));
        for (std::size_t k = 0; k < r.coeffs.size(); ++k)
            r.coeffs[k] = a.coeff(static_cast<long>(k)) + b.coeff(static_cast<long>(k));
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b; }  // char 2
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, RatFunc(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (thf::is_zero(a.coeffs[i])) continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
};

inline bool is_zero(const UPoly& a) { return a.is_zero(); }

template <>
struct euclid<UPoly> {
    static constexpr const char* name = "F2(t)[U]";
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) fail("division-by-zero", "F2(t)[U] divmod by zero");
        UPoly r = a, q;
        long db = b.degree();
        if (a.degree() >= db) q.coeffs.assign(a.degree() - db + 1, RatFunc(0));
        RatFunc linv = field_inv(b.lead());
        while (!r.is_zero() && r.degree() >= db) {
            long shift = r.degree() - db;
            RatFunc f = r.lead() * linv;
            q.coeffs[shift] = q.coeffs[shift] + f;
            for (long i = 0; i <= db; ++i)
                r.coeffs[i + shift] = r.coeffs[i + shift] + f * b.coeffs[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    static bool norm_less(const UPoly& a, const UPoly& b) { return a.degree() < b.degree(); }
    static UPoly canonical_unit(const UPoly& a) { return UPoly(field_inv(a.lead())); }
    static UPoly unit_inv(const UPoly& u) {
        if (u.degree() != 0) fail("unsupported", "non-constant F2(t)[U] unit");
        return UPoly(field_inv(u.coeffs[0]));
    }
    // Scalars F2(t)* are units here, so the t-content of coefficients can be
    // stripped by a unit multiple.  Without this, remainder sequences square
    // their coefficient degrees at every step.
    static UPoly content_unit_many(const std::vector<UPoly>& xs) {
        F2Poly den_lcm(1), num_gcd;
        for (const auto& x : xs)
            for (const auto& c : x.coeffs) {
                if (thf::is_zero(c)) continue;
                den_lcm = exact_div(den_lcm * c.den, euclid_gcd(den_lcm, c.den));
            }
        for (const auto& x : xs)
            for (const auto& c : x.coeffs) {
                if (thf::is_zero(c)) continue;
                num_gcd = euclid_gcd(num_gcd, c.num * exact_div(den_lcm, c.den));
            }
        if (thf::is_zero(num_gcd)) return UPoly(1);
        return UPoly(RatFunc(den_lcm, num_gcd));
    }
    static UPoly content_unit(const UPoly& a) { return content_unit_many({a}); }
};

// ---------------------------------------------------------------------------
// F2(t)[U_z, U_{w0}], sparse.  Only ever appears in stabilized complexes;
// homology there is taken grading-slice by grading-slice over F2(t).
struct BiPoly {
    // (U_z exponent, U_{w0} exponent) -> nonzero coefficient
    std::map<std::pair<long, long>, RatFunc> terms;

    BiPoly() = default;
    BiPoly(int c) {
        if (c % 2) terms[{0, 0}] = RatFunc(1);
    }
    static BiPoly from_upoly(const UPoly& p) {  // U -> U_z
        BiPoly r;
        for (long k = 0; k <= p.degree(); ++k)
            if (!thf::is_zero(p.coeff(k))) r.terms[{k, 0}] = p.coeff(k);
        return r;
    }
    static BiPoly monomial(RatFunc c, long a, long b) {
        BiPoly r;
        if (!thf::is_zero(c)) r.terms[{a, b}] = std::move(c);
        return r;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(long a, long b, const RatFunc& c) {
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        RatFunc v = (it == terms.end()) ? c : it->second + c;
        if (thf::is_zero(v))
            terms.erase(key);
        else
            terms[key] = v;
    }

    friend BiPoly operator+(const BiPoly& x, const BiPoly& y) {
        BiPoly r = x;
        for (const auto& [k, c] : y.terms) r.add_term(k.first, k.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& x, const BiPoly& y) { return x + y; }
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
        BiPoly r;
        for (const auto& [k1, c1] : x.terms)
            for (const auto& [k2, c2] : y.terms)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.terms == y.terms; }
    friend bool operator!=(const BiPoly& x, const BiPoly& y) { return !(x == y); }

    // total degree if homogeneous, else -1 (zero counts as homogeneous of any
    // degree; callers check emptiness first)
    long homogeneous_degree() const {
        long d = -1;
        for (const auto& [k, c] : terms) {
            long t = k.first + k.second;
            if (d == -1)
                d = t;
            else if (d != t)
                return -1;
        }
        return d;
    }
};

inline bool is_zero(const BiPoly& a) { return a.is_zero(); }

}  // namespace thf
