// Polynomials over F2 in one variable, bit-packed into 64-bit words so that
// multiplication, division and gcd are word-parallel (fraction-field work over
// F2(t) is the inner loop of everything downstream).
#pragma once

#include "euclid.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace thf {

struct F2Poly {
    // words[k] holds coefficients of x^(64k) .. x^(64k+63); trimmed so the top
    // word is nonzero
    std::vector<std::uint64_t> words;

    F2Poly() = default;
    F2Poly(int c) {
        if (((c % 2) + 2) % 2) words.assign(1, 1);
    }
    static F2Poly monomial(long deg) {
        F2Poly p;
        p.words.assign(static_cast<std::size_t>(deg / 64) + 1, 0);
        p.words.back() = std::uint64_t(1) << (deg % 64);
        return p;
    }

    bool is_zero() const { return words.empty(); }
    bool is_one() const { return words.size() == 1 && words[0] == 1; }
    long degree() const {
        if (is_zero()) return -1;
        return static_cast<long>(words.size() - 1) * 64 + 63 -
               std::countl_zero(words.back());
    }
    int coeff(long i) const {
        if (i < 0) return 0;
        std::size_t w = static_cast<std::size_t>(i / 64);
        if (w >= words.size()) return 0;
        return static_cast<int>((words[w] >> (i % 64)) & 1);
    }
    void set_coeff(long i, int v) {  // grows as needed, retrims on clear
        std::size_t w = static_cast<std::size_t>(i / 64);
        if (w >= words.size()) {
            if (!(v & 1)) return;
            words.resize(w + 1, 0);
        }
        if (v & 1)
            words[w] |= std::uint64_t(1) << (i % 64);
        else
            words[w] &= ~(std::uint64_t(1) << (i % 64));
        trim();
    }
    // lowest degree with nonzero coefficient (valuation); -1 for zero
    long low() const {
        for (std::size_t k = 0; k < words.size(); ++k)
            if (words[k]) return static_cast<long>(k) * 64 + std::countr_zero(words[k]);
        return -1;
    }

    void trim() {
        while (!words.empty() && words.back() == 0) words.pop_back();
    }

    F2Poly shifted(long k) const {  // multiply by x^k (k may be negative)
        if (is_zero() || k == 0) return *this;
        F2Poly r;
        if (k > 0) {
            std::size_t ws = static_cast<std::size_t>(k / 64);
            int bs = static_cast<int>(k % 64);
            r.words.assign(words.size() + ws + 1, 0);
            for (std::size_t i = 0; i < words.size(); ++i) {
                r.words[i + ws] ^= words[i] << bs;
                if (bs) r.words[i + ws + 1] ^= words[i] >> (64 - bs);
            }
        } else {
            if (low() + k < 0) fail("inexact-division", "negative shift drops terms");
            std::size_t ws = static_cast<std::size_t>(-k / 64);
            int bs = static_cast<int>(-k % 64);
            r.words.assign(words.size() - ws, 0);
            for (std::size_t i = 0; i + ws < words.size(); ++i) {
                r.words[i] = words[i + ws] >> bs;
                if (bs && i + ws + 1 < words.size())
                    r.words[i] |= words[i + ws + 1] << (64 - bs);
            }
        }
        r.trim();
        return r;
    }

    friend F2Poly operator+(const F2Poly& a, const F2Poly& b) {
        F2Poly r;
        r.words.resize(std::max(a.words.size(), b.words.size()), 0);
        for (std::size_t k = 0; k < r.words.size(); ++k)
            r.words[k] = (k < a.words.size() ? a.words[k] : 0) ^
                         (k < b.words.size() ? b.words[k] : 0);
        r.trim();
        return r;
    }
    friend F2Poly operator-(const F2Poly& a, const F2Poly& b) { return a + b; }
    friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
        if (a.is_zero() || b.is_zero()) return F2Poly();
        F2Poly r;
        r.words.assign(a.words.size() + b.words.size(), 0);
        for (std::size_t ka = 0; ka < a.words.size(); ++ka) {
            std::uint64_t wa = a.words[ka];
            while (wa) {
                int bit = std::countr_zero(wa);
                wa &= wa - 1;
                // r ^= b << (64*ka + bit)
                for (std::size_t kb = 0; kb < b.words.size(); ++kb) {
                    std::uint64_t wb = b.words[kb];
                    r.words[ka + kb] ^= wb << bit;
                    if (bit) r.words[ka + kb + 1] ^= wb >> (64 - bit);
                }
            }
        }
        r.trim();
        return r;
    }
    friend bool operator==(const F2Poly& a, const F2Poly& b) { return a.words == b.words; }
    friend bool operator!=(const F2Poly& a, const F2Poly& b) { return !(a == b); }
    // degree-then-bits order; only used for deterministic containers
    friend bool operator<(const F2Poly& a, const F2Poly& b) {
        if (a.words.size() != b.words.size()) return a.words.size() < b.words.size();
        for (std::size_t k = a.words.size(); k-- > 0;)
            if (a.words[k] != b.words[k]) return a.words[k] < b.words[k];
        return false;
    }
};

inline bool is_zero(const F2Poly& a) { return a.is_zero(); }

template <>
struct euclid<F2Poly> {
    static constexpr const char* name = "F2[t]";
    static std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b) {
        if (b.is_zero()) fail("division-by-zero", "F2Poly divmod by zero");
        F2Poly r = a, q;
        long db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            long shift = r.degree() - db;
            q = q + F2Poly::monomial(shift);
            r = r + b.shifted(shift);
        }
        return {q, r};
    }
    static bool norm_less(const F2Poly& a, const F2Poly& b) { return a.degree() < b.degree(); }
    static F2Poly canonical_unit(const F2Poly&) { return F2Poly(1); }
    static F2Poly unit_inv(const F2Poly& u) { return u; }
};

}  // namespace thf
