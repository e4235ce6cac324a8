// Output forms of homology computations: graded dimension tables and
// decomposed graded modules (field summands, towers, U-torsion).
#pragma once

#include "frac.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thf {

enum class RingTag { Z, F2, F2PolyT, LaurentT, RatFuncT, Lambda, LambdaU };

inline const char* ring_name(RingTag r) {
    switch (r) {
        case RingTag::Z: return "Z";
        case RingTag::F2: return "F2";
        case RingTag::F2PolyT: return "F2[t]";
        case RingTag::LaurentT: return "F2[t,t^-1]";
        case RingTag::RatFuncT: return "F2(t)";
        case RingTag::Lambda: return "Lambda";
        case RingTag::LambdaU: return "Lambda[U]";
    }
    return "?";
}

// Dimension table: grading -> dimension, with one ring tag for the whole table.
struct GradedDims {
    RingTag ring = RingTag::F2;
    std::map<Rational, long> dims;  // only nonzero dimensions stored

    void add(const Rational& g, long d) {
        if (d == 0) return;
        long& v = dims[g];
        v += d;
        if (v == 0) dims.erase(g);
    }
    long at(const Rational& g) const {
        auto it = dims.find(g);
        return it == dims.end() ? 0 : it->second;
    }
    long total() const {
        long t = 0;
        for (const auto& [g, d] : dims) t += d;
        return t;
    }
    bool empty() const { return dims.empty(); }
    friend bool operator==(const GradedDims& a, const GradedDims& b) {
        return a.dims == b.dims;  // tags compared by callers when relevant
    }
};

struct Summand {
    enum Kind { FreeField, Tower, UTorsion } kind = FreeField;
    RingTag ring = RingTag::Lambda;
    long rank = 1;                    // FreeField
    long k = 0;                       // UTorsion exponent
    Rational grading{0};              // FreeField grading / UTorsion top / Tower bottom
    bool has_grading = true;          // excision outputs may be graded only relatively
    bool free_over_u = false;         // FreeField over F2(t)[U]: a genuinely free module
    bool trivial_t_action = false;    // dies under Novikov base change

    friend bool operator==(const Summand& a, const Summand& b) {
        return a.kind == b.kind && a.ring == b.ring && a.rank == b.rank && a.k == b.k &&
               a.has_grading == b.has_grading && (!a.has_grading || a.grading == b.grading) &&
               a.free_over_u == b.free_over_u && a.trivial_t_action == b.trivial_t_action;
    }
};

struct GradedModule {
    std::vector<Summand> summands;

    static Summand free_field(RingTag ring, long rank, const Rational& g) {
        Summand s;
        s.kind = Summand::FreeField;
        s.ring = ring;
        s.rank = rank;
        s.grading = g;
        return s;
    }
    static Summand tower(const Rational& bottom) {
        Summand s;
        s.kind = Summand::Tower;
        s.ring = RingTag::Lambda;
        s.grading = bottom;
        s.trivial_t_action = true;
        return s;
    }
    static Summand u_torsion(long k, const Rational& top, RingTag ring = RingTag::LambdaU) {
        Summand s;
        s.kind = Summand::UTorsion;
        s.ring = ring;
        s.k = k;
        s.grading = top;
        return s;
    }

    bool is_zero() const { return summands.empty(); }
    long total_rank() const {
        long t = 0;
        for (const auto& s : summands) t += s.rank;
        return t;
    }
    // merge summands that agree in everything but rank; sort deterministically
    void normalize();

    // distinct gradings among graded summands
    std::vector<Rational> gradings() const {
        std::vector<Rational> gs;
        for (const auto& s : summands) {
            if (!s.has_grading) continue;
            bool seen = false;
            for (const auto& g : gs)
                if (g == s.grading) seen = true;
            if (!seen) gs.push_back(s.grading);
        }
        return gs;
    }
};

// Expand a module over F2(t)[U] (or with towers) into graded dimensions over
// the ground field, for every grading in [lo, hi] of the given parity lattice.
// Free-over-U summands and towers extend across the window; plain field
// summands occupy a single grading.
GradedDims expand_graded_dims(const GradedModule& m, const Rational& lo, const Rational& hi);

}  // namespace thf
