// CFK-infinity models of thin knots built from the Alexander polynomial and
// signature, hat knot Floer homology, and the large-surgery formula.
#pragma once

#include "complex.hpp"
#include "graded.hpp"

#include <map>
#include <string>
#include <vector>

namespace thf {

struct ThinKnotSpec {
    // symmetric coefficients a_s for s = -g..g (index 0 is a_{-g})
    std::vector<long> alexander;
    long sigma = 0;  // even

    long genus() const { return (static_cast<long>(alexander.size()) - 1) / 2; }
    long tau() const { return -sigma / 2; }
    long a(long s) const { return alexander[static_cast<std::size_t>(s + genus())]; }
};

// a twist-knot family member D_-(U,n), n > 0: Delta = n(t + t^-1) + (1-2n)
ThinKnotSpec twist_knot_spec(long n);

struct KnotGen {
    std::string name;
    long A;  // Alexander grading
    long M;  // Maslov grading (integral for thin knots)
};

struct KnotArrow {
    std::size_t from, to;
    int i_drop, j_drop;  // (1,0) horizontal, (0,1) vertical
};

struct KnotComplex {
    std::vector<KnotGen> gens;
    std::vector<KnotArrow> arrows;
    long genus = 0;
    long sigma = 0;
};

// staircase-plus-boxes model; errors on invalid or unrealizable specs
KnotComplex build_thin_complex(const ThinKnotSpec& spec);

// checks d^2 = 0 in the full (i,j)-translated complex and the grading rules
void validate_knot_complex(const KnotComplex& k);

// dimension table (A, M) -> dim; for thin complexes these are the generator
// counts per bigrading (the induced differential on the associated graded
// object vanishes since every arrow drops a filtration level)
std::map<std::pair<long, long>, long> hfk_hat(const KnotComplex& k);

struct SurgeryRequest {
    long p = 1;
    long s = 0;
    enum Flavor { Hat, Plus } flavor = Hat;
    long truncation = -1;  // plus flavor; -1 = pick default and auto-double
};

// the subquotient C{max(i, j-s) = 0} as a graded F2 complex
ChainComplex<F2> hat_subquotient(const KnotComplex& k, long s);

// the i = 0 column with only vertical arrows (computes hat HF of S^3)
ChainComplex<F2> vertical_column(const KnotComplex& k);

GradedModule large_surgery(const KnotComplex& k, const SurgeryRequest& req);

// signed Euler characteristic of the i = 0 column per Alexander grading
std::map<long, long> graded_euler_characteristic(const KnotComplex& k);

}  // namespace thf
