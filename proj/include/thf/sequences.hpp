// The algebraic ladder between hat-flavor surgery output and the twisted
// answer: cobordism grading shifts, exact-triangle dimension chases, plus-
// flavor reconstruction, Novikov base change, orientation reversal.
#pragma once

#include "graded.hpp"
#include "novikov.hpp"

#include <optional>

namespace thf {

struct CobordismData {
    long euler = 0;
    long sigma = 0;
    Rational c1sq{0};
    char role = '1';  // '1' | '2' | '3'
};

// (c1sq - 2*chi - 3*sigma) / 4
Rational grading_shift(const CobordismData& c);

// (2j + p)^2 / p
Rational c1_square(long p, long j);

struct TriangleShifts {
    Rational f1;  // exact shift of the map into the unknown term
    Rational f2;  // exact shift of the map out of the unknown term
    // f3 is constrained non-increasing (shift <= 0); its forced vanishing is
    // what the chase checks
};

// Dimension chase through the surgery triangle ... -> a -> b -> c -> a -> ...
// with b unknown.  Succeeds only when the grading supports force f3 = 0, in
// which case dim b[g] = dim a[g - f1] + dim c[g + f2].  The output is
// regarded over the ambient group ring L(t).
GradedDims triangle_chase(const GradedDims& a, const GradedDims& c, const TriangleShifts& sh);

struct InfinityModel {
    // declared input: twisted HF-infinity is Z[U,U^-1] with trivial t-action;
    // bottom is the grading where the plus-flavor tower starts
    Rational bottom{0};
};

// Chase through hat -> plus -U-> plus: above the top of hat the U-action is an
// isomorphism, pinning everything to the declared tower; hat classes off the
// tower parity survive as field summands.
GradedModule reconstruct_plus(const GradedDims& hat, const std::optional<InfinityModel>& inf);

// Universal-coefficient base change to the Novikov field: free L(t) summands
// keep their rank over Lambda; trivial-t-action summands (towers included) die
// because t^d + 1 is invertible in Lambda.
GradedModule novikov_base_change(const GradedModule& m, const TwistClass& w);

// Hom/Ext duality for finitely generated Lambda[U]-modules (no towers):
// free summands dualize to free, UTorsion(k) to UTorsion(k), gradings negated
// across each summand's support.
GradedModule orientation_reverse(const GradedModule& m);

}  // namespace thf
