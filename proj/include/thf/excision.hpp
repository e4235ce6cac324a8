// End-to-end pipelines for the manifold families: twisted zero-surgeries on
// twist knots, Whitehead links, Borromean rings, and the C(m,+-1,n) two-bridge
// links, plus the non-relatedness obstruction.  Every pipeline appends to a
// derivation log naming the rule used at each step.
#pragma once

#include "graded.hpp"
#include "novikov.hpp"
#include "sequences.hpp"

#include <string>
#include <variant>
#include <vector>

namespace thf {

struct LogStep {
    std::string step;
    std::string anchor;  // rule name, e.g. "surgery-exact-triangle"
    std::string input_summary;
    std::string output_summary;
};
using DerivationLog = std::vector<LogStep>;

struct ExcisionMove {
    std::string source;
    std::string target;
    bool genus_one = true;
    bool omega_compatible = true;
    std::string note;
};

// family specs ---------------------------------------------------------------
struct TwistKnotZeroSurgery { long n = 1; };
struct WhiteheadZeroSurgery { long n = 1; };
struct BorromeanZeroSurgery { long m = 1, n = 1; };
struct TwoBridge { long m = 1; int clasp = 1; long n = -1; };

struct FamilySpec {
    std::variant<TwistKnotZeroSurgery, WhiteheadZeroSurgery, BorromeanZeroSurgery, TwoBridge>
        family;
    TwistClass omega{Rational(1)};
};

// pipelines ------------------------------------------------------------------
GradedModule compute_twist_knot_zero_surgery(long n, const TwistClass& w,
                                             DerivationLog* log = nullptr);

GradedModule apply_excision(const GradedModule& m, const ExcisionMove& move,
                            DerivationLog* log = nullptr);

GradedModule kunneth(const GradedModule& a, const GradedModule& b,
                     DerivationLog* log = nullptr);

GradedModule compute_whitehead(long n, const TwistClass& w, DerivationLog* log = nullptr);

GradedModule compute_borromean(long m, long n, const TwistClass& w,
                               DerivationLog* log = nullptr);

GradedModule compute_two_bridge(long m, int clasp, long n, const TwistClass& w,
                                DerivationLog* log = nullptr);

struct NonRelatednessReport {
    bool obstructed = false;
    GradedModule first, second;
};
NonRelatednessReport non_relatedness_check(long n, long m, DerivationLog* log = nullptr);

GradedModule run_family(const FamilySpec& spec, DerivationLog* log = nullptr);

std::string summarize(const GradedModule& m);

}  // namespace thf
