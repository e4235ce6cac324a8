#include "thf/sequences.hpp"

namespace thf {

Rational grading_shift(const CobordismData& c) {
    return (c.c1sq - Rational(2 * c.euler) - Rational(3 * c.sigma)) / Rational(4);
}

Rational c1_square(long p, long j) {
    if (p == 0) fail("degenerate-form", "c1^2 formula needs a nondegenerate form (p != 0)");
    Rational n(2 * j + p);
    return n * n / Rational(p);
}

GradedDims triangle_chase(const GradedDims& a, const GradedDims& c, const TriangleShifts& sh) {
    // forced vanishing of f3: it is non-increasing, so it could only be
    // nonzero if some grading of a sits at or below a grading of c
    for (const auto& [gc, dc] : c.dims)
        for (const auto& [ga, da] : a.dims)
            if (ga <= gc)
                fail("ambiguous-triangle",
                     "cannot certify f3 = 0: supports of a and c overlap downward");
    GradedDims b;
    b.ring = RingTag::LaurentT;
    for (const auto& [g, d] : a.dims) b.add(g + sh.f1, d);
    for (const auto& [g, d] : c.dims) b.add(g - sh.f2, d);
    return b;
}

GradedModule reconstruct_plus(const GradedDims& hat,
                              const std::optional<InfinityModel>& inf) {
    GradedModule out;
    if (!inf) {
        if (!hat.empty())
            fail("inconsistent-input", "nonzero hat input with no declared tower");
        return out;
    }
    Rational b = inf->bottom;
    // the hat support must sit on the two grading lattices determined by the
    // tower: the tower parity itself and the one just below it
    for (const auto& [g, d] : hat.dims)
        if (!same_parity(g, b) && !same_parity(g, b - Rational(1)))
            fail("inconsistent-input", "hat support parity incompatible with the tower");
    out.summands.push_back(GradedModule::tower(b));
    for (const auto& [g, d] : hat.dims) {
        if (same_parity(g, b)) continue;  // absorbed by the U-tower comparison
        Summand s = GradedModule::free_field(hat.ring, d, g);
        out.summands.push_back(s);
    }
    out.normalize();
    return out;
}

GradedModule novikov_base_change(const GradedModule& m, const TwistClass& w) {
    if (!w.nonzero()) fail("zero-twist", "base change requires a nonzero twisting class");
    GradedModule out;
    for (const auto& s : m.summands) {
        switch (s.kind) {
            case Summand::Tower:
                break;  // trivial t-action: both tensor and Tor1 vanish
            case Summand::FreeField: {
                if (s.trivial_t_action) break;
                Summand r = s;
                r.ring = RingTag::Lambda;
                out.summands.push_back(r);
                break;
            }
            case Summand::UTorsion:
                fail("unsupported", "base change input must be an L(t)-module");
        }
    }
    out.normalize();
    return out;
}

GradedModule orientation_reverse(const GradedModule& m) {
    GradedModule out;
    for (const auto& s : m.summands) {
        if (!s.has_grading)
            fail("unsupported", "orientation reversal needs absolute gradings");
        switch (s.kind) {
            case Summand::Tower:
                fail("unsupported", "orientation reversal of towers is out of scope");
            case Summand::FreeField: {
                Summand r = s;
                r.grading = Rational(0) - s.grading;
                out.summands.push_back(r);
                break;
            }
            case Summand::UTorsion: {
                // Ext^1(Lambda[U]/U^k) = Lambda[U]/U^k; the dual support is the
                // negated grading interval, so the new top is -(old bottom)
                Summand r = s;
                r.grading = Rational(0) - (s.grading - Rational(2) * Rational(s.k - 1));
                out.summands.push_back(r);
                break;
            }
        }
    }
    out.normalize();
    return out;
}

}  // namespace thf
