#include <doctest.h>

#include "thf/knots.hpp"
#include "thf/testgen.hpp"

#include <set>

using namespace thf;

namespace {
ThinKnotSpec unknot_spec() {
    ThinKnotSpec s;
    s.alexander = {1};
    s.sigma = 0;
    return s;
}
}  // namespace

TEST_CASE("twist-knot family specs") {
    for (long n = 1; n <= 6; ++n) {
        ThinKnotSpec s = twist_knot_spec(n);
        CHECK((s.alexander == std::vector<long>{n, 1 - 2 * n, n}));
        CHECK(s.sigma == -2);
        CHECK(s.genus() == 1);
        CHECK(s.tau() == 1);
    }
    CHECK_THROWS_WITH_AS(twist_knot_spec(0), doctest::Contains("spec"), Error);
}

TEST_CASE("thin builder generator counts") {
    for (long n = 1; n <= 8; ++n) {
        KnotComplex k = build_thin_complex(twist_knot_spec(n));
        CHECK(k.gens.size() == static_cast<std::size_t>(4 * n - 1));
        std::map<long, long> per_a;
        for (const auto& g : k.gens) ++per_a[g.A];
        CHECK(per_a[1] == n);
        CHECK(per_a[0] == 2 * n - 1);
        CHECK(per_a[-1] == n);
    }
    // n = 1: pure staircase with (A, M) = (1,0), (0,-1), (-1,-2)
    KnotComplex k1 = build_thin_complex(twist_knot_spec(1));
    REQUIRE(k1.gens.size() == 3);
    std::multiset<std::pair<long, long>> am;
    for (const auto& g : k1.gens) am.insert({g.A, g.M});
    CHECK((am == std::multiset<std::pair<long, long>>{{1, 0}, {0, -1}, {-1, -2}}));
    // unknot: one generator, no arrows
    KnotComplex u = build_thin_complex(unknot_spec());
    CHECK(u.gens.size() == 1);
    CHECK(u.arrows.empty());
}

TEST_CASE("invalid thin specs are rejected") {
    ThinKnotSpec bad;
    bad.alexander = {1, -3, 2};  // not symmetric
    bad.sigma = -2;
    CHECK_THROWS_WITH_AS(build_thin_complex(bad), doctest::Contains("spec"), Error);
    bad.alexander = {1};
    bad.sigma = 1;  // odd signature
    CHECK_THROWS_WITH_AS(build_thin_complex(bad), doctest::Contains("spec"), Error);
    bad.alexander = {1, -1, 1};  // Delta of the trefoil with sigma = 0: not thin-realizable
    bad.sigma = 0;
    CHECK_THROWS_WITH_AS(build_thin_complex(bad), doctest::Contains("spec"), Error);
}

TEST_CASE("hat knot Floer table") {
    auto dims = hfk_hat(build_thin_complex(twist_knot_spec(2)));
    CHECK((dims[{1, 0}] == 2));
    CHECK((dims[{0, -1}] == 3));
    CHECK((dims[{-1, -2}] == 2));
    CHECK(dims.size() == 3);
    auto ud = hfk_hat(build_thin_complex(unknot_spec()));
    CHECK((ud[{0, 0}] == 1));
    CHECK(ud.size() == 1);
}

TEST_CASE("hat table symmetry and the alternating rule") {
    Rng rng(1601);
    for (int trial = 0; trial < 40; ++trial) {
        ThinKnotSpec spec = random_thin_spec(rng, 3);
        KnotComplex k = build_thin_complex(spec);
        auto dims = hfk_hat(k);
        for (const auto& [am, d] : dims) {
            auto [a, m] = am;
            CHECK((dims[{-a, m - 2 * a}] == d));     // (A,M) <-> (-A, M-2A)
            CHECK(m == a + spec.sigma / 2);          // thin support line
            CHECK(d == std::labs(spec.a(a)));        // counts match |a_s|
        }
    }
}

TEST_CASE("large surgery, hat flavor") {
    for (long n = 1; n <= 4; ++n) {
        KnotComplex k = build_thin_complex(twist_knot_spec(n));
        GradedModule h = large_surgery(k, SurgeryRequest{1, 0, SurgeryRequest::Hat, -1});
        GradedDims dims;
        for (const auto& s : h.summands) dims.add(s.grading, s.rank);
        CHECK(dims.at(Rational(-1)) == n - 1);
        CHECK(dims.at(Rational(-2)) == n);
        CHECK(dims.total() == 2 * n - 1);
    }
    GradedModule hu =
        large_surgery(build_thin_complex(unknot_spec()), SurgeryRequest{1, 0, SurgeryRequest::Hat, -1});
    REQUIRE(hu.summands.size() == 1);
    CHECK(hu.summands[0].rank == 1);
    CHECK(hu.summands[0].grading == Rational(0));
}

TEST_CASE("large surgery, plus flavor on the unknot") {
    GradedModule h = large_surgery(build_thin_complex(unknot_spec()),
                                   SurgeryRequest{1, 0, SurgeryRequest::Plus, -1});
    REQUIRE(h.summands.size() == 1);
    CHECK(h.summands[0].kind == Summand::Tower);
    CHECK(h.summands[0].grading == Rational(0));
}

TEST_CASE("surgery formula range errors") {
    KnotComplex k = build_thin_complex(twist_knot_spec(2));  // genus 1, needs p >= 1
    CHECK_THROWS_WITH_AS(large_surgery(k, SurgeryRequest{0, 0, SurgeryRequest::Hat, -1}),
                         doctest::Contains("formula-out-of-range"), Error);
    CHECK_THROWS_WITH_AS(large_surgery(k, SurgeryRequest{1, 1, SurgeryRequest::Hat, -1}),
                         doctest::Contains("formula-out-of-range"), Error);
}

TEST_CASE("hat subquotient at n = 1") {
    KnotComplex k = build_thin_complex(twist_knot_spec(1));
    GradedDims h = homology_field(hat_subquotient(k, 0), RingTag::F2);
    CHECK(h.total() == 1);
    CHECK(h.at(Rational(-2)) == 1);
}

TEST_CASE("graded Euler characteristic recovers the Alexander polynomial") {
    auto chi = graded_euler_characteristic(build_thin_complex(twist_knot_spec(2)));
    CHECK((chi == std::map<long, long>{{-1, 2}, {0, -3}, {1, 2}}));
    Rng rng(1702);
    for (int trial = 0; trial < 30; ++trial) {
        ThinKnotSpec spec = random_thin_spec(rng, 3);
        auto c = graded_euler_characteristic(build_thin_complex(spec));
        int sign = 0;
        for (long s = -spec.genus(); s <= spec.genus(); ++s) {
            long a = spec.a(s), x = c.count(s) ? c[s] : 0;
            if (a == 0) {
                CHECK(x == 0);
                continue;
            }
            CHECK(std::labs(a) == std::labs(x));
            int e = (a == x) ? 1 : -1;
            if (sign == 0) sign = e;
            CHECK(sign == e);
        }
    }
}

TEST_CASE("vertical homology is one dimensional at grading zero") {
    for (long n = 1; n <= 3; ++n) {
        GradedDims v = homology_field(vertical_column(build_thin_complex(twist_knot_spec(n))),
                                      RingTag::F2);
        CHECK(v.total() == 1);
        CHECK(v.at(Rational(0)) == 1);
    }
}
