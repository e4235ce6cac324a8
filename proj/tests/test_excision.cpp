#include <doctest.h>

#include "thf/excision.hpp"
#include "thf/serialize.hpp"

using namespace thf;

namespace {
Rational rat(long n, long d = 1) { return Rational(BigInt(n)) / Rational(BigInt(d)); }
const TwistClass kOmega{rat(1)};
}  // namespace

TEST_CASE("twist-knot zero-surgery pipeline") {
    for (long n = 1; n <= 5; ++n) {
        GradedModule m = compute_twist_knot_zero_surgery(n, kOmega);
        REQUIRE(m.summands.size() == 1);
        CHECK(m.summands[0].kind == Summand::FreeField);
        CHECK(m.summands[0].ring == RingTag::Lambda);
        CHECK(m.summands[0].rank == n);
        CHECK(m.summands[0].grading == rat(-3, 2));
    }
    // mirror route for negative parameters: same rank, negated grading
    GradedModule m = compute_twist_knot_zero_surgery(-2, kOmega);
    REQUIRE(m.summands.size() == 1);
    CHECK(m.summands[0].rank == 2);
    CHECK(m.summands[0].grading == rat(3, 2));

    CHECK_THROWS_WITH_AS(compute_twist_knot_zero_surgery(0, kOmega),
                         doctest::Contains("family-out-of-scope"), Error);
    CHECK_THROWS_WITH_AS(compute_twist_knot_zero_surgery(1, TwistClass{rat(0)}),
                         doctest::Contains("zero-twist"), Error);
}

TEST_CASE("twist-knot derivation log") {
    DerivationLog log;
    compute_twist_knot_zero_surgery(1, kOmega, &log);
    std::vector<std::string> steps, anchors;
    for (const auto& s : log) {
        steps.push_back(s.step);
        anchors.push_back(s.anchor);
        CHECK(!s.anchor.empty());
        CHECK(!s.output_summary.empty());
    }
    CHECK((steps == std::vector<std::string>{"build_thin_complex", "large_surgery",
                                             "triangle_chase", "reconstruct_plus",
                                             "novikov_base_change"}));
    DerivationLog neg;
    compute_twist_knot_zero_surgery(-1, kOmega, &neg);
    CHECK(neg.back().step == "orientation_reverse");
    CHECK(neg.back().anchor == "mirror-duality");
}

TEST_CASE("derivation logs are deterministic") {
    DerivationLog l1, l2;
    GradedModule m1 = compute_two_bridge(2, 1, 1, kOmega, &l1);
    GradedModule m2 = compute_two_bridge(2, 1, 1, kOmega, &l2);
    CHECK(m1.summands == m2.summands);
    CHECK(log_to_json(l1).dump() == log_to_json(l2).dump());
}

TEST_CASE("excision moves are rank preserving and forget absolute gradings") {
    GradedModule m;
    m.summands.push_back(GradedModule::free_field(RingTag::Lambda, 3, rat(-3, 2)));
    ExcisionMove move{"a", "b", true, true, ""};
    GradedModule out = apply_excision(m, move);
    REQUIRE(out.summands.size() == 1);
    CHECK(out.summands[0].rank == 3);
    CHECK(!out.summands[0].has_grading);

    ExcisionMove bad_genus{"a", "b", false, true, ""};
    CHECK_THROWS_WITH_AS(apply_excision(m, bad_genus),
                         doctest::Contains("hypothesis-not-met"), Error);
    ExcisionMove bad_omega{"a", "b", true, false, ""};
    CHECK_THROWS_WITH_AS(apply_excision(m, bad_omega),
                         doctest::Contains("hypothesis-not-met"), Error);
}

TEST_CASE("Kunneth products over the field") {
    GradedModule a, b;
    a.summands.push_back(GradedModule::free_field(RingTag::Lambda, 3, rat(1, 2)));
    b.summands.push_back(GradedModule::free_field(RingTag::Lambda, 4, rat(-1)));
    GradedModule p = kunneth(a, b);
    REQUIRE(p.summands.size() == 1);
    CHECK(p.summands[0].rank == 12);
    CHECK(p.summands[0].grading == rat(-1, 2));

    CHECK(kunneth(GradedModule{}, b).is_zero());

    GradedModule t;
    t.summands.push_back(GradedModule::tower(rat(0)));
    CHECK_THROWS_WITH_AS(kunneth(t, b), doctest::Contains("unsupported"), Error);
}

TEST_CASE("Whitehead and Borromean pipelines") {
    for (long n : {1L, 3L, -4L}) {
        GradedModule m = compute_whitehead(n, kOmega);
        REQUIRE(m.summands.size() == 1);
        CHECK(m.summands[0].rank == std::labs(n));
        CHECK(!m.summands[0].has_grading);
    }
    CHECK_THROWS_WITH_AS(compute_whitehead(0, kOmega),
                         doctest::Contains("family-out-of-scope"), Error);

    GradedModule b = compute_borromean(2, -3, kOmega);
    REQUIRE(b.summands.size() == 1);
    CHECK(b.summands[0].rank == 6);
    CHECK(!b.summands[0].has_grading);
}

TEST_CASE("two-bridge cases") {
    GradedModule m1 = compute_two_bridge(2, 1, -2, kOmega);
    REQUIRE(m1.summands.size() == 1);
    CHECK(m1.summands[0].kind == Summand::FreeField);
    CHECK(m1.summands[0].rank == 4);

    GradedModule m2 = compute_two_bridge(2, 1, 1, kOmega);
    REQUIRE(m2.summands.size() == 2);
    CHECK(m2.summands[0].kind == Summand::FreeField);
    CHECK(m2.summands[0].rank == 2);
    CHECK(m2.summands[1].kind == Summand::Tower);

    GradedModule m3 = compute_two_bridge(1, -1, -1, kOmega);
    REQUIRE(m3.summands.size() == 1);
    CHECK(m3.summands[0].rank == 1);

    CHECK_THROWS_WITH_AS(compute_two_bridge(2, 1, 5, kOmega),
                         doctest::Contains("family-out-of-scope"), Error);
    CHECK_THROWS_WITH_AS(compute_two_bridge(2, 1, 0, kOmega),
                         doctest::Contains("family-out-of-scope"), Error);
    CHECK_THROWS_WITH_AS(compute_two_bridge(2, 2, -2, kOmega),
                         doctest::Contains("family-out-of-scope"), Error);
}

TEST_CASE("Borromean route matches the Kunneth route") {
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n) {
            GradedModule direct = compute_borromean(m, -n, kOmega);
            GradedModule via =
                kunneth(compute_whitehead(m, kOmega), compute_whitehead(-n, kOmega));
            CHECK(direct.total_rank() == via.total_rank());
            CHECK(direct.total_rank() == m * n);
        }
}

TEST_CASE("non-relatedness obstruction") {
    NonRelatednessReport r1 = non_relatedness_check(2, 3);
    CHECK(r1.obstructed);
    CHECK(r1.first.total_rank() == 2);
    CHECK(r1.second.total_rank() == 3);
    CHECK(!non_relatedness_check(2, -2).obstructed);
    CHECK(non_relatedness_check(1, 5).obstructed);
    CHECK_THROWS_WITH_AS(non_relatedness_check(0, 1),
                         doctest::Contains("family-out-of-scope"), Error);
}

TEST_CASE("family dispatch matches the direct pipelines") {
    FamilySpec spec;
    spec.omega = kOmega;
    spec.family = TwistKnotZeroSurgery{3};
    CHECK(run_family(spec).summands == compute_twist_knot_zero_surgery(3, kOmega).summands);
    spec.family = WhiteheadZeroSurgery{-2};
    CHECK(run_family(spec).summands == compute_whitehead(-2, kOmega).summands);
    spec.family = BorromeanZeroSurgery{2, 3};
    CHECK(run_family(spec).summands == compute_borromean(2, 3, kOmega).summands);
    spec.family = TwoBridge{2, 1, 1};
    CHECK(run_family(spec).summands == compute_two_bridge(2, 1, 1, kOmega).summands);
}
