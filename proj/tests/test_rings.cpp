#include <doctest.h>

#include "thf/matrix.hpp"
#include "thf/novikov.hpp"
#include "thf/serialize.hpp"
#include "thf/testgen.hpp"

using namespace thf;

namespace {
Rational rat(long n, long d = 1) { return Rational(BigInt(n)) / Rational(BigInt(d)); }
}  // namespace

TEST_CASE("F2[t] arithmetic") {
    F2Poly one(1), t = F2Poly::monomial(1);
    CHECK((one + t) * (one + t) == one + F2Poly::monomial(2));  // char 2 squaring
    CHECK((one + t) + (one + t) == F2Poly());
    CHECK(t.shifted(3) == F2Poly::monomial(4));
    CHECK(F2Poly::monomial(4).shifted(-3) == t);
    CHECK_THROWS_WITH_AS((one + t).shifted(-1), doctest::Contains("inexact-division"),
                         Error);
    // gcd((t+1)^2, t(t+1)) = t+1
    CHECK(euclid_gcd((one + t) * (one + t), t * (one + t)) == one + t);
}

TEST_CASE("F2[t] division property") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        F2Poly a = random_f2poly(rng, 40), b = random_f2poly(rng, 20);
        if (b.is_zero()) continue;
        auto [q, r] = euclid<F2Poly>::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
}

TEST_CASE("Laurent normalization and units") {
    // (t + t^2) * t^-1 = 1 + t, lowest exponent 0
    LaurentPoly a(F2Poly::monomial(1) + F2Poly::monomial(2), -1);
    CHECK(a.min_exp() == 0);
    CHECK(a.max_exp() == 1);
    LaurentPoly u = LaurentPoly::monomial(-3);
    CHECK(u * euclid<LaurentPoly>::unit_inv(u) == LaurentPoly(1));
    CHECK(euclid<LaurentPoly>::canonical_unit(a) * a == LaurentPoly(F2Poly(1) + F2Poly::monomial(1), 0));
}

TEST_CASE("exact rationals") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-2") == rat(-2));
    CHECK(rat(1, 2) + rat(1, 4) == rat(3, 4));
    CHECK(rat(-1, 2) < rat(1, 4));
    CHECK(is_integer(rat(4, 2)));
    CHECK(same_parity(rat(-3, 2), rat(1, 2)));
    CHECK(!same_parity(rat(-1, 2), rat(1, 2)));
    CHECK(!same_parity(rat(0), rat(1)));
    CHECK_THROWS_WITH_AS(parse_rational("x"), doctest::Contains("parse"), Error);
}

TEST_CASE("F2(t) fractions reduce") {
    F2Poly one(1), t = F2Poly::monomial(1);
    RatFunc x(t * (one + t), (one + t) * (one + t));  // t(t+1)/(t+1)^2 = t/(t+1)
    CHECK(x.num == t);
    CHECK(x.den == one + t);
    CHECK(x * field_inv(x) == RatFunc(1));
    CHECK(to_ratfunc(LaurentPoly::monomial(-2)) == ratfunc_t(-2));
}

TEST_CASE("Novikov addition and multiplication") {
    NovikovElem a = parse_novikov("1+t^{1/2}");
    CHECK(a * a == parse_novikov("1+t"));  // characteristic-2 squaring
    CHECK(parse_novikov("t^{3/4}") * parse_novikov("t^{1/4}") == parse_novikov("t"));
    CHECK(parse_novikov("1+t") + parse_novikov("1+t^2") == parse_novikov("t+t^2"));
}

TEST_CASE("truncated Novikov inversion") {
    CHECK(novikov_invert_truncated(parse_novikov("1+t"), rat(3)) ==
          parse_novikov("1+t+t^2"));
    CHECK(novikov_invert_truncated(parse_novikov("t^{-2}"), rat(5)) == parse_novikov("t^2"));
    CHECK(novikov_invert_truncated(parse_novikov("t+t^2"), rat(2)) ==
          parse_novikov("t^{-1}+1"));
    CHECK_THROWS_WITH_AS(novikov_invert_truncated(NovikovElem(), rat(1)),
                         doctest::Contains("division-by-zero"), Error);
}

TEST_CASE("truncated inversion property") {
    Rng rng(202);
    long dens[3] = {1, 2, 4};
    for (int trial = 0; trial < 100; ++trial) {
        NovikovElem a;
        int terms = static_cast<int>(rng.uniform(1, 4));
        for (int i = 0; i < terms; ++i)
            a = a + NovikovElem::monomial(rat(rng.uniform(-8, 8), dens[rng.uniform(0, 2)]));
        if (a.is_zero()) continue;
        Rational h = a.min_exp() + rat(5);
        NovikovElem b = novikov_invert_truncated(a, h);
        CHECK(b.min_exp() == Rational(0) - a.min_exp());
        // a*b - 1 supported only at exponents >= h
        CHECK((a * b + NovikovElem(1)).truncated(h).is_zero());
    }
}

TEST_CASE("twist action") {
    TwistClass w1{rat(1)}, whalf{rat(1, 2)};
    CHECK(twist_action(w1, 1, NovikovElem(1)) == parse_novikov("t"));
    CHECK(twist_action(whalf, 2, parse_novikov("t^{1/2}")) == parse_novikov("t^{3/2}"));
    Rng rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        NovikovElem x = NovikovElem::monomial(rat(rng.uniform(-6, 6), 2)) +
                        NovikovElem::monomial(rat(rng.uniform(-6, 6), 4));
        NovikovElem y = NovikovElem::monomial(rat(rng.uniform(-6, 6), 4));
        long k1 = rng.uniform(-3, 3), k2 = rng.uniform(-3, 3);
        TwistClass w{rat(rng.uniform(-4, 4), 2)};
        // F2-linear, and exponents add under composition
        CHECK(twist_action(w, k1, x + y) ==
              twist_action(w, k1, x) + twist_action(w, k1, y));
        CHECK(twist_action(w, k1, twist_action(w, k2, x)) == twist_action(w, k1 + k2, x));
    }
}

TEST_CASE("rank over F2(t) matches truncated Novikov rank") {
    Rng rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
        std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
        Matrix<LaurentPoly> m = random_laurent_matrix(rng, r, c);
        long spread = 0;
        for (const auto& e : m.data)
            if (!e.is_zero()) spread = std::max(spread, e.max_exp() - e.min_exp());
        Matrix<RatFunc> exact = m.map<RatFunc>([](const LaurentPoly& x) { return to_ratfunc(x); });
        Matrix<NovikovElem> nov =
            m.map<NovikovElem>([](const LaurentPoly& x) { return NovikovElem::from_laurent(x); });
        CHECK(field_rank(exact) == novikov_rank_truncated(nov, rat(3 * spread + 3)));
    }
}
