#include <doctest.h>

#include "thf/serialize.hpp"
#include "thf/snf.hpp"
#include "thf/testgen.hpp"

using namespace thf;

namespace {

template <class R>
Matrix<R> from_rows(std::initializer_list<std::initializer_list<R>> rows) {
    Matrix<R> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

template <class R>
void check_snf_contract(const Matrix<R>& m) {
    SnfResult<R> s = smith_normal_form(m);
    Matrix<R> d = s.left * m * s.right;
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            R want = (i == j && i < s.diag.size()) ? s.diag[i] : R(0);
            CHECK(is_zero(d.at(i, j) - want));
        }
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(divides(s.diag[i], s.diag[i + 1]));
    CHECK(s.rank == fraction_field_rank(m));
    CHECK(s.left * s.left_inv == Matrix<R>::identity(m.rows));
    CHECK(s.right * s.right_inv == Matrix<R>::identity(m.cols));
}

}  // namespace

TEST_CASE("integer SNF of the hyperbolic form") {
    Matrix<BigInt> m = from_rows<BigInt>({{-1, 1}, {1, 0}});
    SnfResult<BigInt> s = smith_normal_form(m);
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 1);
    CHECK(s.rank == 2);
    CHECK(signature(m) == 0);
}

TEST_CASE("signature base cases") {
    CHECK(signature(from_rows<BigInt>({{1}})) == 1);
    CHECK(signature(from_rows<BigInt>({{-1}})) == -1);
    CHECK(signature(from_rows<BigInt>({{2, 0}, {0, -3}})) == 0);
    CHECK_THROWS_WITH_AS(signature(from_rows<BigInt>({{0, 1}, {0, 0}})),
                         doctest::Contains("shape"), Error);
    CHECK_THROWS_WITH_AS(signature(Matrix<BigInt>(2, 3)), doctest::Contains("shape"), Error);
}

TEST_CASE("signature is a congruence invariant") {
    Rng rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        Matrix<BigInt> a = random_int_matrix(rng, n, n);
        Matrix<BigInt> m = a;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j) + a.at(j, i);
        Matrix<BigInt> s = random_unimodular(rng, n);
        CHECK(signature(s.transpose() * m * s) == signature(m));
    }
}

TEST_CASE("polynomial SNF base cases") {
    Matrix<F2Poly> id3 = Matrix<F2Poly>::identity(3);
    SnfResult<F2Poly> s = smith_normal_form(id3);
    REQUIRE(s.diag.size() == 3);
    for (const auto& d : s.diag) CHECK(d == F2Poly(1));

    Matrix<UPoly> m = from_rows<UPoly>(
        {{parse_upoly("U"), UPoly(0)}, {UPoly(0), parse_upoly("U^2")}});
    SnfResult<UPoly> su = smith_normal_form(m);
    REQUIRE(su.diag.size() == 2);
    CHECK(print_coeff(su.diag[0]) == "U");
    CHECK(print_coeff(su.diag[1]) == "U^2");
}

TEST_CASE("SNF diagonal entries are canonical and deterministic") {
    Rng rng(606);
    // integers: positive diagonal; F2(t)[U]: monic with coefficient-free content
    Matrix<BigInt> m = random_int_matrix(rng, 4, 4);
    SnfResult<BigInt> s1 = smith_normal_form(m), s2 = smith_normal_form(m);
    for (const auto& d : s1.diag) CHECK(d > 0);
    CHECK(s1.diag == s2.diag);
    CHECK(s1.left == s2.left);
    CHECK(s1.right == s2.right);

    Matrix<UPoly> u = random_upoly_matrix(rng, 4, 4);
    SnfResult<UPoly> t1 = smith_normal_form(u), t2 = smith_normal_form(u);
    for (const auto& d : t1.diag) CHECK(d.lead() == RatFunc(1));
    CHECK(t1.diag == t2.diag);
}

TEST_CASE("extended gcd identity") {
    Rng rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        BigInt a(rng.uniform(-50, 50)), b(rng.uniform(-50, 50));
        if (a == 0 && b == 0) continue;
        Egcd<BigInt> e = extended_gcd(a, b);
        CHECK(e.g == e.s * a + e.t * b);
        CHECK(divides(e.g, a));
        CHECK(divides(e.g, b));
        CHECK(e.g > 0);
    }
    for (int trial = 0; trial < 100; ++trial) {
        F2Poly a = random_f2poly(rng, 8), b = random_f2poly(rng, 8);
        if (a.is_zero() && b.is_zero()) continue;
        Egcd<F2Poly> e = extended_gcd(a, b);
        CHECK(e.g == e.s * a + e.t * b);
        CHECK(divides(e.g, a));
        CHECK(divides(e.g, b));
    }
    for (int trial = 0; trial < 50; ++trial) {
        UPoly a = random_upoly(rng), b = random_upoly(rng);
        if (a.is_zero() && b.is_zero()) continue;
        Egcd<UPoly> e = extended_gcd(a, b);
        CHECK(e.g == e.s * a + e.t * b);
        CHECK(divides(e.g, a));
        CHECK(divides(e.g, b));
    }
}

TEST_CASE("SNF transform contract over every supported ring") {
    Rng rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
        std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
        check_snf_contract(random_int_matrix(rng, r, c));
        check_snf_contract(random_f2poly_matrix(rng, r, c));
        check_snf_contract(random_laurent_matrix(rng, r, c));
        check_snf_contract(random_upoly_matrix(rng, r, c));
    }
}
