#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqrs/cartan.hpp"
#include "support.hpp"

using namespace uqrs;

namespace {
// Quotient-of-factorials oracle, usable only when all brackets are invertible.
Scalar binomial_by_factorials(int a, int i, const Scalar& rj, const Scalar& sj) {
    const CyclotomicContext& ctx = rj.context();
    auto fact = [&](int c) {
        Scalar f = ctx.one();
        for (int k = 1; k <= c; ++k) f *= rs_bracket(k, rj, sj);
        return f;
    };
    return fact(a) * (fact(i) * fact(a - i)).inverse();
}
} // namespace

TEST_CASE("standard Cartan data") {
    auto a2 = cartan_datum(Family::A, 2);
    CHECK(a2.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(a2.d == std::vector<int>{1, 1});

    auto b2 = cartan_datum(Family::B, 2);
    CHECK(b2.a == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(b2.d == std::vector<int>{2, 1});

    auto g2 = cartan_datum(Family::G2, 2);
    CHECK(g2.a[0][1] * g2.a[1][0] == 3);
    CHECK(g2.d[0] * g2.a[0][1] == g2.d[1] * g2.a[1][0]);

    CHECK_THROWS_AS(cartan_datum(Family::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(cartan_datum(Family::F4, 5), std::invalid_argument);
    CHECK_THROWS_AS(cartan_datum(Family::A, 0), std::invalid_argument);
}

TEST_CASE("Euler form values and symmetrization identity") {
    auto a2 = cartan_datum(Family::A, 2);
    CHECK(euler_form(a2, 1, 2) == -1);
    CHECK(euler_form(a2, 2, 1) == 0);
    CHECK(euler_form(a2, 1, 1) == 1);
    auto b2 = cartan_datum(Family::B, 2);
    CHECK(euler_form(b2, 1, 2) == -2);
    CHECK_THROWS_AS(euler_form(a2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(euler_form(a2, 1, 3), std::out_of_range);

    std::vector<CartanDatum> data{
        cartan_datum(Family::A, 1), cartan_datum(Family::A, 3), cartan_datum(Family::B, 3),
        cartan_datum(Family::C, 2), cartan_datum(Family::C, 4), cartan_datum(Family::D, 4),
        cartan_datum(Family::D, 5), cartan_datum(Family::F4, 4), cartan_datum(Family::G2, 2)};
    for (const auto& datum : data)
        for (int i = 1; i <= datum.rank; ++i)
            for (int j = 1; j <= datum.rank; ++j)
                CHECK(euler_form(datum, i, j) + euler_form(datum, j, i) ==
                      (long)datum.d[i - 1] * datum.a[i - 1][j - 1]);
}

TEST_CASE("Gaussian binomials") {
    CyclotomicContext c6(6);
    Scalar v = c6.root_of_unity(1);
    CHECK(q_binomial(3, 1, v) == c6.one() + v + v * v);
    CHECK(q_binomial(5, 0, v) == c6.one());
    CHECK(q_binomial(4, 2, c6.one()) == c6.from_long(6));
    // classical limit across a row
    for (int k = 0; k <= 5; ++k) {
        long classical = 1;
        for (int i = 0; i < k; ++i) classical = classical * (5 - i) / (i + 1);
        CHECK(q_binomial(5, k, c6.one()) == c6.from_long(classical));
    }
    // alternative Pascal identity (n,k) = v^k (n-1,k) + (n-1,k-1)
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(q_binomial(n, k, v) ==
                  v.pow(k) * q_binomial(n - 1, k, v) + q_binomial(n - 1, k - 1, v));
}

TEST_CASE("bracket binomials match the factorial quotient when invertible") {
    CyclotomicContext ctx(8);
    // ord(r s^-1) = 8 here, so [1..7] are all nonzero.
    Scalar r = ctx.root_of_unity(1), s = ctx.root_of_unity(2);
    for (int a = 0; a <= 7; ++a)
        for (int i = 0; i <= a; ++i)
            CHECK(rs_bracket_binomial(a, i, r, s) == binomial_by_factorials(a, i, r, s));
    CHECK(rs_bracket_binomial(2, 1, r, s) == r + s);
    CHECK(rs_bracket_binomial(5, 0, r, s) == ctx.one());
}

TEST_CASE("bracket degeneration at ord(rs^-1) = m") {
    CyclotomicContext ctx(6);
    Scalar r = ctx.root_of_unity(1), s = ctx.root_of_unity(4);
    // rs^-1 = zeta^-3 has order 2
    long m = (r * s.inverse()).multiplicative_order();
    CHECK(m == 2);
    CHECK(rs_bracket(2, r, s) == ctx.zero());
    CHECK(rs_bracket(1, r, s) == ctx.one());
    CHECK(rs_bracket_binomial(2, 1, r, s) == r + s);
    CHECK(rs_bracket_binomial(2, 1, r, s) == ctx.root_of_unity(1) + ctx.root_of_unity(4));

    // generic m < L case: check [m] = 0 and [c] != 0 below m
    CyclotomicContext c12(12);
    Scalar r2 = c12.root_of_unity(1), s2 = c12.root_of_unity(5);
    long m2 = (r2 * s2.inverse()).multiplicative_order();
    CHECK(m2 == 3);
    for (int c = 1; c < m2; ++c) CHECK(!rs_bracket(c, r2, s2).is_zero());
    CHECK(rs_bracket((int)m2, r2, s2).is_zero());

    CHECK_THROWS_AS(rs_bracket_binomial(2, 1, r, r), std::domain_error);
}

TEST_CASE("Serre coefficients in type A2") {
    CyclotomicContext ctx(6);
    Scalar r = ctx.root_of_unity(1), s = ctx.root_of_unity(2);
    auto a2 = cartan_datum(Family::A, 2);
    CHECK(serre_coefficient(a2, r, s, 1, 2, 0) == ctx.one());
    CHECK(serre_coefficient(a2, r, s, 1, 2, 1) == s);
    CHECK(serre_coefficient(a2, r, s, 2, 1, 1) == r.inverse());
    CHECK(serre_coefficient(a2, r, s, 1, 2, 2) == r * s.inverse() * s.pow(2));
    CHECK_THROWS_AS(serre_coefficient(a2, r, s, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("positive roots of type A in convex order") {
    CHECK(positive_roots_A(3) ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(positive_roots_A(2) == std::vector<std::pair<int, int>>{{1, 1}});
    auto r4 = positive_roots_A(4);
    CHECK(r4.size() == 6);
    CHECK(std::is_sorted(r4.begin(), r4.end()));
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::F4, Family::G2})
        CHECK(family_from_string(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_string("E8"), std::invalid_argument);
}
