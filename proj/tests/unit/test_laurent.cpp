#include "support.hpp"

#include <doctest.h>

using namespace shapetile;
using testsupport::q;

namespace {

LaurentPoly X() { return LaurentPoly::x(); }
LaurentPoly Y() { return LaurentPoly::y(); }
LaurentPoly one() { return LaurentPoly(1); }

LaurentPoly m(long c, const Rational& u, const Rational& v) { return LaurentPoly::monomial(c, u, v); }

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("-1.25") == make_rational(-5, 4));
    CHECK(parse_rational("0.1") == make_rational(1, 10));
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(smallest_prime_factor(Integer(0)) == 2);
    CHECK(smallest_prime_factor(Integer(-15)) == 3);
    CHECK(smallest_prime_factor(Integer(49)) == 7);
    CHECK_THROWS(smallest_prime_factor(Integer(1)));
}

TEST_CASE("poly_add") {
    CHECK((X() - one()) + (one() - X()) == LaurentPoly());
    const LaurentPoly f = (X() - one()) * (Y() - one());
    CHECK(poly_add(f, LaurentPoly()) == f);
    // (X-1)(Y-1) + X(X-1)(Y-1) = X^2Y - X^2 - Y + 1
    LaurentPoly expected = m(1, 2, 1) - m(1, 2, 0) - m(1, 0, 1) + one();
    CHECK(poly_add(f, X() * f) == expected);
    CHECK(((X() - one()) + (one() - X())).is_zero());
}

TEST_CASE("poly_mul") {
    CHECK(poly_mul(X() - one(), Y() - one()) == m(1, 1, 1) - X() - Y() + one());
    const LaurentPoly f = m(3, q("1/2"), -2) + m(-1, 0, q("5/3"));
    CHECK(poly_mul(f, one()) == f);
    CHECK(poly_mul(f, LaurentPoly()).is_zero());
    // (1+X+Y)(X-1)(Y-1), expanded by hand.
    LaurentPoly tromino;
    for (auto [u, v, c] : std::vector<std::tuple<int, int, int>>{
             {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {2, 0, -1}, {0, 2, -1}, {1, 1, -1}, {2, 1, 1}, {1, 2, 1}})
        tromino.add_term({u, v}, c);
    CHECK(poly_mul(one() + X() + Y(), (X() - one()) * (Y() - one())) == tromino);
    CHECK(tromino.size() == 6);
}

TEST_CASE("poly_monomial_mul") {
    const LaurentPoly g1 = (X() - one()) * (Y() - one());
    CHECK(poly_monomial_mul(g1, 1, 2) == m(1, 1, 2) * g1);
    CHECK(poly_monomial_mul(g1, 0, 0) == g1);
    CHECK(poly_monomial_mul(poly_monomial_mul(g1, q("2/3"), -1), q("-2/3"), 1) == g1);
    for (long i = -2; i <= 2; ++i)
        for (long j = -2; j <= 2; ++j)
            CHECK(poly_monomial_mul(encode(tile_from_lattice(testsupport::cells_of({{0, 0, 1}}))), i, j) ==
                  encode(tile_from_lattice(testsupport::cells_of({{i, j, 1}}))));
}

TEST_CASE("poly_substitute_powers") {
    const LaurentPoly g1 = (X() - one()) * (Y() - one());
    CHECK(poly_substitute_powers(g1, 1) == g1);
    const Rational r = q("7/3");
    CHECK(poly_substitute_powers(g1, r) == (m(1, r, 0) - one()) * (m(1, 0, r) - one()));
    CHECK(poly_substitute_powers(poly_substitute_powers(g1, q("1/2")), 2) == g1);
    CHECK_THROWS_AS(poly_substitute_powers(g1, 0), std::invalid_argument);
    CHECK_THROWS_AS(poly_substitute_powers(g1, -1), std::invalid_argument);
}

TEST_CASE("substitute_line") {
    const LaurentPoly g1 = (X() - one()) * (Y() - one());
    UniLaurentPoly expected;
    expected.add_term(2, 1);
    expected.add_term(1, -2);
    expected.add_term(0, 1);
    CHECK(substitute_line(g1, 1, 1) == expected);
    CHECK(substitute_line(LaurentPoly(), 2, 3).is_zero());

    const LaurentPoly s = one() + X() + m(1, 1, 1) + m(1, 2, 1);
    UniLaurentPoly two_plus_two_z;
    two_plus_two_z.add_term(0, 2);
    two_plus_two_z.add_term(1, 2);
    CHECK(substitute_line(s, 1, -1) == two_plus_two_z);

    // ring homomorphism
    const LaurentPoly a = m(2, 1, 3) - m(1, -1, 2) + one();
    const LaurentPoly b = m(-3, 2, 0) + m(1, 0, -1);
    CHECK(substitute_line(a * b, -2, 3) == substitute_line(a, -2, 3) * substitute_line(b, -2, 3));
    CHECK(substitute_line(a + b, -2, 3) == substitute_line(a, -2, 3) + substitute_line(b, -2, 3));

    CHECK_THROWS_AS(substitute_line(a, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(substitute_line(a, 2, 4), std::invalid_argument);
}

TEST_CASE("square_poly") {
    CHECK(square_poly(1) == m(1, 1, 1) - X() - Y() + one());
    CHECK(square_poly(3) == (m(1, 3, 0) - one()) * (m(1, 0, 3) - one()));
    CHECK(square_poly(3).size() == 4);
    CHECK(square_poly(2) == poly_substitute_powers(square_poly(1), 2));
    CHECK_THROWS_AS(square_poly(0), std::invalid_argument);
}

TEST_CASE("evaluation and printing") {
    const LaurentPoly f = one() + X() + Y();
    CHECK(f.sum_of_coefficients() == 3);
    CHECK(f.evaluate(2, 3) == 6);
    CHECK(m(1, -1, 0).evaluate(4, 1) == make_rational(1, 4));
    CHECK_THROWS_AS(m(1, q("1/2"), 0).evaluate(4, 1), std::domain_error);
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(square_poly(1)) == "1 X^{0} Y^{0} - 1 X^{0} Y^{1} - 1 X^{1} Y^{0} + 1 X^{1} Y^{1}");
    CHECK(f.coeff(1, 0) == 1);
    CHECK(f.coeff(5, 5) == 0);
}
