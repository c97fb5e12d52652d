#include <doctest.h>

#include <stdexcept>

#include "frobper/binary_form.hpp"

using namespace frobper;

TEST_CASE("gcd of X^2 - Y^2 and X^2 + Y^2 in characteristic 3 is 1") {
    const Prime p(3);
    // coefficients indexed by the X exponent: c0 Y^2 + c1 XY + c2 X^2
    const BinaryForm f(p, {-1, 0, 1});
    const BinaryForm g(p, {1, 0, 1});
    const BinaryForm h = polynomial_gcd(f, g);
    CHECK(h.degree() == 0);
    CHECK(h.coeff(0) == 1);
}

TEST_CASE("gcd(f, f) is the normalization of f") {
    const Prime p(7);
    const BinaryForm f(p, {3, 1, 5, 2});
    CHECK(polynomial_gcd(f, f) == normalized(f));
    CHECK(normalized(f).coeff(3) == 1);
}

TEST_CASE("gcd(X(X+Y), X(X-Y)) = X in characteristic 5") {
    const Prime p(5);
    const BinaryForm x = BinaryForm::monomial(p, 1, 0);
    const BinaryForm f = x * BinaryForm(p, {1, 1});
    const BinaryForm g = x * BinaryForm(p, {-1, 1});
    CHECK(polynomial_gcd(f, g) == x);
}

TEST_CASE("gcd keeps common powers of Y") {
    const Prime p(5);
    const BinaryForm y = BinaryForm::monomial(p, 0, 1);
    const BinaryForm f = y * y * BinaryForm(p, {1, 1});
    const BinaryForm g = y * BinaryForm(p, {2, 1});
    CHECK(polynomial_gcd(f, g) == y);
    CHECK(polynomial_gcd(y, BinaryForm::monomial(p, 1, 0)).degree() == 0);
}

TEST_CASE("gcd error and zero handling") {
    const Prime p(3);
    CHECK_THROWS_WITH_AS(polynomial_gcd(BinaryForm(p, 2), BinaryForm(p, 1)), "undefined gcd", std::invalid_argument);
    const BinaryForm f(p, {1, 2});
    CHECK(polynomial_gcd(BinaryForm(p, 3), f) == normalized(f));
}

TEST_CASE("form arithmetic") {
    const Prime p(3);
    const BinaryForm s = BinaryForm::fermat(p, 2);  // X^2 + Y^2
    const BinaryForm sq = s * s;
    CHECK(sq == BinaryForm(p, {1, 0, 2, 0, 1}));
    CHECK(s.pow(2) == sq);
    CHECK(s.inflate(2) == BinaryForm::fermat(p, 4));
    CHECK(s.inflate(2).is_in_powers(2));
    CHECK_FALSE(BinaryForm(p, {1, 1}).is_in_powers(2));
    CHECK(s.d_dx() == BinaryForm(p, {0, 2}));
    CHECK(s.d_dy() == BinaryForm(p, {2, 0}));
    CHECK(s.evaluate(1, 1) == 2);
    CHECK(s.to_string() == "X^2 + Y^2");
    CHECK(BinaryForm::monomial(p, 1, 2).y_valuation() == 2);
    CHECK(BinaryForm::monomial(p, 1, 2).x_valuation() == 1);
}
