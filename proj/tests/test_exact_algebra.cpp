#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbfock/bipoly.hpp"
#include "hilbfock/errors.hpp"
#include "hilbfock/matrix.hpp"
#include "hilbfock/rational.hpp"
#include "hilbfock/ratfunc.hpp"

using namespace hilbfock;

namespace {

const BiPoly U = BiPoly::var_u();
const BiPoly V = BiPoly::var_v();

// Deterministic small random polynomials for the property suites.
struct Rng {
    std::mt19937 gen{20240611};

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }

    Rational rational() {
        int num = uniform(-9, 9);
        int den = uniform(1, 5);
        return Rational(num, den);
    }

    BiPoly poly(bool allow_zero = true) {
        BiPoly p;
        int terms = uniform(allow_zero ? 0 : 1, 4);
        for (int i = 0; i < terms; ++i)
            p += BiPoly::monomial(Rational(uniform(-9, 9)), uniform(0, 3), uniform(0, 3));
        if (!allow_zero && p.is_zero()) p += BiPoly::one();
        return p;
    }

    RatFunc ratfunc(bool allow_zero = true) {
        return RatFunc(poly(allow_zero), poly(false));
    }
};

} // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2).inverse() == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::binomial(4, 2) == Rational(6));
    CHECK(Rational::binomial(3, 5) == Rational(0));
}

TEST_CASE("poly_arith basics") {
    CHECK((U + V) + (U - V) == U.scaled(Rational(2)));
    CHECK(U * V == BiPoly::monomial(Rational(1), 1, 1));
    // (-2U+V)(-U+V) = 2U^2 - 3UV + V^2, hand expansion
    BiPoly lhs = BiPoly::linear(-2, 1) * BiPoly::linear(-1, 1);
    BiPoly rhs = BiPoly::monomial(Rational(2), 2, 0) +
                 BiPoly::monomial(Rational(-3), 1, 1) +
                 BiPoly::monomial(Rational(1), 0, 2);
    CHECK(lhs == rhs);
    CHECK((U - U).is_zero());
    CHECK(BiPoly::zero().total_degree() == -1);
}

TEST_CASE("grlex leading term and text form") {
    BiPoly p = BiPoly::monomial(Rational(2), 2, 0) +
               BiPoly::monomial(Rational(-3), 1, 1) + BiPoly::monomial(Rational(1), 0, 2);
    CHECK(p.leading_term().first == Monomial{2, 0});
    CHECK(p.to_string() == "2*U^2 - 3*U*V + V^2");
    CHECK(BiPoly::parse(p.to_string()) == p);
    CHECK(BiPoly::parse("-U + 2").to_string() == "-U + 2");
    CHECK(BiPoly::parse("1/2*U^2").to_string() == "1/2*U^2");
    CHECK_THROWS_AS(BiPoly::parse("2**U"), ParseError);
    CHECK_THROWS_AS(BiPoly::parse(""), ParseError);
}

TEST_CASE("poly_gcd golden cases") {
    CHECK(poly_gcd(U * U, U * V) == U);
    CHECK(poly_gcd(U + V, U - V) == BiPoly::one());
    // gcd((U+V)^2 V, (U+V) V^2) = (U+V) V, factorization oracle
    BiPoly a = (U + V) * (U + V) * V;
    BiPoly b = (U + V) * V * V;
    CHECK(poly_gcd(a, b) == (U + V) * V);
    CHECK_THROWS_AS(poly_gcd(BiPoly::zero(), BiPoly::zero()), std::domain_error);
    CHECK(poly_gcd(BiPoly::zero(), a) == ((U + V) * (U + V) * V));
    // canonical: primitive, positive grlex-leading coefficient
    CHECK(poly_gcd(U.scaled(Rational(-4)), U.scaled(Rational(6))) == U);
}

TEST_CASE("ratfunc canonical form") {
    // (-2U)/(-U) = 2, cross-checked against the q_1 coefficient example
    CHECK(RatFunc(U.scaled(Rational(-2)), -U) == RatFunc(2));
    CHECK(RatFunc(BiPoly::one(), U * V).to_string() == "1/(U*V)");
    // denominator integer-primitive with positive leading coefficient
    RatFunc f(BiPoly::one(), (U * V).scaled(Rational(2)));
    CHECK(f.den() == U * V);
    CHECK(f.num() == BiPoly(Rational(1, 2)));
    CHECK(f.to_string() == "1/2/(U*V)");
    CHECK(RatFunc::parse("1/2/(U*V)") == f);
    RatFunc g = RatFunc::parse("(2*U^2 - 3*U*V + V^2)/(U*V)");
    CHECK(g.to_string() == "(2*U^2 - 3*U*V + V^2)/(U*V)");
    CHECK_THROWS_AS(RatFunc(U, BiPoly::zero()), std::domain_error);
}

TEST_CASE("ratfunc arithmetic") {
    RatFunc x(U, V);
    CHECK((x + (-x)).is_zero());
    CHECK(RatFunc(BiPoly::one(), U) * RatFunc(BiPoly::one(), V) ==
          RatFunc(BiPoly::one(), U * V));
    CHECK(x / x == RatFunc(1));
    CHECK_THROWS_AS(x / RatFunc(0), std::domain_error);
    RatFunc a = RatFunc(BiPoly::one(), U + V);
    RatFunc b = RatFunc(BiPoly::one(), U - V);
    RatFunc sum = a + b;
    CHECK(sum == RatFunc(U.scaled(Rational(2)), (U + V) * (U - V)));
}

TEST_CASE("evaluate") {
    RatFunc f(U, V);
    CHECK(f.evaluate(Rational(2), Rational(3)) == Rational(2, 3));
    CHECK(RatFunc(BiPoly::one(), U * V).evaluate(Rational(1), Rational(1)) == Rational(1));
    RatFunc g(BiPoly::linear(-2, 1), BiPoly::linear(-1, 1));
    CHECK(g.evaluate(Rational(1), Rational(3)) == Rational(1, 2));
    CHECK_THROWS_WITH_AS(f.evaluate(Rational(1), Rational(0)),
                         "RatFunc: denominator vanishes at (U,V) = (1, 0)",
                         std::domain_error);
}

TEST_CASE("classical limit") {
    CHECK(RatFunc(6).classical_limit() == Rational(6));
    CHECK(RatFunc(U.scaled(Rational(-2)) + BiPoly(3)).classical_limit() == Rational(3));
    CHECK_THROWS_AS(RatFunc(BiPoly::one(), U * V).classical_limit(), IntegralityError);
}

TEST_CASE("solve_linear golden cases") {
    Mat id = Mat::identity(3);
    Mat rhs(3, 1);
    rhs.at(0, 0) = RatFunc(U);
    rhs.at(1, 0) = RatFunc(V);
    rhs.at(2, 0) = RatFunc(7);
    CHECK(solve_linear(id, rhs) == rhs);

    Mat diag(2, 2);
    diag.at(0, 0) = RatFunc(U);
    diag.at(1, 1) = RatFunc(V);
    Mat ones(2, 1);
    ones.at(0, 0) = RatFunc(1);
    ones.at(1, 0) = RatFunc(1);
    Mat sol = solve_linear(diag, ones);
    CHECK(sol.at(0, 0) == RatFunc(BiPoly::one(), U));
    CHECK(sol.at(1, 0) == RatFunc(BiPoly::one(), V));

    // generic symbolic 2x2, checked by residual inside solve_linear
    Mat m(2, 2);
    m.at(0, 0) = RatFunc(U + V);
    m.at(0, 1) = RatFunc(V);
    m.at(1, 0) = RatFunc(U);
    m.at(1, 1) = RatFunc(U * V);
    Mat r(2, 1);
    r.at(0, 0) = RatFunc(1);
    r.at(1, 0) = RatFunc(U - V);
    Mat x = solve_linear(m, r);
    CHECK(m * x == r);

    Mat singular(2, 2);
    singular.at(0, 0) = RatFunc(U);
    singular.at(0, 1) = RatFunc(V);
    singular.at(1, 0) = RatFunc(U.scaled(Rational(2)));
    singular.at(1, 1) = RatFunc(V.scaled(Rational(2)));
    CHECK_THROWS_AS(solve_linear(singular, ones), SingularMatrixError);
    try {
        solve_linear(singular, ones);
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank() == 1);
    }
}

TEST_CASE("property: canonical form idempotence, 500 cases") {
    Rng rng;
    for (int k = 0; k < 500; ++k) {
        RatFunc f = rng.ratfunc();
        // rebuilding from its own parts must be the identity
        CHECK(RatFunc(f.num(), f.den()) == f);
        CHECK(RatFunc::parse(f.to_string()) == f);
        if (!f.is_zero()) {
            CHECK(f.den().rational_content() == Rational(1));
            CHECK(f.den().leading_term().second.sign() > 0);
        }
    }
}

TEST_CASE("property: gcd divides and cofactors coprime") {
    Rng rng;
    for (int k = 0; k < 500; ++k) {
        BiPoly a = rng.poly();
        BiPoly b = rng.poly();
        if (a.is_zero() && b.is_zero()) continue;
        BiPoly g = poly_gcd(a, b);
        BiPoly qa, qb;
        if (!a.is_zero()) CHECK(a.try_divide(g, qa));
        if (!b.is_zero()) CHECK(b.try_divide(g, qb));
        if (!a.is_zero() && !b.is_zero()) {
            BiPoly h = poly_gcd(a.divide_exact(g), b.divide_exact(g));
            CHECK(h.is_constant());
        }
    }
}

TEST_CASE("property: field laws") {
    Rng rng;
    for (int k = 0; k < 500; ++k) {
        RatFunc a = rng.ratfunc();
        RatFunc b = rng.ratfunc();
        RatFunc c = rng.ratfunc();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        RatFunc nz = rng.ratfunc(false);
        CHECK(nz * nz.inverse() == RatFunc(1));
    }
}

TEST_CASE("property: evaluate is a ring homomorphism") {
    Rng rng;
    for (int k = 0; k < 500; ++k) {
        RatFunc a = rng.ratfunc();
        RatFunc b = rng.ratfunc();
        Rational u(rng.uniform(-6, 6));
        Rational v(rng.uniform(-6, 6));
        try {
            Rational pa = a.evaluate(u, v);
            Rational pb = b.evaluate(u, v);
            CHECK((a * b).evaluate(u, v) == pa * pb);
            CHECK((a + b).evaluate(u, v) == pa + pb);
        } catch (const std::domain_error&) {
            // vanishing denominator at the sample point; skip
        }
    }
}
