#include <doctest.h>

#include <random>

#include "cycover/divisors.hpp"

using namespace cycover;

TEST_CASE("blowup canonical class") {
    CHECK(blowup_canonical(3) == tilde_y_expr(Rational(1), Rational(1, 2)));
    CHECK(blowup_canonical(5) == tilde_y_expr(Rational(1), Rational(3, 2)));
    CHECK_THROWS(blowup_canonical(2));
    CHECK_THROWS(blowup_canonical(4));
    CHECK_THROWS(blowup_canonical(1));
}

TEST_CASE("branch bundle and its doubling identity") {
    auto d3 = branch_bundle(3);
    CHECK(d3 == tilde_y_expr(Rational(-1), Rational(1, 2)));
    CHECK(Rational(2) * d3 == tilde_y_expr(Rational(-2), Rational(1)));

    // -(3/2)E + 2E = (1/2)E, so D has the same shape for n = 5
    CHECK(branch_bundle(5) == tilde_y_expr(Rational(-1), Rational(1, 2)));
    CHECK((Rational(2) * branch_bundle(7)).coefficient("E") == Rational(1));
}

TEST_CASE("canonical class of the cover") {
    auto k3 = cover_canonical(3);
    CHECK(k3.basis() == DivisorBasis::TildeX);
    CHECK(k3.coefficient("F") == Rational(2));
    CHECK(k3.coefficient("pfK") == Rational(0));
    CHECK(cover_canonical(5).coefficient("F") == Rational(4));
    CHECK(cover_canonical(11).coefficient("F") == Rational(10));
}

TEST_CASE("contraction kills the canonical class") {
    for (std::int64_t n : {3, 5, 7, 9, 11})
        CHECK(contracted_canonical(n).is_zero());
}

TEST_CASE("normal class of the exceptional F") {
    for (std::int64_t n : {3, 5, 7}) {
        auto ff = f_normal_class(n);
        CHECK(ff.basis() == DivisorBasis::ExceptionalF);
        CHECK(ff.coefficient("H") == Rational(-1));
    }
}

TEST_CASE("basis mixing is a type error") {
    DivisorExpr y = tilde_y_expr(Rational(1), Rational(0));
    DivisorExpr x(DivisorBasis::TildeX);
    x.add_term("F", Rational(1));
    CHECK_THROWS_AS(y + x, std::invalid_argument);
    CHECK_THROWS(x.add_term("E", Rational(1))); // wrong symbol for basis
}

TEST_CASE("pullback is linear") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-20, 20);
    std::uniform_int_distribution<std::int64_t> den(1, 10);
    for (int i = 0; i < 100; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        DivisorExpr x = tilde_y_expr(Rational(num(rng), den(rng)),
                                     Rational(num(rng), den(rng)));
        DivisorExpr y = tilde_y_expr(Rational(num(rng), den(rng)),
                                     Rational(num(rng), den(rng)));
        DivisorExpr lhs = pullback_to_cover(a * x + b * y);
        DivisorExpr rhs = a * pullback_to_cover(x) + b * pullback_to_cover(y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("zero terms are dropped from the canonical form") {
    DivisorExpr a = tilde_y_expr(Rational(1), Rational(1, 2));
    DivisorExpr b = tilde_y_expr(Rational(1), Rational(0));
    DivisorExpr diff = a - b;
    CHECK(diff.coefficients().size() == 1);
    CHECK(diff == tilde_y_expr(Rational(0), Rational(1, 2)));
    CHECK((a - a).is_zero());
    CHECK((a - a).str() == "0");
}
