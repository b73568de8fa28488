#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "carleson/expression.hpp"

using namespace carleson;

TEST_CASE("parses density expressions") {
  const auto e = Expression::parse("1/(y^2)", {"x", "y"});
  CHECK(e.eval2(0.0, 2.0) == doctest::Approx(0.25));
  CHECK(e.eval2(100.0, 0.5) == doctest::Approx(4.0));
}

TEST_CASE("precedence and unary functions") {
  const auto e = Expression::parse("y^(-0.5)*exp(-x*x)", {"x", "y"});
  CHECK(e.eval2(0.0, 4.0) == doctest::Approx(0.5));
  CHECK(e.eval2(1.0, 1.0) == doctest::Approx(std::exp(-1.0)));

  CHECK(Expression::parse("2^3^2", {"t"}).eval1(0) == doctest::Approx(512.0));  // right-assoc
  CHECK(Expression::parse("-2^2", {"t"}).eval1(0) == doctest::Approx(-4.0));    // pow binds tighter
  CHECK(Expression::parse("2*3+4", {"t"}).eval1(0) == doctest::Approx(10.0));
  CHECK(Expression::parse("2+3*4", {"t"}).eval1(0) == doctest::Approx(14.0));
  CHECK(Expression::parse("abs(-3)+sqrt(4)+log(exp(1))", {"t"}).eval1(0) ==
        doctest::Approx(6.0));
  CHECK(Expression::parse("t^-1", {"t"}).eval1(4.0) == doctest::Approx(0.25));
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    Expression::parse("1/(", {"x", "y"});
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 3);
    CHECK_FALSE(e.expected().empty());
  }

  CHECK_THROWS_AS(Expression::parse("", {"t"}), parse_error);
  CHECK_THROWS_AS(Expression::parse("1+", {"t"}), parse_error);
  CHECK_THROWS_AS(Expression::parse("(1+2", {"t"}), parse_error);
  CHECK_THROWS_AS(Expression::parse("sin(1)", {"t"}), parse_error);  // unknown function
  CHECK_THROWS_AS(Expression::parse("x", {"t"}), parse_error);       // undeclared variable
  CHECK_THROWS_AS(Expression::parse("1 2", {"t"}), parse_error);     // trailing input
}

TEST_CASE("variables restricted to the declared context") {
  const auto boundary = Expression::parse("1/(1+t*t)", {"t"});
  CHECK(boundary.eval1(1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(boundary.eval({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("non-finite results surface at evaluation") {
  const auto e = Expression::parse("1/x", {"x", "y"});
  CHECK(std::isinf(e.eval2(0.0, 1.0)));
  const auto l = Expression::parse("log(x)", {"x", "y"});
  CHECK(std::isnan(l.eval2(-1.0, 1.0)));
}
