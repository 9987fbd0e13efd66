#include <doctest.h>

#include <stdexcept>

#include "parityperm/multipoly.hpp"

using namespace parityperm;

namespace {

MultiPoly x() { return MultiPoly::variable(Var::X); }
MultiPoly y() { return MultiPoly::variable(Var::Y); }
MultiPoly q() { return MultiPoly::variable(Var::Q); }

}  // namespace

TEST_CASE("construction and classification") {
  MultiPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.is_constant());
  CHECK(zero.term_count() == 0);

  MultiPoly five(5);
  CHECK(!five.is_zero());
  CHECK(five.is_constant());
  CHECK(five.coefficient(kUnitMonomial) == 5);

  MultiPoly xv = MultiPoly::variable(Var::X, 3);
  CHECK(!xv.is_constant());
  CHECK(xv.degree(Var::X) == 3);
  CHECK(xv.degree(Var::Y) == 0);
}

TEST_CASE("ring arithmetic") {
  MultiPoly p = (MultiPoly(1) + x()) * (MultiPoly(1) - x());
  CHECK(p == MultiPoly(1) - x() * x());

  CHECK(-(x() - y()) == y() - x());
  CHECK(3 * x() == x() + x() + x());

  MultiPoly s = x();
  s += y();
  s -= x();
  CHECK(s == y());
  s *= s;
  CHECK(s == MultiPoly::variable(Var::Y, 2));

  // additive cancellation removes the stored term entirely
  MultiPoly c = x();
  c.add_term(kUnitMonomial, 2);
  c.add_term(kUnitMonomial, -2);
  Monomial mx{};
  mx[static_cast<std::size_t>(Var::X)] = 1;
  c.add_term(mx, -1);
  CHECK(c.is_zero());
  CHECK(c.term_count() == 0);
}

TEST_CASE("powers") {
  MultiPoly p = (x() + y()).pow(3);
  Monomial m{};
  m[static_cast<std::size_t>(Var::X)] = 2;
  m[static_cast<std::size_t>(Var::Y)] = 1;
  CHECK(p.coefficient(m) == 3);
  CHECK((x() + y()).pow(0) == MultiPoly(1));
  CHECK(MultiPoly(2).pow(10) == MultiPoly(1024));
}

TEST_CASE("coefficient extraction") {
  MultiPoly p = MultiPoly(1) + q() * x();  // 1 + q x
  CHECK(p.coeff_of(Var::Q, 1) == x());
  CHECK(p.coeff_of(Var::Q, 0) == MultiPoly(1));
  CHECK(p.coeff_of(Var::X, 2).is_zero());
  CHECK(p.degree(Var::Q) == 1);
}

TEST_CASE("substitutions") {
  MultiPoly p = MultiPoly(1) + q() * x() + y();
  CHECK(p.substitute_zero(Var::Q) == MultiPoly(1) + y());
  CHECK(p.substitute_one(Var::Q) == MultiPoly(1) + x() + y());
  CHECK(p.substitute(Var::Y, x() * x()) ==
        MultiPoly(1) + q() * x() + x() * x());
  // substituting 1 + x for x turns x^2 into (1+x)^2
  MultiPoly sq = MultiPoly::variable(Var::X, 2);
  CHECK(sq.substitute(Var::X, MultiPoly(1) + x()) ==
        MultiPoly(1) + 2 * x() + sq);
}

TEST_CASE("rename merges exponents") {
  MultiPoly p = x() * y() + MultiPoly::variable(Var::Y, 2);
  MultiPoly r = p.rename_var(Var::Y, Var::X);
  CHECK(r == 2 * MultiPoly::variable(Var::X, 2));
  CHECK(p.rename_var(Var::Q, Var::Q) == p);
}

TEST_CASE("bounded reversal") {
  MultiPoly p = MultiPoly(1) + 3 * x();
  CHECK(p.reverse_var(Var::X, 2) ==
        MultiPoly::variable(Var::X, 2) + 3 * x());
  CHECK(p.reverse_var(Var::X, 1) == x() + MultiPoly(3));
  // reversal is an involution at the same bound
  CHECK(p.reverse_var(Var::X, 3).reverse_var(Var::X, 3) == p);
  CHECK_THROWS_AS((void)p.reverse_var(Var::X, 0), std::invalid_argument);
}

TEST_CASE("exact division") {
  MultiPoly a = (MultiPoly(1) + y()) * (MultiPoly(2) + x() + y());
  auto quot = a.divided_exactly_by(MultiPoly(1) + y());
  REQUIRE(quot.has_value());
  CHECK(*quot == MultiPoly(2) + x() + y());

  CHECK(!(MultiPoly(1) + x()).divided_exactly_by(y()).has_value());
  CHECK_THROWS_AS((void)a.divided_exactly_by(MultiPoly()),
                  std::invalid_argument);
}

TEST_CASE("canonical text form") {
  CHECK(MultiPoly().render() == "0");
  CHECK((MultiPoly(1) + q() * x()).render() == "1 + 1*q*x");
  CHECK((MultiPoly(1) - x()).render() == "1 + -1*x");
  CHECK(MultiPoly::variable(Var::X, 2).render() == "1*x^2");
  // terms are ordered by exponent tuple (x0, x1, y0, y1, x, y, q), so the
  // q*y1 term precedes the x1 term
  MultiPoly p = MultiPoly::variable(Var::X1) +
                q() * MultiPoly::variable(Var::Y1);
  CHECK(p.render() == "1*q*y1 + 1*x1");
}

TEST_CASE("parse round-trips the canonical form") {
  MultiPoly p = MultiPoly(7) - 3 * x() * MultiPoly::variable(Var::Y0, 2) +
                q() * q() * MultiPoly::variable(Var::X1) +
                MultiPoly::variable(Var::Y, 4);
  CHECK(MultiPoly::parse(p.render()) == p);
  CHECK(MultiPoly::parse("0") == MultiPoly());
  CHECK(MultiPoly::parse("1 + 1*q*x") == MultiPoly(1) + q() * x());

  CHECK_THROWS_AS(MultiPoly::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse("2*z"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse(""), std::invalid_argument);
}

TEST_CASE("variable names") {
  CHECK(var_name(Var::X0) == "x0");
  CHECK(var_name(Var::Q) == "q");
  CHECK(var_from_name("y1") == Var::Y1);
  CHECK(!var_from_name("z").has_value());
  for (std::size_t i = 0; i < kVarCount; ++i) {
    Var v = static_cast<Var>(i);
    CHECK(var_from_name(var_name(v)) == v);
  }
}
