#include "doctest.h"

#include "m1j/laurent.hpp"
#include "support.hpp"

using namespace m1j;
using m1j::testing::random_laurent;
using m1j::testing::random_rational;

using P1 = LaurentPoly1<Rational>;
using P2 = LaurentPoly2<Rational>;

namespace {
const P2 X = P2::variable(Axis::x);
const P2 Y = P2::variable(Axis::y);
const P2 ONE(Rational(1));
} // namespace

TEST_CASE("arith examples") {
  CHECK((X + ONE) * (X - ONE) == X * X - ONE);
  CHECK(X + P2{} == X);
  CHECK(mono2<Rational>(-1, 0) * X == ONE);
  CHECK((X - X).is_zero());
  CHECK((X * Rational(0)).is_zero());
  CHECK((X * Rational(3, 2)).coeff({1, 0}) == Rational(3, 2));
}

TEST_CASE("zero coefficients are pruned") {
  P2 p = X + Y;
  p.add_term({1, 0}, Rational(-1));
  CHECK(p.size() == 1);
  CHECK(p == Y);
}

TEST_CASE("reflect examples") {
  CHECK(reflect(X * X, Axes::x) == X * X);
  CHECK(reflect(X * Y, Axes::both) == X * Y);
  CHECK(reflect(X + Y, Axes::x) == Y - X);
  CHECK(reflect(X + Y, Axes::y) == X - Y);
}

TEST_CASE("differentiate examples") {
  CHECK(differentiate(X * X * X, Axis::x) == mono2<Rational>(2, 0, 3));
  CHECK(differentiate(mono2<Rational>(-1, 0), Axis::x) == mono2<Rational>(-2, 0, -1));
  CHECK(differentiate(X * X, Axis::y).is_zero());
}

TEST_CASE("assert_polynomial") {
  const P2 p = X * X + Y;
  CHECK(assert_polynomial(p) == p);
  CHECK_THROWS_AS(assert_polynomial(mono2<Rational>(-1, 0)), NegativeExponentResidue);
  CHECK(assert_polynomial(mono2<Rational>(-1, 0) * X + Y) == ONE + Y);

  // Floating residues below the tolerance count as cancelled.
  auto q = LaurentPoly2<double>::variable(Axis::x);
  q.add_term({-1, 0}, 1e-14);
  CHECK(assert_polynomial(q, 1e-12).size() == 1);
  CHECK_THROWS_AS(assert_polynomial(q, 1e-16), NegativeExponentResidue);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(X * X - ONE, 2.0, 0.0) == doctest::Approx(3.0));
  CHECK(evaluate(X * Y, 0.5, 0.5) == doctest::Approx(0.25));
  CHECK_THROWS_AS(evaluate(mono2<Rational>(-1, 0), 0.0, 0.0), PoleAtZero);
  CHECK(evaluate_at<Rational>(X * X + Y, std::array<Rational, 2>{Rational(1, 2), Rational(1, 3)}) ==
        Rational(7, 12));
  CHECK(evaluate(mono1<Rational>(-2, Rational(4)), 2.0) == doctest::Approx(1.0));
}

TEST_CASE("compose substitutes into a polynomial") {
  // p(z) = 1 + 2z + z^2 at z = x - 1 gives x^2.
  const P1 p = mono1<Rational>(0) + mono1<Rational>(1, Rational(2)) + mono1<Rational>(2);
  const P1 z = mono1<Rational>(1) - mono1<Rational>(0);
  CHECK(compose(p, z) == mono1<Rational>(2));
}

TEST_CASE("DensePoly2 agrees with map evaluation") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_laurent<2>(6, 0, 4);
    const DensePoly2 d(p);
    CHECK(d(0.3, -0.7) == doctest::Approx(evaluate(p, 0.3, -0.7)).epsilon(1e-13));
  }
}

TEST_CASE("ring axioms hold exactly on random Laurent polynomials") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_laurent<2>();
    const auto q = random_laurent<2>();
    const auto r = random_laurent<2>();
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p - p == P2{});
  }
}

TEST_CASE("reflect is an involution") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_laurent<2>();
    CHECK(reflect(reflect(p, Axes::x), Axes::x) == p);
    CHECK(reflect(reflect(p, Axes::y), Axes::y) == p);
    CHECK(reflect(reflect(p, Axes::both), Axes::both) == p);
  }
}

TEST_CASE("Leibniz rule holds exactly with negative exponents") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_laurent<2>();
    const auto q = random_laurent<2>();
    for (Axis a : {Axis::x, Axis::y})
      CHECK(differentiate(p * q, a) == differentiate(p, a) * q + p * differentiate(q, a));
  }
}

TEST_CASE("evaluate is a ring morphism at nonzero points") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_laurent<2>();
    const auto q = random_laurent<2>();
    const double x = 0.7, y = -1.3;
    const double pq = evaluate(p * q, x, y);
    const double prod = evaluate(p, x, y) * evaluate(q, x, y);
    const double scale = std::max(1.0, (p.max_abs_coeff() + 1) * (q.max_abs_coeff() + 1) * 100.0);
    CHECK(std::abs(pq - prod) <= 1e-12 * scale);
  }
}

TEST_CASE("degree bookkeeping") {
  const P2 p = X * X * Y + mono2<Rational>(-1, 3);
  CHECK(p.degree() == 3);
  CHECK(p.degree(Axis::x) == 2);
  CHECK(p.degree(Axis::y) == 3);
  CHECK(p.valuation(Axis::x) == -1);
  CHECK(p.has_negative_exponent());
  CHECK(P2{}.degree() == -1);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/5") == Rational(1, 5));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK_FALSE(parse_rational("0.2").has_value());
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("1/-2").has_value());
  const auto d = ParamValue::parse("0.25");
  CHECK(d.value == 0.25);
  CHECK_FALSE(d.exact.has_value());
  CHECK(ParamValue::parse("3/4").exact == Rational(3, 4));
  CHECK_THROWS_AS(ParamValue::parse("abc"), InvalidParameter);
}
