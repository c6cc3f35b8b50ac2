#include "doctest.h"

#include "m1j/hyper.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace m1j;
using m1j::testing::random_rational;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 4) == Rational(24));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(-2.0, 3) == doctest::Approx(0.0));
}

TEST_CASE("pochhammer splits over sums of orders") {
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = random_rational();
    for (int m = 0; m <= 8; m += 3)
      for (int n = 0; n <= 8; n += 2)
        CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(m), n));
  }
}

TEST_CASE("terminating 2F1 examples") {
  const auto one = gauss_2f1_terminating(0, Rational(3), Rational(5));
  CHECK(one == mono1<Rational>(0));

  const Rational b(2, 3), c(5, 7);
  CHECK(gauss_2f1_terminating(1, b, c) == mono1<Rational>(0) + mono1<Rational>(1, -b / c));

  // Binomial oracle: 2F1(-n, b; b; z) = (1 - z)^n.
  for (int n = 0; n <= 6; ++n) {
    LaurentPoly1<Rational> binom;
    Rational coef(1);
    for (int j = 0; j <= n; ++j) {
      binom.add_term({j}, coef);
      coef = -coef * Rational(n - j) / Rational(j + 1);
    }
    CHECK(gauss_2f1_terminating(n, Rational(1), Rational(1)) == binom);
  }
}

TEST_CASE("terminating 2F1 equals 1 at z = 0 and rejects poles") {
  for (int trial = 0; trial < 30; ++trial) {
    Rational c = random_rational();
    if (c <= 0)
      c = -c + Rational(1, 3);
    const auto f = gauss_2f1_terminating(trial % 7, random_rational(), c);
    CHECK(f.coeff({0}) == Rational(1));
  }
  CHECK_THROWS_AS(gauss_2f1_terminating(3, Rational(1), Rational(-1)), PochhammerPole);
  // The pole is only reached when truncation happens after it.
  CHECK_NOTHROW(gauss_2f1_terminating(1, Rational(1), Rational(-1)));
}

TEST_CASE("gamma values") {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(gamma_real(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-14));
  CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_real(1.5) == doctest::Approx(sqrt_pi / 2).epsilon(1e-14));
  CHECK(gamma_real(-0.5) == doctest::Approx(-2 * sqrt_pi).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_real(0.0), GammaPole);
  CHECK_THROWS_AS(gamma_real(-3.0), GammaPole);
}

TEST_CASE("gamma functional equation") {
  for (double x = 0.1; x <= 20.0; x += 0.4)
    CHECK(std::abs(gamma_real(x + 1) / (x * gamma_real(x)) - 1.0) <= 1e-12);
  // Factorials on (0, 50] against exact integer products.
  double fact = 1.0;
  for (int k = 1; k <= 30; ++k) {
    CHECK(std::abs(gamma_real(k) / fact - 1.0) <= 1e-13);
    fact *= k;
  }
}

TEST_CASE("q-Pochhammer examples") {
  CHECK(qpochhammer(0.3, 0.7, 0) == 1.0);
  CHECK(qpochhammer(0.5, 0.5, 2) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(qpochhammer(0.3, 0.7, 1) == doctest::Approx(0.7));
}

TEST_CASE("q-Pochhammer splits over sums of orders") {
  for (double a : {0.3, -1.7, 2.5})
    for (double q : {0.5, -0.9, 1.3})
      for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
          const double lhs = qpochhammer(a, q, m + n);
          const double rhs = qpochhammer(a, q, m) * qpochhammer(a * std::pow(q, m), q, n);
          CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
}

TEST_CASE("terminating 3phi2 examples") {
  CHECK(phi32_terminating(0, 0.2, 0.3, 0.4, 0.5, 0.6) == LaurentPoly1<double>(1.0));

  // n = 1 with matched upper/lower parameters: 1 + (q^-1;q)_1/(q;q)_1 z.
  const double q = 0.6;
  const auto p = phi32_terminating(1, 0.4, 0.5, 0.4, 0.5, q);
  CHECK(p.coeff({0}) == 1.0);
  CHECK(p.coeff({1}) == doctest::Approx((1 - 1 / q) / (1 - q)).epsilon(1e-14));
}

TEST_CASE("3phi2 coefficients approach 2F1 as q -> 1") {
  // phi(q^-n, q^b, q^s; q^c, q^s; q, z) -> 2F1(-n, b; c; z) coefficient-wise.
  const double q = 1.0 - 1e-4;
  const int n = 4;
  const double b = 0.7, c = 1.9, s = 2.3;
  const auto qp = phi32_terminating(n, std::pow(q, b), std::pow(q, s), std::pow(q, c), std::pow(q, s), q);
  const auto cl = gauss_2f1_terminating(n, b, c);
  for (int j = 0; j <= n; ++j)
    CHECK(std::abs(qp.coeff({j}) - cl.coeff({j})) <= 1e-3 * std::max(1.0, std::abs(cl.coeff({j}))));
}

TEST_CASE("3phi2 rejects vanishing lower parameters") {
  CHECK_THROWS_AS(phi32_terminating(3, 0.2, 0.3, 1.0, 0.5, 0.6), QPochhammerPole);
}

TEST_CASE("half integers") {
  const auto h = HalfInteger::half_of(-4);
  CHECK(h.is_integer());
  CHECK(h.truncation() == 2);
  CHECK(HalfInteger::half_of(3).value() == Rational(3, 2));
  CHECK(HalfInteger::half_of(3).truncation() == -1);
  CHECK(HalfInteger::half_of(-3).to_double() == -1.5);
}
