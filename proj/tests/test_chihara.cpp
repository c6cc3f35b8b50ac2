#include "doctest.h"

#include "m1j/chihara.hpp"
#include "m1j/errors.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace m1j;
using P1 = LaurentPoly1<Rational>;

namespace {

const std::vector<UniParams> kRational = {
    {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
    {Rational(0), Rational(0), Rational(0)},
    {Rational(-1, 2), Rational(3, 2), Rational(-2, 5)},
};

P1 x_poly() { return P1::variable(Axis::x); }

double quadrature_h(int n, const UniParams &pe) {
  const auto j = bigm1_coeffs(n, pe).to_double();
  const auto p = to_double(pe);
  return integrate_union(
             [&](const Abscissa &x) {
               const double v = evaluate(j, x.x);
               return v * v * weight_uni(x, p, Regime::inside);
             },
             support_uni(p.c, Regime::inside))
      .checked();
}

} // namespace

TEST_CASE("Chihara examples") {
  const ChiharaParams zero{Rational(0), Rational(0), Rational(0)};
  CHECK(chihara_coeffs(0, zero) == P1(Rational(1)));
  const ChiharaParams g{Rational(1, 3), Rational(2), Rational(3, 7)};
  CHECK(chihara_coeffs(1, g) == x_poly() - P1(Rational(3, 7)));
  // -(1/2) 2F1(-1, 2; 1; x^2) = x^2 - 1/2: the family is monic.
  CHECK(chihara_coeffs(2, zero) == x_poly() * x_poly() - P1(Rational(1, 2)));
}

TEST_CASE("Chihara polynomials are monic of degree n") {
  const ChiharaParams g{Rational(1, 3), Rational(2), Rational(3, 7)};
  for (int n = 0; n <= 10; ++n) {
    const auto c = chihara_coeffs(n, g);
    CHECK(c.degree() == n);
    CHECK(c.coeff({n}) == Rational(1));
  }
}

TEST_CASE("Chihara norm examples") {
  CHECK(chihara_norm_eta(0, ChiharaParamsD{0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  const ChiharaParamsD p{0, 0, 0.5};
  const auto q = integrate_union([&](const Abscissa &x) { return weight_chihara(x, p); }, support_chihara(p.gamma));
  CHECK(std::abs(q.value - chihara_norm_eta(0, p)) <= 1e-8);
  for (const auto &s : {ChiharaParamsD{0, 0, 0}, ChiharaParamsD{0.5, -0.3, 1.0}, ChiharaParamsD{-0.5, 2.0, -0.7}})
    for (int n = 0; n <= 10; ++n)
      CHECK(chihara_norm_eta(n, s) > 0.0);
  CHECK_THROWS_AS(chihara_norm_eta(0, ChiharaParamsD{-1.0, 0, 0}), GammaPole);
}

TEST_CASE("Chihara orthogonality by quadrature") {
  const ChiharaParamsD p{0.5, 0.25, -0.6};
  std::vector<LaurentPoly1<double>> polys;
  for (int n = 0; n <= 6; ++n)
    polys.push_back(chihara_coeffs(n, p));
  const auto gram = integrate_union_vec(
      49,
      [&](const Abscissa &x, std::span<double> out) {
        const double w = weight_chihara(x, p);
        for (int n = 0; n <= 6; ++n)
          for (int m = 0; m <= 6; ++m)
            out[static_cast<std::size_t>(n * 7 + m)] =
                w * evaluate(polys[static_cast<std::size_t>(n)], x.x) * evaluate(polys[static_cast<std::size_t>(m)], x.x);
      },
      support_chihara(p.gamma));
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) {
      const double want = n == m ? chihara_norm_eta(n, p) : 0.0;
      CHECK(std::abs(gram.values[static_cast<std::size_t>(n * 7 + m)] - want) <= 1e-9);
    }
}

TEST_CASE("Christoffel kernel examples") {
  for (const auto &p : kRational) {
    CHECK(christoffel_kernel(0, p) == P1(Rational(1)));
    for (int n = 0; n <= 8; ++n) {
      const auto k = christoffel_kernel(n, p);
      CHECK(k.degree() == n);
      CHECK(k.coeff({n}) == Rational(1));
    }
  }
  // Away from nu = 1 the division still closes exactly.
  CHECK(christoffel_kernel(4, kRational[0], Rational(-1, 3)).degree() == 4);
}

TEST_CASE("Christoffel kernel pole") {
  // J_1 = 2x - 1 at a = b = c = 0 vanishes at 1/2.
  CHECK_THROWS_AS(christoffel_kernel(1, kRational[1], Rational(1, 2)), KernelPole);
}

TEST_CASE("kernel relation to Chihara polynomials") {
  CHECK(christoffel_kernel(1, kRational[1]) == x_poly());
  for (const auto &p : kRational)
    for (int n = 0; n <= 6; ++n) {
      const auto r = chihara_relation_check(n, p);
      INFO(r.witness << " residual " << r.max_residual);
      CHECK(r.pass);
    }
  CHECK_THROWS_AS(chihara_relation_check(2, UniParams{Rational(0), Rational(0), Rational(3)}), RegimeMismatch);
}

TEST_CASE("three routes to the orthogonality constant agree") {
  CHECK(derive_h_via_kernel(0, UniParamsD{0, 0, 0}) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  for (const auto &pe : kRational) {
    const auto p = to_double(pe);
    for (int n = 0; n <= 6; ++n) {
      const double formula = norm_h(n, p.a, p.b, Regime::inside, p.c);
      const double kernel = derive_h_via_kernel(n, p);
      const double quad = quadrature_h(n, pe);
      INFO("n " << n << " c " << p.c);
      CHECK(std::abs(kernel - formula) <= 1e-9 * formula);
      CHECK(std::abs(quad - formula) <= 1e-8 * formula);
      CHECK(std::abs(quad - kernel) <= 1e-8 * kernel);
    }
  }
}
