#include "doctest.h"

#include "m1j/errors.hpp"
#include "m1j/laurent.hpp"
#include "m1j/quad.hpp"
#include "support.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace m1j;

namespace {

// The delta = 0 orthogonality region: two opposite triangles |x| <= |y| <= 1.
BivDomain bowtie() {
  return {IntervalUnion({{-1.0, 0.0}, {0.0, 1.0}}),
          [](double y) { return IntervalUnion({{-std::abs(y), std::abs(y)}}); }};
}

} // namespace

TEST_CASE("single-interval examples") {
  const auto one = integrate_union([](double) { return 1.0; }, IntervalUnion({{0.0, 1.0}}));
  CHECK(one.converged);
  CHECK(std::abs(one.value - 1.0) <= 1e-12);

  const auto odd = integrate_union([](double x) { return x; }, IntervalUnion({{-1.0, 0.0}, {0.0, 1.0}}));
  CHECK(std::abs(odd.value) <= 1e-12);

  const auto norm = integrate_union(
      [](const Abscissa &x) { return offset_from(x, -1.0) / std::sqrt(gap(1.0, x) * (1 + std::abs(x.x))); },
      IntervalUnion({{-1.0, 1.0}}));
  CHECK(std::abs(norm.value - std::numbers::pi) <= 1e-10);
}

TEST_CASE("inverse square root endpoint singularity") {
  const auto r = integrate_union([](double x) { return 1.0 / std::sqrt(x); }, IntervalUnion({{0.0, 1.0}}));
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) <= 1e-10);
}

TEST_CASE("polynomials up to degree 20 integrate exactly") {
  for (int trial = 0; trial < 5; ++trial) {
    LaurentPoly1<Rational> p;
    for (int d = 0; d <= 20; ++d)
      p.add_term({d}, m1j::testing::random_rational(5, 3));
    const Rational lo(-3, 10), hi(17, 10);
    Rational exact(0);
    for (const auto &[e, c] : p.terms()) {
      Rational hp(1), lp(1);
      for (int k = 0; k <= e[0]; ++k) {
        hp *= hi;
        lp *= lo;
      }
      exact += c * (hp - lp) / Rational(e[0] + 1);
    }
    const auto r = integrate_union([&p](double x) { return evaluate(p, x); },
                                   IntervalUnion({{to_double(lo), to_double(hi)}}));
    CHECK(std::abs(r.value - to_double(exact)) <= 1e-12 * std::abs(to_double(exact)));
  }
}

TEST_CASE("integral over a union is the sum over its segments") {
  auto f = [](double x) { return std::exp(x) * std::pow(std::abs(x), -0.25); };
  const IntervalUnion u({{-2.0, -0.5}, {0.0, 1.0}, {1.5, 3.0}});
  double sum = 0.0;
  for (const auto &s : u.segments())
    sum += integrate_union(f, IntervalUnion({s})).value;
  CHECK(integrate_union(f, u).value == doctest::Approx(sum).epsilon(1e-15));
}

TEST_CASE("vector integrand matches scalar runs") {
  const IntervalUnion u({{0.0, 2.0}});
  const auto v = integrate_union_vec(
      2, [](const Abscissa &x, std::span<double> out) {
        out[0] = x * x;
        out[1] = std::cos(x);
      },
      u);
  CHECK(v.values[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
  CHECK(v.values[1] == doctest::Approx(std::sin(2.0)).epsilon(1e-12));
}

TEST_CASE("planar domain examples") {
  const auto d = bowtie();
  // Each triangle |x| <= y (resp. -y), |y| <= 1 has area 1.
  const auto area = integrate_biv([](const Abscissa &, const Abscissa &) { return 1.0; }, d);
  CHECK(std::abs(area.value - 2.0) <= 1e-9);
  const BivDomain upper{IntervalUnion({{0.0, 1.0}}), d.x_support_of};
  CHECK(std::abs(integrate_biv([](const Abscissa &, const Abscissa &) { return 1.0; }, upper).value - 1.0) <= 1e-9);
  const auto odd = integrate_biv([](const Abscissa &x, const Abscissa &) { return x.x; }, d);
  CHECK(std::abs(odd.value) <= 1e-9);
  // Second moment: int_{-1}^{1} 2|y| y^2 dy = 1.
  const auto second = integrate_biv([](const Abscissa &, const Abscissa &y) { return y.x * y.x; }, d);
  CHECK(std::abs(second.value - 1.0) <= 1e-9);
}

TEST_CASE("interval union validation") {
  CHECK_THROWS_AS(IntervalUnion({{1.0, 0.0}}), InvalidParameter);
  CHECK_THROWS_AS(IntervalUnion({{0.0, 2.0}, {1.0, 3.0}}), InvalidParameter);
  const IntervalUnion u({{-1.0, -0.2}, {0.2, 1.0}});
  CHECK(u.measure() == doctest::Approx(1.6));
  CHECK(u.contains(-0.5));
  CHECK_FALSE(u.contains(0.0));
}

TEST_CASE("level cap reports non-convergence") {
  QuadratureSpec spec;
  spec.level_max = 3;
  spec.rel_tol = 1e-15;
  spec.abs_tol = 1e-300;
  const auto r = integrate_union([](double x) { return std::sin(200 * x); }, IntervalUnion({{0.0, 1.0}}), spec);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(r.checked(), NoConvergence);
}

TEST_CASE("spec validation and environment override") {
  QuadratureSpec bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);
  ::setenv("M1J_QUAD_TOL", "1e-7", 1);
  CHECK(QuadratureSpec::from_env().rel_tol == 1e-7);
  ::setenv("M1J_QUAD_TOL", "nope", 1);
  CHECK_THROWS_AS(QuadratureSpec::from_env(), InvalidParameter);
  ::unsetenv("M1J_QUAD_TOL");
  CHECK(QuadratureSpec::from_env().rel_tol == 1e-10);
}
