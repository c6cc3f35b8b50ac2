#include "m1j/chihara.hpp"

#include "m1j/errors.hpp"
#include "m1j/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace m1j {

namespace {

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

template <class T> T poch_or_pole(const T &a, int n) {
  const T v = pochhammer(a, n);
  if (is_zero(v))
    throw ParameterPole("Pochhammer denominator vanishes");
  return v;
}

// Quotient of f by (x - nu); the remainder f(nu) is returned through `rem`.
template <class T> LaurentPoly1<T> divide_linear(const LaurentPoly1<T> &f, const T &nu, T &rem) {
  const int deg = f.degree();
  LaurentPoly1<T> q;
  T carry(0);
  for (int i = deg; i >= 0; --i) {
    carry = carry * nu + f.coeff({i});
    if (i > 0)
      q.add_term({i - 1}, carry);
  }
  rem = carry;
  return q;
}

} // namespace

template <class T> LaurentPoly1<T> chihara_coeffs(int n, const BasicChiharaParams<T> &p) {
  if (n < 0)
    throw InvalidParameter("degree must be nonnegative");
  const auto x = LaurentPoly1<T>::variable(Axis::x);
  const auto arg = x * x - LaurentPoly1<T>(p.gamma * p.gamma);
  const int m = n / 2;
  const T s = m % 2 == 0 ? T(1) : T(-1);
  const T shift = n % 2 == 0 ? T(1) : T(2);
  const T lower = p.alpha + shift;
  const T upper = T(m) + p.alpha + p.beta + shift;
  LaurentPoly1<T> f;
  try {
    f = compose(gauss_2f1_terminating(m, upper, lower), arg);
  } catch (const PochhammerPole &e) {
    throw ParameterPole(e.what());
  }
  f = f * (s * pochhammer(lower, m) / poch_or_pole(upper, m));
  if (n % 2 == 1)
    f = f * (x - LaurentPoly1<T>(p.gamma));
  return f;
}

double chihara_norm_eta(int n, const ChiharaParamsD &p) {
  if (n < 0)
    throw InvalidParameter("degree must be nonnegative");
  const double a = p.alpha, b = p.beta;
  const int m = n / 2;
  const double e = n % 2 == 0 ? 1.0 : 2.0;
  const double poch = pochhammer(m + a + b + e, m);
  return gamma_real(m + a + e) * gamma_real(m + b + 1.0) / gamma_real(m + a + b + e) * std::tgamma(m + 1.0) /
         ((2.0 * m + a + b + e) * poch * poch);
}

IntervalUnion support_chihara(double gamma) {
  const double g = std::abs(gamma), r = std::sqrt(1.0 + gamma * gamma);
  return IntervalUnion({{-r, -g}, {g, r}});
}

double weight_chihara(const Abscissa &x, const ChiharaParamsD &p) {
  if (!support_chihara(p.gamma).contains(x))
    throw OutsideSupport("x = " + std::to_string(x.x) + " is off the Chihara support");
  const double ax = std::abs(x.x), g = std::abs(p.gamma), r = std::sqrt(1.0 + p.gamma * p.gamma);
  return sign(x) * offset_from(x, -p.gamma) * std::pow(-gap(g, x) * (ax + g), p.alpha) *
         std::pow(gap(r, x) * (r + ax), p.beta);
}

template <class T> LaurentPoly1<T> christoffel_kernel(int n, const BasicUniParams<T> &p, const T &nu) {
  const auto jn = bigm1_coeffs(n, p) * monic_kappa(n, p);
  const auto jn1 = bigm1_coeffs(n + 1, p) * monic_kappa(n + 1, p);
  const std::array<T, 1> at{nu};
  const T den = evaluate_at<T>(jn, at);
  if (is_zero(den))
    throw KernelPole("monic J_" + std::to_string(n) + " vanishes at nu");
  const auto num = jn1 - jn * (evaluate_at<T>(jn1, at) / den);
  T rem(0);
  auto q = divide_linear(num, nu, rem);
  double tol = 0.0;
  if constexpr (std::is_same_v<T, double>)
    tol = 1e-10 * std::max(1.0, num.max_abs_coeff());
  if (tol == 0.0 ? !is_zero(rem) : magnitude(rem) > tol)
    throw NonzeroRemainder("Christoffel division by (x - nu) leaves remainder " + std::to_string(to_double(rem)));
  return q;
}

ChiharaParamsD kernel_partner(const UniParamsD &p) {
  if (!(p.c * p.c < 1.0))
    throw RegimeMismatch("kernel relation needs |c| < 1");
  const double s = std::sqrt(1.0 - p.c * p.c);
  return {(p.b - 1.0) / 2.0, (p.a + 1.0) / 2.0, -p.c / s};
}

template <class T> OpReport chihara_relation_check(int n, const BasicUniParams<T> &p, double tol) {
  Stopwatch clock;
  const UniParamsD pd{to_double(p.a), to_double(p.b), to_double(p.c)};
  const ChiharaParamsD partner = kernel_partner(pd);
  const auto kernel = christoffel_kernel(n, p).to_double();
  const auto chihara = chihara_coeffs(n, partner);
  const double s = std::sqrt(1.0 - pd.c * pd.c);
  const double scale = std::pow(s, n);
  constexpr int kPoints = 24;
  double worst = 0.0, where = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double x = -1.0 + 2.0 * (i + 0.5) / kPoints;
    const double d = std::abs(evaluate(kernel, x) - scale * evaluate(chihara, x / s));
    if (d > worst) {
      worst = d;
      where = x;
    }
  }
  std::ostringstream w;
  w.precision(17);
  w << "n=" << n << " x=" << where;
  return OpReport::make("chihara-relation", worst, w.str(), tol, clock.elapsed_ms());
}

double kernel_measure_scale(int n, double a, double b, double c) {
  return std::pow(1.0 - c * c, (2.0 * n + a + b + 2.0) / 2.0);
}

double derive_h_via_kernel(int n, const UniParamsD &p) {
  p.validate();
  const double eta_tilde = -kernel_measure_scale(n, p.a, p.b, p.c) * chihara_norm_eta(n, kernel_partner(p));
  // The monic polynomials take the value kappa_n at x = 1.
  const double kn = monic_kappa(n, p), kn1 = monic_kappa(n + 1, p);
  if (kn == 0.0)
    throw KernelPole("monic J_" + std::to_string(n) + " vanishes at 1");
  const double h_monic = -eta_tilde * kn / kn1;
  return h_monic / (kn * kn);
}

#define M1J_INSTANTIATE(T)                                                                         \
  template LaurentPoly1<T> chihara_coeffs(int, const BasicChiharaParams<T> &);                     \
  template LaurentPoly1<T> christoffel_kernel(int, const BasicUniParams<T> &, const T &);          \
  template OpReport chihara_relation_check(int, const BasicUniParams<T> &, double);

M1J_INSTANTIATE(Rational)
M1J_INSTANTIATE(double)
#undef M1J_INSTANTIATE

} // namespace m1j
