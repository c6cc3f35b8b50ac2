#include "m1j/bigm1.hpp"

#include "m1j/errors.hpp"
#include "m1j/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <string>

namespace m1j {

const char *to_string(Regime r) { return r == Regime::inside ? "inside" : "outside"; }

template <class T> void BasicUniParams<T>::validate() const {
  if (!(a > T(-1)) || !(b > T(-1)))
    throw InvalidParameter("Big -1 Jacobi needs a > -1 and b > -1");
  if (c * c == T(1))
    throw InvalidParameter("Big -1 Jacobi needs |c| != 1");
}

template <class T> Regime BasicUniParams<T>::regime() const {
  return c * c < T(1) ? Regime::inside : Regime::outside;
}

UniParamsD to_double(const UniParams &p) { return {to_double(p.a), to_double(p.b), to_double(p.c)}; }

namespace {

template <class T> LaurentPoly1<T> checked_2f1(int order, const T &upper, const T &lower) {
  try {
    return gauss_2f1_terminating(order, upper, lower);
  } catch (const PochhammerPole &e) {
    throw ParameterPole(e.what());
  }
}

} // namespace

template <class T> JacobiPieces<T> bigm1_pieces(int n, const T &a, const T &b) {
  if (n < 0)
    throw InvalidParameter("degree must be nonnegative");
  if (a + T(1) == T(0))
    throw ParameterPole("a = -1");
  const T lower1 = (a + T(1)) / T(2);
  const T lower3 = (a + T(3)) / T(2);
  JacobiPieces<T> out;
  if (n % 2 == 0) {
    const int m = n / 2;
    const T upper = (T(n) + a + b + T(2)) / T(2);
    out.plain = checked_2f1(m, upper, lower1);
    if (n > 0)
      out.shifted = checked_2f1(m - 1, upper, lower3) * (T(n) / (a + T(1)));
  } else {
    const int m = (n - 1) / 2;
    out.plain = checked_2f1(m, (T(n) + a + b + T(1)) / T(2), lower1);
    out.shifted = checked_2f1(m, (T(n) + a + b + T(3)) / T(2), lower3) *
                  (-(T(n) + a + b + T(1)) / (a + T(1)));
  }
  return out;
}

template <class T> LaurentPoly1<T> bigm1_coeffs(int n, const BasicUniParams<T> &p) {
  p.validate();
  const auto pieces = bigm1_pieces(n, p.a, p.b);
  const auto x = LaurentPoly1<T>::variable(Axis::x);
  const LaurentPoly1<T> one(T(1));
  const auto z = (one - x * x) * (T(1) / (T(1) - p.c * p.c));
  auto out = compose(pieces.plain, z);
  if (!pieces.shifted.is_zero())
    out += (one - x) * (T(1) / (T(1) + p.c)) * compose(pieces.shifted, z);
  return out;
}

template <class T> RecurrenceCoeffs<T> recurrence_coeffs(int n, const BasicUniParams<T> &p) {
  if (n < 0)
    throw InvalidParameter("degree must be nonnegative");
  const T &a = p.a, &b = p.b, &c = p.c;
  const T up = T(2 * n) + a + b + T(2);
  const T down = T(2 * n) + a + b;
  if (up == T(0))
    throw DegenerateDenominator("2n + a + b + 2 = 0 at n = " + std::to_string(n));
  RecurrenceCoeffs<T> r;
  if (n % 2 == 0) {
    r.A = (T(n) + a + T(1)) * (c + T(1)) / up;
    if (n > 0) {
      if (down == T(0))
        throw DegenerateDenominator("2n + a + b = 0 at n = " + std::to_string(n));
      r.C = T(n) * (T(1) - c) / down;
    }
  } else {
    if (down == T(0))
      throw DegenerateDenominator("2n + a + b = 0 at n = " + std::to_string(n));
    r.A = (T(1) - c) * (T(n) + a + b + T(1)) / up;
    r.C = (T(n) + b) * (T(1) + c) / down;
  }
  return r;
}

template <class T> T monic_kappa(int n, const BasicUniParams<T> &p) {
  const T &a = p.a, &b = p.b, &c = p.c;
  const T s = T(1) - c * c;
  T power(1);
  if (n % 2 == 0) {
    const int m = n / 2;
    for (int i = 0; i < m; ++i)
      power *= s;
    return power * pochhammer((a + T(1)) / T(2), m) / pochhammer((T(n) + a + b + T(2)) / T(2), m);
  }
  const int m = (n + 1) / 2;
  for (int i = 0; i < m - 1; ++i)
    power *= s;
  return (T(1) + c) * power * pochhammer((a + T(1)) / T(2), m) /
         pochhammer((T(n) + a + b + T(1)) / T(2), m);
}

template <class T> LaurentPoly1<T> operator_L_apply(const BasicUniParams<T> &p, const LaurentPoly1<T> &f) {
  const T &a = p.a, &b = p.b, &c = p.c;
  // (x+c)(x-1)/x = x + (c-1) - c/x
  const auto drift = mono1<T>(1) + mono1<T>(0, c - T(1)) + mono1<T>(-1, -c);
  const auto reflection = mono1<T>(-2, c / T(2)) + mono1<T>(-1, (c * a - b) / T(2));
  const auto rf = reflect(f);
  auto out = drift * differentiate(rf, Axis::x) + reflection * (rf - f) + rf * ((a + b + T(1)) / T(2));
  if (f.has_negative_exponent())
    return out;
  const double tol = std::is_same_v<T, double> ? 1e-10 * std::max(1.0, out.max_abs_coeff()) : 0.0;
  return assert_polynomial(out, tol);
}

template <class T> T eigenvalue_lambda(int n, const BasicUniParams<T> &p) {
  const T v = T(n) + (p.a + p.b + T(1)) / T(2);
  return n % 2 == 0 ? v : T(-v);
}

IntervalUnion support_uni(double c, Regime regime) {
  const double ac = std::abs(c);
  if (regime == Regime::inside) {
    if (!(ac < 1.0))
      throw RegimeMismatch("inside regime needs |c| < 1");
    return IntervalUnion({{-1.0, -ac}, {ac, 1.0}});
  }
  if (!(ac > 1.0))
    throw RegimeMismatch("outside regime needs |c| > 1");
  return IntervalUnion({{-ac, -1.0}, {1.0, ac}});
}

namespace {
double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }
} // namespace

double weight_uni(const Abscissa &x, const UniParamsD &p, Regime regime) {
  if (!support_uni(p.c, regime).contains(x))
    throw OutsideSupport("x = " + std::to_string(x.x) + " is off the orthogonality support");
  const double ax = std::abs(x.x), ac = std::abs(p.c);
  const double to_c = -gap(ac, x); // |x| - |c|
  const double to_one = gap(1.0, x); // 1 - |x|
  const double rise = offset_from(x, -1.0); // 1 + x
  if (regime == Regime::inside) {
    return sign(x) * rise * offset_from(x, p.c) * std::pow(to_c * (ax + ac), (p.b - 1.0) / 2.0) *
           std::pow(to_one * (1.0 + ax), (p.a - 1.0) / 2.0);
  }
  return sign(p.c * x) * rise * -offset_from(x, p.c) * std::pow(-to_c * (ac + ax), (p.b - 1.0) / 2.0) *
         std::pow(-to_one * (ax + 1.0), (p.a - 1.0) / 2.0);
}

double norm_h_bare(int n, double a, double b) {
  if (n % 2 == 0) {
    const int m = n / 2;
    const double poch = pochhammer((a + 1.0) / 2.0, m);
    return 2.0 * gamma_real((n + b + 1.0) / 2.0) * gamma_real((n + a + 3.0) / 2.0) * std::tgamma(m + 1.0) /
           ((n + a + 1.0) * gamma_real((n + a + b + 2.0) / 2.0) * poch * poch);
  }
  const int m = (n - 1) / 2;
  const double poch = pochhammer((a + 1.0) / 2.0, m + 1);
  return (n + a + b + 1.0) * gamma_real((n + b + 2.0) / 2.0) * gamma_real((n + a + 2.0) / 2.0) *
         std::tgamma(m + 1.0) / (2.0 * gamma_real((n + a + b + 3.0) / 2.0) * poch * poch);
}

double norm_h_tilde_bare(int n, double a, double b) { return norm_h_bare(n, a, b); }

double norm_h(int n, double a, double b, Regime regime, double c) {
  if (regime == Regime::inside)
    return std::pow(1.0 - c * c, (a + b + 2.0) / 2.0) / (1.0 + c) * norm_h_bare(n, a, b);
  return sign(c) * std::pow(c * c - 1.0, (a + b + 2.0) / 2.0) / (1.0 + c) * norm_h_tilde_bare(n, a, b);
}

template <class T> LaurentPoly1<T> little_m1_coeffs(int n, const T &a, const T &b) {
  if (n < 0)
    throw InvalidParameter("degree must be nonnegative");
  if (a + T(1) == T(0))
    throw ParameterPole("a = -1");
  const auto x = LaurentPoly1<T>::variable(Axis::x);
  const LaurentPoly1<T> one(T(1));
  const auto z = one - x * x;
  const T lower1 = (a + T(1)) / T(2);
  const T lower3 = (a + T(3)) / T(2);
  if (n % 2 == 0) {
    const int m = n / 2;
    const T upper = (T(n) + a + b + T(2)) / T(2);
    auto out = compose(checked_2f1(m, upper, lower1), z);
    if (n > 0)
      out += (one - x) * (T(n) / (a + T(1))) * compose(checked_2f1(m - 1, upper, lower3), z);
    return out;
  }
  const int m = (n - 1) / 2;
  return compose(checked_2f1(m, (T(n) + a + b + T(1)) / T(2), lower1), z) -
         (one - x) * ((T(n) + a + b + T(1)) / (a + T(1))) *
             compose(checked_2f1(m, (T(n) + a + b + T(3)) / T(2), lower3), z);
}

#define M1J_INSTANTIATE(T)                                                                     \
  template struct BasicUniParams<T>;                                                           \
  template JacobiPieces<T> bigm1_pieces(int, const T &, const T &);                            \
  template LaurentPoly1<T> bigm1_coeffs(int, const BasicUniParams<T> &);                       \
  template RecurrenceCoeffs<T> recurrence_coeffs(int, const BasicUniParams<T> &);              \
  template T monic_kappa(int, const BasicUniParams<T> &);                                      \
  template LaurentPoly1<T> operator_L_apply(const BasicUniParams<T> &, const LaurentPoly1<T> &); \
  template T eigenvalue_lambda(int, const BasicUniParams<T> &);                                \
  template LaurentPoly1<T> little_m1_coeffs(int, const T &, const T &);

M1J_INSTANTIATE(Rational)
M1J_INSTANTIATE(double)

#undef M1J_INSTANTIATE

} // namespace m1j
