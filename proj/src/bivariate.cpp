#include "m1j/bivariate.hpp"

#include "m1j/errors.hpp"
#include "m1j/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

namespace m1j {

template <class T> void BasicBivParams<T>::validate() const {
  if (!(alpha > T(-1)) || !(beta > T(-1)) || !(gamma > T(-1)))
    throw InvalidParameter("bivariate Big -1 Jacobi needs alpha, beta, gamma > -1");
  if (delta * delta == T(1))
    throw InvalidParameter("bivariate Big -1 Jacobi needs |delta| != 1");
}

template <class T> Regime BasicBivParams<T>::regime() const {
  return delta * delta < T(1) ? Regime::inside : Regime::outside;
}

BivParamsD to_double(const BivParams &p) {
  return {to_double(p.alpha), to_double(p.beta), to_double(p.gamma), to_double(p.delta)};
}

void BivIndex::validate() const {
  if (k < 0 || k > n)
    throw InvalidParameter("bivariate index needs 0 <= k <= n, got n = " + std::to_string(n) +
                           ", k = " + std::to_string(k));
}

namespace {

template <class T> T signed_unit(int n) { return n % 2 == 0 ? T(1) : T(-1); }

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

template <class T> LaurentPoly2<T> lift_y(const LaurentPoly1<T> &p) {
  LaurentPoly2<T> r;
  for (const auto &[e, c] : p.terms())
    r.add_term({0, e[0]}, c);
  return r;
}

template <class T> LaurentPoly2<T> constant2(const T &v) { return LaurentPoly2<T>(v); }

} // namespace

template <class T> LaurentPoly1<T> rho_k(int k, const T &delta) {
  if (k < 0)
    throw InvalidParameter("rho_k needs k >= 0");
  const auto y = LaurentPoly1<T>::variable(Axis::x);
  const auto b = y * y - LaurentPoly1<T>(delta * delta);
  auto r = pow(b, k / 2);
  if (k % 2 == 1)
    r = r * (y + LaurentPoly1<T>(delta));
  return r;
}

template <class T> LaurentPoly2<T> biv_coeffs(BivIndex idx, const BasicBivParams<T> &p) {
  idx.validate();
  p.validate();
  const int n = idx.n, k = idx.k;
  const T &d = p.delta;
  const auto x = LaurentPoly2<T>::variable(Axis::x);
  const auto y = LaurentPoly2<T>::variable(Axis::y);

  // rho_k(y) J_k(x/y; gamma, beta, delta/y). With u = x/y and c = delta/y the
  // argument z becomes (y^2 - x^2)/(y^2 - delta^2) and (1 - u)/(1 + c) becomes
  // (y - x)/(y + delta); rho_k absorbs every power of (y^2 - delta^2) and (y + delta).
  const auto pieces = bigm1_pieces(k, p.gamma, p.beta);
  const auto A = y * y - x * x;
  const auto B = y * y - constant2(d * d);
  const int m = k / 2;
  std::vector<LaurentPoly2<T>> apow{constant2(T(1))}, bpow{constant2(T(1))};
  for (int i = 1; i <= m; ++i) {
    apow.push_back(apow.back() * A);
    bpow.push_back(bpow.back() * B);
  }
  auto ap = [&](int i) { return apow[static_cast<std::size_t>(i)]; };
  auto bp = [&](int i) { return bpow[static_cast<std::size_t>(i)]; };
  LaurentPoly2<T> plain, shifted;
  if (k % 2 == 0) {
    for (int j = 0; j <= m; ++j)
      plain += ap(j) * bp(m - j) * pieces.plain.coeff({j});
    for (int j = 0; j <= m - 1; ++j)
      shifted += ap(j) * bp(m - 1 - j) * pieces.shifted.coeff({j});
    shifted = shifted * (y - x) * (y - constant2(d));
  } else {
    for (int j = 0; j <= m; ++j) {
      plain += ap(j) * bp(m - j) * pieces.plain.coeff({j});
      shifted += ap(j) * bp(m - j) * pieces.shifted.coeff({j});
    }
    plain = plain * (y + constant2(d));
    shifted = shifted * (y - x);
  }
  const BasicUniParams<T> outer{p.alpha, T(2 * k) + p.beta + p.gamma + T(1), signed_unit<T>(k) * d};
  const auto out = lift_y(bigm1_coeffs(n - k, outer)) * (plain + shifted);
  return assert_polynomial(out);
}

template <class T> LaurentPoly2<T> little_biv_coeffs(BivIndex idx, const T &alpha, const T &beta, const T &gamma) {
  idx.validate();
  const int n = idx.n, k = idx.k;
  const auto outer = little_m1_coeffs(n - k, alpha, T(2 * k) + beta + gamma + T(1));
  const auto inner = little_m1_coeffs(k, gamma, beta);
  LaurentPoly2<T> homog;
  for (const auto &[e, c] : inner.terms())
    homog.add_term({e[0], k - e[0]}, c);
  return lift_y(outer) * homog;
}

BivDomain domain_biv(const BivParamsD &p, Regime regime) {
  const double ad = std::abs(p.delta);
  if (regime == Regime::inside) {
    if (!(ad < 1.0))
      throw RegimeMismatch("inside regime needs |delta| < 1");
    return {IntervalUnion({{-1.0, -ad}, {ad, 1.0}}), [ad](double y) {
              const double a = std::abs(y);
              if (!(a > ad))
                return IntervalUnion();
              return IntervalUnion({{-a, -ad}, {ad, a}});
            }};
  }
  if (!(ad > 1.0))
    throw RegimeMismatch("outside regime needs |delta| > 1");
  return {IntervalUnion({{-ad, -1.0}, {1.0, ad}}), [ad](double y) {
            const double a = std::abs(y);
            if (!(a < ad))
              return IntervalUnion();
            return IntervalUnion({{-ad, -a}, {a, ad}});
          }};
}

std::vector<Triangle> domain_triangles(const BivParamsD &p, Regime regime) {
  const double d = std::abs(p.delta);
  std::vector<Triangle> out;
  if (regime == Regime::inside) {
    if (!(d < 1.0))
      throw RegimeMismatch("inside regime needs |delta| < 1");
    if (d == 0.0) {
      for (double sy : {1.0, -1.0})
        out.push_back({{{{0.0, 0.0}, {-1.0, sy}, {1.0, sy}}}});
      return out;
    }
    // |delta| <= |x| <= |y| <= 1 in each quadrant.
    for (double sy : {1.0, -1.0})
      for (double sx : {1.0, -1.0})
        out.push_back({{{{sx * d, sy * d}, {sx * 1.0, sy * 1.0}, {sx * d, sy * 1.0}}}});
    return out;
  }
  if (!(d > 1.0))
    throw RegimeMismatch("outside regime needs |delta| > 1");
  // 1 <= |y| <= |x| <= |delta| in each quadrant.
  for (double sy : {1.0, -1.0})
    for (double sx : {1.0, -1.0})
      out.push_back({{{{sx * 1.0, sy * 1.0}, {sx * d, sy * 1.0}, {sx * d, sy * d}}}});
  return out;
}

double weight_biv(const Abscissa &x, const Abscissa &y, const BivParamsD &p, Regime regime) {
  const auto dom = domain_biv(p, regime);
  if (!dom.y_support.contains(y.x) || !dom.x_support_of(y.x).contains(x.x))
    throw OutsideSupport("(" + std::to_string(x.x) + ", " + std::to_string(y.x) + ") is off the domain");
  const double ax = std::abs(x.x), ay = std::abs(y.x), ad = std::abs(p.delta);
  // |y|^{beta+gamma} (x+y)/y (x-delta)/y times the y^-2 powers of the last two
  // factors collapse to (x+y)(x-delta) with no leftover power of |y|.
  const double rise = offset_from(y, -1.0);         // 1 + y
  const double sum = offset_from(x, -y.x);          // x + y
  const double to_delta = offset_from(x, p.delta);  // x - delta
  // Each band is |near| * |far| in both regimes; the factors are raised
  // separately so two tiny distances do not underflow before the power.
  const auto band = [](double near, double far, double e) {
    return std::pow(std::abs(near), e) * std::pow(std::abs(far), e);
  };
  const double w = rise * sum * to_delta * band(gap(1.0, y), 1.0 + ay, (p.alpha - 1.0) / 2.0) *
                   band(gap(ay, x), ay + ax, (p.gamma - 1.0) / 2.0) *
                   band(gap(ad, x), ax + ad, (p.beta - 1.0) / 2.0);
  if (regime == Regime::inside)
    return sign(x.x * y.x) * w;
  return -sign(p.delta * x.x * y.x) * w;
}

double norm_H(BivIndex idx, const BivParamsD &p, Regime regime) {
  idx.validate();
  const int n = idx.n, k = idx.k;
  const double s = p.alpha + p.beta + p.gamma;
  const double dk = (k % 2 == 0 ? 1.0 : -1.0) * p.delta;
  const double hk = norm_h_bare(k, p.gamma, p.beta);
  const double hnk = norm_h_bare(n - k, p.alpha, 2.0 * k + p.gamma + p.beta + 1.0);
  if (regime == Regime::inside) {
    if (!(p.delta * p.delta < 1.0))
      throw RegimeMismatch("inside regime needs |delta| < 1");
    return std::pow(1.0 - p.delta * p.delta, (2.0 * k + s + 3.0) / 2.0) / (1.0 + dk) * hk * hnk;
  }
  if (!(p.delta * p.delta > 1.0))
    throw RegimeMismatch("outside regime needs |delta| > 1");
  const double h_tilde_k = norm_h_tilde_bare(k, p.gamma, p.beta);
  const double h_tilde_nk = norm_h_tilde_bare(n - k, p.alpha, 2.0 * k + p.beta + p.gamma + 1.0);
  return (k % 2 == 0 ? 1.0 : -1.0) * sign(p.delta) * std::pow(p.delta * p.delta - 1.0, (2.0 * k + s + 3.0) / 2.0) /
         (1.0 + dk) * h_tilde_k * h_tilde_nk;
}

template <class T> GCoefficients<T> g_coefficients(const BasicBivParams<T> &p) {
  using P = LaurentPoly2<T>;
  const T &a = p.alpha, &b = p.beta, &g = p.gamma, &d = p.delta;
  const auto x = P::variable(Axis::x), y = P::variable(Axis::y);
  const P one(T(1)), dd(d);
  GCoefficients<T> G;
  auto set = [&G](int i, const P &v) { G.g[static_cast<std::size_t>(i - 1)] = v; };
  set(1, (x * (P(T(1) + b + g) - y * (a + b + g + T(2))) - (y * (a + g + T(1)) - P(g)) * d) *
             mono2<T>(-1, -1, T(1) / T(4)));
  set(2, -(x * (x * (b + g + T(1)) - y * b) + (y + x * g) * d) * mono2<T>(-2, -1, T(1) / T(4)));
  set(3, -(x + x * y * a - y * (y * (a + g + T(1)) - P(g))) * mono2<T>(-1, -2, d / T(4)));
  // G4 does not occur in L1.
  set(5, (dd + x) * (y - one) * mono2<T>(-1, 0, T(1) / T(2)));
  set(6, (x - y) * (y - one) * mono2<T>(-1, -1, d / T(2)));
  set(7, (dd + x) * (y - one) * mono2<T>(0, -1, T(1) / T(2)));
  set(8, (dd + x) * (x - y) * mono2<T>(-1, -1, T(1) / T(2)));
  return G;
}

namespace {

template <class T> LaurentPoly2<T> checked_output(const LaurentPoly2<T> &f, const LaurentPoly2<T> &out) {
  if (f.has_negative_exponent())
    return out;
  const double tol = std::is_same_v<T, double> ? 1e-10 * std::max(1.0, out.max_abs_coeff()) : 0.0;
  return assert_polynomial(out, tol);
}

} // namespace

template <class T> LaurentPoly2<T> L1_apply(const BasicBivParams<T> &p, const LaurentPoly2<T> &f) {
  const auto G = g_coefficients(p);
  const auto fx = differentiate(f, Axis::x), fy = differentiate(f, Axis::y);
  auto out = G[5] * reflect(fy, Axes::both) + G[6] * reflect(fy, Axes::y) + G[7] * reflect(fx, Axes::both) +
             G[8] * reflect(fx, Axes::x) + G[1] * reflect(f, Axes::both) + G[2] * reflect(f, Axes::x) +
             G[3] * reflect(f, Axes::y) + G.identity() * f;
  return checked_output(f, out);
}

template <class T> LaurentPoly2<T> L2_apply(const BasicBivParams<T> &p, const LaurentPoly2<T> &f) {
  using P = LaurentPoly2<T>;
  const T &b = p.beta, &g = p.gamma, &d = p.delta;
  const auto x = P::variable(Axis::x), y = P::variable(Axis::y);
  const auto drift = (y - x) * (x + P(d)) * mono2<T>(-1, 0, T(2));
  const auto shift = (x * x * (g + b + T(1)) + x * (P(d * g) - y * b) + y * d) * mono2<T>(-2, 0);
  const auto rf = reflect(f, Axes::x);
  auto out = drift * reflect(differentiate(f, Axis::x), Axes::x) + shift * (rf - f);
  return checked_output(f, out);
}

template <class T> T mu_n(int n, const BasicBivParams<T> &p) {
  if (n % 2 == 0)
    return T(-n) / T(2);
  return (T(n) + p.alpha + p.beta + p.gamma + T(2)) / T(2);
}

template <class T> T nu_k(int k, const BasicBivParams<T> &p) {
  if (k % 2 == 0)
    return T(2 * k);
  return T(-2) * (T(k) + p.beta + p.gamma + T(1));
}

template <class T> T BivRecurrenceSet<T>::x_coeff(int dn, int dk) const {
  static constexpr int kSlots = 3;
  const T *table[kSlots][kSlots] = {{&u, &v, &w}, {&r, &s, &t}, {&e, &f, &g}};
  if (dn < -1 || dn > 1 || dk < -1 || dk > 1)
    throw InvalidParameter("recurrence offsets lie in {-1, 0, 1}");
  return *table[dn + 1][dk + 1];
}

template <class T> T BivRecurrenceSet<T>::y_coeff(int dn) const {
  if (dn == 1)
    return a;
  if (dn == 0)
    return b;
  if (dn == -1)
    return c;
  throw InvalidParameter("recurrence offsets lie in {-1, 0, 1}");
}

namespace {

template <class T> T nonzero(const T &v, const char *what) {
  if (is_zero(v))
    throw DegenerateDenominator(std::string(what) + " vanishes");
  return v;
}

} // namespace

template <class T>
BivRecurrenceSet<T> biv_recurrence_coeffs(BivIndex idx, const BasicBivParams<T> &p, RecurrenceFormulas which) {
  idx.validate();
  const int n = idx.n, k = idx.k;
  const T &al = p.alpha, &be = p.beta, &ga = p.gamma, &de = p.delta;
  const T S = al + be + ga;
  const bool even = (n + k) % 2 == 0;
  BivRecurrenceSet<T> R;
  R.phi = k % 2;
  R.delta_n = signed_unit<T>(n) * de;
  const T delta_n1 = signed_unit<T>(n + 1) * de;
  const T delta_k = signed_unit<T>(k) * de;
  const T phi(R.phi);

  R.tau = k == 0 ? T(0) : (T(k) + be * phi) / nonzero(T(2 * k) + be + ga, "2k + beta + gamma");
  R.sigma = (T(k) + be * phi + ga + T(1)) / nonzero(T(2 * k) + be + ga + T(2), "2k + beta + gamma + 2");
  const T up = nonzero(T(2 * n) + S + T(3), "2n + alpha + beta + gamma + 3");
  const T down = T(2 * n) + S + T(1);
  R.z = (signed_unit<T>(n) - de * (T(2 * n) + S + T(2))) / (nonzero(down, "2n + alpha + beta + gamma + 1") * up);
  const T one_dk = nonzero(T(1) + delta_k, "1 + (-1)^k delta");

  R.a = (T(1) + R.delta_n) / up * (even ? T(n - k) + al + T(1) : T(n + k) + S + T(2));
  R.c = (T(1) + delta_n1) / down * (even ? T(n - k) : T(n + k) + be + ga + T(1));
  R.b = T(1) - R.a - R.c;
  R.e = R.tau * (T(1) - delta_k) * (T(1) + R.delta_n) / up * (even ? T(n - k) + al + T(1) : T(n - k) + al + T(2));
  R.g = R.sigma * (T(1) + R.delta_n) / (one_dk * up) * (even ? T(n + k) + S + T(3) : T(n + k) + S + T(2));
  R.r = T(2) * R.tau * R.z * (signed_unit<T>(k) - de) * (even ? T(n - k) + al + T(1) : T(n + k) + be + ga + T(1));
  R.t = T(2) * signed_unit<T>(k + 1) * R.sigma * R.z / one_dk * (even ? T(n - k) : T(n + k) + S + T(2));
  R.u = R.tau * (T(1) - delta_k) * (T(1) - R.delta_n) / down * (even ? T(n + k) + be + ga : T(n + k) + be + ga + T(1));
  R.w = R.sigma * (T(1) - R.delta_n) / (one_dk * down) * (even ? T(n - k) : T(n - k - 1));
  const T shift = T(1) - R.sigma - R.tau;
  R.f = R.a * shift;
  R.s = R.b * shift - delta_k * (R.sigma - R.tau);
  R.v = R.c * shift;
  (void)which;
  return R;
}

std::map<BivIndex, Rational> expand_in_basis(const LaurentPoly2<Rational> &f, int max_degree, const BivParams &p) {
  if (f.has_negative_exponent() || f.degree() > max_degree)
    throw NonzeroRemainder("input is not a polynomial of total degree <= " + std::to_string(max_degree));
  std::map<BivIndex, Rational> out;
  auto residual = f;
  for (int m = max_degree; m >= 0; --m)
    for (int l = m; l >= 0; --l) {
      const Rational target = residual.coeff({l, m - l});
      if (is_zero(target))
        continue;
      const auto basis = biv_coeffs(BivIndex{m, l}, p);
      const Rational lead = basis.coeff({l, m - l});
      if (is_zero(lead))
        throw DegenerateDenominator("J_{" + std::to_string(m) + "," + std::to_string(l) +
                                    "} has no x^l y^(m-l) term");
      const Rational c = target / lead;
      residual -= basis * c;
      out[BivIndex{m, l}] = c;
    }
  if (!residual.is_zero())
    throw NonzeroRemainder("expansion left a nonzero remainder");
  return out;
}

std::map<BivIndex, double> project_coefficients(BivIndex idx, const BivParamsD &p, Axis multiplier) {
  idx.validate();
  if (p.regime() != Regime::inside)
    throw RegimeMismatch("projection oracle runs in the inside regime");
  std::vector<BivIndex> basis;
  std::vector<DensePoly2> polys;
  for (int m = 0; m <= idx.n + 1; ++m)
    for (int l = 0; l <= m; ++l) {
      basis.push_back({m, l});
      polys.emplace_back(biv_coeffs(BivIndex{m, l}, p));
    }
  const DensePoly2 target(biv_coeffs(idx, p) * LaurentPoly2<double>::variable(multiplier));
  const auto dom = domain_biv(p, Regime::inside);
  const auto r = integrate_biv_vec(
      basis.size(),
      [&](const Abscissa &x, const Abscissa &y, std::span<double> out) {
        const double w = weight_biv(x, y, p, Regime::inside) * target(x.x, y.x);
        for (std::size_t i = 0; i < polys.size(); ++i)
          out[i] = w * polys[i](x.x, y.x);
      },
      dom);
  if (!r.converged)
    throw QuadratureFailure("projection quadrature did not converge (err " + std::to_string(r.err_est) + ")");
  std::map<BivIndex, double> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double v = r.values[i] / norm_H(basis[i], p, Regime::inside);
    if (std::abs(v) >= 1e-9)
      out[basis[i]] = v;
  }
  return out;
}

namespace {

// W in product form, with the log-derivatives used by the Pearson equations.
struct PearsonWeight {
  BivParamsD p;
  double alpha_y;  // exponent parameter of the (1 - y^2) factor

  void check(double X, double Y) const {
    for (double v : {X, Y, X + Y, X - p.delta, 1.0 + Y, 1.0 - Y * Y, Y * Y - X * X, X * X - p.delta * p.delta})
      if (v == 0.0)
        throw SingularPoint("a weight factor vanishes at (" + std::to_string(X) + ", " + std::to_string(Y) + ")");
  }
  double value(double X, double Y) const {
    check(X, Y);
    return sign(X * Y) * (1.0 + Y) * (X + Y) * (X - p.delta) * std::pow(1.0 - Y * Y, (alpha_y - 1.0) / 2.0) *
           std::pow(Y * Y - X * X, (p.gamma - 1.0) / 2.0) * std::pow(X * X - p.delta * p.delta, (p.beta - 1.0) / 2.0);
  }
  double dlog_x(double X, double Y) const {
    return 1.0 / (X + Y) + 1.0 / (X - p.delta) - (p.gamma - 1.0) * X / (Y * Y - X * X) +
           (p.beta - 1.0) * X / (X * X - p.delta * p.delta);
  }
  double dlog_y(double X, double Y) const {
    return 1.0 / (1.0 + Y) + 1.0 / (X + Y) - (alpha_y - 1.0) * Y / (1.0 - Y * Y) +
           (p.gamma - 1.0) * Y / (Y * Y - X * X);
  }
};

} // namespace

std::array<double, 7> pearson_residuals(const BivParamsD &p, double x, double y, double alpha_shift) {
  const double ad = std::abs(p.delta);
  if (!(ad < std::abs(x) && std::abs(x) < std::abs(y) && std::abs(y) < 1.0))
    throw OutsideSupport("Pearson residuals need |delta| < |x| < |y| < 1");
  const PearsonWeight W{p, p.alpha + alpha_shift};
  const auto G = g_coefficients(p);
  auto Gv = [&](int i, double X, double Y) { return evaluate(G[i], X, Y); };
  // d/dx or d/dy of (x, y) -> W(sx x, sy y) G_i(sx x, sy y).
  auto dprod = [&](int i, double sx, double sy, Axis axis) {
    const double X = sx * x, Y = sy * y;
    const double w = W.value(X, Y);
    const double dw = w * (axis == Axis::x ? W.dlog_x(X, Y) : W.dlog_y(X, Y));
    const double dg = evaluate(differentiate(G[i], axis), X, Y);
    return (axis == Axis::x ? sx : sy) * (dw * Gv(i, X, Y) + w * dg);
  };
  auto wg = [&](int i, double sx, double sy) { return W.value(sx * x, sy * y) * Gv(i, sx * x, sy * y); };
  auto rel = [](std::initializer_list<double> lhs_minus_terms) {
    double sum = 0.0, scale = 0.0;
    for (double t : lhs_minus_terms) {
      sum += t;
      scale = std::max(scale, std::abs(t));
    }
    return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
  };
  std::array<double, 7> r{};
  r[0] = rel({wg(8, 1, 1), -wg(8, -1, 1)});
  r[1] = rel({wg(7, 1, 1), -wg(7, -1, -1)});
  r[2] = rel({wg(6, 1, 1), -wg(6, 1, -1)});
  r[3] = rel({wg(5, 1, 1), -wg(5, -1, -1)});
  r[4] = rel({wg(3, 1, 1), -wg(3, 1, -1), dprod(6, 1, -1, Axis::y)});
  r[5] = rel({wg(2, 1, 1), -wg(2, -1, 1), dprod(8, -1, 1, Axis::x)});
  r[6] = rel({wg(1, 1, 1), -wg(1, -1, -1), dprod(7, -1, -1, Axis::x), dprod(5, -1, -1, Axis::y)});
  return r;
}

#define M1J_INSTANTIATE(T)                                                                          \
  template struct BasicBivParams<T>;                                                                \
  template struct BivRecurrenceSet<T>;                                                              \
  template LaurentPoly1<T> rho_k(int, const T &);                                                   \
  template LaurentPoly2<T> biv_coeffs(BivIndex, const BasicBivParams<T> &);                         \
  template LaurentPoly2<T> little_biv_coeffs(BivIndex, const T &, const T &, const T &);            \
  template GCoefficients<T> g_coefficients(const BasicBivParams<T> &);                              \
  template LaurentPoly2<T> L1_apply(const BasicBivParams<T> &, const LaurentPoly2<T> &);            \
  template LaurentPoly2<T> L2_apply(const BasicBivParams<T> &, const LaurentPoly2<T> &);            \
  template T mu_n(int, const BasicBivParams<T> &);                                                  \
  template T nu_k(int, const BasicBivParams<T> &);                                                  \
  template BivRecurrenceSet<T> biv_recurrence_coeffs(BivIndex, const BasicBivParams<T> &, RecurrenceFormulas);

M1J_INSTANTIATE(Rational)
M1J_INSTANTIATE(double)
#undef M1J_INSTANTIATE

} // namespace m1j
