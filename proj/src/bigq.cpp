#include "m1j/bigq.hpp"

#include "m1j/errors.hpp"
#include "m1j/hyper.hpp"

#include <cmath>
#include <string>

namespace m1j {

void QParams::validate() const {
  if (q == 0.0 || q == 1.0 || q == -1.0)
    throw InvalidParameter("q must avoid 0, 1 and -1");
}

QParams limit_params(double alpha, double beta, double gamma, double delta, double eps) {
  return {-std::exp(eps * alpha), -std::exp(eps * beta), -std::exp(eps * gamma), delta, -std::exp(eps)};
}

namespace {

using P1 = LaurentPoly1<double>;
using P2 = LaurentPoly2<double>;

// Series weights (q^-n;q)_j (a2;q)_j q^j / ((b1;q)_j (q;q)_j), j = 0..n, with the
// second lower parameter b2 divided out when given.
std::vector<double> series_weights(int n, double a2, double b1, double q) {
  std::vector<double> w;
  const double qn = std::pow(q, -n);
  double t = 1.0;
  for (int j = 0; j <= n; ++j) {
    w.push_back(t);
    const double den = (1.0 - b1 * std::pow(q, j)) * (1.0 - std::pow(q, j + 1));
    if (den == 0.0)
      throw QPochhammerPole("lower q-Pochhammer factor vanishes at j = " + std::to_string(j));
    t *= (1.0 - qn * std::pow(q, j)) * (1.0 - a2 * std::pow(q, j)) * q / den;
  }
  return w;
}

P2 y_poly() { return P2::variable(Axis::y); }
P2 x_poly() { return P2::variable(Axis::x); }
P2 constant(double v) { return P2(v); }

} // namespace

LaurentPoly1<double> bigq_uni_coeffs(int n, double a, double b, double c, double q) {
  if (n < 0)
    throw InvalidParameter("degree must be nonnegative");
  const auto w = series_weights(n, a * b * std::pow(q, n + 1), a * q, q);
  const P1 x = P1::variable(Axis::x);
  P1 out, xq(1.0);
  double cq = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      xq = xq * (P1(1.0) - x * std::pow(q, j - 1));
      cq *= 1.0 - c * std::pow(q, j);
      if (cq == 0.0)
        throw QPochhammerPole("(cq;q)_j vanishes at j = " + std::to_string(j));
    }
    out += xq * (w[static_cast<std::size_t>(j)] / cq);
  }
  return out;
}

LaurentPoly2<double> bigq_biv_coeffs(int n, int k, const QParams &p) {
  p.validate();
  if (k < 0 || k > n)
    throw InvalidParameter("need 0 <= k <= n");
  const double q = p.q;
  // y-factor: P_{n-k}(y; a, bcq^{2k+1}, dq^k).
  const auto y_factor = bigq_uni_coeffs(n - k, p.a, p.b * p.c * std::pow(q, 2 * k + 1), p.d * std::pow(q, k), q);
  P2 outer;
  for (const auto &[e, v] : y_factor.terms())
    outer.add_term({0, e[0]}, v);
  // y^k (dq/y;q)_k P_k(x/y; c, b, d/y): in term j the lower (dq/y;q)_j cancels,
  // leaving prod_{i<j} (y - q^i x) prod_{i=j}^{k-1} (y - d q^{i+1}).
  const auto w = series_weights(k, p.c * p.b * std::pow(q, k + 1), p.c * q, q);
  P2 inner;
  for (int j = 0; j <= k; ++j) {
    P2 term(w[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i)
      term = term * (y_poly() - x_poly() * std::pow(q, i));
    for (int i = j; i < k; ++i)
      term = term * (y_poly() - constant(p.d * std::pow(q, i + 1)));
    inner += term;
  }
  return outer * inner;
}

LaurentPoly2<double> q_derivative(const LaurentPoly2<double> &f, double q, Axis axis) {
  const std::size_t i = axis == Axis::x ? 0 : 1;
  P2 out;
  for (const auto &[e, v] : f.terms()) {
    if (e[i] == 0)
      continue;
    auto e2 = e;
    e2[i] -= 1;
    out.add_term(e2, v * (std::pow(q, e[i]) - 1.0) / (q - 1.0));
  }
  return out;
}

LaurentPoly2<double> omega_apply(const QParams &p, const LaurentPoly2<double> &f) {
  const double a = p.a, b = p.b, c = p.c, d = p.d, q = p.q;
  const double qi = 1.0 / q;
  const auto x = x_poly(), y = y_poly();
  auto D = [](const P2 &g, double base, Axis ax) { return q_derivative(g, base, ax); };
  P2 out = (x - constant(d * q)) * (x - constant(a * c * q * q)) * D(D(f, qi, Axis::x), q, Axis::x);
  out += (y - constant(a * q)) * (y - constant(d * q)) * D(D(f, qi, Axis::y), q, Axis::y);
  out += (x - constant(d * q)) * (y - constant(a * q)) * qi * D(D(f, qi, Axis::y), qi, Axis::x);
  out += (x * b - constant(d)) * (y - constant(1.0)) * (a * c * q * q * q) * D(D(f, q, Axis::y), q, Axis::x);
  const double abcq3 = a * b * c * q * q * q;
  out += ((x - constant(1.0)) * (abcq3 - 1.0) - constant((a * c * q * q - 1.0) * (d * q - 1.0))) * (1.0 / (q - 1.0)) *
         D(f, q, Axis::x);
  out += ((y - constant(1.0)) * (abcq3 - 1.0) - constant((a * q - 1.0) * (d * q - 1.0))) * (1.0 / (q - 1.0)) *
         D(f, q, Axis::y);
  return out;
}

double omega_eigenvalue(int n, const QParams &p) {
  const double q = p.q;
  return std::pow(q, 1 - n) * (std::pow(q, n) - 1.0) * (p.a * p.b * p.c * std::pow(q, n + 2) - 1.0) /
         ((q - 1.0) * (q - 1.0));
}

namespace {

double poch2(double v, double q) { return (1.0 - v) * (1.0 - v * q); }

double nonzero(double v, const char *what) {
  if (v == 0.0)
    throw DegenerateDenominator(std::string(what) + " vanishes");
  return v;
}

} // namespace

QRecurrenceSet q_recurrence_coeffs(int n, int k, const QParams &p) {
  p.validate();
  if (k < 0 || k > n)
    throw InvalidParameter("need 0 <= k <= n");
  const double a = p.a, b = p.b, c = p.c, d = p.d, q = p.q;
  auto Q = [q](int m) { return std::pow(q, m); };
  const double abc = a * b * c, bc = b * c;
  QRecurrenceSet r;
  r.sigma_k = (1.0 - c * Q(k + 1)) * (1.0 - bc * Q(k + 1)) / nonzero(poch2(bc * Q(2 * k + 1), q), "(bcq^{2k+1};q)_2");
  r.tau_k = -c * Q(k + 1) * (1.0 - Q(k)) * (1.0 - b * Q(k)) / nonzero(poch2(bc * Q(2 * k), q), "(bcq^{2k};q)_2");
  r.z_n = (abc * Q(n + 1) * (1.0 + q - d * Q(n + 1)) - d) /
          nonzero((1.0 - abc * Q(2 * n + 1)) * (1.0 - abc * Q(2 * n + 3)), "(1-abcq^{2n+1})(1-abcq^{2n+3})");
  const double up = nonzero(poch2(abc * Q(2 * n + 2), q), "(abcq^{2n+2};q)_2");
  const double down = nonzero(poch2(abc * Q(2 * n + 1), q), "(abcq^{2n+1};q)_2");
  const double dk1 = nonzero(1.0 - d * Q(k + 1), "1-dq^{k+1}");
  const double sigma = r.sigma_k, tau = r.tau_k;

  r.a_nk = (1.0 - a * Q(n - k + 1)) * (1.0 - abc * Q(n + k + 2)) * (1.0 - d * Q(n + 1)) / up;
  // d (1 - abc d^-1 q^{n+1}) = d - abc q^{n+1}, finite at d = 0.
  r.c_nk = a * Q(n + 1) * (Q(n - k) - 1.0) * (1.0 - bc * Q(n + k + 1)) * (d - abc * Q(n + 1)) / down;
  r.b_nk = 1.0 - r.a_nk - r.c_nk;
  const double shift = bc * Q(k) * tau - sigma + 1.0;
  r.w_nk = abc * sigma * Q(n + 2 * k + 3) * (abc * Q(n + 1) - d) * poch2(Q(n - k - 1), q) / (dk1 * down);
  r.f_nk = r.a_nk * shift;
  r.e_nk = tau * bc * Q(k) * (d * Q(k) - 1.0) * (1.0 - d * Q(n + 1)) * poch2(a * Q(n - k + 1), q) / up;
  r.v_nk = r.c_nk * shift;
  r.g_nk = sigma * (1.0 - d * Q(n + 1)) * poch2(abc * Q(n + k + 2), q) / (dk1 * up);
  r.s_nk = r.b_nk * shift + d * (Q(k + 1) * sigma - tau);
  r.t_nk = Q(k + 1) * sigma * r.z_n * (1.0 - Q(n - k)) * (1.0 - abc * Q(n + k + 2)) / dk1;
  r.r_nk = tau * r.z_n * (d * Q(k) - 1.0) * (1.0 - a * Q(n - k + 1)) * (1.0 - bc * Q(n + k + 1));
  r.u_nk = tau * a * Q(n - k + 1) * (d * Q(k) - 1.0) * (abc * Q(n + 1) - d) * poch2(bc * Q(n + k), q) / down;
  return r;
}

} // namespace m1j
