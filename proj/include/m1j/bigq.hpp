#pragma once

// Big q-Jacobi polynomials in one and two variables, the q-difference
// operator Omega and the coefficients of the two bivariate recurrences.
// Everything here is double precision: q = -e^eps is irrational.

#include "m1j/laurent.hpp"

namespace m1j {

struct QParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double q = 0.0;

  // q not in {0, 1, -1}.
  void validate() const;
};

// a = -e^{eps alpha}, b = -e^{eps beta}, c = -e^{eps gamma}, d = delta, q = -e^eps.
QParams limit_params(double alpha, double beta, double gamma, double delta, double eps);

// 3phi2(q^-n, ab q^{n+1}, x; aq, cq; q, q) expanded in powers of x.
LaurentPoly1<double> bigq_uni_coeffs(int n, double a, double b, double c, double q);

// P_{n-k}(y; a, bcq^{2k+1}, dq^k) y^k (dq/y; q)_k P_k(x/y; c, b, d/y).
LaurentPoly2<double> bigq_biv_coeffs(int n, int k, const QParams &p);

// D_{q,x} f = [f(qx, y) - f(x, y)] / (x (q - 1)); x^i -> [i]_q x^{i-1}.
LaurentPoly2<double> q_derivative(const LaurentPoly2<double> &f, double q, Axis axis);

// Omega f, products of q-derivatives composed right to left.
LaurentPoly2<double> omega_apply(const QParams &p, const LaurentPoly2<double> &f);

// q^{1-n} (q^n - 1)(abc q^{n+2} - 1) / (q - 1)^2
double omega_eigenvalue(int n, const QParams &p);

struct QRecurrenceSet {
  double a_nk = 0, b_nk = 0, c_nk = 0;
  double e_nk = 0, f_nk = 0, g_nk = 0;
  double r_nk = 0, s_nk = 0, t_nk = 0;
  double u_nk = 0, v_nk = 0, w_nk = 0;
  double sigma_k = 0, tau_k = 0, z_n = 0;
};

// y P_{n,k} = a P_{n+1,k} + b P_{n,k} + c P_{n-1,k}
// x P_{n,k} = e P_{n+1,k-1} + f P_{n+1,k} + g P_{n+1,k+1} + r P_{n,k-1} + s P_{n,k}
//           + t P_{n,k+1} + u P_{n-1,k-1} + v P_{n-1,k} + w P_{n-1,k+1}
QRecurrenceSet q_recurrence_coeffs(int n, int k, const QParams &p);

} // namespace m1j
