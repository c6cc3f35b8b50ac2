#pragma once

// Univariate Big -1 Jacobi polynomials J_n(x; a, b, c) and their Little -1
// specialisation j_n(x; a, b) = J_n(x; a, b, 0).

#include "m1j/laurent.hpp"
#include "m1j/quad.hpp"
#include "m1j/rational.hpp"

namespace m1j {

// inside: |c| < 1, support [-1,-|c|] u [|c|,1].  outside: |c| > 1,
// support [-|c|,-1] u [1,|c|].
enum class Regime { inside, outside };

const char *to_string(Regime r);

template <class T> struct BasicUniParams {
  T a{};
  T b{};
  T c{};

  // a, b > -1 and |c| != 1.
  void validate() const;
  Regime regime() const;
};

using UniParams = BasicUniParams<Rational>;
using UniParamsD = BasicUniParams<double>;

UniParamsD to_double(const UniParams &p);

// J_n(x) = P(z) + (1 - x)/(1 + c) * S(z) with z = (1 - x^2)/(1 - c^2).
// P and S depend on (n, a, b) only; c enters solely through the substitution.
template <class T> struct JacobiPieces {
  LaurentPoly1<T> plain;
  LaurentPoly1<T> shifted;
};

template <class T> JacobiPieces<T> bigm1_pieces(int n, const T &a, const T &b);

// Degree-n polynomial J_n(x; a, b, c); J_n(1) = 1.
template <class T> LaurentPoly1<T> bigm1_coeffs(int n, const BasicUniParams<T> &p);

template <class T> struct RecurrenceCoeffs {
  T A{};
  T C{};
  T B() const { return T(1) - A - C; }
};

// x J_n = A_n J_{n+1} + (1 - A_n - C_n) J_n + C_n J_{n-1}, with C_0 = 0.
template <class T> RecurrenceCoeffs<T> recurrence_coeffs(int n, const BasicUniParams<T> &p);

// kappa_n with kappa_n J_n monic.
template <class T> T monic_kappa(int n, const BasicUniParams<T> &p);

// L = [(x+c)(x-1)/x] d/dx R + [c/(2x^2) + (ca-b)/(2x)](R - I) + [(a+b+1)/2] R,
// operators composed right to left (d/dx acts on R f). Polynomial input gives
// polynomial output or NegativeExponentResidue.
template <class T> LaurentPoly1<T> operator_L_apply(const BasicUniParams<T> &p, const LaurentPoly1<T> &f);

// (-1)^n (n + (a+b+1)/2)
template <class T> T eigenvalue_lambda(int n, const BasicUniParams<T> &p);

// Orthogonality support for the regime.
IntervalUnion support_uni(double c, Regime regime);

// omega (inside) or omega-tilde (outside); OutsideSupport off the support.
double weight_uni(const Abscissa &x, const UniParamsD &p, Regime regime);

// Bare normalisation factors h_n(a, b) and h~_n(a, b) (identical expressions).
double norm_h_bare(int n, double a, double b);
double norm_h_tilde_bare(int n, double a, double b);

// Full right-hand side of the orthogonality relation: the regime prefactor
// times the bare factor, i.e. the integral of J_n^2 against the weight.
double norm_h(int n, double a, double b, Regime regime, double c);

// j_n(x; a, b) from its own hypergeometric representation (argument 1 - x^2).
template <class T> LaurentPoly1<T> little_m1_coeffs(int n, const T &a, const T &b);

} // namespace m1j
