#pragma once

// Chihara polynomials C_n(x; alpha, beta, gamma), the Christoffel kernel
// partners of the monic Big -1 Jacobi polynomials, and the kernel route to the
// Big -1 Jacobi orthogonality constants.

#include "m1j/bigm1.hpp"
#include "m1j/laurent.hpp"
#include "m1j/report.hpp"

namespace m1j {

template <class T> struct BasicChiharaParams {
  T alpha{};
  T beta{};
  T gamma{};
};

using ChiharaParams = BasicChiharaParams<Rational>;
using ChiharaParamsD = BasicChiharaParams<double>;

// Even and odd branches in the argument x^2 - gamma^2; monic of degree n.
template <class T> LaurentPoly1<T> chihara_coeffs(int n, const BasicChiharaParams<T> &p);

// Integral of C_n^2 against theta(x)(x+gamma)(x^2-gamma^2)^alpha(1+gamma^2-x^2)^beta
// over [-sqrt(1+gamma^2), -|gamma|] u [|gamma|, sqrt(1+gamma^2)].
double chihara_norm_eta(int n, const ChiharaParamsD &p);

// Support of the Chihara weight.
IntervalUnion support_chihara(double gamma);

double weight_chihara(const Abscissa &x, const ChiharaParamsD &p);

// [Jh_{n+1}(x) - Jh_{n+1}(nu)/Jh_n(nu) Jh_n(x)] / (x - nu) for the monic
// Jh_n = kappa_n J_n, by synthetic division. KernelPole if Jh_n(nu) = 0,
// NonzeroRemainder if the division leaves a remainder.
template <class T> LaurentPoly1<T> christoffel_kernel(int n, const BasicUniParams<T> &p, const T &nu = T(1));

// Chihara parameters matched to (a, b, c) with |c| < 1:
// ((b-1)/2, (a+1)/2, -c/sqrt(1-c^2)).
ChiharaParamsD kernel_partner(const UniParamsD &p);

// K_n(x) against (1-c^2)^(n/2) C_n(x/sqrt(1-c^2); kernel_partner) at 24 points of [-1, 1].
template <class T> OpReport chihara_relation_check(int n, const BasicUniParams<T> &p, double tol = 1e-10);

// Jacobian of x -> x/sqrt(1-c^2) relating the kernel functional to the Chihara
// one: M[(x-1) K_n^2] = -kernel_measure_scale * eta_n.
double kernel_measure_scale(int n, double a, double b, double c);

// Integral of J_n^2 against omega (the full constant comparable with norm_h)
// derived from eta_n through the Christoffel relation with nu = 1.
double derive_h_via_kernel(int n, const UniParamsD &p);

} // namespace m1j
