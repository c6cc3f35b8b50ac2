#pragma once

// Two-variable Big -1 Jacobi polynomials
//   J_{n,k}(x, y) = J_{n-k}(y; alpha, 2k+beta+gamma+1, (-1)^k delta) rho_k(y) J_k(x/y; gamma, beta, delta/y),
// their weights and domains, the commuting operators L1 and L2, the nine-term
// x-recurrence and the three-term y-recurrence.

#include "m1j/bigm1.hpp"
#include "m1j/laurent.hpp"
#include "m1j/quad.hpp"
#include "m1j/rational.hpp"

#include <array>
#include <map>
#include <vector>

namespace m1j {

template <class T> struct BasicBivParams {
  T alpha{};
  T beta{};
  T gamma{};
  T delta{};

  // alpha, beta, gamma > -1 and |delta| != 1.
  void validate() const;
  Regime regime() const;
};

using BivParams = BasicBivParams<Rational>;
using BivParamsD = BasicBivParams<double>;

BivParamsD to_double(const BivParams &p);

struct BivIndex {
  int n = 0;
  int k = 0;

  // 0 <= k <= n, else InvalidParameter.
  void validate() const;
  friend auto operator<=>(const BivIndex &, const BivIndex &) = default;
};

// (y^2 - delta^2)^{k/2} for even k, (y^2 - delta^2)^{(k-1)/2} (y + delta) for odd k.
template <class T> LaurentPoly1<T> rho_k(int k, const T &delta);

template <class T> LaurentPoly2<T> biv_coeffs(BivIndex idx, const BasicBivParams<T> &p);

// j_{n-k}(y; alpha, 2k+beta+gamma+1) y^k j_k(x/y; gamma, beta).
template <class T> LaurentPoly2<T> little_biv_coeffs(BivIndex idx, const T &alpha, const T &beta, const T &gamma);

// W (inside) or W~ (outside); OutsideSupport off the domain interior closure.
double weight_biv(const Abscissa &x, const Abscissa &y, const BivParamsD &p, Regime regime);

BivDomain domain_biv(const BivParamsD &p, Regime regime);

struct Triangle {
  std::array<std::array<double, 2>, 3> vertices;
};

// The closed triangles making up the domain: four, or two when delta = 0.
std::vector<Triangle> domain_triangles(const BivParamsD &p, Regime regime);

// Full orthogonality constant H_{nk} or H~_{nk}.
double norm_H(BivIndex idx, const BivParamsD &p, Regime regime);

// G1..G8 as Laurent polynomials (their denominators are monomials).
template <class T> struct GCoefficients {
  std::array<LaurentPoly2<T>, 8> g;

  const LaurentPoly2<T> &operator[](int i) const { return g[static_cast<std::size_t>(i - 1)]; }
  LaurentPoly2<T> identity() const { return -((*this)[1] + (*this)[2] + (*this)[3]); }
};

template <class T> GCoefficients<T> g_coefficients(const BasicBivParams<T> &p);

// Each term is coefficient * reflections * derivative, applied right to left:
// differentiate, then reflect, then multiply.
template <class T> LaurentPoly2<T> L1_apply(const BasicBivParams<T> &p, const LaurentPoly2<T> &f);
template <class T> LaurentPoly2<T> L2_apply(const BasicBivParams<T> &p, const LaurentPoly2<T> &f);

template <class T> T mu_n(int n, const BasicBivParams<T> &p);
template <class T> T nu_k(int k, const BasicBivParams<T> &p);

template <class T> struct BivRecurrenceSet {
  T a{}, b{}, c{};
  T e{}, f{}, g{};
  T r{}, s{}, t{};
  T u{}, v{}, w{};
  T sigma{}, tau{}, z{};
  int phi = 0;       // 1 for odd k
  T delta_n{};       // (-1)^n delta

  // Coefficient attached to J_{n+dn, k+dk}, dn, dk in {-1, 0, 1}.
  T x_coeff(int dn, int dk) const;
  T y_coeff(int dn) const;
};

enum class RecurrenceFormulas { corrected, printed };

// The x- and y-recurrence coefficients. `printed` reproduces the published
// expressions literally; `corrected` is the validated set. No published entry
// has needed a correction, so the two currently coincide.
template <class T>
BivRecurrenceSet<T> biv_recurrence_coeffs(BivIndex idx, const BasicBivParams<T> &p,
                                          RecurrenceFormulas which = RecurrenceFormulas::corrected);

// Exact expansion of a polynomial of total degree <= max_degree in the basis
// {J_{m,l} : l <= m <= max_degree}. NonzeroRemainder if f is not in the span.
std::map<BivIndex, Rational> expand_in_basis(const LaurentPoly2<Rational> &f, int max_degree, const BivParams &p);

// <m J_{n,k}, J_{m',l}> / H_{m'l} by quadrature for m' <= n+1, where m is x or y;
// entries with magnitude below 1e-9 are dropped. QuadratureFailure on non-convergence.
std::map<BivIndex, double> project_coefficients(BivIndex idx, const BivParamsD &p, Axis multiplier);

// The seven Pearson-type equations at (x, y), each as LHS - RHS divided by the
// largest term magnitude in that equation. `alpha_shift` perturbs the
// exponent of the (1 - y^2) factor only (a negative control). SingularPoint
// where a weight factor vanishes.
std::array<double, 7> pearson_residuals(const BivParamsD &p, double x, double y, double alpha_shift = 0.0);

} // namespace m1j
