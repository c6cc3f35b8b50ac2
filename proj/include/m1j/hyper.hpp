#pragma once

// Hypergeometric building blocks: Pochhammer symbols, terminating 2F1 as an
// exact polynomial, Gamma, q-Pochhammer and terminating 3phi2.

#include "m1j/errors.hpp"
#include "m1j/laurent.hpp"
#include "m1j/rational.hpp"

#include <string>

namespace m1j {

// k/2 stored exactly; the upper parameters -n/2, (n+1)/2, ... of the -1 families.
struct HalfInteger {
  int twice_value = 0;

  static HalfInteger half_of(int k) { return {k}; }
  bool is_integer() const { return twice_value % 2 == 0; }
  Rational value() const { return Rational(twice_value) / 2; }
  double to_double() const { return twice_value / 2.0; }
  // For a nonpositive integer -m returns m (the 2F1 truncation order), else -1.
  int truncation() const { return (is_integer() && twice_value <= 0) ? -twice_value / 2 : -1; }

  friend bool operator==(HalfInteger, HalfInteger) = default;
};

// (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
template <class T> T pochhammer(const T &a, int n) {
  T r(1);
  for (int j = 0; j < n; ++j)
    r *= a + T(j);
  return r;
}

// sum_{j=0}^{n} (-n)_j (b)_j / ((c)_j j!) z^j as a polynomial in z.
template <class T> LaurentPoly1<T> gauss_2f1_terminating(int neg_n, const T &b, const T &c) {
  LaurentPoly1<T> out;
  T term(1);
  out.add_term({0}, term);
  for (int j = 0; j < neg_n; ++j) {
    const T denom = (c + T(j)) * T(j + 1);
    if (is_zero(c + T(j)))
      throw PochhammerPole("lower parameter c + " + std::to_string(j) + " vanishes");
    term = term * T(j - neg_n) * (b + T(j)) / denom;
    out.add_term({j + 1}, term);
  }
  return out;
}

// Gamma function for real arguments; throws GammaPole at 0, -1, -2, ...
double gamma_real(double x);

// (a;q)_n = prod_{j<n} (1 - a q^j); (a;q)_0 = 1.
double qpochhammer(double a, double q, int n);

// sum_{j=0}^{n} (q^-n;q)_j (a2;q)_j (a3;q)_j / ((b1;q)_j (b2;q)_j (q;q)_j) z^j
// as a polynomial in the series argument z.
LaurentPoly1<double> phi32_terminating(int n, double a2, double a3, double b1, double b2, double q);

} // namespace m1j
