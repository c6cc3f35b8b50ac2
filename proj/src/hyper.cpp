#include "m1j/hyper.hpp"

#include <cmath>

namespace m1j {

double gamma_real(double x) {
  if (x <= 0.0 && std::floor(x) == x)
    throw GammaPole("Gamma has a pole at " + std::to_string(x));
  return std::tgamma(x);
}

double qpochhammer(double a, double q, int n) {
  double r = 1.0;
  double qj = 1.0;
  for (int j = 0; j < n; ++j) {
    r *= 1.0 - a * qj;
    qj *= q;
  }
  return r;
}

LaurentPoly1<double> phi32_terminating(int n, double a2, double a3, double b1, double b2, double q) {
  LaurentPoly1<double> out(1.0);
  double term = 1.0;
  const double qn = std::pow(q, -n);
  double qj = 1.0;
  for (int j = 0; j < n; ++j) {
    const double den = (1.0 - b1 * qj) * (1.0 - b2 * qj) * (1.0 - q * qj);
    if (den == 0.0)
      throw QPochhammerPole("lower q-Pochhammer vanishes at order " + std::to_string(j + 1));
    term *= (1.0 - qn * qj) * (1.0 - a2 * qj) * (1.0 - a3 * qj) / den;
    out.add_term({j + 1}, term);
    qj *= q;
  }
  return out;
}

} // namespace m1j
