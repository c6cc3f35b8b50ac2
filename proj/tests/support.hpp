#pragma once

// Shared helpers for the unit suites: seeded generators for property tests.

#include "m1j/laurent.hpp"
#include "m1j/rational.hpp"

#include <random>

namespace m1j::testing {

inline std::mt19937 &rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline Rational random_rational(int max_num = 9, int max_den = 7) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng())) / den(rng());
}

template <std::size_t N> Laurent<Rational, N> random_laurent(int terms = 4, int lo = -2, int hi = 3) {
  std::uniform_int_distribution<int> ex(lo, hi);
  Laurent<Rational, N> p;
  for (int t = 0; t < terms; ++t) {
    typename Laurent<Rational, N>::exponent_type e;
    for (auto &v : e)
      v = ex(rng());
    p.add_term(e, random_rational());
  }
  return p;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace m1j::testing
