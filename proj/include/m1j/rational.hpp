#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace m1j {

// Exact coefficient field. Expression templates are off so that the type
// behaves like a plain value inside generic code (auto, std::map, templates).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline double to_double(const Rational &r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline bool is_zero(double r) { return r == 0.0; }

inline double magnitude(const Rational &r) { return std::abs(to_double(r)); }
inline double magnitude(double r) { return std::abs(r); }

std::string to_string(const Rational &r);

// Parses "p", "-p" or "p/q" exactly. Returns nullopt for anything else
// (decimal or exponent notation).
std::optional<Rational> parse_rational(std::string_view text);

// A command-line parameter: always has a double value, and an exact value when
// it was written as an integer or a fraction.
struct ParamValue {
  double value = 0.0;
  std::optional<Rational> exact;

  static ParamValue parse(std::string_view text);
  static ParamValue from(const Rational &r) { return {to_double(r), r}; }
};

} // namespace m1j
