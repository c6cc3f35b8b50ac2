#include "m1j/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "m1j/errors.hpp"

namespace m1j {

std::string to_string(const Rational &r) { return r.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    return std::nullopt;
  if (num.front() == '+')
    num.remove_prefix(1);
  const Rational d{std::string(den)};
  if (d.is_zero())
    return std::nullopt;
  return Rational{std::string(num)} / d;
}

ParamValue ParamValue::parse(std::string_view text) {
  if (auto exact = parse_rational(text))
    return from(*exact);
  double v = 0.0;
  const auto *first = text.data();
  const auto *last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw InvalidParameter("cannot parse parameter '" + std::string(text) + "'");
  return {v, std::nullopt};
}

} // namespace m1j
