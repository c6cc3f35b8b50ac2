#pragma once

// Sparse Laurent polynomials in one or two variables over an arbitrary
// coefficient ring (Rational for exact identities, double for q-objects).
// Exponents may be negative: operators with 1/x, 1/y coefficients produce
// transient negative powers that must cancel.

#include "m1j/errors.hpp"
#include "m1j/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace m1j {

enum class Axis { x = 0, y = 1 };
enum class Axes { x, y, both };

template <class T, std::size_t N> class Laurent {
  static_assert(N == 1 || N == 2, "one or two variables");

public:
  using coeff_type = T;
  using exponent_type = std::array<int, N>;
  using map_type = std::map<exponent_type, T>;

  Laurent() = default;
  explicit Laurent(const T &constant) { add_term(exponent_type{}, constant); }

  static Laurent monomial(const exponent_type &e, const T &c = T(1)) {
    Laurent p;
    p.add_term(e, c);
    return p;
  }

  // The coordinate function x (axis 0) or y (axis 1).
  static Laurent variable(Axis axis) {
    exponent_type e{};
    e[static_cast<std::size_t>(axis)] = 1;
    return monomial(e);
  }

  const map_type &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  T coeff(const exponent_type &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  // Accumulates c into the coefficient of e; zero results are pruned.
  void add_term(const exponent_type &e, const T &c) {
    if (m1j::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (m1j::is_zero(it->second))
        terms_.erase(it);
    }
  }

  Laurent &operator+=(const Laurent &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  Laurent &operator-=(const Laurent &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  Laurent &operator*=(const T &s) {
    if (m1j::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto &[e, c] : terms_)
      c *= s;
    return *this;
  }
  Laurent &operator*=(const Laurent &o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
  friend Laurent operator-(Laurent a) { return a *= T(-1); }
  friend Laurent operator*(Laurent a, const T &s) { return a *= s; }
  friend Laurent operator*(const T &s, Laurent a) { return a *= s; }
  friend Laurent operator*(const Laurent &a, const Laurent &b) {
    Laurent r;
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        exponent_type e;
        for (std::size_t i = 0; i < N; ++i)
          e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const Laurent &a, const Laurent &b) { return a.terms_ == b.terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
      int s = 0;
      for (int v : e)
        s += v;
      d = std::max(d, s);
    }
    return terms_.empty() ? -1 : d;
  }

  // Largest exponent of one variable; -1 for the zero polynomial.
  int degree(Axis axis) const {
    int d = std::numeric_limits<int>::min();
    for (const auto &[e, c] : terms_)
      d = std::max(d, e[static_cast<std::size_t>(axis)]);
    return terms_.empty() ? -1 : d;
  }

  // Smallest exponent of one variable; 0 for the zero polynomial.
  int valuation(Axis axis) const {
    int v = std::numeric_limits<int>::max();
    for (const auto &[e, c] : terms_)
      v = std::min(v, e[static_cast<std::size_t>(axis)]);
    return terms_.empty() ? 0 : v;
  }

  bool has_negative_exponent() const {
    for (const auto &[e, c] : terms_)
      for (int v : e)
        if (v < 0)
          return true;
    return false;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto &[e, c] : terms_)
      m = std::max(m, magnitude(c));
    return m;
  }

  Laurent<double, N> to_double() const {
    Laurent<double, N> r;
    for (const auto &[e, c] : terms_)
      r.add_term(e, m1j::to_double(c));
    return r;
  }

  std::string to_string() const;

private:
  map_type terms_;
};

template <class T> using LaurentPoly1 = Laurent<T, 1>;
template <class T> using LaurentPoly2 = Laurent<T, 2>;

namespace detail {
inline std::string coeff_string(const Rational &r) { return m1j::to_string(r); }
inline std::string coeff_string(double r) {
  std::ostringstream os;
  os.precision(17);
  os << r;
  return os.str();
}
} // namespace detail

template <class T, std::size_t N> std::string Laurent<T, N>::to_string() const {
  if (terms_.empty())
    return "0";
  static constexpr const char *names[] = {"x", "y"};
  std::string out;
  for (const auto &[e, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += "(" + detail::coeff_string(c) + ")";
    for (std::size_t i = 0; i < N; ++i)
      if (e[i] != 0)
        out += std::string("*") + names[i] + "^" + std::to_string(e[i]);
  }
  return out;
}

// x^i (one variable) and x^i y^j (two variables) with coefficient c.
template <class T> LaurentPoly1<T> mono1(int i, const T &c = T(1)) {
  return LaurentPoly1<T>::monomial({i}, c);
}
template <class T> LaurentPoly2<T> mono2(int i, int j, const T &c = T(1)) {
  return LaurentPoly2<T>::monomial({i, j}, c);
}

template <class T, std::size_t N> Laurent<T, N> pow(const Laurent<T, N> &p, int n) {
  Laurent<T, N> r(T(1));
  for (int i = 0; i < n; ++i)
    r *= p;
  return r;
}

// f(-x), f(-y) or f(-x,-y): coefficient of x^i y^j picks up (-1)^i and/or (-1)^j.
template <class T, std::size_t N> Laurent<T, N> reflect(const Laurent<T, N> &p, Axes axes) {
  Laurent<T, N> r;
  for (const auto &[e, c] : p.terms()) {
    int flips = 0;
    if (axes == Axes::x || axes == Axes::both)
      flips += e[0];
    if constexpr (N == 2)
      if (axes == Axes::y || axes == Axes::both)
        flips += e[1];
    r.add_term(e, (flips % 2 == 0) ? c : T(-c));
  }
  return r;
}

template <class T> LaurentPoly1<T> reflect(const LaurentPoly1<T> &p) { return reflect(p, Axes::x); }

template <class T, std::size_t N> Laurent<T, N> differentiate(const Laurent<T, N> &p, Axis axis) {
  const auto a = static_cast<std::size_t>(axis);
  Laurent<T, N> r;
  for (const auto &[e, c] : p.terms()) {
    if (e[a] == 0)
      continue;
    auto d = e;
    d[a] -= 1;
    r.add_term(d, c * T(e[a]));
  }
  return r;
}

// Multiplies by x^i y^j (shifts every exponent).
template <class T, std::size_t N>
Laurent<T, N> shift(const Laurent<T, N> &p, const typename Laurent<T, N>::exponent_type &by) {
  Laurent<T, N> r;
  for (const auto &[e, c] : p.terms()) {
    auto s = e;
    for (std::size_t i = 0; i < N; ++i)
      s[i] += by[i];
    r.add_term(s, c);
  }
  return r;
}

// Returns p when no negative exponent survives. Coefficients of magnitude at
// most `tol` on negative powers are treated as cancelled and dropped, which
// only matters for floating coefficients; exact inputs use tol = 0.
template <class T, std::size_t N>
Laurent<T, N> assert_polynomial(const Laurent<T, N> &p, double tol = 0.0) {
  Laurent<T, N> r;
  for (const auto &[e, c] : p.terms()) {
    bool negative = false;
    for (int v : e)
      negative = negative || v < 0;
    if (!negative) {
      r.add_term(e, c);
      continue;
    }
    if (magnitude(c) > tol) {
      std::string where = "(";
      for (std::size_t i = 0; i < N; ++i)
        where += (i ? "," : "") + std::to_string(e[i]);
      throw NegativeExponentResidue("exponent " + where + ") has coefficient " +
                                    detail::coeff_string(c));
    }
  }
  return r;
}

namespace detail {
template <class S> S int_power(const S &base, int n) {
  S r(1);
  S b = base;
  if (n < 0) {
    b = S(1) / b;
    n = -n;
  }
  while (n > 0) {
    if (n & 1)
      r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}
} // namespace detail

// Exact (or same-type) evaluation; S is the point type, T the coefficient type.
template <class S, class T, std::size_t N>
S evaluate_at(const Laurent<T, N> &p, const std::array<S, N> &point) {
  S sum(0);
  for (const auto &[e, c] : p.terms()) {
    S term = S(c);
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] < 0 && is_zero(point[i]))
        throw PoleAtZero("negative exponent at a zero coordinate");
      if (e[i] != 0)
        term *= detail::int_power(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

template <class T> double evaluate(const LaurentPoly1<T> &p, double x) {
  double sum = 0.0;
  for (const auto &[e, c] : p.terms()) {
    if (e[0] < 0 && x == 0.0)
      throw PoleAtZero("negative x exponent at x = 0");
    sum += m1j::to_double(c) * detail::int_power(x, e[0]);
  }
  return sum;
}

template <class T> double evaluate(const LaurentPoly2<T> &p, double x, double y) {
  double sum = 0.0;
  for (const auto &[e, c] : p.terms()) {
    if ((e[0] < 0 && x == 0.0) || (e[1] < 0 && y == 0.0))
      throw PoleAtZero("negative exponent at a zero coordinate");
    sum += m1j::to_double(c) * detail::int_power(x, e[0]) * detail::int_power(y, e[1]);
  }
  return sum;
}

// Substitutes a Laurent polynomial `arg` for the variable of a polynomial `outer`
// (Horner scheme). `outer` must have no negative exponents.
template <class T, std::size_t N>
Laurent<T, N> compose(const LaurentPoly1<T> &outer, const Laurent<T, N> &arg) {
  const auto checked = assert_polynomial(outer);
  Laurent<T, N> r;
  for (int d = checked.degree(); d >= 0; --d) {
    r = r * arg;
    r.add_term({}, checked.coeff({d}));
  }
  return r;
}

// Coefficient-wise maximum of |p - q|.
template <class T, std::size_t N> double max_abs_difference(const Laurent<T, N> &p, const Laurent<T, N> &q) {
  return (p - q).max_abs_coeff();
}

template <std::size_t N>
double max_abs_difference(const Laurent<double, N> &p, const Laurent<Rational, N> &q) {
  return (p - q.to_double()).max_abs_coeff();
}

// Dense double evaluator for a two-variable polynomial; used on quadrature
// hot paths where the map representation is too slow.
class DensePoly2 {
public:
  DensePoly2() = default;
  template <class T> explicit DensePoly2(const LaurentPoly2<T> &p) {
    const auto q = assert_polynomial(p);
    dx_ = std::max(q.degree(Axis::x), 0);
    dy_ = std::max(q.degree(Axis::y), 0);
    c_.assign(static_cast<std::size_t>((dx_ + 1) * (dy_ + 1)), 0.0);
    for (const auto &[e, c] : q.terms())
      c_[static_cast<std::size_t>(e[0] * (dy_ + 1) + e[1])] = m1j::to_double(c);
  }

  double operator()(double x, double y) const {
    double acc = 0.0;
    for (int i = dx_; i >= 0; --i) {
      double row = 0.0;
      const double *r = c_.data() + i * (dy_ + 1);
      for (int j = dy_; j >= 0; --j)
        row = row * y + r[j];
      acc = acc * x + row;
    }
    return acc;
  }

private:
  int dx_ = 0;
  int dy_ = 0;
  std::vector<double> c_;
};

} // namespace m1j
