#pragma once

// Double-exponential (tanh-sinh) quadrature over unions of intervals and over
// y-nested planar domains. Endpoint power singularities with exponent > -1
// are handled without any special treatment of the integrand.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace m1j {

// A quadrature node: x = base + offset, where base is the nearest segment
// endpoint and offset is exact. Weights with power singularities at segment
// endpoints use `gap` to recover endpoint distances without cancellation.
struct Abscissa {
  double x = 0.0;
  double base = 0.0;
  double offset = 0.0;

  Abscissa() = default;
  Abscissa(double v) : x(v), base(v) {} // NOLINT: plain points convert implicitly
  Abscissa(double b, double off) : x(b + off), base(b), offset(off) {}

  operator double() const { return x; } // NOLINT
};

// a - |x|, accurate when a is the magnitude of the node's base endpoint.
double gap(double a, const Abscissa &p);

// x - a, accurate when a is the node's base endpoint.
double offset_from(const Abscissa &p, double a);

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
};

// Ascending, pairwise disjoint closed intervals with lo < hi.
class IntervalUnion {
public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Segment> segments);

  const std::vector<Segment> &segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  double measure() const;
  bool contains(double x) const;

private:
  std::vector<Segment> segments_;
};

// D = {(x, y) : y in y_support, x in x_support_of(y)}.
struct BivDomain {
  IntervalUnion y_support;
  std::function<IntervalUnion(double)> x_support_of;
};

struct QuadratureSpec {
  int level_max = 12;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;

  // Defaults, with rel_tol replaced by $M1J_QUAD_TOL when set.
  static QuadratureSpec from_env();
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  bool converged = true;

  // The value, or NoConvergence when the level cap was hit.
  double checked() const;
};

struct VecQuadResult {
  std::vector<double> values;
  double err_est = 0.0;
  bool converged = true;
};

using VecIntegrand1 = std::function<void(const Abscissa &x, std::span<double> out)>;
using VecIntegrand2 = std::function<void(const Abscissa &x, const Abscissa &y, std::span<double> out)>;

QuadResult integrate_union(const std::function<double(const Abscissa &)> &f, const IntervalUnion &u,
                           const QuadratureSpec &spec = {});

// Vector-valued integrand; convergence is judged on the max norm over components.
VecQuadResult integrate_union_vec(std::size_t dim, const VecIntegrand1 &f, const IntervalUnion &u,
                                  const QuadratureSpec &spec = {});

QuadResult integrate_biv(const std::function<double(const Abscissa &, const Abscissa &)> &f, const BivDomain &d,
                         const QuadratureSpec &spec = {});

VecQuadResult integrate_biv_vec(std::size_t dim, const VecIntegrand2 &f, const BivDomain &d,
                                const QuadratureSpec &spec = {});

} // namespace m1j
