#include "m1j/quad.hpp"

#include "m1j/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace m1j {

IntervalUnion::IntervalUnion(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].lo < segments_[i].hi))
      throw InvalidParameter("interval segment must satisfy lo < hi");
    if (i > 0 && !(segments_[i - 1].hi <= segments_[i].lo))
      throw InvalidParameter("interval segments must be ascending and disjoint");
  }
}

double IntervalUnion::measure() const {
  double m = 0.0;
  for (const auto &s : segments_)
    m += s.hi - s.lo;
  return m;
}

bool IntervalUnion::contains(double x) const {
  return std::any_of(segments_.begin(), segments_.end(),
                     [x](const Segment &s) { return s.lo <= x && x <= s.hi; });
}

double gap(double a, const Abscissa &p) {
  if (p.base == 0.0)
    return a - std::abs(p.offset);
  const double s = p.base > 0.0 ? 1.0 : -1.0;
  return (a - std::abs(p.base)) - s * p.offset;
}

double offset_from(const Abscissa &p, double a) { return (p.base - a) + p.offset; }

QuadratureSpec QuadratureSpec::from_env() {
  QuadratureSpec spec;
  if (const char *env = std::getenv("M1J_QUAD_TOL")) {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || v <= 0.0)
      throw InvalidParameter("M1J_QUAD_TOL must be a positive number");
    spec.rel_tol = v;
  }
  return spec;
}

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw InvalidParameter("quadrature tolerances must be positive");
  if (level_max < 1 || level_max > 16)
    throw InvalidParameter("quadrature level_max must lie in [1, 16]");
}

double QuadResult::checked() const {
  if (!converged)
    throw NoConvergence(value, err_est);
  return value;
}

namespace {

constexpr double kTMax = 6.0;
// Closest approach to an endpoint. Far enough that the truncated tail of an
// x^-0.9 singularity is below 1e-13, close enough that two singular factors
// multiplied together stay finite.
constexpr double kMinComplement = 1e-150;
constexpr int kMinLevel = 3;
constexpr int kMaxLevel = 16;

// Positive half of the tanh-sinh rule on [-1, 1]: for each abscissa t > 0 the
// distance 1 - x(t) to the endpoint and the weight x'(t). Level 0 holds the
// integer abscissae (and t = 0), level k the odd multiples of 2^-k.
struct Node {
  double complement;
  double weight;
};

struct Tables {
  std::vector<std::vector<Node>> levels;
  double centre_weight = std::numbers::pi / 2.0;

  Tables() {
    levels.resize(kMaxLevel + 1);
    for (int k = 0; k <= kMaxLevel; ++k) {
      const double h = std::ldexp(1.0, -k);
      for (long j = (k == 0 ? 1 : 0);; ++j) {
        const double t = (k == 0) ? static_cast<double>(j) : (2 * j + 1) * h;
        if (t > kTMax)
          break;
        const double u = std::numbers::pi / 2.0 * std::sinh(t);
        const double ch = std::cosh(u);
        if (std::exp(-u) / ch < kMinComplement)
          break;
        levels[static_cast<std::size_t>(k)].push_back(
            {std::exp(-u) / ch, std::numbers::pi / 2.0 * std::cosh(t) / (ch * ch)});
      }
    }
  }
};

const Tables &tables() {
  static const Tables t;
  return t;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

// One segment, vector integrand. Returns converged flag; writes sum and error.
bool integrate_segment(std::size_t dim, const VecIntegrand1 &f, const Segment &seg,
                       const QuadratureSpec &spec, std::span<double> result, double &err) {
  const auto &tab = tables();
  const double half = 0.5 * (seg.hi - seg.lo);

  std::vector<double> sum(dim, 0.0), level_sum(dim, 0.0), prev(dim, 0.0), buf(dim, 0.0);

  auto add_node = [&](const Abscissa &x, double w) {
    if (x.offset == 0.0)
      return;
    f(x, buf);
    for (std::size_t i = 0; i < dim; ++i)
      level_sum[i] += w * buf[i];
  };

  bool converged = false;
  err = 0.0;
  for (int k = 0; k <= spec.level_max; ++k) {
    std::fill(level_sum.begin(), level_sum.end(), 0.0);
    if (k == 0)
      add_node(Abscissa(seg.lo, half), tab.centre_weight * half);
    for (const auto &node : tab.levels[static_cast<std::size_t>(k)]) {
      const double d = half * node.complement;
      const double w = half * node.weight;
      add_node(Abscissa(seg.lo, d), w);
      add_node(Abscissa(seg.hi, -d), w);
    }
    const double h = std::ldexp(1.0, -k);
    for (std::size_t i = 0; i < dim; ++i) {
      prev[i] = sum[i];
      sum[i] = (k == 0 ? 0.0 : 0.5 * sum[i]) + h * level_sum[i];
    }
    if (k >= kMinLevel) {
      double diff = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        diff = std::max(diff, std::abs(sum[i] - prev[i]));
      err = diff;
      if (diff <= std::max(spec.abs_tol, spec.rel_tol * max_abs(sum))) {
        converged = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    result[i] = sum[i];
  return converged;
}

} // namespace

VecQuadResult integrate_union_vec(std::size_t dim, const VecIntegrand1 &f, const IntervalUnion &u,
                                  const QuadratureSpec &spec) {
  spec.validate();
  VecQuadResult out;
  out.values.assign(dim, 0.0);
  std::vector<double> part(dim, 0.0);
  for (const auto &seg : u.segments()) {
    double err = 0.0;
    out.converged = integrate_segment(dim, f, seg, spec, part, err) && out.converged;
    out.err_est += err;
    for (std::size_t i = 0; i < dim; ++i)
      out.values[i] += part[i];
  }
  return out;
}

QuadResult integrate_union(const std::function<double(const Abscissa &)> &f, const IntervalUnion &u,
                           const QuadratureSpec &spec) {
  const auto r = integrate_union_vec(
      1, [&f](const Abscissa &x, std::span<double> out) { out[0] = f(x); }, u, spec);
  return {r.values[0], r.err_est, r.converged};
}

VecQuadResult integrate_biv_vec(std::size_t dim, const VecIntegrand2 &f, const BivDomain &d,
                                const QuadratureSpec &spec) {
  // The last outer component carries the inner error estimate, so it is
  // weighted by the outer rule like everything else.
  auto outer = [&](const Abscissa &y, std::span<double> out) {
    const IntervalUnion xs = d.x_support_of(y);
    const auto r = integrate_union_vec(
        dim, [&](const Abscissa &x, std::span<double> o) { f(x, y, o); }, xs, spec);
    std::copy(r.values.begin(), r.values.end(), out.begin());
    out[dim] = r.err_est;
  };
  auto r = integrate_union_vec(dim + 1, outer, d.y_support, spec);
  const double inner_err = std::abs(r.values[dim]);
  r.values.pop_back();
  r.err_est += inner_err;
  r.converged = r.converged && inner_err <= std::max(spec.abs_tol, spec.rel_tol * max_abs(r.values));
  return r;
}

QuadResult integrate_biv(const std::function<double(const Abscissa &, const Abscissa &)> &f, const BivDomain &d,
                         const QuadratureSpec &spec) {
  const auto r = integrate_biv_vec(
      1, [&f](const Abscissa &x, const Abscissa &y, std::span<double> out) { out[0] = f(x, y); }, d, spec);
  return {r.values[0], r.err_est, r.converged};
}

} // namespace m1j
