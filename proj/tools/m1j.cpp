// Command-line front end: eval, verify, gram, limit, pearson, domain.

#include "CLI11.hpp"
#include "json.hpp"

#include "m1j/bigq.hpp"
#include "m1j/bivariate.hpp"
#include "m1j/errors.hpp"
#include "m1j/suites.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>

using namespace m1j;
using nlohmann::json;

namespace {

struct Options {
  std::string alpha = "1/2", beta = "1/2", gamma = "1/2", delta = "1/5";
  std::string a = "1/2", b = "1/3", c = "1/4";
  std::string family = "biv";
  int n = 0, k = 0;
  int n_max = -1;
  int grid = 10;
  std::vector<std::string> suites;
  std::string format = "csv";
  std::string out;
  std::string deviations;
  bool use_paper = false;
  bool coeffs = false;
  std::optional<double> x, y;
};

// A table rendered as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }

  void write(std::ostream &os, const std::string &format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto &r : rows) {
        json o;
        for (std::size_t i = 0; i < columns.size(); ++i)
          o[columns[i]] = r[i];
        arr.push_back(o);
      }
      os << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto &r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << (i ? "," : "");
        if (r[i].is_string())
          os << csv_quote(r[i].get<std::string>());
        else
          os << r[i].dump();
      }
      os << "\n";
    }
  }

  static std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
      return s;
    std::string q = "\"";
    for (char ch : s)
      q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
};

class Output {
public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_)
        throw InvalidParameter("cannot open output file '" + path + "'");
    }
  }
  std::ostream &stream() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

struct Parsed {
  UniParamsD uni;
  std::optional<UniParams> uni_exact;
  BivParamsD biv;
  std::optional<BivParams> biv_exact;
};

Parsed parse_params(const Options &o) {
  const auto a = ParamValue::parse(o.a), b = ParamValue::parse(o.b), c = ParamValue::parse(o.c);
  const auto al = ParamValue::parse(o.alpha), be = ParamValue::parse(o.beta), ga = ParamValue::parse(o.gamma),
             de = ParamValue::parse(o.delta);
  Parsed p;
  p.uni = {a.value, b.value, c.value};
  if (a.exact && b.exact && c.exact)
    p.uni_exact = UniParams{*a.exact, *b.exact, *c.exact};
  p.biv = {al.value, be.value, ga.value, de.value};
  if (al.exact && be.exact && ga.exact && de.exact)
    p.biv_exact = BivParams{*al.exact, *be.exact, *ga.exact, *de.exact};
  return p;
}

void warn_decimal(const Parsed &p, const std::string &family) {
  const bool exact = family == "uni" ? p.uni_exact.has_value() : p.biv_exact.has_value();
  if (!exact)
    std::cerr << "warning: decimal parameters are used in floating point; exact checks are skipped\n";
}

std::string coeff_text(const Rational &r) { return to_string(r); }
std::string coeff_text(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

template <class T> int eval_uni(const Options &o, const BasicUniParams<T> &p) {
  p.validate();
  const auto j = bigm1_coeffs(o.n, p);
  Output out(o.out);
  auto &os = out.stream();
  if (o.coeffs && o.format == "csv") {
    for (int i = 0; i <= o.n; ++i)
      os << (i ? ", " : "") << coeff_text(j.coeff({i}));
    os << "\n";
    return 0;
  }
  Table t{{"x_degree", "coefficient", "value"}, {}};
  for (int i = 0; i <= o.n; ++i)
    t.add({i, coeff_text(j.coeff({i})), to_double(j.coeff({i}))});
  if (o.x) {
    Table v{{"x", "value"}, {}};
    v.add({*o.x, evaluate(j, *o.x)});
    v.write(os, o.format);
    return 0;
  }
  t.write(os, o.format);
  return 0;
}

template <class T> int eval_biv(const Options &o, const BasicBivParams<T> &p) {
  BivIndex{o.n, o.k}.validate();
  const auto j = biv_coeffs(BivIndex{o.n, o.k}, p);
  Output out(o.out);
  auto &os = out.stream();
  if (o.x || o.y) {
    Table v{{"x", "y", "value"}, {}};
    v.add({o.x.value_or(0.0), o.y.value_or(0.0), evaluate(j, o.x.value_or(0.0), o.y.value_or(0.0))});
    v.write(os, o.format);
    return 0;
  }
  Table t{{"x_degree", "y_degree", "coefficient", "value"}, {}};
  for (const auto &[e, c] : j.terms())
    t.add({e[0], e[1], coeff_text(c), to_double(c)});
  t.write(os, o.format);
  return 0;
}

int cmd_eval(const Options &o) {
  if (o.n < 0)
    throw InvalidParameter("--n must be nonnegative");
  const auto p = parse_params(o);
  warn_decimal(p, o.family);
  if (o.family == "uni")
    return p.uni_exact ? eval_uni(o, *p.uni_exact) : eval_uni(o, p.uni);
  if (o.k < 0 || o.k > o.n)
    throw InvalidParameter("need 0 <= k <= n");
  return p.biv_exact ? eval_biv(o, *p.biv_exact) : eval_biv(o, p.biv);
}

int cmd_verify(const Options &o) {
  const auto p = parse_params(o);
  SuiteConfig cfg;
  cfg.uni = p.uni;
  cfg.uni_exact = p.uni_exact;
  cfg.biv = p.biv;
  cfg.biv_exact = p.biv_exact;
  cfg.n_max = o.n_max;
  cfg.grid = o.grid;
  cfg.quad = QuadratureSpec::from_env();
  cfg.formulas = o.use_paper ? RecurrenceFormulas::printed : RecurrenceFormulas::corrected;

  std::vector<std::string> names = o.suites;
  const bool all = names.empty() || (names.size() == 1 && names[0] == "all");
  if (all) {
    names.clear();
    for (const auto &s : suite_catalog())
      names.push_back(s.name);
  }
  std::vector<std::string> runnable;
  for (const auto &n : names) {
    const auto &info = suite_info(n);
    const bool uni_suite = n.rfind("uni-", 0) == 0 || n == "kernel-relation";
    const bool exact_ok = uni_suite ? cfg.uni_exact.has_value() : cfg.biv_exact.has_value();
    if (info.exact && !exact_ok) {
      std::cerr << "warning: skipping exact suite '" << n << "' (decimal parameters)\n";
      continue;
    }
    runnable.push_back(n);
  }
  const auto reports = run_suites(runnable, cfg);

  if (!o.deviations.empty()) {
    std::ofstream dev(o.deviations);
    if (!dev)
      throw InvalidParameter("cannot open deviations file '" + o.deviations + "'");
    dev << deviations_json(adjudicate_recurrences(cfg.biv, o.n_max >= 0 ? o.n_max : 3)).dump(2) << "\n";
  }

  Output out(o.out);
  auto &os = out.stream();
  bool ok = true;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto &r : reports) {
      arr.push_back(to_json(r));
      ok = ok && r.pass;
    }
    os << arr.dump(2) << "\n";
  } else {
    Table t{{"check_name", "max_residual", "witness", "pass", "elapsed_ms"}, {}};
    for (const auto &r : reports) {
      t.add({r.check_name, r.max_residual, r.witness, r.pass, r.elapsed_ms});
      ok = ok && r.pass;
    }
    t.write(os, o.format);
  }
  return ok ? 0 : 1;
}

int cmd_gram(const Options &o) {
  const auto p = parse_params(o);
  const auto spec = QuadratureSpec::from_env();
  Table t{{"n1", "k1", "n2", "k2", "value", "expected", "abs_err"}, {}};
  bool converged = true;
  if (o.family == "uni") {
    p.uni.validate();
    const int n_max = o.n_max >= 0 ? o.n_max : 8;
    const Regime regime = p.uni.regime();
    std::vector<LaurentPoly1<double>> polys;
    for (int n = 0; n <= n_max; ++n)
      polys.push_back(p.uni_exact ? bigm1_coeffs(n, *p.uni_exact).to_double() : bigm1_coeffs(n, p.uni));
    const auto m = polys.size();
    const auto r = integrate_union_vec(
        m * m,
        [&](const Abscissa &x, std::span<double> out) {
          const double w = weight_uni(x, p.uni, regime);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
              out[i * m + j] = w * evaluate(polys[i], x.x) * evaluate(polys[j], x.x);
        },
        support_uni(p.uni.c, regime), spec);
    converged = r.converged;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double want = i == j ? norm_h(static_cast<int>(i), p.uni.a, p.uni.b, regime, p.uni.c) : 0.0;
        const double v = r.values[i * m + j];
        t.add({i, 0, j, 0, v, want, std::abs(v - want)});
      }
  } else {
    p.biv.validate();
    const int n_max = o.n_max >= 0 ? o.n_max : 4;
    const Regime regime = p.biv.regime();
    std::vector<BivIndex> ix;
    std::vector<DensePoly2> polys;
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k) {
        ix.push_back({n, k});
        if (p.biv_exact)
          polys.emplace_back(biv_coeffs(BivIndex{n, k}, *p.biv_exact));
        else
          polys.emplace_back(biv_coeffs(BivIndex{n, k}, p.biv));
      }
    const auto m = ix.size();
    const auto r = integrate_biv_vec(
        m * m,
        [&](const Abscissa &x, const Abscissa &y, std::span<double> out) {
          const double w = weight_biv(x, y, p.biv, regime);
          std::vector<double> v(m);
          for (std::size_t i = 0; i < m; ++i)
            v[i] = polys[i](x.x, y.x);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
              out[i * m + j] = w * v[i] * v[j];
        },
        domain_biv(p.biv, regime), spec);
    converged = r.converged;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double want = i == j ? norm_H(ix[i], p.biv, regime) : 0.0;
        const double v = r.values[i * m + j];
        t.add({ix[i].n, ix[i].k, ix[j].n, ix[j].k, v, want, std::abs(v - want)});
      }
  }
  Output out(o.out);
  t.write(out.stream(), o.format);
  if (!converged)
    std::cerr << "warning: quadrature did not reach the requested tolerance\n";
  return converged ? 0 : 1;
}

int cmd_limit(const Options &o) {
  const auto p = parse_params(o);
  p.biv.validate();
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
  std::vector<BivIndex> ix;
  if (o.n_max >= 0) {
    for (int n = 0; n <= o.n_max; ++n)
      for (int k = 0; k <= n; ++k)
        ix.push_back({n, k});
  } else {
    BivIndex{o.n, o.k}.validate();
    ix.push_back({o.n, o.k});
  }
  Table t{{"n", "k", "eps", "deviation", "order"}, {}};
  for (const auto &i : ix) {
    const auto j = p.biv_exact ? biv_coeffs(i, *p.biv_exact).to_double() : biv_coeffs(i, p.biv);
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (double e : eps) {
      const double d = max_abs_difference(
          bigq_biv_coeffs(i.n, i.k, limit_params(p.biv.alpha, p.biv.beta, p.biv.gamma, p.biv.delta, e)), j);
      json order = nullptr;
      if (std::isfinite(prev) && d > 0.0)
        order = std::log10(prev / d);
      t.add({i.n, i.k, e, d, order});
      prev = d;
    }
  }
  Output out(o.out);
  t.write(out.stream(), o.format);
  return 0;
}

int cmd_pearson(const Options &o) {
  const auto p = parse_params(o);
  p.biv.validate();
  if (p.biv.regime() != Regime::inside)
    throw RegimeMismatch("the Pearson system is posed on the inside domain");
  if (o.grid < 1)
    throw InvalidParameter("--grid must be positive");
  const double d = std::abs(p.biv.delta);
  Table t{{"x", "y", "r1", "r2", "r3", "r4", "r5", "r6", "r7"}, {}};
  double worst = 0.0;
  for (int i = 0; i < o.grid; ++i)
    for (int j = 0; j < o.grid; ++j) {
      const double y = d + (1.0 - d) * (i + 0.5) / o.grid;
      const double x = d + (y - d) * (j + 0.5) / o.grid;
      const auto r = pearson_residuals(p.biv, x, y);
      std::vector<json> row{x, y};
      for (double v : r) {
        row.push_back(v);
        worst = std::max(worst, v);
      }
      t.add(row);
    }
  Output out(o.out);
  t.write(out.stream(), o.format);
  std::cerr << "max residual " << worst << "\n";
  return worst <= 1e-10 ? 0 : 1;
}

int cmd_domain(const Options &o) {
  const auto p = parse_params(o);
  const Regime regime = std::abs(p.biv.delta) < 1.0 ? Regime::inside : Regime::outside;
  const auto tris = domain_triangles(p.biv, regime);
  Output out(o.out);
  auto &os = out.stream();
  if (o.format == "json") {
    json j;
    j["regime"] = to_string(regime);
    j["delta"] = p.biv.delta;
    j["triangles"] = json::array();
    for (const auto &tr : tris) {
      json v = json::array();
      for (const auto &c : tr.vertices)
        v.push_back({c[0], c[1]});
      j["triangles"].push_back(v);
    }
    os << j.dump(2) << "\n";
    return 0;
  }
  Table t{{"triangle", "vertex", "x", "y"}, {}};
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (std::size_t v = 0; v < 3; ++v)
      t.add({i, v, tris[i].vertices[v][0], tris[i].vertices[v][1]});
  t.write(os, o.format);
  return 0;
}

void add_params(CLI::App *cmd, Options &o) {
  cmd->add_option("--alpha", o.alpha, "bivariate alpha (integer, p/q or decimal)")->capture_default_str();
  cmd->add_option("--beta", o.beta, "bivariate beta")->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "bivariate gamma")->capture_default_str();
  cmd->add_option("--delta", o.delta, "bivariate delta")->capture_default_str();
  cmd->add_option("--a", o.a, "univariate a")->capture_default_str();
  cmd->add_option("--b", o.b, "univariate b")->capture_default_str();
  cmd->add_option("--c", o.c, "univariate c")->capture_default_str();
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Big -1 Jacobi polynomials in one and two variables"};
  app.require_subcommand(1);
  Options o;

  auto *eval = app.add_subcommand("eval", "print coefficients or values of J_n or J_{n,k}");
  add_params(eval, o);
  eval->add_option("--family", o.family, "uni or biv")->check(CLI::IsMember({"uni", "biv"}))->capture_default_str();
  eval->add_option("--n", o.n, "degree")->capture_default_str();
  eval->add_option("--k", o.k, "x-degree index (bivariate)")->capture_default_str();
  eval->add_flag("--coeffs", o.coeffs, "univariate: ascending coefficient list");
  eval->add_option("--x", o.x, "evaluation point x");
  eval->add_option("--y", o.y, "evaluation point y");

  auto *verify = app.add_subcommand("verify", "run verification suites");
  add_params(verify, o);
  verify->add_option("--suite", o.suites, "suite name (repeatable; default all)");
  verify->add_option("--n-max", o.n_max, "override the suite's degree bound");
  verify->add_option("--grid", o.grid, "Pearson grid size")->capture_default_str();
  verify->add_flag("--use-paper-formulas", o.use_paper, "use the published recurrence expressions verbatim");
  verify->add_option("--deviations", o.deviations, "write the recurrence deviations report (JSON) to PATH");

  auto *gram = app.add_subcommand("gram", "Gram matrix by quadrature against the orthogonality constants");
  add_params(gram, o);
  gram->add_option("--family", o.family, "uni or biv")->check(CLI::IsMember({"uni", "biv"}))->capture_default_str();
  gram->add_option("--n-max", o.n_max, "degree bound (default 8 uni, 4 biv)");

  auto *limit = app.add_subcommand("limit", "deviation of the q -> -1 limit at eps = 1e-2, 1e-3, 1e-4");
  add_params(limit, o);
  limit->add_option("--n", o.n, "degree")->capture_default_str();
  limit->add_option("--k", o.k, "x-degree index")->capture_default_str();
  limit->add_option("--n-max", o.n_max, "all 0 <= k <= n <= n-max instead of one index");

  auto *pearson = app.add_subcommand("pearson", "Pearson-system residuals on an interior grid");
  add_params(pearson, o);
  pearson->add_option("--grid", o.grid, "grid size per axis")->capture_default_str();

  auto *domain = app.add_subcommand("domain", "orthogonality triangles as vertex lists");
  add_params(domain, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (eval->parsed())
      return cmd_eval(o);
    if (verify->parsed())
      return cmd_verify(o);
    if (gram->parsed())
      return cmd_gram(o);
    if (limit->parsed())
      return cmd_limit(o);
    if (pearson->parsed())
      return cmd_pearson(o);
    if (domain->parsed())
      return cmd_domain(o);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
