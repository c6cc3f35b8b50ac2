#pragma once

// Named verification suites. Each produces one OpReport; the CLI `verify`
// command and the acceptance runner both drive these.

#include "m1j/bigm1.hpp"
#include "m1j/bivariate.hpp"
#include "m1j/quad.hpp"
#include "m1j/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace m1j {

struct SuiteConfig {
  UniParamsD uni{0.5, 1.0 / 3.0, 0.25};
  std::optional<UniParams> uni_exact = UniParams{Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  BivParamsD biv{0.5, 0.5, 0.5, 0.2};
  std::optional<BivParams> biv_exact = BivParams{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 5)};
  int n_max = -1; // -1 selects each suite's own default
  int grid = 10;
  QuadratureSpec quad;
  RecurrenceFormulas formulas = RecurrenceFormulas::corrected;
};

struct SuiteInfo {
  std::string name;
  bool exact;       // needs rational parameters
  int default_n_max;
  double tolerance;
  std::string summary;
};

const std::vector<SuiteInfo> &suite_catalog();
const SuiteInfo &suite_info(std::string_view name);

// Never throws for a known suite: module errors become a failed report with
// the message as witness. InvalidParameter for an unknown name.
OpReport run_suite(std::string_view name, const SuiteConfig &cfg);

// Runs concurrently; reports come back sorted by suite name.
std::vector<OpReport> run_suites(const std::vector<std::string> &names, const SuiteConfig &cfg);

// Recurrence coefficients checked against the quadrature projection oracle.
struct CoefficientMismatch {
  BivIndex idx;
  std::string coefficient;
  double published = 0.0;
  double oracle = 0.0;
  double corrected = 0.0;
};

struct Adjudication {
  BivParamsD params;
  int n_max = 0;
  double tolerance = 0.0;
  std::vector<CoefficientMismatch> mismatches; // published entries off by more than tolerance
  double max_published_error = 0.0;
  double max_corrected_error = 0.0;
  std::string witness; // where max_corrected_error occurs
};

// Inside regime only (the oracle integrates over the inside domain).
Adjudication adjudicate_recurrences(const BivParamsD &p, int n_max = 3, double tolerance = 1e-7);

// Machine-readable deviations report.
nlohmann::json deviations_json(const Adjudication &a);

// Name of the coefficient attached to J_{n+dn,k+dk} in the x-recurrence.
std::string x_coeff_name(int dn, int dk);

} // namespace m1j
