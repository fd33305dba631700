#pragma once

// Verification harness: evaluates each published identity against an
// independent oracle over a parameter grid, by exact field equality.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgue/exactq.hpp"

namespace qgue {

enum class Suite {
  duality,
  orthogonality,
  theorem1,
  theorem2,
  theorem3,
  theorem4,
  sigma,
  theorem5,
  qhz,
  truncation,
};

std::string to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct GridBounds {
  int max_weight = 4;  // partition weight / 2m
  int max_vars = 3;    // N
  int max_n = 10;      // univariate degree bound
  int max_m = 3;
  int max_s = 3;
};

/// Throws SizeError (naming the violated bound) if a suite would exceed the
/// oracle guardrail or the supported ranges.
void validate_bounds(Suite suite, const GridBounds& bounds);

struct Param {
  std::string name;
  std::variant<int, std::string> value;
  friend bool operator==(const Param&, const Param&) = default;
};

enum class PointStatus { equal, discrepant, skipped };
std::string to_string(PointStatus s);

struct VerificationPoint {
  std::vector<Param> params;
  PointStatus status = PointStatus::equal;
  std::optional<Scalar> closed;
  std::optional<Scalar> oracle;
  std::optional<Scalar> ratio;  // closed / oracle, when the oracle is nonzero
  std::optional<SignedQPower> monomial;
  std::string note;
};

struct ReportSummary {
  int total = 0;
  int equal = 0;
  int discrepant = 0;
  int skipped = 0;
  int monomial_ratios = 0;
  int non_monomial = 0;  // discrepant points whose ratio is missing or not +-q^j
};

struct VerificationReport {
  std::string identity;
  std::vector<Param> grid;
  std::vector<VerificationPoint> points;

  ReportSummary summary() const;
  bool has_discrepancy() const { return summary().discrepant > 0; }
  bool all_ratios_monomial() const { return summary().non_monomial == 0; }
  // First point whose params include every given (name, value) pair.
  const VerificationPoint* find(const std::vector<Param>& params) const;
};

/// Compares closed and oracle values; closed == oracle is "equal".
VerificationPoint classify(std::vector<Param> params, const Scalar& closed, const Scalar& oracle);

/// Runs one suite. Points are evaluated on up to `threads` workers and merged
/// in grid order, so the result does not depend on the thread count.
std::vector<VerificationReport> verify_suite(Suite suite, const GridBounds& bounds, int threads = 1);

/// Thread count from QGUE_THREADS, defaulting to the hardware concurrency.
int default_thread_count();

/// {"reports": [{identity, grid, points, summary}, ...], "summary": {...}}
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string summary_table(const std::vector<VerificationReport>& reports);

}  // namespace qgue
