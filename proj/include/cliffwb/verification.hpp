#pragma once

// Verification suites: each one exercises a module's identities and theorems
// over seeded generator fields and records one check per (parameter tuple).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffwb/convention.hpp"
#include "cliffwb/mass_term.hpp"

namespace cliffwb {

struct SuiteConfig {
  int n = 2;
  // Real number or 2^n comma-separated Clifford coefficients.
  std::string lambda = "0.5";
  std::string convention = "ledger";
  double h = 1e-3;
  std::vector<int> refinements{2, 3, 4, 5};
  std::map<std::string, double> tolerances = default_tolerances();
  std::uint64_t seed = 42;

  static std::map<std::string, double> default_tolerances();

  // Throws ConfigError describing the first violated constraint.
  void validate() const;
  double tol(const std::string& name) const;
  MassTerm mass() const;
  Convention sign_convention() const;
  // Replaces one tolerance; unknown names are rejected.
  void override_tolerance(const std::string& name, double value);

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

enum class Relation { at_most, at_least };

struct CheckRecord {
  std::string name;
  std::map<std::string, std::string> parameters;
  double residual = 0.0;
  Relation relation = Relation::at_most;
  // Absent for informational records, which always pass.
  std::optional<double> tolerance;
  std::optional<double> order;
  bool passed = true;

  friend bool operator==(const CheckRecord& a, const CheckRecord& b);
};

struct SuiteReport {
  std::string name;
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  std::vector<std::string> diagnostics;

  std::size_t passed() const;
  std::size_t failed() const;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct VerificationReport {
  std::vector<SuiteReport> suites;

  bool all_passed() const;
  std::size_t check_count() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Suite names: algebra, operators, transform, cauchy, meanvalue, bergman,
// taylor, differentiability, all.
const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

enum class ReportFormat { structured, tabular };

ReportFormat report_format_from_name(const std::string& name);

void write_report(std::ostream& os, const VerificationReport& r, ReportFormat format);
// Throws Error naming `path` on I/O failure.
void emit_report(const VerificationReport& r, const std::string& path, ReportFormat format);

std::string to_json(const VerificationReport& r);
VerificationReport parse_report(const std::string& json_text);

// Shortest round-trip decimal form used in reports.
std::string format_number(double v);

}  // namespace cliffwb
