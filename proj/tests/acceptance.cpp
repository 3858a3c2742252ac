// One pass/fail line per acceptance criterion. Exit status is nonzero iff
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliffwb/verification.hpp"

using namespace cliffwb;

namespace {

struct Timed {
  VerificationReport report;
  double seconds = 0.0;
};

Timed timed_run(const std::string& suite, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{run_suite(suite, cfg), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

using Filter = std::function<bool(const std::string&)>;

Filter prefixes(std::vector<std::string> ps) {
  return [ps = std::move(ps)](const std::string& name) {
    for (const auto& p : ps)
      if (name.starts_with(p)) return true;
    return false;
  };
}

struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

Tally tally(const VerificationReport& r, const Filter& keep) {
  Tally t;
  for (const auto& s : r.suites)
    for (const auto& c : s.checks) {
      if (!keep(c.name)) continue;
      ++t.total;
      if (!c.passed) {
        if (t.failed++ == 0) t.first_failure = c.name + " residual " + format_number(c.residual);
      }
    }
  return t;
}

int failures = 0;

void line(int id, const std::string& label, bool ok, const std::string& detail) {
  std::printf("criterion %2d %-28s %s  %s\n", id, label.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void judge(int id, const std::string& label, const Timed& run, const Filter& keep, double budget) {
  const Tally t = tally(run.report, keep);
  const bool in_time = run.seconds <= budget;
  std::string detail = std::to_string(t.total - t.failed) + "/" + std::to_string(t.total) + " checks, " +
                       format_number(std::round(run.seconds * 100) / 100) + " s (budget " + format_number(budget) +
                       " s)";
  if (t.failed) detail += ", first failure " + t.first_failure;
  if (!in_time) detail += ", over budget";
  line(id, label, t.total > 0 && t.failed == 0 && in_time, detail);
}

}  // namespace

int main() {
  const SuiteConfig cfg;
  const auto any = [](const std::string&) { return true; };

  const Timed algebra = timed_run("algebra", cfg);
  judge(1, "algebra", algebra, any, 10.0);

  const Timed operators = timed_run("operators", cfg);
  judge(2, "factorization", operators,
        prefixes({"factorization", "helmholtz", "residual_norm_order", "identity_field"}), 30.0);
  judge(3, "kernel membership", operators, prefixes({"kernel_"}), 30.0);

  const Timed transform = timed_run("transform", cfg);
  judge(4, "intertwining", transform, any, 60.0);

  const Timed cauchy = timed_run("cauchy", cfg);
  judge(5, "cauchy theorem", cauchy, prefixes({"quadrature_measure", "cauchy_theorem"}), 120.0);
  judge(6, "cauchy integral formula", cauchy,
        prefixes({"cauchy_interior", "cauchy_exterior", "cauchy_deformation"}), 120.0);

  const Timed meanvalue = timed_run("meanvalue", cfg);
  judge(7, "mean value", meanvalue, any, 120.0);

  const Timed bergman = timed_run("bergman", cfg);
  judge(8, "bergman reproduction", bergman, any, 180.0);
  {
    double offset = -1.0;
    for (const auto& c : bergman.report.suites.at(0).checks)
      if (c.name == "bergman_calibration") offset = c.residual;
    const bool expect_diag = offset > cfg.tol("bergman_calibration_diag");
    const bool has_diag = !bergman.report.suites.at(0).diagnostics.empty();
    line(8, "bergman calibration diag", offset >= 0.0 && expect_diag == has_diag,
         "|c - 1| = " + format_number(offset) + ", diagnostic " + (has_diag ? "emitted" : "absent"));
  }

  const Timed taylor = timed_run("taylor", cfg);
  const Timed diff = timed_run("differentiability", cfg);
  judge(9, "taylor", taylor, any, 120.0);
  judge(9, "differentiability", diff, any, 120.0);

  const Timed first = timed_run("all", cfg);
  const Timed second = timed_run("all", cfg);
  const bool identical = to_json(first.report) == to_json(second.report);
  line(10, "determinism", identical,
       std::to_string(first.report.check_count()) + " checks, reports " + (identical ? "byte-identical" : "differ") +
           ", " + format_number(std::round(first.seconds * 100) / 100) + " s per run (budget 600 s)");

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
