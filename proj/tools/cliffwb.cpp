#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliffwb/quadrature.hpp"
#include "cliffwb/verification.hpp"

namespace {

// "lo..hi" or a comma-separated list.
std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int r = lo; r <= hi; ++r) out.push_back(r);
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        const auto comma = text.find(',', start);
        out.push_back(std::stoi(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  } catch (const std::exception&) {
    throw cliffwb::ConfigError("bad refinement range '" + text + "'");
  }
  if (out.empty()) throw cliffwb::ConfigError("empty refinement range '" + text + "'");
  return out;
}

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

int export_rule(const std::string& domain, int n, int refinement, const std::string& center,
                double radius, const std::string& lo, const std::string& hi, const std::string& out) {
  using namespace cliffwb;
  auto point = [n](const std::string& text) {
    if (text.empty()) return Point(n);
    const auto c = parse_coords(text);
    if (c.size() != static_cast<std::size_t>(n + 1))
      throw ConfigError("expected " + std::to_string(n + 1) + " coordinates in '" + text + "'");
    return Point::from_coordinates(c);
  };
  Domain d;
  switch (domain_kind_from_name(domain)) {
    case DomainKind::sphere:
      d = SphereSurface{point(center), radius};
      break;
    case DomainKind::ball:
      d = BallVolume{point(center), radius};
      break;
    case DomainKind::box: {
      Point l = point(lo);
      Point h = point(hi);
      if (lo.empty())
        for (int k = 0; k <= n; ++k) l[k] = -1.0;
      if (hi.empty())
        for (int k = 0; k <= n; ++k) h[k] = 1.0;
      d = BoxBoundary{l, h};
      break;
    }
  }
  const QuadratureRule rule = build_rule(d, refinement);
  if (out.empty() || out == "-") {
    write_rule(std::cout, rule);
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot open '" + out + "' for writing");
  write_rule(f, rule);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-analysis verification workbench"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(0, 1);

  std::string suite = "all";
  int n = 2;
  std::string lambda = "0.5";
  std::string convention = "ledger";
  double h = 1e-3;
  std::string refine = "2..5";
  std::vector<std::string> overrides;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "structured";

  app.add_option("--suite", suite, "algebra|operators|transform|cauchy|meanvalue|bergman|taylor|differentiability|all");
  app.add_option("--n", n, "number of generators");
  app.add_option("--lambda", lambda, "mass: real number or 2^n comma-separated Clifford coefficients");
  app.add_option("--convention", convention, "ledger|printed");
  app.add_option("--h", h, "finite-difference step");
  app.add_option("--refine", refine, "refinement levels, lo..hi or a,b,c");
  app.add_option("--tol-override", overrides, "name=value, repeatable");
  app.add_option("--seed", seed, "seed for randomized fields");
  app.add_option("--out", out, "report path (default: $CLIFFWB_OUT_DIR/<suite>.<ext> or stdout)");
  app.add_option("--format", format, "structured|tabular");
  app.add_flag_callback("--list-tolerances", [] {
    for (const auto& [k, v] : cliffwb::SuiteConfig::default_tolerances())
      std::cout << k << '\t' << cliffwb::format_number(v) << '\n';
    std::exit(0);
  }, "print tolerance names with their defaults");

  auto* rule_cmd = app.add_subcommand("export-rule", "write a quadrature rule as a flat table");
  std::string domain = "sphere";
  int refinement = 2;
  std::string center;
  double radius = 1.0;
  std::string lo;
  std::string hi;
  std::string rule_out;
  rule_cmd->add_option("--domain", domain, "sphere|box|ball");
  rule_cmd->add_option("--n", n, "number of generators");
  rule_cmd->add_option("--refinement", refinement, "refinement level");
  rule_cmd->add_option("--center", center, "y0,...,yn");
  rule_cmd->add_option("--radius", radius, "radius");
  rule_cmd->add_option("--lo", lo, "box corner y0,...,yn");
  rule_cmd->add_option("--hi", hi, "box corner y0,...,yn");
  rule_cmd->add_option("--out", rule_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (rule_cmd->parsed()) return export_rule(domain, n, refinement, center, radius, lo, hi, rule_out);

    cliffwb::SuiteConfig cfg;
    cfg.n = n;
    cfg.lambda = lambda;
    cfg.convention = convention;
    cfg.h = h;
    cfg.refinements = parse_levels(refine);
    cfg.seed = seed;
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw cliffwb::ConfigError("--tol-override expects name=value, got '" + o + "'");
      double value = 0.0;
      try {
        value = std::stod(o.substr(eq + 1));
      } catch (const std::exception&) {
        throw cliffwb::ConfigError("bad tolerance value in '" + o + "'");
      }
      cfg.override_tolerance(o.substr(0, eq), value);
    }
    const auto fmt = cliffwb::report_format_from_name(format);
    cfg.validate();

    const auto t0 = std::chrono::steady_clock::now();
    const auto report = cliffwb::run_suite(suite, cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (out.empty()) {
      if (const char* dir = std::getenv("CLIFFWB_OUT_DIR"); dir && *dir) {
        std::filesystem::create_directories(dir);
        out = (std::filesystem::path(dir) /
               (suite + (fmt == cliffwb::ReportFormat::structured ? ".json" : ".tsv"))).string();
      }
    }
    if (out.empty() || out == "-")
      cliffwb::write_report(std::cout, report, fmt);
    else
      cliffwb::emit_report(report, out, fmt);

    std::size_t passed = 0;
    for (const auto& s : report.suites) passed += s.passed();
    std::cerr << suite << ": " << passed << "/" << report.check_count() << " checks passed in " << seconds
              << " s\n";
    for (const auto& s : report.suites)
      for (const auto& d : s.diagnostics) std::cerr << "diagnostic: " << d << '\n';
    return report.all_passed() ? 0 : 1;
  } catch (const cliffwb::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
