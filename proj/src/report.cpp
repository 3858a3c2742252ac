#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cliffwb/verification.hpp"

namespace cliffwb {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "structured" || name == "json") return ReportFormat::structured;
  if (name == "tabular" || name == "tsv") return ReportFormat::tabular;
  throw ConfigError("unknown report format '" + name + "' (expected structured or tabular)");
}

namespace {

// Non-finite values are carried as strings so that a round trip is exact.
json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw Error("report: bad number '" + s + "'");
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return read_number(j);
}

const char* relation_name(Relation r) { return r == Relation::at_most ? "le" : "ge"; }

Relation relation_from_name(const std::string& s) {
  if (s == "le") return Relation::at_most;
  if (s == "ge") return Relation::at_least;
  throw Error("report: bad relation '" + s + "'");
}

json config_json(const SuiteConfig& c) {
  json tol = json::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  return {{"n", c.n},
          {"lambda", c.lambda},
          {"convention", c.convention},
          {"h", c.h},
          {"refinements", c.refinements},
          {"seed", c.seed},
          {"tolerances", tol}};
}

SuiteConfig config_from_json(const json& j) {
  SuiteConfig c;
  c.n = j.at("n").get<int>();
  c.lambda = j.at("lambda").get<std::string>();
  c.convention = j.at("convention").get<std::string>();
  c.h = j.at("h").get<double>();
  c.refinements = j.at("refinements").get<std::vector<int>>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.tolerances.clear();
  for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
  return c;
}

json summary_json(std::size_t total, std::size_t passed) {
  return {{"checks", total}, {"passed", passed}, {"failed", total - passed}};
}

json ledger_json(const std::string& convention) {
  json j = {{"convention", convention}};
  try {
    const Convention c = convention_from_name(convention);
    j["dirac_sign"] = c.dirac_sign;
    j["monomial_sign"] = c.monomial_sign;
    j["mass_sign"] = c.mass_sign;
  } catch (const Error&) {
  }
  return j;
}

json report_json(const VerificationReport& r) {
  json suites = json::array();
  std::size_t passed = 0;
  for (const auto& s : r.suites) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      json params = json::object();
      for (const auto& [k, v] : c.parameters) params[k] = v;
      checks.push_back({{"name", c.name},
                        {"parameters", params},
                        {"residual", number(c.residual)},
                        {"relation", relation_name(c.relation)},
                        {"tolerance", optional_number(c.tolerance)},
                        {"order", optional_number(c.order)},
                        {"passed", c.passed}});
    }
    passed += s.passed();
    suites.push_back({{"name", s.name},
                      {"config", config_json(s.config)},
                      {"ledger", ledger_json(s.config.convention)},
                      {"summary", summary_json(s.checks.size(), s.passed())},
                      {"diagnostics", s.diagnostics},
                      {"checks", checks}});
  }
  return {{"format", "cliffwb-report"},
          {"version", 1},
          {"summary", summary_json(r.check_count(), passed)},
          {"suites", suites}};
}

std::string tsv_field(const std::string& s) {
  std::string out = s;
  for (char& ch : out)
    if (ch == '\t' || ch == '\n') ch = ' ';
  return out;
}

void write_tabular(std::ostream& os, const VerificationReport& r) {
  os << "suite\tcheck\tparameters\tresidual\trelation\ttolerance\torder\tpassed\n";
  for (const auto& s : r.suites)
    for (const auto& c : s.checks) {
      std::string params;
      for (const auto& [k, v] : c.parameters) {
        if (!params.empty()) params += ';';
        params += k + "=" + v;
      }
      os << s.name << '\t' << tsv_field(c.name) << '\t' << tsv_field(params) << '\t'
         << format_number(c.residual) << '\t' << relation_name(c.relation) << '\t'
         << (c.tolerance ? format_number(*c.tolerance) : "") << '\t'
         << (c.order ? format_number(*c.order) : "") << '\t' << (c.passed ? 1 : 0) << '\n';
    }
}

}  // namespace

std::string to_json(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

VerificationReport parse_report(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  }
  if (j.value("format", "") != "cliffwb-report") throw Error("report: not a cliffwb report");
  VerificationReport r;
  try {
    for (const auto& s : j.at("suites")) {
      SuiteReport sr;
      sr.name = s.at("name").get<std::string>();
      sr.config = config_from_json(s.at("config"));
      sr.diagnostics = s.at("diagnostics").get<std::vector<std::string>>();
      for (const auto& c : s.at("checks")) {
        CheckRecord rec;
        rec.name = c.at("name").get<std::string>();
        for (const auto& [k, v] : c.at("parameters").items()) rec.parameters[k] = v.get<std::string>();
        rec.residual = read_number(c.at("residual"));
        rec.relation = relation_from_name(c.at("relation").get<std::string>());
        rec.tolerance = read_optional(c.at("tolerance"));
        rec.order = read_optional(c.at("order"));
        rec.passed = c.at("passed").get<bool>();
        sr.checks.push_back(std::move(rec));
      }
      r.suites.push_back(std::move(sr));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  }
  return r;
}

void write_report(std::ostream& os, const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::structured)
    os << to_json(r);
  else
    write_tabular(os, r);
}

void emit_report(const VerificationReport& r, const std::string& path, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_report(out, r, format);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace cliffwb
