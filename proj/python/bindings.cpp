#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "cliffwb/basis.hpp"
#include "cliffwb/mass_transform.hpp"
#include "cliffwb/quadrature.hpp"
#include "cliffwb/theorems.hpp"
#include "cliffwb/verification.hpp"

namespace py = pybind11;
using namespace cliffwb;

namespace {

Point to_point(const std::vector<double>& coords) { return Point::from_coordinates(coords); }

std::vector<double> from_point(const Point& p) {
  const auto c = p.coordinates();
  return {c.begin(), c.end()};
}

std::vector<double> coefficients(const Multivector& m) {
  const auto c = m.coefficients();
  return {c.begin(), c.end()};
}

Convention convention(const std::string& name) { return convention_from_name(name); }

py::dict rule_dict(const QuadratureRule& r) {
  std::vector<std::vector<double>> nodes;
  std::vector<std::vector<double>> normals;
  for (const auto& p : r.nodes) nodes.push_back(from_point(p));
  for (const auto& p : r.normals) normals.push_back(from_point(p));
  py::dict d;
  d["domain"] = to_string(r.kind);
  d["n"] = r.n;
  d["nodes"] = nodes;
  d["weights"] = r.weights;
  d["normals"] = normals;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clifford-analysis verification workbench";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SignatureMismatch>(m, "SignatureMismatch", base.ptr());
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<DegenerateSampleError>(m, "DegenerateSampleError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<double>& c) { return Multivector(n, std::span<const double>(c)); }),
           py::arg("n"), py::arg("coefficients"))
      .def_static("scalar", &Multivector::scalar)
      .def_static("generator", &Multivector::generator)
      .def_static("blade", &Multivector::blade, py::arg("n"), py::arg("mask"), py::arg("value") = 1.0)
      .def_property_readonly("n", &Multivector::generators)
      .def_property_readonly("coefficients", &coefficients)
      .def("__getitem__", [](const Multivector& a, BladeMask k) {
        if (k >= a.size()) throw py::index_error();
        return a[k];
      })
      .def("conjugate", [](const Multivector& a) { return conjugate(a); })
      .def("modulus", [](const Multivector& a) { return modulus(a); })
      .def("exp", [](const Multivector& a) { return clifford_exp(a); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Multivector& a) { return "Multivector(" + std::to_string(a.generators()) + ")"; });

  m.def("blade_product", [](BladeMask a, BladeMask b) {
    const SignedBlade r = blade_product(a, b);
    return py::make_tuple(r.sign, r.mask);
  });
  m.def("embed_point", [](const std::vector<double>& y, const std::string& conv) {
    return embed_point(to_point(y), convention(conv).dirac_sign);
  }, py::arg("y"), py::arg("convention") = "ledger");
  m.def("parse_mass", [](const std::string& text, int n) { return parse_mass_term(text, n).as_multivector(n); });

  m.def("symmetric_power", [](const std::vector<int>& beta, const std::vector<double>& y, const std::string& conv) {
    return symmetric_power(to_point(y), MultiIndex(beta), convention(conv));
  }, py::arg("beta"), py::arg("y"), py::arg("convention") = "ledger");
  m.def("intertwined_symmetric_power",
        [](const std::vector<int>& beta, const std::string& lambda, const std::vector<double>& y,
           const std::string& conv) {
          const int n = static_cast<int>(beta.size());
          const Convention c = convention(conv);
          const Field g = symmetric_power_polynomial(MultiIndex(beta), c).to_field();
          return from_monogenic(g, parse_mass_term(lambda, n), c)(to_point(y));
        },
        py::arg("beta"), py::arg("lambda_"), py::arg("y"), py::arg("convention") = "ledger");

  m.def("cauchy_kernel", [](const std::vector<double>& x, const std::vector<double>& y, const std::string& conv) {
    const Point px = to_point(x);
    return cauchy_kernel(px, to_point(y), KernelParams::standard(px.n()), convention(conv));
  }, py::arg("x"), py::arg("y"), py::arg("convention") = "ledger");
  m.def("bergman_kernel", [](const std::vector<double>& x, const std::vector<double>& y, const std::string& lambda,
                             const std::string& conv) {
    const Point px = to_point(x);
    return bergman_kernel(px, to_point(y), parse_mass_term(lambda, px.n()), px.n(), convention(conv));
  }, py::arg("x"), py::arg("y"), py::arg("lambda_") = "0", py::arg("convention") = "ledger");
  m.def("mean_value_constant", &mean_value_constant);
  m.def("cauchy_normalization", &cauchy_normalization);

  m.def("build_rule", [](const std::string& domain, int n, int refinement, const std::vector<double>& center,
                         double radius, const std::vector<double>& lo, const std::vector<double>& hi) {
    const Point c = center.empty() ? Point(n) : to_point(center);
    switch (domain_kind_from_name(domain)) {
      case DomainKind::sphere:
        return rule_dict(build_rule(SphereSurface{c, radius}, refinement));
      case DomainKind::ball:
        return rule_dict(build_rule(BallVolume{c, radius}, refinement));
      case DomainKind::box:
        return rule_dict(build_rule(BoxBoundary{to_point(lo), to_point(hi)}, refinement));
    }
    throw DomainError("unknown domain");
  }, py::arg("domain"), py::arg("n"), py::arg("refinement"), py::arg("center") = std::vector<double>{},
     py::arg("radius") = 1.0, py::arg("lo") = std::vector<double>{}, py::arg("hi") = std::vector<double>{});

  m.def("suite_names", &suite_names);
  m.def("default_tolerances", &SuiteConfig::default_tolerances);
  m.def("run_suite_json",
        [](const std::string& suite, int n, const std::string& lambda, const std::string& conv, double h,
           const std::vector<int>& refinements, std::uint64_t seed, const std::map<std::string, double>& overrides) {
          SuiteConfig cfg;
          cfg.n = n;
          cfg.lambda = lambda;
          cfg.convention = conv;
          cfg.h = h;
          cfg.refinements = refinements;
          cfg.seed = seed;
          for (const auto& [k, v] : overrides) cfg.override_tolerance(k, v);
          py::gil_scoped_release release;
          return to_json(run_suite(suite, cfg));
        },
        py::arg("suite"), py::arg("n") = 2, py::arg("lambda_") = "0.5", py::arg("convention") = "ledger",
        py::arg("h") = 1e-3, py::arg("refinements") = std::vector<int>{2, 3, 4, 5}, py::arg("seed") = 42,
        py::arg("tolerances") = std::map<std::string, double>{});
}
