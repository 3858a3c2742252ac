#pragma once

// Product quadrature on spheres, box boundaries and balls in R^{n+1}, and a
// flat-table text format for exporting and injecting rules.
//
// Refinement r uses m = 4r Gauss-Legendre nodes in each polar/radial/face
// direction and 2m uniform nodes in azimuth.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cliffwb/algebra.hpp"

namespace cliffwb {

struct SphereSurface {
  Point center;
  double radius = 1.0;
};

struct BoxBoundary {
  Point lo;
  Point hi;
};

struct BallVolume {
  Point center;
  double radius = 1.0;
};

using Domain = std::variant<SphereSurface, BoxBoundary, BallVolume>;

enum class DomainKind { sphere, box, ball };

std::string to_string(DomainKind k);
DomainKind domain_kind_from_name(const std::string& name);

struct QuadratureRule {
  DomainKind kind = DomainKind::sphere;
  int n = 0;
  // Sphere and ball: center and radius. Box: lo and hi.
  Point center;
  double radius = 0.0;
  Point lo;
  Point hi;

  std::vector<Point> nodes;
  std::vector<double> weights;
  // Outward unit normals in (y0, y1, ..., yn) components; surface rules only.
  std::vector<Point> normals;

  bool is_surface() const noexcept { return kind != DomainKind::ball; }
  std::size_t size() const noexcept { return nodes.size(); }
  double total_weight() const;
  // Typical distance between neighbouring nodes, (measure / N)^(1/d).
  double node_spacing() const;
  // Checks sizes, positive weights and unit normals.
  void validate() const;
};

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int m);

int nodes_per_axis(int refinement);

QuadratureRule build_rule(const Domain& domain, int refinement);

// Exact surface measure of the sphere S^n of radius R, and volume of the
// (n+1)-ball, through the dimension recurrence V_k = 2 pi / k * V_{k-2}.
double sphere_area(int n, double radius);
double ball_volume(int n, double radius);
double box_boundary_area(const Point& lo, const Point& hi);

// Flat-table format:
//
//   # cliffwb-quadrature 1
//   # domain <sphere|box|ball>
//   # n <n>
//   # center <y0 .. yn>      (sphere, ball)
//   # radius <R>             (sphere, ball)
//   # lo <y0 .. yn>          (box)
//   # hi <y0 .. yn>          (box)
//   # columns y0 .. yn weight [nu0 .. nun]
//   <one row per node, whitespace separated>
//
// Normal columns are present exactly for surface domains. Values are written
// with 17 significant digits so a round trip is exact.
void write_rule(std::ostream& os, const QuadratureRule& rule);
QuadratureRule read_rule(std::istream& is);

}  // namespace cliffwb
