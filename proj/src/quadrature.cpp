#include "cliffwb/quadrature.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace cliffwb {

using std::numbers::pi;

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::sphere:
      return "sphere";
    case DomainKind::box:
      return "box";
    case DomainKind::ball:
      return "ball";
  }
  return "sphere";
}

DomainKind domain_kind_from_name(const std::string& name) {
  if (name == "sphere") return DomainKind::sphere;
  if (name == "box") return DomainKind::box;
  if (name == "ball") return DomainKind::ball;
  throw DomainError("unknown quadrature domain '" + name + "'");
}

GaussRule gauss_legendre(int m) {
  if (m < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussRule g;
  g.nodes.resize(static_cast<std::size_t>(m));
  g.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(m - 1 - i);
    g.nodes[lo] = -x;
    g.nodes[hi] = x;
    g.weights[lo] = w;
    g.weights[hi] = w;
  }
  if (m % 2 == 1) g.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return g;
}

int nodes_per_axis(int refinement) {
  if (refinement < 1) throw DomainError("refinement must be >= 1");
  return 4 * refinement;
}

double sphere_area(int n, double radius) {
  // |S^n| = (n+1) |B^{n+1}|.
  return (n + 1) * ball_volume(n, radius) / radius;
}

double ball_volume(int n, double radius) {
  // Unit ball volumes V_k in R^k: V_0 = 1, V_1 = 2, V_k = 2 pi / k V_{k-2}.
  const int k = n + 1;
  double v = (k % 2 == 0) ? 1.0 : 2.0;
  for (int d = (k % 2 == 0) ? 2 : 3; d <= k; d += 2) v *= 2.0 * pi / d;
  return v * std::pow(radius, k);
}

double box_boundary_area(const Point& lo, const Point& hi) {
  const int d = lo.dimension();
  double area = 0.0;
  for (int k = 0; k < d; ++k) {
    double face = 1.0;
    for (int i = 0; i < d; ++i)
      if (i != k) face *= hi[i] - lo[i];
    area += 2.0 * face;
  }
  return area;
}

namespace {

// Unit-sphere rule on S^n in R^{n+1}: directions and area weights.
struct SphereNodes {
  std::vector<Point> dirs;
  std::vector<double> weights;
};

SphereNodes unit_sphere(int n, int m) {
  SphereNodes s;
  if (n == 1) {
    const int k = 2 * m;
    for (int i = 0; i < k; ++i) {
      const double phi = 2.0 * pi * i / k;
      s.dirs.push_back(Point(std::cos(phi), {std::sin(phi)}));
      s.weights.push_back(2.0 * pi / k);
    }
    return s;
  }
  if (n == 2) {
    const GaussRule g = gauss_legendre(m);
    const int k = 2 * m;
    for (std::size_t a = 0; a < g.nodes.size(); ++a) {
      const double c = g.nodes[a];
      const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int i = 0; i < k; ++i) {
        const double phi = 2.0 * pi * (i + 0.5) / k;
        s.dirs.push_back(Point(c, {sn * std::cos(phi), sn * std::sin(phi)}));
        s.weights.push_back(g.weights[a] * 2.0 * pi / k);
      }
    }
    return s;
  }
  if (n == 3) {
    // y0 = cos(chi), rest = sin(chi) * (S^2 direction). The measure
    // sin^2(chi) dchi becomes sqrt(1 - t^2) dt, integrated exactly for
    // polynomials by Gauss-Chebyshev of the second kind.
    const SphereNodes inner = unit_sphere(2, m);
    for (int a = 1; a <= m; ++a) {
      const double theta = pi * a / (m + 1);
      const double t = std::cos(theta);
      const double st = std::sin(theta);
      const double w = pi / (m + 1) * st * st;
      for (std::size_t i = 0; i < inner.dirs.size(); ++i) {
        const Point& d = inner.dirs[i];
        s.dirs.push_back(Point(t, {st * d[0], st * d[1], st * d[2]}));
        s.weights.push_back(w * inner.weights[i]);
      }
    }
    return s;
  }
  throw DomainError("sphere rules are implemented for n in {1,2,3}");
}

}  // namespace

QuadratureRule build_rule(const Domain& domain, int refinement) {
  const int m = nodes_per_axis(refinement);
  QuadratureRule rule;
  if (const auto* sph = std::get_if<SphereSurface>(&domain)) {
    if (!(sph->radius > 0.0)) throw DomainError("sphere radius must be positive");
    rule.kind = DomainKind::sphere;
    rule.n = sph->center.n();
    rule.center = sph->center;
    rule.radius = sph->radius;
    const SphereNodes s = unit_sphere(rule.n, m);
    const double scale = std::pow(sph->radius, rule.n);
    for (std::size_t i = 0; i < s.dirs.size(); ++i) {
      rule.nodes.push_back(sph->center + s.dirs[i] * sph->radius);
      rule.weights.push_back(s.weights[i] * scale);
      rule.normals.push_back(s.dirs[i]);
    }
  } else if (const auto* box = std::get_if<BoxBoundary>(&domain)) {
    const int n = box->lo.n();
    if (box->hi.n() != n) throw SignatureMismatch("box corners differ in dimension");
    if (n < 1 || n > 3) throw DomainError("box rules are implemented for n in {1,2,3}");
    for (int k = 0; k <= n; ++k)
      if (!(box->hi[k] > box->lo[k])) throw DomainError("box needs lo < hi in every coordinate");
    rule.kind = DomainKind::box;
    rule.n = n;
    rule.lo = box->lo;
    rule.hi = box->hi;
    const GaussRule g = gauss_legendre(m);
    const int d = n + 1;
    for (int axis = 0; axis < d; ++axis) {
      for (int side = -1; side <= 1; side += 2) {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        const auto total = static_cast<std::size_t>(std::pow(m, n));
        for (std::size_t t = 0; t < total; ++t) {
          std::size_t rem = t;
          for (int q = 0; q < n; ++q) {
            idx[static_cast<std::size_t>(q)] = static_cast<int>(rem % static_cast<std::size_t>(m));
            rem /= static_cast<std::size_t>(m);
          }
          Point node(n);
          Point normal(n);
          double w = 1.0;
          int q = 0;
          for (int c = 0; c < d; ++c) {
            if (c == axis) {
              node[c] = side < 0 ? box->lo[c] : box->hi[c];
              normal[c] = side;
              continue;
            }
            const auto gi = static_cast<std::size_t>(idx[static_cast<std::size_t>(q++)]);
            const double half = 0.5 * (box->hi[c] - box->lo[c]);
            node[c] = box->lo[c] + half * (g.nodes[gi] + 1.0);
            w *= half * g.weights[gi];
          }
          rule.nodes.push_back(node);
          rule.weights.push_back(w);
          rule.normals.push_back(normal);
        }
      }
    }
  } else {
    const auto& ball = std::get<BallVolume>(domain);
    if (!(ball.radius > 0.0)) throw DomainError("ball radius must be positive");
    const int n = ball.center.n();
    if (n < 1 || n > 2) throw DomainError("ball rules are implemented for n in {1,2}");
    rule.kind = DomainKind::ball;
    rule.n = n;
    rule.center = ball.center;
    rule.radius = ball.radius;
    const GaussRule g = gauss_legendre(m);
    const SphereNodes s = unit_sphere(n, m);
    for (std::size_t a = 0; a < g.nodes.size(); ++a) {
      const double r = 0.5 * ball.radius * (g.nodes[a] + 1.0);
      const double wr = 0.5 * ball.radius * g.weights[a] * std::pow(r, n);
      for (std::size_t i = 0; i < s.dirs.size(); ++i) {
        rule.nodes.push_back(ball.center + s.dirs[i] * r);
        rule.weights.push_back(wr * s.weights[i]);
      }
    }
  }
  return rule;
}

double QuadratureRule::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double QuadratureRule::node_spacing() const {
  if (nodes.empty()) return 0.0;
  const int dims = kind == DomainKind::ball ? n + 1 : n;
  return std::pow(total_weight() / static_cast<double>(nodes.size()), 1.0 / dims);
}

void QuadratureRule::validate() const {
  if (weights.size() != nodes.size()) throw DomainError("quadrature rule: weight count mismatch");
  if (is_surface() && normals.size() != nodes.size())
    throw DomainError("quadrature rule: surface rule needs one normal per node");
  if (!is_surface() && !normals.empty()) throw DomainError("quadrature rule: volume rule has normals");
  for (double w : weights)
    if (!(w > 0.0)) throw DomainError("quadrature rule: weights must be positive");
  for (const auto& p : nodes)
    if (p.n() != n) throw SignatureMismatch("quadrature rule: node dimension mismatch");
  for (const auto& nu : normals) {
    if (nu.n() != n) throw SignatureMismatch("quadrature rule: normal dimension mismatch");
    if (std::abs(nu.norm() - 1.0) > 1e-12) throw DomainError("quadrature rule: normals must be unit");
  }
}

namespace {

void write_point(std::ostream& os, const Point& p) {
  for (int k = 0; k <= p.n(); ++k) os << ' ' << p[k];
}

Point read_point(std::istringstream& ss, int n, const std::string& what) {
  Point p(n);
  for (int k = 0; k <= n; ++k)
    if (!(ss >> p[k])) throw DomainError("quadrature table: malformed " + what);
  return p;
}

}  // namespace

void write_rule(std::ostream& os, const QuadratureRule& rule) {
  rule.validate();
  const auto old = os.precision(17);
  os << "# cliffwb-quadrature 1\n";
  os << "# domain " << to_string(rule.kind) << '\n';
  os << "# n " << rule.n << '\n';
  if (rule.kind == DomainKind::box) {
    os << "# lo";
    write_point(os, rule.lo);
    os << "\n# hi";
    write_point(os, rule.hi);
    os << '\n';
  } else {
    os << "# center";
    write_point(os, rule.center);
    os << "\n# radius " << rule.radius << '\n';
  }
  os << "# columns";
  for (int k = 0; k <= rule.n; ++k) os << " y" << k;
  os << " weight";
  if (rule.is_surface())
    for (int k = 0; k <= rule.n; ++k) os << " nu" << k;
  os << '\n';
  for (std::size_t i = 0; i < rule.size(); ++i) {
    bool first = true;
    for (int k = 0; k <= rule.n; ++k) {
      os << (first ? "" : " ") << rule.nodes[i][k];
      first = false;
    }
    os << ' ' << rule.weights[i];
    if (rule.is_surface()) write_point(os, rule.normals[i]);
    os << '\n';
  }
  os.precision(old);
}

QuadratureRule read_rule(std::istream& is) {
  QuadratureRule rule;
  bool have_domain = false, have_n = false, have_magic = false;
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "cliffwb-quadrature") {
        int version = 0;
        ss >> version;
        if (version != 1) throw DomainError("quadrature table: unsupported version");
        have_magic = true;
      } else if (key == "domain") {
        std::string name;
        ss >> name;
        rule.kind = domain_kind_from_name(name);
        have_domain = true;
      } else if (key == "n") {
        if (!(ss >> rule.n) || rule.n < 0 || rule.n > kMaxGenerators)
          throw DomainError("quadrature table: bad n");
        have_n = true;
      } else {
        header.push_back(line.substr(1));
      }
      continue;
    }
    if (!have_magic || !have_domain || !have_n)
      throw DomainError("quadrature table: header must precede rows");
    std::istringstream ss(line);
    rule.nodes.push_back(read_point(ss, rule.n, "node"));
    double w = 0.0;
    if (!(ss >> w)) throw DomainError("quadrature table: missing weight");
    rule.weights.push_back(w);
    if (rule.is_surface()) rule.normals.push_back(read_point(ss, rule.n, "normal"));
    std::string extra;
    if (ss >> extra) throw DomainError("quadrature table: too many columns");
  }
  if (!have_magic || !have_domain || !have_n) throw DomainError("quadrature table: incomplete header");
  for (const auto& h : header) {
    std::istringstream ss(h);
    std::string key;
    ss >> key;
    if (key == "center") rule.center = read_point(ss, rule.n, "center");
    else if (key == "lo") rule.lo = read_point(ss, rule.n, "lo");
    else if (key == "hi") rule.hi = read_point(ss, rule.n, "hi");
    else if (key == "radius") {
      if (!(ss >> rule.radius)) throw DomainError("quadrature table: bad radius");
    }
  }
  if (rule.kind == DomainKind::box) {
    if (rule.lo.n() != rule.n || rule.hi.n() != rule.n) throw DomainError("quadrature table: box needs lo/hi");
  } else {
    if (rule.center.n() != rule.n || !(rule.radius > 0.0))
      throw DomainError("quadrature table: sphere/ball needs center/radius");
  }
  rule.validate();
  return rule;
}

}  // namespace cliffwb
