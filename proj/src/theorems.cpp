#include "cliffwb/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cliffwb {

using std::numbers::pi;

double cauchy_normalization(int n) {
  const double k = 0.5 * (n + 1);
  return std::tgamma(k) / (2.0 * std::pow(pi, k));
}

Multivector cauchy_kernel(const Point& x, const Point& y, const KernelParams& kp,
                          const Convention& conv) {
  if (x.n() != kp.n || y.n() != kp.n) throw SignatureMismatch("cauchy_kernel: dimension mismatch");
  const Point d = y - x;
  const double r = d.norm();
  if (r == 0.0) throw SingularityError("cauchy_kernel: coincident points");
  return conjugate(embed_point(d, conv.dirac_sign)) * (kp.normalization / std::pow(r, kp.n + 1));
}

Multivector coordinate_surface_element(int n, int axis, int outward_side, double area,
                                       const Convention& conv) {
  if (axis < 0 || axis > n) throw DomainError("coordinate_surface_element: axis out of range");
  if (outward_side != 1 && outward_side != -1) throw DomainError("outward side must be +1 or -1");
  // On the face y_axis = const every form with j != axis contains d y_axis
  // and vanishes. Stokes fixes the induced orientation of the remaining one:
  // integral over the boundary of g dy^[axis] = (-1)^axis integral of d_axis g.
  const int parity = (axis % 2 == 0) ? 1 : -1;
  const double form_value = parity * outward_side * area;
  Multivector unit = axis == 0 ? Multivector::identity(n)
                               : Multivector::generator(n, axis) * static_cast<double>(conv.dirac_sign);
  return unit * (parity * form_value);
}

namespace {

void require_surface(const QuadratureRule& rule, const char* what) {
  if (!rule.is_surface()) throw DomainError(std::string(what) + ": needs a surface rule");
}

void require_dim(const QuadratureRule& rule, int n, const char* what) {
  if (rule.n != n) throw SignatureMismatch(std::string(what) + ": rule dimension differs from field");
}

}  // namespace

double cauchy_theorem_residual(const Field& f, const MassTerm& m, const QuadratureRule& rule,
                               const Convention& conv) {
  require_surface(rule, "cauchy_theorem_residual");
  require_dim(rule, f.n, "cauchy_theorem_residual");
  const double s = conv.mass_sign;
  const Multivector sum = pairwise_sum(
      0, rule.size(),
      [&](std::size_t k) {
        const Point& y = rule.nodes[k];
        return embed_point(rule.normals[k], conv.dirac_sign) *
               exp_mass(m, s * y.y0(), f(y)) * rule.weights[k];
      },
      Multivector(f.n));
  return modulus(sum);
}

CauchyIntegralResult cauchy_integral(const Field& f, const MassTerm& m, const QuadratureRule& rule,
                                     const Point& x, const Convention& conv) {
  require_surface(rule, "cauchy_integral");
  require_dim(rule, f.n, "cauchy_integral");
  const KernelParams kp = KernelParams::standard(f.n);
  const double s = conv.mass_sign;
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& y : rule.nodes) nearest = std::min(nearest, (y - x).norm());
  if (nearest == 0.0) throw SingularityError("cauchy_integral: x coincides with a node");
  const Multivector sum = pairwise_sum(
      0, rule.size(),
      [&](std::size_t k) {
        const Point& y = rule.nodes[k];
        return cauchy_kernel(x, y, kp, conv) * embed_point(rule.normals[k], conv.dirac_sign) *
               exp_mass(m, s * y.y0(), f(y)) * rule.weights[k];
      },
      Multivector(f.n));
  CauchyIntegralResult out;
  out.value = exp_mass(m, -s * x.y0(), sum);
  out.clearance = nearest / rule.node_spacing();
  out.ill_conditioned = out.clearance < 1.0;
  return out;
}

double mean_value_constant(int n, double radius) {
  const double k = 0.5 * (n + 1);
  return (n + 1) * std::tgamma(k) / (2.0 * std::pow(radius, n + 1) * std::pow(pi, k));
}

Multivector mean_value(const Field& f, const MassTerm& m, const QuadratureRule& ball, const Point& x,
                       const Convention& conv) {
  if (ball.kind != DomainKind::ball) throw DomainError("mean_value: needs a ball volume rule");
  require_dim(ball, f.n, "mean_value");
  if ((ball.center - x).norm() > 1e-14 * (1.0 + x.norm()))
    throw DomainError("mean_value: rule is not centered at x");
  const double s = conv.mass_sign;
  const Multivector sum = pairwise_sum(
      0, ball.size(),
      [&](std::size_t k) {
        const Point& y = ball.nodes[k];
        return exp_mass(m, s * y.y0(), f(y)) * ball.weights[k];
      },
      Multivector(f.n));
  return exp_mass(m, -s * x.y0(), sum * mean_value_constant(f.n, ball.radius));
}

namespace {

Multivector bergman_massless(const Point& x, const Point& y, int n, const Convention& conv) {
  if (x.n() != n || y.n() != n) throw SignatureMismatch("bergman_kernel: dimension mismatch");
  const double x2 = x.norm2();
  const double y2 = y.norm2();
  if (x2 >= 1.0 || y2 >= 1.0) throw DomainError("bergman_kernel: points must lie in the open unit ball");
  const double den = 1.0 - 2.0 * dot(y, x) + y2 * x2;
  if (!(den > 0.0)) throw DomainError("bergman_kernel: nonpositive denominator");
  const Multivector X = embed_point(x, conv.dirac_sign);
  const Multivector Y = embed_point(y, conv.dirac_sign);
  const double p1 = std::pow(den, 0.5 * (n + 1));
  const double p3 = std::pow(den, 0.5 * (n + 3));
  Multivector bracket = Multivector::scalar(n, (n + 1) / p1);
  bracket -= conjugate(X) * Y * (2.0 / p1);
  bracket += conjugate(Y - X * y2) * (X - Y * x2) * ((n + 1) / p3);
  const double k = 0.5 * (n + 1);
  return bracket * (std::tgamma(k) * (n + 1) / (2.0 * std::pow(pi, k)));
}

}  // namespace

Multivector bergman_kernel(const Point& x, const Point& y, const MassTerm& lambda, int n,
                           const Convention& conv) {
  return exp_mass(lambda, -conv.mass_sign * (x.y0() - y.y0()), bergman_massless(x, y, n, conv));
}

double bergman_calibration(int n, int refinement, const Convention& conv) {
  const QuadratureRule ball = build_rule(BallVolume{Point(n), 1.0}, refinement);
  const Point origin(n);
  const Multivector total = pairwise_sum(
      0, ball.size(),
      [&](std::size_t k) { return bergman_massless(origin, ball.nodes[k], n, conv) * ball.weights[k]; },
      Multivector(n));
  return 1.0 / total.scalar_part();
}

Multivector bergman_reproduce(const Field& f, const MassTerm& lambda, const QuadratureRule& unit_ball,
                              const Point& x, double calibration, const Convention& conv) {
  if (unit_ball.kind != DomainKind::ball || unit_ball.radius != 1.0 || unit_ball.center.norm() != 0.0)
    throw DomainError("bergman_reproduce: needs the unit ball rule centered at the origin");
  require_dim(unit_ball, f.n, "bergman_reproduce");
  if (!(x.norm2() < 1.0)) throw DomainError("bergman_reproduce: x outside the open unit ball");
  const double s = conv.mass_sign;
  const Multivector sum = pairwise_sum(
      0, unit_ball.size(),
      [&](std::size_t k) {
        const Point& y = unit_ball.nodes[k];
        return bergman_massless(x, y, f.n, conv) * exp_mass(lambda, s * y.y0(), f(y)) *
               unit_ball.weights[k];
      },
      Multivector(f.n));
  return exp_mass(lambda, -s * x.y0(), sum * calibration);
}

}  // namespace cliffwb
