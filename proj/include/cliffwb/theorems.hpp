#pragma once

// Cauchy kernel, oriented surface element and the integral theorems for
// M-solutions: each is the classical monogenic statement applied to the
// intertwined field exp(s y0 M) f, with exp(-s x0 M) on the outside.

#include <cstddef>
#include <span>

#include "cliffwb/algebra.hpp"
#include "cliffwb/convention.hpp"
#include "cliffwb/field.hpp"
#include "cliffwb/mass_term.hpp"
#include "cliffwb/quadrature.hpp"

namespace cliffwb {

// Sum of term(i) for i in [begin, end) by recursive halving, in a fixed order.
template <class T, class Term>
T pairwise_sum(std::size_t begin, std::size_t end, const Term& term, const T& zero) {
  if (end - begin <= 8) {
    T acc = zero;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  T left = pairwise_sum(begin, mid, term, zero);
  left += pairwise_sum(mid, end, term, zero);
  return left;
}

// Gamma((n+1)/2) / (2 pi^((n+1)/2)), the reciprocal area of the unit sphere S^n.
double cauchy_normalization(int n);

struct KernelParams {
  int n = 2;
  double normalization = 0.0;

  static KernelParams standard(int n) { return {n, cauchy_normalization(n)}; }
};

// normalization * conj(y - x) / |y - x|^(n+1), points embedded with the
// convention's spatial sign.
Multivector cauchy_kernel(const Point& x, const Point& y, const KernelParams& kp,
                          const Convention& conv = kLedgerConvention);

// Oriented surface element on an axis-aligned face from its coordinate
// form sum_j (-1)^j e_j dy_0 ^ ... [dy_j] ... ^ dy_n: the face orthogonal
// to `axis`, with outward side +1/-1 and area element `area`.
Multivector coordinate_surface_element(int n, int axis, int outward_side, double area,
                                       const Convention& conv = kLedgerConvention);

// |sum_k w_k nu_k exp(s y0_k M) f(y_k)|.
double cauchy_theorem_residual(const Field& f, const MassTerm& m, const QuadratureRule& rule,
                               const Convention& conv = kLedgerConvention);

struct CauchyIntegralResult {
  Multivector value;
  // Distance from x to the nearest node, in units of the rule's node spacing.
  double clearance = 0.0;
  bool ill_conditioned = false;
};

CauchyIntegralResult cauchy_integral(const Field& f, const MassTerm& m, const QuadratureRule& rule,
                                     const Point& x, const Convention& conv = kLedgerConvention);

// The constant (n+1) Gamma((n+1)/2) / (2 R^(n+1) pi^((n+1)/2)).
double mean_value_constant(int n, double radius);

Multivector mean_value(const Field& f, const MassTerm& m, const QuadratureRule& ball,
                       const Point& x, const Convention& conv = kLedgerConvention);

// Explicit unit-ball kernel: the three-term bracket times
// Gamma((n+1)/2)(n+1)/(2 pi^((n+1)/2)), then multiplied on the right by
// exp(-s (x0 - y0) lambda).
Multivector bergman_kernel(const Point& x, const Point& y, const MassTerm& lambda, int n,
                           const Convention& conv = kLedgerConvention);

// 1 / integral of the lambda = 0 kernel at x = 0 over the unit ball.
double bergman_calibration(int n, int refinement = 8, const Convention& conv = kLedgerConvention);

// calibration * exp(-s x0 lambda) sum_k w_k B'_0(x, y_k) exp(s y0_k lambda) f(y_k).
Multivector bergman_reproduce(const Field& f, const MassTerm& lambda, const QuadratureRule& unit_ball,
                              const Point& x, double calibration = 1.0,
                              const Convention& conv = kLedgerConvention);

}  // namespace cliffwb
