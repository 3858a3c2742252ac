#pragma once

// The generalized Cauchy-Riemann operator D, its conjugate, the perturbed
// operator D + M and the Laplacian, in two backends: central finite
// differences over black-box fields, and exact term-wise differentiation
// of polynomials.

#include <span>
#include <vector>

#include "cliffwb/algebra.hpp"
#include "cliffwb/convention.hpp"
#include "cliffwb/field.hpp"
#include "cliffwb/mass_term.hpp"
#include "cliffwb/polynomial.hpp"

namespace cliffwb {

struct StencilSpec {
  double h = 1e-3;
  // Central-difference order, 2 or 4.
  int order = 2;
};

void validate(const StencilSpec& st);

// Which side the generators e_j multiply the partial derivatives from.
enum class Side { left, right };

template <class Scalar>
BasicMultivector<Scalar> partial(const BasicField<Scalar>& f, const Point& p, int k,
                                 const StencilSpec& st) {
  const double h = st.h;
  if (st.order == 4) {
    auto d = (f(p.shifted(k, -2 * h)) - f(p.shifted(k, 2 * h))) +
             (f(p.shifted(k, h)) - f(p.shifted(k, -h))) * Scalar(8.0);
    return d / Scalar(12.0 * h);
  }
  return (f(p.shifted(k, h)) - f(p.shifted(k, -h))) / Scalar(2.0 * h);
}

template <class Scalar>
BasicMultivector<Scalar> second_partial(const BasicField<Scalar>& f, const Point& p, int k,
                                        const StencilSpec& st) {
  const double h = st.h;
  const auto centre = f(p);
  if (st.order == 4) {
    auto d = (f(p.shifted(k, h)) + f(p.shifted(k, -h))) * Scalar(16.0) -
             (f(p.shifted(k, 2 * h)) + f(p.shifted(k, -2 * h))) - centre * Scalar(30.0);
    return d / Scalar(12.0 * h * h);
  }
  return (f(p.shifted(k, h)) + f(p.shifted(k, -h)) - centre * Scalar(2.0)) / Scalar(h * h);
}

namespace detail {

// d0 f + sign * sum_j e_j d_j f (or d_j f e_j on the right).
template <class Scalar>
BasicMultivector<Scalar> dirac(const BasicField<Scalar>& f, const Point& p, const StencilSpec& st,
                               int sign, Side side) {
  validate(st);
  auto r = partial(f, p, 0, st);
  for (int j = 1; j <= f.n; ++j) {
    const auto ej = BasicMultivector<Scalar>::generator(f.n, j);
    const auto dj = partial(f, p, j, st);
    const auto term = side == Side::left ? ej * dj : dj * ej;
    if (sign > 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

}  // namespace detail

template <class Scalar>
BasicMultivector<Scalar> apply_D(const BasicField<Scalar>& f, const Point& p, const StencilSpec& st,
                                 const Convention& conv = kLedgerConvention,
                                 Side side = Side::left) {
  return detail::dirac(f, p, st, conv.dirac_sign, side);
}

template <class Scalar>
BasicMultivector<Scalar> apply_D_conj(const BasicField<Scalar>& f, const Point& p,
                                      const StencilSpec& st,
                                      const Convention& conv = kLedgerConvention,
                                      Side side = Side::left) {
  return detail::dirac(f, p, st, -conv.dirac_sign, side);
}

// (D + mass_sign * M) f at p, M acting by right multiplication.
template <class Scalar>
BasicMultivector<Scalar> apply_perturbed(const BasicField<Scalar>& f, const Point& p,
                                         const StencilSpec& st, const MassTerm& m,
                                         const Convention& conv = kLedgerConvention) {
  auto r = apply_D(f, p, st, conv);
  if (m.is_zero()) return r;
  const auto mf = m.apply(f(p));
  if (conv.mass_sign > 0)
    r += mf;
  else
    r -= mf;
  return r;
}

template <class Scalar>
BasicMultivector<Scalar> laplacian(const BasicField<Scalar>& f, const Point& p,
                                   const StencilSpec& st) {
  validate(st);
  BasicMultivector<Scalar> r(f.n);
  for (int k = 0; k <= f.n; ++k) r += second_partial(f, p, k, st);
  return r;
}

// Laplacian over y1..yn only.
template <class Scalar>
BasicMultivector<Scalar> spatial_laplacian(const BasicField<Scalar>& f, const Point& p,
                                           const StencilSpec& st) {
  validate(st);
  BasicMultivector<Scalar> r(f.n);
  for (int k = 1; k <= f.n; ++k) r += second_partial(f, p, k, st);
  return r;
}

// A f = sum_j e_j d_j f.
template <class Scalar>
BasicMultivector<Scalar> spatial_dirac(const BasicField<Scalar>& f, const Point& p,
                                       const StencilSpec& st) {
  validate(st);
  BasicMultivector<Scalar> r(f.n);
  for (int j = 1; j <= f.n; ++j) r += BasicMultivector<Scalar>::generator(f.n, j) * partial(f, p, j, st);
  return r;
}

// Field y -> (D f)(y) evaluated by finite differences; composable.
template <class Scalar>
BasicField<Scalar> D_field(const BasicField<Scalar>& f, const StencilSpec& st,
                           const Convention& conv = kLedgerConvention) {
  return {[f, st, conv](const Point& p) { return apply_D(f, p, st, conv); }, f.n,
          FieldClass::arbitrary, {}, "D " + f.label};
}

template <class Scalar>
BasicField<Scalar> D_conj_field(const BasicField<Scalar>& f, const StencilSpec& st,
                                const Convention& conv = kLedgerConvention) {
  return {[f, st, conv](const Point& p) { return apply_D_conj(f, p, st, conv); }, f.n,
          FieldClass::arbitrary, {}, "Dbar " + f.label};
}

// Residual of (A + M)(A - M) f = -(Delta_spatial + M_{lambda^2}) f at p, with
// A = sum e_j d_j, by composed central differences.
template <class Scalar>
double helmholtz_residual_at(const BasicField<Scalar>& f, const Point& p, const Multivector& lambda,
                             const StencilSpec& st) {
  const auto lam = promote<Scalar>(lambda);
  const BasicField<Scalar> inner{
      [f, st, lam](const Point& q) { return spatial_dirac(f, q, st) - f(q) * lam; }, f.n,
      FieldClass::arbitrary, {}, "inner"};
  const auto lhs = spatial_dirac(inner, p, st) + inner(p) * lam;
  const auto rhs = -(spatial_laplacian(f, p, st) + f(p) * (lam * lam));
  return modulus(lhs - rhs);
}

// Max Helmholtz-identity residual over trial fields and sample points.
template <class Scalar>
double helmholtz_factorization_residual(const Multivector& lambda,
                                        std::span<const BasicField<Scalar>> trial,
                                        std::span<const Point> samples, const StencilSpec& st) {
  if (samples.empty()) throw DomainError("helmholtz residual: empty sample set");
  double worst = 0.0;
  for (const auto& f : trial)
    for (const auto& p : samples) worst = std::max(worst, helmholtz_residual_at(f, p, lambda, st));
  return worst;
}

// Max over samples of |(D + mass_sign M) f|.
template <class Scalar>
double residual_norm(const BasicField<Scalar>& f, const MassTerm& m, std::span<const Point> samples,
                     const StencilSpec& st, const Convention& conv = kLedgerConvention) {
  if (samples.empty()) throw DomainError("residual_norm: empty sample set");
  double worst = 0.0;
  for (const auto& p : samples) worst = std::max(worst, modulus(apply_perturbed(f, p, st, m, conv)));
  return worst;
}

// Exact operators on polynomials.
Polynomial symbolic_D(const Polynomial& f, const Convention& conv = kLedgerConvention,
                      Side side = Side::left);
Polynomial symbolic_D_conj(const Polynomial& f, const Convention& conv = kLedgerConvention,
                           Side side = Side::left);
Polynomial symbolic_laplacian(const Polynomial& f);

}  // namespace cliffwb
