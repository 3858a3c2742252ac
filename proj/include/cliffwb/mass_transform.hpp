#pragma once

// Exponential intertwining operators between solution spaces of D + M for
// different mass terms M acting by right multiplication.
//
// If (D + s M1) f = 0 (s the convention's mass sign) then
//   g(y) = exp(-s y0 M2) exp(s y0 M1) f(y)
// solves (D + s M2) g = 0. With M1 = M and M2 = 0 this is to_monogenic.

#include "cliffwb/convention.hpp"
#include "cliffwb/field.hpp"
#include "cliffwb/mass_term.hpp"

namespace cliffwb {

struct TransformSpec {
  MassTerm from_mass;
  MassTerm to_mass;
};

// Exponent multiplier of y0 that maps M-solutions onto ker D.
inline double monogenic_exponent(const Convention& conv, double y0) { return conv.mass_sign * y0; }

template <class Scalar>
BasicField<Scalar> intertwine(const BasicField<Scalar>& f, const TransformSpec& spec,
                              const Convention& conv = kLedgerConvention) {
  for (const MassTerm* m : {&spec.from_mass, &spec.to_mass})
    if (m->kind() == MassTerm::Kind::right_clifford && m->clifford_value().generators() != f.n)
      throw SignatureMismatch("intertwine: mass term signature differs from field signature");
  const auto s = static_cast<double>(conv.mass_sign);
  BasicField<Scalar> g;
  g.n = f.n;
  g.declared = spec.to_mass.is_zero() ? FieldClass::monogenic : FieldClass::m_solution;
  g.declared_mass = spec.to_mass;
  g.label = f.label;
  g.evaluate = [f, spec, s](const Point& p) {
    const double y0 = p.y0();
    return exp_mass(spec.to_mass, -s * y0, exp_mass(spec.from_mass, s * y0, f(p)));
  };
  return g;
}

template <class Scalar>
BasicField<Scalar> to_monogenic(const BasicField<Scalar>& f, const MassTerm& m,
                                const Convention& conv = kLedgerConvention) {
  return intertwine(f, {m, MassTerm::zero()}, conv);
}

template <class Scalar>
BasicField<Scalar> from_monogenic(const BasicField<Scalar>& g, const MassTerm& m,
                                  const Convention& conv = kLedgerConvention) {
  return intertwine(g, {MassTerm::zero(), m}, conv);
}

}  // namespace cliffwb
