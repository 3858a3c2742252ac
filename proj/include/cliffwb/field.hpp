#pragma once

#include <functional>
#include <string>

#include "cliffwb/algebra.hpp"
#include "cliffwb/mass_term.hpp"

namespace cliffwb {

enum class FieldClass { monogenic, m_solution, arbitrary };

// Evaluatable map Point -> multivector. The declared class is metadata only;
// the verification suites never assume it.
template <class Scalar>
struct BasicField {
  using value_type = BasicMultivector<Scalar>;

  std::function<value_type(const Point&)> evaluate;
  int n = 0;
  FieldClass declared = FieldClass::arbitrary;
  MassTerm declared_mass;
  std::string label;

  value_type operator()(const Point& p) const {
    if (p.n() != n) throw SignatureMismatch("field of dimension " + std::to_string(n) +
                                            " evaluated at point of dimension " + std::to_string(p.n()));
    return evaluate(p);
  }
};

using Field = BasicField<double>;
using ComplexField = BasicField<std::complex<double>>;

template <class Scalar>
BasicField<Scalar> constant_field(const BasicMultivector<Scalar>& value, std::string label = "constant") {
  return {[value](const Point&) { return value; }, value.generators(), FieldClass::monogenic, {},
          std::move(label)};
}

// Pointwise real part of a complex field. D and right multiplication by a
// real Clifford number act componentwise on real and imaginary parts, so the
// real part of a solution is a solution.
inline Field real_part(const ComplexField& f) {
  return {[g = f.evaluate](const Point& p) { return real_part(g(p)); }, f.n, f.declared,
          f.declared_mass, "Re " + f.label};
}

inline Field imag_part(const ComplexField& f) {
  return {[g = f.evaluate](const Point& p) { return imag_part(g(p)); }, f.n, f.declared,
          f.declared_mass, "Im " + f.label};
}

}  // namespace cliffwb
