#pragma once

#include <string>
#include <variant>

#include "cliffwb/algebra.hpp"

namespace cliffwb {

// The bounded operator M of the perturbed equation: zero, or right
// multiplication f -> f * lambda by a Clifford number.
class MassTerm {
 public:
  enum class Kind { zero, right_scalar, right_clifford };

  MassTerm() = default;

  static MassTerm zero() { return {}; }
  // right_scalar(0) normalizes to zero().
  static MassTerm right_scalar(double lambda);
  // A purely scalar lambda normalizes to right_scalar.
  static MassTerm right_clifford(const Multivector& lambda);

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  bool is_zero() const noexcept { return kind() == Kind::zero; }
  double scalar_value() const;
  const Multivector& clifford_value() const;

  // lambda as an element of Cl(0,n).
  Multivector as_multivector(int n) const;

  // M v = v * lambda.
  template <class Scalar>
  BasicMultivector<Scalar> apply(const BasicMultivector<Scalar>& v) const {
    switch (kind()) {
      case Kind::zero:
        return BasicMultivector<Scalar>(v.generators());
      case Kind::right_scalar:
        return v * Scalar(std::get<double>(value_));
      case Kind::right_clifford:
        return v * promote<Scalar>(std::get<Multivector>(value_));
    }
    return v;
  }

  // Square of the operator, M_{lambda^2}.
  MassTerm squared() const;

  std::string describe() const;

  friend bool operator==(const MassTerm& a, const MassTerm& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::monostate, double, Multivector> value_;
};

// Parses "0", "0.5", or comma-separated Clifford coefficients "c0,c1,...,c_{2^n-1}".
MassTerm parse_mass_term(const std::string& text, int n);

// exp(t M) v. Right multiplication by exp(t lambda) for Clifford lambda.
template <class Scalar>
BasicMultivector<Scalar> exp_mass(const MassTerm& m, double t, const BasicMultivector<Scalar>& v) {
  switch (m.kind()) {
    case MassTerm::Kind::zero:
      return v;
    case MassTerm::Kind::right_scalar:
      return v * Scalar(std::exp(t * m.scalar_value()));
    case MassTerm::Kind::right_clifford: {
      const Multivector& lambda = m.clifford_value();
      lambda.require_same(Multivector(v.generators()));
      return v * promote<Scalar>(clifford_exp(lambda * t));
    }
  }
  return v;
}

}  // namespace cliffwb
