#pragma once

// Clifford-valued polynomials in the n+1 real variables y0..yn. This is the
// exact (symbolic) backend for the differential operators: derivatives are
// taken term by term, so operator identities can be checked coefficient by
// coefficient without discretization error.

#include <array>
#include <cstdint>
#include <map>
#include <span>

#include "cliffwb/algebra.hpp"
#include "cliffwb/field.hpp"

namespace cliffwb {

using Exponents = std::array<std::uint8_t, kMaxGenerators + 1>;

class Polynomial {
 public:
  using Terms = std::map<Exponents, Multivector>;

  Polynomial() = default;
  explicit Polynomial(int n);

  static Polynomial constant(const Multivector& c);
  // The coordinate y_k (k = 0..n) times the coefficient c.
  static Polynomial coordinate(int n, int k, const Multivector& c);
  // c * y^alpha.
  static Polynomial monomial(const Exponents& alpha, const Multivector& c);

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  int degree() const noexcept;
  // Every coefficient is exactly zero.
  bool is_zero() const noexcept { return terms_.empty(); }
  double max_abs_coefficient() const noexcept;

  Multivector evaluate(const Point& p) const;
  Polynomial derivative(int k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

  // Product with Clifford multiplication of coefficients; variables commute.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  // c * p and p * c: constant Clifford coefficient on the left or right.
  friend Polynomial operator*(const Multivector& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Multivector& c);

  Field to_field(std::string label = "polynomial") const;

 private:
  void add_term(const Exponents& e, const Multivector& c);

  int n_ = 0;
  Terms terms_;
};

// All exponent vectors for n+1 variables with total degree <= max_degree.
std::vector<Exponents> exponents_up_to(int n, int max_degree);

}  // namespace cliffwb
