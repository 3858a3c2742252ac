#pragma once

// Dense arithmetic in the Clifford algebra Cl(0,n), n <= 6.
//
// A multivector is stored as 2^n coefficients indexed by blade bitmask:
// bit (j-1) set means generator e_j is present, mask 0 is the identity e_0.
// Generators square to -1 and anticommute pairwise.

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "cliffwb/errors.hpp"

namespace cliffwb {

inline constexpr int kMaxGenerators = 6;
inline constexpr std::size_t kMaxBlades = std::size_t{1} << kMaxGenerators;

using BladeMask = std::uint32_t;

enum class ScalarMode { real, complex };

struct Signature {
  int n = 0;
  ScalarMode mode = ScalarMode::real;

  std::size_t blades() const noexcept { return std::size_t{1} << n; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

struct SignedBlade {
  int sign;
  BladeMask mask;
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// Product of two basis blades. The sign counts the transpositions needed to
// sort the concatenated generator list, plus one factor -1 per generator
// shared by both blades (e_j e_j = -1).
constexpr SignedBlade blade_product(BladeMask a, BladeMask b) noexcept {
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  swaps += std::popcount(a & b);
  return {(swaps & 1) ? -1 : 1, a ^ b};
}

namespace detail {

// Product signs for every pair of blades of Cl(0,6); bit j of row a is set
// when e_a e_b carries a minus sign.
inline constexpr auto kNegativeProducts = [] {
  std::array<std::uint64_t, kMaxBlades> t{};
  for (BladeMask a = 0; a < kMaxBlades; ++a)
    for (BladeMask b = 0; b < kMaxBlades; ++b)
      if (blade_product(a, b).sign < 0) t[a] |= std::uint64_t{1} << b;
  return t;
}();

}  // namespace detail

// Checked variant: both masks must address blades of Cl(0,n).
SignedBlade blade_product(BladeMask a, BladeMask b, int n);

constexpr int grade(BladeMask m) noexcept { return std::popcount(m); }

// Sign picked up by a grade-k blade under Clifford conjugation.
constexpr int conjugation_sign(BladeMask m) noexcept {
  const int k = grade(m);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class Scalar>
double abs2(const Scalar& s) {
  if constexpr (is_complex<Scalar>::value) {
    return std::norm(s);
  } else {
    const double d = static_cast<double>(s);
    return d * d;
  }
}

}  // namespace detail

template <class Scalar>
class BasicMultivector {
 public:
  using scalar_type = Scalar;
  static constexpr ScalarMode mode =
      detail::is_complex<Scalar>::value ? ScalarMode::complex : ScalarMode::real;

  BasicMultivector() = default;

  // Zero element of Cl(0,n).
  explicit BasicMultivector(int n) : n_(n) { check_generators(n); }

  BasicMultivector(int n, std::initializer_list<Scalar> coeffs) : n_(n) {
    check_generators(n);
    assign(std::span<const Scalar>(coeffs.begin(), coeffs.size()));
  }

  BasicMultivector(int n, std::span<const Scalar> coeffs) : n_(n) {
    check_generators(n);
    assign(coeffs);
  }

  static BasicMultivector scalar(int n, Scalar s) {
    BasicMultivector r(n);
    r.c_[0] = s;
    return r;
  }

  static BasicMultivector identity(int n) { return scalar(n, Scalar(1)); }

  static BasicMultivector blade(int n, BladeMask m, Scalar value = Scalar(1)) {
    BasicMultivector r(n);
    if (m >= r.size()) throw DomainError("blade mask out of range for " + to_string({n, mode}));
    r.c_[m] = value;
    return r;
  }

  // e_j for 1 <= j <= n.
  static BasicMultivector generator(int n, int j) {
    if (j < 1 || j > n) throw DomainError("generator index out of range");
    return blade(n, BladeMask{1} << (j - 1));
  }

  int generators() const noexcept { return n_; }
  Signature signature() const noexcept { return {n_, mode}; }
  std::size_t size() const noexcept { return std::size_t{1} << n_; }

  std::span<const Scalar> coefficients() const noexcept { return {c_.data(), size()}; }
  const Scalar& operator[](BladeMask m) const noexcept { return c_[m]; }
  Scalar& operator[](BladeMask m) noexcept { return c_[m]; }
  Scalar scalar_part() const noexcept { return c_[0]; }

  bool is_zero() const noexcept {
    for (std::size_t i = 0; i < size(); ++i)
      if (c_[i] != Scalar(0)) return false;
    return true;
  }

  bool is_paravector() const noexcept {
    for (std::size_t i = 0; i < size(); ++i)
      if (grade(static_cast<BladeMask>(i)) > 1 && c_[i] != Scalar(0)) return false;
    return true;
  }

  // Only the identity blade carries a nonzero coefficient.
  bool is_scalar() const noexcept {
    for (std::size_t i = 1; i < size(); ++i)
      if (c_[i] != Scalar(0)) return false;
    return true;
  }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    require_same(o);
    for (std::size_t i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& o) {
    require_same(o);
    for (std::size_t i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  BasicMultivector& operator*=(Scalar s) noexcept {
    for (std::size_t i = 0; i < size(); ++i) c_[i] *= s;
    return *this;
  }
  BasicMultivector& operator/=(Scalar s) noexcept {
    for (std::size_t i = 0; i < size(); ++i) c_[i] /= s;
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator-(BasicMultivector a) noexcept { return a *= Scalar(-1); }
  friend BasicMultivector operator*(BasicMultivector a, Scalar s) noexcept { return a *= s; }
  friend BasicMultivector operator*(Scalar s, BasicMultivector a) noexcept { return a *= s; }
  friend BasicMultivector operator/(BasicMultivector a, Scalar s) noexcept { return a /= s; }

  // Clifford product.
  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    a.require_same(b);
    BasicMultivector r(a.n_);
    const std::size_t dim = a.size();
    for (std::size_t i = 0; i < dim; ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      const std::uint64_t negative = detail::kNegativeProducts[i];
      for (std::size_t j = 0; j < dim; ++j) {
        const Scalar t = a.c_[i] * b.c_[j];
        if ((negative >> j) & 1u)
          r.c_[i ^ j] -= t;
        else
          r.c_[i ^ j] += t;
      }
    }
    return r;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  void require_same(const BasicMultivector& o) const {
    if (o.n_ != n_)
      throw SignatureMismatch("signature mismatch: " + to_string(signature()) + " vs " +
                              to_string(o.signature()));
  }

 private:
  static void check_generators(int n) {
    if (n < 0 || n > kMaxGenerators)
      throw DomainError("Cl(0,n) supports 0 <= n <= " + std::to_string(kMaxGenerators));
  }

  void assign(std::span<const Scalar> coeffs) {
    if (coeffs.size() != size())
      throw DomainError("expected " + std::to_string(size()) + " coefficients, got " +
                        std::to_string(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i];
  }

  int n_ = 0;
  std::array<Scalar, kMaxBlades> c_{};
};

using Multivector = BasicMultivector<double>;
using ComplexMultivector = BasicMultivector<std::complex<double>>;

template <class Scalar>
BasicMultivector<Scalar> conjugate(const BasicMultivector<Scalar>& a) {
  BasicMultivector<Scalar> r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (conjugation_sign(static_cast<BladeMask>(i)) < 0) r[static_cast<BladeMask>(i)] = -a[static_cast<BladeMask>(i)];
  return r;
}

// Euclidean norm of the coefficient sequence. Not submultiplicative under the
// Clifford product; see product_norm_bound.
template <class Scalar>
double modulus(const BasicMultivector<Scalar>& a) {
  double s = 0.0;
  for (const auto& c : a.coefficients()) s += detail::abs2(c);
  return std::sqrt(s);
}

// modulus(ab) <= product_norm_bound(n) * modulus(a) * modulus(b).
inline double product_norm_bound(int n) { return std::pow(2.0, 0.5 * n); }

template <class To, class From>
BasicMultivector<To> promote(const BasicMultivector<From>& a) {
  BasicMultivector<To> r(a.generators());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[static_cast<BladeMask>(i)] = To(a[static_cast<BladeMask>(i)]);
  return r;
}

Multivector real_part(const ComplexMultivector& a);
Multivector imag_part(const ComplexMultivector& a);

// Point (y0, y1, ..., yn) of R^{n+1}.
class Point {
 public:
  Point() = default;
  explicit Point(int n) : n_(n) {
    if (n < 0 || n > kMaxGenerators) throw DomainError("point dimension out of range");
  }
  Point(double y0, std::initializer_list<double> spatial);
  Point(double y0, std::span<const double> spatial);
  // All n+1 coordinates, y0 first.
  static Point from_coordinates(std::span<const double> coords);

  int n() const noexcept { return n_; }
  int dimension() const noexcept { return n_ + 1; }
  double y0() const noexcept { return x_[0]; }
  // Coordinate k in 0..n; k = 0 is y0.
  double operator[](int k) const noexcept { return x_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) noexcept { return x_[static_cast<std::size_t>(k)]; }
  std::span<const double> coordinates() const noexcept {
    return {x_.data(), static_cast<std::size_t>(n_ + 1)};
  }

  double norm2() const noexcept;
  double norm() const noexcept { return std::sqrt(norm2()); }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s) noexcept;
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) noexcept { return a *= s; }
  friend Point operator*(double s, Point a) noexcept { return a *= s; }
  friend bool operator==(const Point& a, const Point& b) noexcept;

  // Point displaced by `step` along coordinate k.
  Point shifted(int k, double step) const noexcept {
    Point r = *this;
    r.x_[static_cast<std::size_t>(k)] += step;
    return r;
  }

 private:
  int n_ = 0;
  std::array<double, kMaxGenerators + 1> x_{};
};

double dot(const Point& a, const Point& b);
std::string to_string(const Point& p);

// y0 e0 + sign * sum y_j e_j.
Multivector embed_point(const Point& p, int spatial_sign = 1);

// conjugate(y) / modulus(y)^2 for a nonzero paravector.
Multivector inverse_paravector(const Multivector& y);

struct ExpOptions {
  double tolerance = 1e-16;
  int max_terms = 200;
};

// Power series of the Clifford exponential. The scalar part is split off as
// a factor exp(a0); the rest is scaled by 2^-s until its product-norm bound
// is below 1/2, partial sums run until the added term falls below
// tolerance * (1 + |sum|), and the result is squared s times.
template <class Scalar>
BasicMultivector<Scalar> clifford_exp(const BasicMultivector<Scalar>& a, ExpOptions opt = {}) {
  const int n = a.generators();
  // The scalar part commutes with everything and is exponentiated directly.
  BasicMultivector<Scalar> rest = a;
  const Scalar a0 = rest[0];
  rest[0] = Scalar(0);
  int squarings = 0;
  double scaled = product_norm_bound(n) * modulus(rest);
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const BasicMultivector<Scalar> b = rest * Scalar(std::ldexp(1.0, -squarings));

  auto sum = BasicMultivector<Scalar>::identity(n);
  auto term = sum;
  bool converged = b.is_zero();
  double last = 0.0;
  for (int k = 1; k <= opt.max_terms && !converged; ++k) {
    term = term * b;
    term /= Scalar(static_cast<double>(k));
    sum += term;
    last = modulus(term);
    converged = last <= opt.tolerance * (1.0 + modulus(sum));
  }
  if (!converged)
    throw ConvergenceError("clifford_exp: series did not converge within " +
                               std::to_string(opt.max_terms) + " terms",
                           last);
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum * std::exp(a0);
}

std::string to_string(const Multivector& a);

}  // namespace cliffwb
