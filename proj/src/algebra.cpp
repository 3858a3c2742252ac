#include "cliffwb/algebra.hpp"

#include <cstdio>
#include <sstream>

namespace cliffwb {

std::string to_string(const Signature& sig) {
  return "Cl(0," + std::to_string(sig.n) + ")" +
         (sig.mode == ScalarMode::complex ? "[complex]" : "");
}

SignedBlade blade_product(BladeMask a, BladeMask b, int n) {
  if (n < 0 || n > kMaxGenerators) throw DomainError("Cl(0,n) supports 0 <= n <= 6");
  const BladeMask limit = BladeMask{1} << n;
  if (a >= limit || b >= limit) throw DomainError("blade mask out of range");
  return blade_product(a, b);
}

Multivector real_part(const ComplexMultivector& a) {
  Multivector r(a.generators());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)].real();
  return r;
}

Multivector imag_part(const ComplexMultivector& a) {
  Multivector r(a.generators());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)].imag();
  return r;
}

Point::Point(double y0, std::initializer_list<double> spatial)
    : Point(static_cast<int>(spatial.size())) {
  x_[0] = y0;
  std::size_t k = 1;
  for (double v : spatial) x_[k++] = v;
}

Point::Point(double y0, std::span<const double> spatial) : Point(static_cast<int>(spatial.size())) {
  x_[0] = y0;
  for (std::size_t k = 0; k < spatial.size(); ++k) x_[k + 1] = spatial[k];
}

Point Point::from_coordinates(std::span<const double> coords) {
  if (coords.empty()) throw DomainError("point needs at least y0");
  return Point(coords[0], coords.subspan(1));
}

double Point::norm2() const noexcept {
  double s = 0.0;
  for (int k = 0; k <= n_; ++k) s += x_[k] * x_[k];
  return s;
}

Point& Point::operator+=(const Point& o) {
  if (o.n_ != n_) throw SignatureMismatch("point dimension mismatch");
  for (int k = 0; k <= n_; ++k) x_[k] += o.x_[k];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  if (o.n_ != n_) throw SignatureMismatch("point dimension mismatch");
  for (int k = 0; k <= n_; ++k) x_[k] -= o.x_[k];
  return *this;
}

Point& Point::operator*=(double s) noexcept {
  for (int k = 0; k <= n_; ++k) x_[k] *= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (int k = 0; k <= a.n_; ++k)
    if (a.x_[k] != b.x_[k]) return false;
  return true;
}

double dot(const Point& a, const Point& b) {
  if (a.n() != b.n()) throw SignatureMismatch("point dimension mismatch");
  double s = 0.0;
  for (int k = 0; k <= a.n(); ++k) s += a[k] * b[k];
  return s;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int k = 0; k <= p.n(); ++k) os << (k ? "," : "") << p[k];
  os << ')';
  return os.str();
}

Multivector embed_point(const Point& p, int spatial_sign) {
  Multivector r(p.n());
  r[0] = p.y0();
  for (int j = 1; j <= p.n(); ++j) r[BladeMask{1} << (j - 1)] = spatial_sign * p[j];
  return r;
}

Multivector inverse_paravector(const Multivector& y) {
  if (!y.is_paravector()) throw DomainError("inverse_paravector: argument has grade >= 2 parts");
  const double m2 = modulus(y) * modulus(y);
  if (m2 == 0.0) throw SingularityError("inverse_paravector: zero paravector");
  return conjugate(y) / m2;
}

std::string to_string(const Multivector& a) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double c = a[static_cast<BladeMask>(i)];
    if (c == 0.0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    os << std::abs(c);
    if (i != 0) {
      os << "*e";
      for (int j = 0; j < a.generators(); ++j)
        if (i & (std::size_t{1} << j)) os << (j + 1);
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace cliffwb
