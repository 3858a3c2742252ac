#include "cliffwb/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace cliffwb {

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) throw DomainError("polynomial dimension out of range");
}

Polynomial Polynomial::constant(const Multivector& c) { return monomial(Exponents{}, c); }

Polynomial Polynomial::coordinate(int n, int k, const Multivector& c) {
  if (k < 0 || k > n) throw DomainError("coordinate index out of range");
  Exponents e{};
  e[static_cast<std::size_t>(k)] = 1;
  Polynomial p(n);
  c.require_same(Multivector(n));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& alpha, const Multivector& c) {
  Polynomial p(c.generators());
  p.add_term(alpha, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Multivector& c) {
  if (c.generators() != n_) throw SignatureMismatch("polynomial coefficient signature mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k = 0; k <= n_; ++k) s += e[static_cast<std::size_t>(k)];
    d = std::max(d, s);
  }
  return d;
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [e, c] : terms_)
    for (double v : c.coefficients()) m = std::max(m, std::abs(v));
  return m;
}

Multivector Polynomial::evaluate(const Point& p) const {
  if (p.n() != n_) throw SignatureMismatch("polynomial evaluated at point of wrong dimension");
  Multivector r(n_);
  for (const auto& [e, c] : terms_) {
    double w = 1.0;
    for (int k = 0; k <= n_; ++k)
      for (int r2 = 0; r2 < e[static_cast<std::size_t>(k)]; ++r2) w *= p[k];
    r += c * w;
  }
  return r;
}

Polynomial Polynomial::derivative(int k) const {
  if (k < 0 || k > n_) throw DomainError("derivative index out of range");
  Polynomial d(n_);
  const auto idx = static_cast<std::size_t>(k);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    --f[idx];
    d.add_term(f, c * static_cast<double>(e[idx]));
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw SignatureMismatch("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw SignatureMismatch("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw SignatureMismatch("polynomial dimension mismatch");
  Polynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial operator*(const Multivector& c, const Polynomial& p) {
  Polynomial r(p.n_);
  for (const auto& [e, v] : p.terms_) r.add_term(e, c * v);
  return r;
}

Polynomial operator*(const Polynomial& p, const Multivector& c) {
  Polynomial r(p.n_);
  for (const auto& [e, v] : p.terms_) r.add_term(e, v * c);
  return r;
}

Field Polynomial::to_field(std::string label) const {
  return {[poly = *this](const Point& p) { return poly.evaluate(p); }, n_, FieldClass::arbitrary, {},
          std::move(label)};
}

std::vector<Exponents> exponents_up_to(int n, int max_degree) {
  std::vector<Exponents> out;
  Exponents e{};
  // Odometer over n+1 digits, keeping those with total degree <= max_degree.
  auto rec = [&](auto&& self, int k, int remaining) -> void {
    if (k > n) {
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(d);
      self(self, k + 1, remaining - d);
    }
    e[static_cast<std::size_t>(k)] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace cliffwb
