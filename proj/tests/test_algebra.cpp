#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cliffwb/algebra.hpp"
#include "cliffwb/random.hpp"

using namespace cliffwb;

namespace {

Multivector random_mv(int n, Rng& rng) {
  Multivector r(n);
  for (std::size_t i = 0; i < r.size(); ++i) r[static_cast<BladeMask>(i)] = rng.normal();
  return r;
}

// Sign of the product of two blades by literally sorting the generator word.
SignedBlade sort_word(BladeMask a, BladeMask b) {
  std::vector<int> w;
  for (int j = 0; j < 6; ++j)
    if (a >> j & 1) w.push_back(j);
  for (int j = 0; j < 6; ++j)
    if (b >> j & 1) w.push_back(j);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
        changed = true;
      } else if (w[i] == w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  BladeMask m = 0;
  for (int g : w) m |= 1u << g;
  return {sign, m};
}

// Plain partial sums, no scaling, in long double.
std::vector<long double> naive_exp(const Multivector& a, int terms) {
  const int n = a.generators();
  std::vector<long double> sum(a.size(), 0.0L);
  std::vector<long double> term(a.size(), 0.0L);
  term[0] = 1.0L;
  sum[0] = 1.0L;
  for (int k = 1; k < terms; ++k) {
    std::vector<long double> next(a.size(), 0.0L);
    for (BladeMask i = 0; i < a.size(); ++i)
      for (BladeMask j = 0; j < a.size(); ++j) {
        const auto [s, m] = blade_product(i, j, n);
        next[m] += s * term[i] * static_cast<long double>(a[j]);
      }
    for (std::size_t i = 0; i < a.size(); ++i) {
      term[i] = next[i] / k;
      sum[i] += term[i];
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("blade products of generators") {
  CHECK(blade_product(0b01, 0b01, 2) == SignedBlade{-1, 0});
  CHECK(blade_product(0b01, 0b10, 2) == SignedBlade{+1, 0b11});
  CHECK(blade_product(0b10, 0b01, 2) == SignedBlade{-1, 0b11});
  for (BladeMask m = 0; m < 64; ++m) CHECK(blade_product(0, m, 6) == SignedBlade{1, m});
  CHECK_THROWS_AS(blade_product(4, 1, 2), DomainError);
}

TEST_CASE("blade products agree with word sorting for all masks up to n = 6") {
  for (BladeMask a = 0; a < 64; ++a)
    for (BladeMask b = 0; b < 64; ++b) REQUIRE(blade_product(a, b) == sort_word(a, b));
}

TEST_CASE("multiplication examples") {
  const int n = 2;
  const auto e0 = Multivector::identity(n);
  const auto e1 = Multivector::generator(n, 1);
  CHECK(e1 * e1 == -e0);
  Rng rng(7);
  const auto a = random_mv(n, rng);
  CHECK(e0 * a == a);
  CHECK((e0 + e1) * (e0 - e1) == e0 * 2.0);
  CHECK_THROWS_AS(Multivector::generator(2, 1) * Multivector::generator(3, 1), SignatureMismatch);
  CHECK_THROWS_AS(Multivector(7), DomainError);
  CHECK_THROWS_AS(Multivector::generator(2, 3), DomainError);
}

TEST_CASE("conjugation") {
  const int n = 2;
  CHECK(conjugate(Multivector::identity(n)) == Multivector::identity(n));
  const Multivector y(n, {1.0, 2.0, 3.0, 0.0});
  CHECK(conjugate(y) == Multivector(n, {1.0, -2.0, -3.0, 0.0}));
  const auto e12 = Multivector::blade(n, 0b11);
  CHECK(conjugate(e12) == -e12);
  CHECK(conjugation_sign(0) == 1);
  CHECK(conjugation_sign(0b1) == -1);
  CHECK(conjugation_sign(0b11) == -1);
  CHECK(conjugation_sign(0b111) == 1);
}

TEST_CASE("embedding and modulus") {
  const auto y = embed_point(Point(1.0, {2.0, 3.0}));
  CHECK(y == Multivector(2, {1.0, 2.0, 3.0, 0.0}));
  CHECK(modulus(y) == doctest::Approx(std::sqrt(14.0)).epsilon(1e-15));
  const Multivector u(1, {1.0, 1.0});
  CHECK(u * conjugate(u) == Multivector::scalar(1, 2.0));
  CHECK(embed_point(Point(1.0, {2.0, 3.0}), -1) == Multivector(2, {1.0, -2.0, -3.0, 0.0}));
}

TEST_CASE("paravector inverse") {
  CHECK(inverse_paravector(Multivector::identity(2)) == Multivector::identity(2));
  CHECK(inverse_paravector(Multivector::generator(2, 1) * 2.0) == Multivector::generator(2, 1) * -0.5);
  CHECK_THROWS_AS(inverse_paravector(Multivector(2)), SingularityError);
  CHECK_THROWS_AS(inverse_paravector(Multivector::blade(2, 0b11)), DomainError);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Multivector y(3);
    y[0] = rng.normal();
    for (int j = 0; j < 3; ++j) y[1u << j] = rng.normal();
    CHECK(modulus(y * inverse_paravector(y) - Multivector::identity(3)) < 1e-14);
  }
}

TEST_CASE("exponential examples") {
  CHECK(clifford_exp(Multivector(3)) == Multivector::identity(3));
  for (double t : {-2.0, 0.5, 3.0}) {
    const auto r = clifford_exp(Multivector::scalar(2, t));
    CHECK(r.is_scalar());
    CHECK(r.scalar_part() == doctest::Approx(std::exp(t)).epsilon(1e-14));
    const auto e1 = Multivector::generator(2, 1);
    const auto c = clifford_exp(e1 * t);
    CHECK(modulus(c - (Multivector::scalar(2, std::cos(t)) + e1 * std::sin(t))) < 1e-14);
  }
}

TEST_CASE("exponential matches unscaled partial sums") {
  Rng rng(5);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 5; ++t) {
      const auto a = random_mv(n, rng) * 0.6;
      const auto want = naive_exp(a, 80);
      const auto got = clifford_exp(a);
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(got[static_cast<BladeMask>(i)] - static_cast<double>(want[i])) < 1e-12);
    }
}

TEST_CASE("exponential reports non-convergence") {
  const auto a = Multivector::generator(2, 1) * 0.4;
  try {
    (void)clifford_exp(a, {1e-16, 2});
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_term_magnitude() > 0.0);
  }
}

TEST_CASE("random algebra properties") {
  for (int n = 1; n <= 6; ++n) {
    Rng rng(100 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 200; ++t) {
      const auto a = random_mv(n, rng);
      const auto b = random_mv(n, rng);
      const auto c = random_mv(n, rng);
      const double s = modulus(a) * modulus(b) * modulus(c);
      CHECK(modulus((a * b) * c - a * (b * c)) <= 1e-12 * s);
      CHECK(modulus(a * (b + c) - (a * b + a * c)) <= 1e-12 * s / modulus(c) * (modulus(b) + modulus(c)));
      CHECK(modulus(conjugate(a * b) - conjugate(b) * conjugate(a)) <= 1e-12 * modulus(a) * modulus(b));
      CHECK(modulus(a * b) <= product_norm_bound(n) * modulus(a) * modulus(b) * (1 + 1e-12));
    }
  }
}

TEST_CASE("complex mode and promotion") {
  const auto e1 = ComplexMultivector::generator(1, 1);
  const std::complex<double> i(0.0, 1.0);
  const auto z = clifford_exp(e1 * i);
  // (i e1)^2 = +1, so the series is cosh + sinh.
  CHECK(std::abs(z.scalar_part() - std::cosh(1.0)) < 1e-14);
  CHECK(std::abs(z[1] - i * std::sinh(1.0)) < 1e-14);
  const Multivector r(1, {1.0, 2.0});
  const auto p = promote<std::complex<double>>(r);
  CHECK(real_part(p) == r);
  CHECK(imag_part(p).is_zero());
}

TEST_CASE("points") {
  const Point p(1.0, {2.0, 3.0});
  CHECK(p.n() == 2);
  CHECK(p.dimension() == 3);
  CHECK(p.norm2() == 14.0);
  CHECK(p.shifted(1, 0.5)[1] == 2.5);
  const std::vector<double> c{1.0, 2.0, 3.0};
  CHECK(Point::from_coordinates(c) == p);
  CHECK_THROWS_AS(Point(1.0, {1, 2, 3, 4, 5, 6, 7}), DomainError);
  CHECK_THROWS_AS(p + Point(1), SignatureMismatch);
}
