#include <doctest.h>

#include <cmath>
#include <vector>

#include "cliffwb/basis.hpp"
#include "cliffwb/mass_transform.hpp"
#include "cliffwb/operators.hpp"
#include "cliffwb/random.hpp"

using namespace cliffwb;

namespace {

const Convention kBoth[] = {kLedgerConvention, kPrintedConvention};

Multivector random_mv(int n, Rng& rng) {
  Multivector r(n);
  for (std::size_t i = 0; i < r.size(); ++i) r[static_cast<BladeMask>(i)] = rng.normal();
  return r;
}

// V_beta from the multinomial expansion: (t1 z1 + t2 z2)^k with integer t,
// solved for the coefficients by evaluating at k+1 values of t1/t2.
Multivector two_direction_oracle(const Point& p, int b1, int b2, const Convention& conv) {
  const int k = b1 + b2;
  const int n = p.n();
  const Multivector z1 = zeta(1, p, conv);
  const Multivector z2 = zeta(2, p, conv);
  // Coefficient of t^b1 in (t z1 + z2)^k by finite differences of the
  // polynomial in t at t = 0..k (Lagrange on integer nodes).
  std::vector<Multivector> vals;
  for (int t = 0; t <= k; ++t) {
    Multivector s = z1 * static_cast<double>(t) + z2;
    Multivector acc = Multivector::identity(n);
    for (int i = 0; i < k; ++i) acc = acc * s;
    vals.push_back(acc);
  }
  // Newton forward differences give the monomial coefficients.
  std::vector<std::vector<double>> vand(static_cast<std::size_t>(k + 1), std::vector<double>(static_cast<std::size_t>(k + 1)));
  for (int t = 0; t <= k; ++t)
    for (int e = 0; e <= k; ++e) vand[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = std::pow(t, e);
  // Solve vand * c = vals by Gaussian elimination, coefficient blade by blade.
  std::vector<Multivector> rhs = vals;
  for (int col = 0; col <= k; ++col) {
    const auto c = static_cast<std::size_t>(col);
    for (std::size_t r = c + 1; r < rhs.size(); ++r) {
      const double f = vand[r][c] / vand[c][c];
      for (std::size_t e = c; e < rhs.size(); ++e) vand[r][e] -= f * vand[c][e];
      rhs[r] -= rhs[c] * f;
    }
  }
  std::vector<Multivector> coef(rhs.size(), Multivector(n));
  for (int row = k; row >= 0; --row) {
    const auto r = static_cast<std::size_t>(row);
    Multivector acc = rhs[r];
    for (std::size_t e = r + 1; e < rhs.size(); ++e) acc -= coef[e] * vand[r][e];
    coef[r] = acc / vand[r][r];
  }
  double binom = 1.0;
  for (int i = 1; i <= b1; ++i) binom = binom * (k - b1 + i) / i;
  return coef[static_cast<std::size_t>(b1)] / binom;
}

}  // namespace

TEST_CASE("multi-indices") {
  const MultiIndex b({2, 1});
  CHECK(b.n() == 2);
  CHECK(b.order() == 3);
  CHECK(b[1] == 2);
  CHECK(MultiIndex::unit(3, 2).entries() == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(MultiIndex({1, -1}), DomainError);
  CHECK(multi_indices_up_to(2, 2).size() == 6);
  CHECK(multi_indices_up_to(3, 3).size() == 20);
}

TEST_CASE("zeta values") {
  for (const auto& conv : kBoth) {
    CHECK(zeta(1, Point(2), conv).is_zero());
    const Point p(1.0, {2.0, 3.0});
    CHECK(zeta(1, p, conv) == Multivector::generator(2, 1) + Multivector::scalar(2, 2.0 * conv.monomial_sign));
    CHECK_THROWS_AS(zeta(3, p, conv), DomainError);
    for (int n = 1; n <= 4; ++n)
      for (int j = 1; j <= n; ++j) CHECK(symbolic_D(zeta_polynomial(j, n, conv), conv).is_zero());
  }
  CHECK(kLedgerConvention.monomial_sign == -1);
}

TEST_CASE("symmetric products") {
  Rng rng(3);
  const auto a = random_mv(3, rng);
  const std::vector<Multivector> one{a};
  CHECK(symmetric_product<Multivector>(one) == a);
  const std::vector<Multivector> e12{Multivector::generator(2, 1), Multivector::generator(2, 2)};
  CHECK(symmetric_product<Multivector>(e12).is_zero());
  const std::vector<Multivector> aa{a, a};
  CHECK(modulus(symmetric_product<Multivector>(aa) - a * a) < 1e-14);
  const std::vector<Multivector> nine(9, a);
  CHECK_THROWS_AS(symmetric_product<Multivector>(nine), DomainError);
  CHECK_THROWS_AS(symmetric_product<Multivector>(std::span<const Multivector>{}), DomainError);
}

TEST_CASE("symmetric powers") {
  const Point p(0.3, {-0.2, 0.5});
  for (const auto& conv : kBoth) {
    CHECK(symmetric_power(p, MultiIndex::zero(2), conv) == Multivector::identity(2));
    const auto z1 = zeta(1, p, conv);
    CHECK(modulus(symmetric_power(p, MultiIndex({2, 0}), conv) - z1 * z1) < 1e-15);
    for (int b1 = 0; b1 <= 3; ++b1)
      for (int b2 = 0; b1 + b2 <= 3; ++b2) {
        const auto got = symmetric_power(p, MultiIndex({b1, b2}), conv);
        CHECK(modulus(got - two_direction_oracle(p, b1, b2, conv)) < 1e-12);
      }
    CHECK_THROWS_AS(symmetric_power(p, MultiIndex({9, 0}), conv), DomainError);
    CHECK_THROWS_AS(symmetric_power(p, MultiIndex({1}), conv), SignatureMismatch);
    for (const auto& beta : multi_indices_up_to(3, 3))
      CHECK(symbolic_D(symmetric_power_polynomial(beta, conv), conv).max_abs_coefficient() < 1e-14);
  }
}

TEST_CASE("symmetric power polynomial matches pointwise evaluation") {
  Rng rng(9);
  for (const auto& beta : multi_indices_up_to(3, 3)) {
    const Polynomial v = symmetric_power_polynomial(beta);
    for (int t = 0; t < 3; ++t) {
      const Point p(rng.normal(), {rng.normal(), rng.normal(), rng.normal()});
      CHECK(modulus(v.evaluate(p) - symmetric_power(p, beta)) < 1e-12);
    }
  }
}

TEST_CASE("taylor series") {
  TaylorSeries s;
  s.center = Point(2);
  s.max_order = 1;
  s.terms[MultiIndex::zero(2)] = Multivector::identity(2);
  const Point p(0.4, {0.1, -0.3});
  CHECK(modulus(taylor_eval(s, p) - Multivector::identity(2)) == 0.0);

  s.terms[MultiIndex::zero(2)] = Multivector(2);
  s.terms[MultiIndex::unit(2, 1)] = Multivector::identity(2);
  CHECK(modulus(taylor_eval(s, p) - zeta(1, p)) < 1e-15);
  CHECK(modulus(taylor_field(s)(p) - zeta(1, p)) < 1e-15);

  s.terms[MultiIndex({2, 0})] = Multivector::identity(2);
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("taylor series with mass are approximate M-solutions") {
  Rng rng(21);
  for (const auto& conv : kBoth)
    for (const MassTerm& m : {MassTerm::right_scalar(0.5), MassTerm::right_clifford(Multivector::generator(2, 2) * 0.7)}) {
      TaylorSeries s;
      s.center = Point(0.05, {0.1, -0.05});
      s.lambda = m;
      s.max_order = 2;
      for (const auto& beta : multi_indices_up_to(2, 2)) s.terms[beta] = random_mv(2, rng) * 0.2;
      const Field f = taylor_field(s, conv);
      const std::vector<Point> pts{Point(0.1, {0.2, -0.1}), Point(-0.2, {0.0, 0.3})};
      const double h = 1e-3;
      CHECK(residual_norm(f, m, std::span<const Point>(pts), {h, 2}, conv) <= 10 * h * h);
      // A mass term that does not belong to the series leaves a visible residual.
      CHECK(residual_norm(f, MassTerm::zero(), std::span<const Point>(pts), {h, 2}, conv) > 1e-3);
    }
}

TEST_CASE("plane waves") {
  const int n = 2;
  PlaneWaveParam flat{{0.0, 0.0}, ComplexMultivector::identity(n)};
  const Point p(0.3, {0.1, 0.2});
  CHECK(plane_wave(flat, p) == ComplexMultivector::identity(n));
  const ComplexField c = superpose_plane_waves({flat}, MassTerm::zero());
  CHECK(c(p) == ComplexMultivector::identity(n));
  CHECK_THROWS_AS(superpose_plane_waves({}, MassTerm::zero()), DomainError);
  CHECK_THROWS_AS(plane_wave(PlaneWaveParam{{1.0}, ComplexMultivector::identity(n)}, p), SignatureMismatch);

  for (const auto& conv : kBoth) {
    const double t = 0.7;
    PlaneWaveParam one{{1.0}, ComplexMultivector::identity(1)};
    const auto w = plane_wave(one, Point(0.0, {t}), conv);
    const std::complex<double> want = std::exp(std::complex<double>(0.0, -conv.monomial_sign * t));
    CHECK(std::abs(w.scalar_part() - want) < 1e-15);
    CHECK(std::abs(w[1]) < 1e-15);
  }

  Rng rng(17);
  const std::vector<Point> pts{Point(0.1, {0.2, -0.1}), Point(-0.3, {0.1, 0.25}), Point(0.0, {0.0, 0.0})};
  for (const auto& conv : kBoth)
    for (int t = 0; t < 5; ++t) {
      PlaneWaveParam pw{{rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4)}, ComplexMultivector::identity(n)};
      const MassTerm m = MassTerm::right_scalar(rng.uniform(-1.0, 1.0));
      const ComplexField f0 = superpose_plane_waves({pw}, MassTerm::zero(), conv);
      const ComplexField fm = superpose_plane_waves({pw}, m, conv);
      const double h = 1e-3;
      CHECK(residual_norm(f0, MassTerm::zero(), std::span<const Point>(pts), {h, 2}, conv) <= 10 * h * h);
      CHECK(residual_norm(fm, m, std::span<const Point>(pts), {h, 2}, conv) <= 10 * h * h);
    }
}

TEST_CASE("hyperplane restriction") {
  for (const auto& conv : kBoth) {
    const std::vector<double> y{2.0, 3.0};
    const Polynomial v10 = symmetric_power_polynomial(MultiIndex::unit(2, 1), conv);
    CHECK(restrict_to_hyperplane(v10, y) == Multivector::scalar(2, conv.monomial_sign * 2.0));
    CHECK(restrict_to_hyperplane(symmetric_power_polynomial(MultiIndex::zero(2), conv), y) == Multivector::identity(2));
    for (const auto& beta : multi_indices_up_to(2, 3)) {
      const Multivector r = restrict_to_hyperplane(symmetric_power_polynomial(beta, conv), y);
      CHECK(r.is_scalar());
      const double want = std::pow(conv.monomial_sign * 2.0, beta[1]) * std::pow(conv.monomial_sign * 3.0, beta[2]);
      CHECK(r.scalar_part() == doctest::Approx(want).epsilon(1e-14));
    }
    const std::vector<double> wrong{1.0};
    CHECK_THROWS_AS(restrict_to_hyperplane(v10, wrong), SignatureMismatch);
  }
}

TEST_CASE("lambda-linear fit") {
  const Point p(0.1, {0.3, -0.2});
  {
    const LambdaFit fit = fit_lambda_linear_form(constant_field(Multivector::identity(2)), p, MassTerm::zero(), 1e-2);
    for (const auto& a : fit.form.coefficients) CHECK(a.is_zero());
    CHECK(fit.remainder_outer == 0.0);
  }
  for (const auto& conv : kBoth) {
    const Field v = symmetric_power_polynomial(MultiIndex::unit(2, 1), conv).to_field();
    const LambdaFit fit = fit_lambda_linear_form(v, p, MassTerm::zero(), 1e-2, conv);
    CHECK(modulus(fit.form.coefficients[0] - Multivector::identity(2)) < 1e-12);
    CHECK(modulus(fit.form.coefficients[1]) < 1e-12);
    CHECK(fit.remainder_order >= 2.0);
  }
  {
    const Field f{[](const Point& q) { return Multivector::scalar(2, q[1] * q[1]); }, 2, FieldClass::arbitrary, {}, "y1^2"};
    const LambdaFit fit = fit_lambda_linear_form(f, p, MassTerm::zero(), 1e-2);
    CHECK(fit.remainder_order == doctest::Approx(1.0).epsilon(0.05));
  }
  for (const auto& conv : kBoth) {
    const MassTerm m = MassTerm::right_clifford(Multivector::generator(2, 1) * 0.4);
    const Field g = symmetric_power_polynomial(MultiIndex({1, 1}), conv).to_field();
    const Field f = from_monogenic(g, m, conv);
    const LambdaFit fit = fit_lambda_linear_form(f, p, m, 1e-2, conv);
    CHECK(fit.remainder_order >= 1.9);
    const LambdaFit other = fit_lambda_linear_form(f, p, m, 1e-4, conv, {99, 4});
    const LambdaFit ref = fit_lambda_linear_form(f, p, m, 1e-4, conv, {1, 4});
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(modulus(other.form.coefficients[j] - ref.form.coefficients[j]) < 1e-6);
  }
  CHECK_THROWS_AS(fit_lambda_linear_form(constant_field(Multivector::identity(2)), p, MassTerm::zero(), 0.0), DomainError);
}
