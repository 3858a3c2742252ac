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

Polynomial random_polynomial(int n, int degree, Rng& rng) {
  Polynomial p(n);
  for (const auto& e : exponents_up_to(n, degree)) p += Polynomial::monomial(e, random_mv(n, rng));
  return p;
}

const std::vector<Point> kSamples{Point(0.1, {0.2, -0.3}), Point(-0.25, {0.05, 0.1}), Point(0.3, {-0.2, 0.15})};

}  // namespace

TEST_CASE("stencil validation") {
  const Field c = constant_field(Multivector::identity(2));
  CHECK_THROWS_AS(apply_D(c, Point(2), StencilSpec{0.0, 2}), ConfigError);
  CHECK_THROWS_AS(apply_D(c, Point(2), StencilSpec{1e-3, 3}), ConfigError);
}

TEST_CASE("D on elementary fields") {
  for (const auto& conv : kBoth)
    for (int n = 1; n <= 3; ++n) {
      const Field c = constant_field(Multivector::blade(n, 1, 2.5));
      const Point p(n);
      CHECK(apply_D(c, p, {}, conv).is_zero());
      CHECK(apply_D_conj(c, p, {}, conv).is_zero());
      CHECK(laplacian(c, p, {}).is_zero());

      const Field id{[conv](const Point& q) { return embed_point(q, conv.dirac_sign); }, n, FieldClass::arbitrary, {}, "y"};
      const Point q = Point::from_coordinates(std::vector<double>(static_cast<std::size_t>(n + 1), 0.2));
      CHECK(modulus(apply_D(id, q, {}, conv) - Multivector::scalar(n, 1.0 - n)) < 1e-12);
      CHECK(modulus(apply_D_conj(id, q, {}, conv) - Multivector::scalar(n, 1.0 + n)) < 1e-12);

      const Field v10 = symmetric_power_polynomial(MultiIndex::unit(n, 1), conv).to_field();
      CHECK(modulus(apply_D(v10, q, {}, conv)) < 1e-12);
    }
}

TEST_CASE("laplacian examples") {
  const Field harmonic{[](const Point& p) { return Multivector::scalar(1, p[0] * p[0] - p[1] * p[1]); }, 1,
                       FieldClass::arbitrary, {}, "y0^2 - y1^2"};
  CHECK(modulus(laplacian(harmonic, Point(0.3, {0.4}), {})) < 1e-9);
  const Field sq{[](const Point& p) { return Multivector::scalar(1, p[0] * p[0]); }, 1, FieldClass::arbitrary, {}, "y0^2"};
  CHECK(modulus(laplacian(sq, Point(0.3, {0.4}), {}) - Multivector::scalar(1, 2.0)) < 1e-6);
  const Polynomial hp = Polynomial::monomial({2, 0, 0, 0, 0, 0, 0}, Multivector::identity(1)) -
                        Polynomial::monomial({0, 2, 0, 0, 0, 0, 0}, Multivector::identity(1));
  CHECK(symbolic_laplacian(hp).is_zero());
}

TEST_CASE("perturbed operator") {
  for (const auto& conv : kBoth) {
    Rng rng(4);
    const Field g = symmetric_power_polynomial(MultiIndex({1, 1}), conv).to_field();
    CHECK(modulus(apply_perturbed(g, kSamples[0], {}, MassTerm::zero(), conv) - apply_D(g, kSamples[0], {}, conv)) == 0.0);

    const double lam = 0.8;
    const Multivector c = random_mv(2, rng);
    const double s = conv.mass_sign;
    const Field e{[c, lam, s](const Point& p) { return c * std::exp(-s * lam * p.y0()); }, 2, FieldClass::arbitrary, {}, "exp"};
    const double h = 1e-3;
    CHECK(residual_norm(e, MassTerm::right_scalar(lam), std::span<const Point>(kSamples), {h, 2}, conv) <= 10 * h * h);

    for (const MassTerm& m : {MassTerm::right_scalar(0.5), MassTerm::right_clifford(Multivector::generator(2, 1) * 0.3)})
      for (const auto& beta : multi_indices_up_to(2, 3)) {
        const Field f = from_monogenic(symmetric_power_polynomial(beta, conv).to_field(), m, conv);
        CHECK(residual_norm(f, m, std::span<const Point>(kSamples), {h, 2}, conv) <= 10 * h * h);
      }
  }
}

TEST_CASE("symbolic factorization on random polynomials") {
  Rng rng(8);
  for (const auto& conv : kBoth)
    for (int n = 1; n <= 3; ++n) {
      const Polynomial p = random_polynomial(n, 3, rng);
      const Polynomial lap = symbolic_laplacian(p);
      CHECK((symbolic_D_conj(symbolic_D(p, conv), conv) - lap).max_abs_coefficient() < 1e-12);
      CHECK((symbolic_D(symbolic_D_conj(p, conv), conv) - lap).max_abs_coefficient() < 1e-12);
      const Polynomial q = random_polynomial(n, 2, rng);
      const Field fq = q.to_field();
      const Field dq = D_field(fq, {1e-3, 2}, conv);
      const Polynomial lq = symbolic_laplacian(q);
      const Point x = Point::from_coordinates(std::vector<double>(static_cast<std::size_t>(n + 1), 0.1));
      CHECK(modulus(apply_D_conj(dq, x, {1e-3, 2}, conv) - lq.evaluate(x)) < 1e-8);
    }
}

TEST_CASE("operators are right-linear") {
  Rng rng(12);
  for (const auto& conv : kBoth) {
    const Polynomial p = random_polynomial(2, 3, rng);
    const Polynomial q = random_polynomial(2, 3, rng);
    const Multivector c = random_mv(2, rng);
    const Polynomial lhs = symbolic_D(p * c + q, conv);
    const Polynomial rhs = symbolic_D(p, conv) * c + symbolic_D(q, conv);
    CHECK((lhs - rhs).max_abs_coefficient() < 1e-12);
    CHECK((symbolic_D(p * 2.5, conv) - symbolic_D(p, conv) * 2.5).max_abs_coefficient() < 1e-12);
  }
}

TEST_CASE("symbolic and finite-difference D agree") {
  Rng rng(13);
  for (const auto& conv : kBoth) {
    const Polynomial p = random_polynomial(2, 3, rng);
    const Polynomial dp = symbolic_D(p, conv);
    for (const auto& x : kSamples)
      CHECK(modulus(apply_D(p.to_field(), x, {1e-3, 4}, conv) - dp.evaluate(x)) < 1e-9);
  }
}

TEST_CASE("helmholtz identity") {
  Rng rng(14);
  const double h = 1e-3;
  const Field quad = random_polynomial(2, 2, rng).to_field();
  const std::vector<Field> trial{quad};
  for (const Multivector& lam : {Multivector(2), Multivector::scalar(2, 0.5), Multivector::generator(2, 1),
                                 random_mv(2, rng)})
    CHECK(helmholtz_factorization_residual<double>(lam, trial, kSamples, {h, 2}) <= 10 * h * h);
  const Field c = constant_field(random_mv(2, rng));
  CHECK(helmholtz_residual_at(c, kSamples[0], Multivector::scalar(2, 0.7), {h, 2}) < 1e-14);
  CHECK_THROWS_AS(helmholtz_factorization_residual<double>(Multivector(2), trial, {}, {h, 2}), DomainError);
}

TEST_CASE("residual norm") {
  const Field c = constant_field(Multivector::identity(2));
  CHECK(residual_norm(c, MassTerm::zero(), std::span<const Point>(kSamples), {}) == 0.0);
  CHECK_THROWS_AS(residual_norm(c, MassTerm::zero(), std::span<const Point>{}, {}), DomainError);

  // Degree-2 fields are differentiated exactly by central differences, so
  // the Richardson ratio is only observable from degree 3 on.
  const Field v11 = symmetric_power_polynomial(MultiIndex({1, 1})).to_field();
  CHECK(residual_norm(v11, MassTerm::zero(), std::span<const Point>(kSamples), {1e-2, 2}) < 1e-12);
  const Field v30 = symmetric_power_polynomial(MultiIndex({3, 0})).to_field();
  const double r1 = residual_norm(v30, MassTerm::zero(), std::span<const Point>(kSamples), {1e-2, 2});
  const double r2 = residual_norm(v30, MassTerm::zero(), std::span<const Point>(kSamples), {5e-3, 2});
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.1));

  const Field bad{[](const Point& p) { return Multivector::scalar(2, p[1] * p[1]); }, 2, FieldClass::arbitrary, {}, "y1^2"};
  const double a = residual_norm(bad, MassTerm::zero(), std::span<const Point>(kSamples), {1e-2, 2});
  const double b = residual_norm(bad, MassTerm::zero(), std::span<const Point>(kSamples), {1e-4, 2});
  CHECK(a > 0.3);
  CHECK(b == doctest::Approx(a).epsilon(1e-6));
}

TEST_CASE("fields check their dimension") {
  const Field c = constant_field(Multivector::identity(2));
  CHECK_THROWS_AS(c(Point(3)), SignatureMismatch);
}
