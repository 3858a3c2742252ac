#include "cliffwb/basis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

#include "cliffwb/random.hpp"

namespace cliffwb {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("multi-index entries must be nonnegative");
    order_ += e;
  }
}

MultiIndex MultiIndex::unit(int n, int j) {
  if (j < 1 || j > n) throw DomainError("multi-index direction out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

std::vector<MultiIndex> multi_indices_up_to(int n, int max_order) {
  std::vector<MultiIndex> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int order = 0; order <= max_order; ++order) {
    auto rec = [&](auto&& self, int j, int remaining) -> void {
      if (j == n - 1) {
        e[static_cast<std::size_t>(j)] = remaining;
        out.emplace_back(e);
        return;
      }
      for (int d = remaining; d >= 0; --d) {
        e[static_cast<std::size_t>(j)] = d;
        self(self, j + 1, remaining - d);
      }
    };
    if (n == 0) {
      if (order == 0) out.emplace_back(std::vector<int>{});
      continue;
    }
    rec(rec, 0, order);
  }
  return out;
}

Multivector zeta(int j, const Point& p, const Convention& conv) {
  if (j < 1 || j > p.n()) throw DomainError("zeta: index out of range");
  Multivector r = Multivector::generator(p.n(), j) * p.y0();
  r[0] = conv.monomial_sign * p[j];
  return r;
}

Polynomial zeta_polynomial(int j, int n, const Convention& conv) {
  if (j < 1 || j > n) throw DomainError("zeta: index out of range");
  return Polynomial::coordinate(n, 0, Multivector::generator(n, j)) +
         Polynomial::coordinate(n, j, Multivector::scalar(n, conv.monomial_sign));
}

namespace {

template <class T, class MakeFactor>
T symmetric_power_impl(const MultiIndex& beta, MakeFactor make, T identity) {
  if (beta.order() > kMaxSymmetricFactors) throw DomainError("symmetric_power: order exceeds 8");
  if (beta.order() == 0) return identity;
  std::vector<T> factors;
  for (int j = 1; j <= beta.n(); ++j)
    for (int r = 0; r < beta[j]; ++r) factors.push_back(make(j));
  return symmetric_product(std::span<const T>(factors));
}

}  // namespace

Multivector symmetric_power(const Point& p, const MultiIndex& beta, const Convention& conv) {
  if (beta.n() != p.n()) throw SignatureMismatch("symmetric_power: multi-index length differs from n");
  return symmetric_power_impl<Multivector>(
      beta, [&](int j) { return zeta(j, p, conv); }, Multivector::identity(p.n()));
}

Polynomial symmetric_power_polynomial(const MultiIndex& beta, const Convention& conv) {
  const int n = beta.n();
  return symmetric_power_impl<Polynomial>(
      beta, [&](int j) { return zeta_polynomial(j, n, conv); },
      Polynomial::constant(Multivector::identity(n)));
}

void TaylorSeries::validate() const {
  for (const auto& [beta, c] : terms) {
    if (beta.n() != center.n() || c.generators() != center.n())
      throw SignatureMismatch("taylor series: term signature differs from center");
    if (beta.order() > max_order) throw DomainError("taylor series: term beyond max_order");
  }
}

namespace {

// sum_beta V_beta(y - a) c_beta as a polynomial in y.
Polynomial taylor_polynomial(const TaylorSeries& s, const Convention& conv) {
  const int n = s.center.n();
  Polynomial total(n);
  // zeta_j(y - a) = zeta_j(y) - zeta_j(a).
  std::vector<Polynomial> shifted;
  for (int j = 1; j <= n; ++j)
    shifted.push_back(zeta_polynomial(j, n, conv) - Polynomial::constant(zeta(j, s.center, conv)));
  for (const auto& [beta, c] : s.terms) {
    if (beta.order() == 0) {
      total += Polynomial::constant(c);
      continue;
    }
    std::vector<Polynomial> factors;
    for (int j = 1; j <= n; ++j)
      for (int r = 0; r < beta[j]; ++r) factors.push_back(shifted[static_cast<std::size_t>(j - 1)]);
    total += symmetric_product(std::span<const Polynomial>(factors)) * c;
  }
  return total;
}

}  // namespace

Multivector taylor_eval(const TaylorSeries& s, const Point& p, const Convention& conv) {
  s.validate();
  if (p.n() != s.center.n()) throw SignatureMismatch("taylor_eval: point dimension mismatch");
  const Point delta = p - s.center;
  Multivector sum(p.n());
  for (const auto& [beta, c] : s.terms) sum += symmetric_power(delta, beta, conv) * c;
  return exp_mass(s.lambda, -conv.mass_sign * p.y0(), sum);
}

Field taylor_field(const TaylorSeries& s, const Convention& conv) {
  s.validate();
  const Polynomial poly = taylor_polynomial(s, conv);
  const MassTerm lambda = s.lambda;
  const double sign = conv.mass_sign;
  Field f;
  f.n = s.center.n();
  f.declared = lambda.is_zero() ? FieldClass::monogenic : FieldClass::m_solution;
  f.declared_mass = lambda;
  f.label = "taylor(order " + std::to_string(s.max_order) + ")";
  f.evaluate = [poly, lambda, sign](const Point& p) {
    return exp_mass(lambda, -sign * p.y0(), poly.evaluate(p));
  };
  return f;
}

ComplexMultivector plane_wave(const PlaneWaveParam& param, const Point& p, const Convention& conv) {
  const int n = p.n();
  if (static_cast<int>(param.eta.size()) != n)
    throw SignatureMismatch("plane_wave: eta length differs from n");
  if (param.weight.generators() != n) throw SignatureMismatch("plane_wave: weight signature mismatch");
  ComplexMultivector exponent(n);
  for (int j = 1; j <= n; ++j)
    exponent += promote<std::complex<double>>(zeta(j, p, conv)) *
                std::complex<double>(0.0, -param.eta[static_cast<std::size_t>(j - 1)]);
  return clifford_exp(exponent) * param.weight;
}

ComplexField superpose_plane_waves(std::vector<PlaneWaveParam> params, const MassTerm& m,
                                   const Convention& conv) {
  if (params.empty()) throw DomainError("superpose_plane_waves: empty parameter list");
  const int n = static_cast<int>(params.front().eta.size());
  ComplexField f;
  f.n = n;
  f.declared = m.is_zero() ? FieldClass::monogenic : FieldClass::m_solution;
  f.declared_mass = m;
  f.label = "plane waves x" + std::to_string(params.size());
  f.evaluate = [params = std::move(params), m, conv](const Point& p) {
    ComplexMultivector sum(p.n());
    for (const auto& w : params) sum += plane_wave(w, p, conv);
    return exp_mass(m, -conv.mass_sign * p.y0(), sum);
  };
  return f;
}

Multivector restrict_to_hyperplane(const Polynomial& f, std::span<const double> spatial) {
  if (static_cast<int>(spatial.size()) != f.n())
    throw SignatureMismatch("restrict_to_hyperplane: spatial length differs from n");
  return f.evaluate(Point(0.0, spatial));
}

Multivector LambdaLinearForm::evaluate(const Point& delta, const Convention& conv) const {
  if (static_cast<int>(coefficients.size()) != delta.n())
    throw SignatureMismatch("lambda-linear form: coefficient count differs from n");
  Multivector sum(delta.n());
  for (int j = 1; j <= delta.n(); ++j)
    sum += zeta(j, delta, conv) * coefficients[static_cast<std::size_t>(j - 1)];
  return exp_mass(lambda, -conv.mass_sign * base_y0, sum);
}

LambdaFit fit_lambda_linear_form(const Field& f, const Point& p, const MassTerm& lambda,
                                 double radius, const Convention& conv, FitOptions opt) {
  if (!(radius > 0.0)) throw DomainError("fit_lambda_linear_form: radius must be positive");
  const int n = f.n;
  if (n < 1) throw DomainError("fit_lambda_linear_form: needs n >= 1");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  const double s = conv.mass_sign;

  // Increments are taken on the monogenic companion g = exp(s y0 M) f.
  auto g = [&](const Point& q) { return exp_mass(lambda, s * q.y0(), f(q)); };

  std::vector<Point> directions;
  for (int k = 0; k <= n; ++k) {
    Point u(n);
    u[k] = 1.0;
    directions.push_back(u);
    directions.push_back(u * -1.0);
  }
  Rng rng(opt.seed);
  const int extra = opt.random_directions > 0 ? opt.random_directions : std::max(1, n);
  for (int r = 0; r < extra; ++r) {
    Point u(n);
    for (int k = 0; k <= n; ++k) u[k] = rng.normal();
    u *= 1.0 / u.norm();
    directions.push_back(u);
    directions.push_back(u * -1.0);
  }

  struct Sample {
    Point delta;
    Multivector increment;
    int shell;
  };
  const Multivector g0 = g(p);
  std::vector<Sample> samples;
  for (int shell = 0; shell < 2; ++shell) {
    const double r = shell == 0 ? radius : 0.5 * radius;
    for (const auto& u : directions) {
      const Point d = u * r;
      samples.push_back({d, g(p + d) - g0, shell});
    }
  }

  // Unknowns: coefficient b of A_j at column (j-1)*dim + b.
  const Eigen::Index cols = n * dim;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(samples.size()) * dim, cols);
  Eigen::VectorXd rhs(a.rows());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& smp = samples[i];
    const double w = 1.0 / smp.delta.norm();
    for (int j = 1; j <= n; ++j) {
      const Multivector z = zeta(j, smp.delta, conv);
      for (Eigen::Index b = 0; b < dim; ++b) {
        const Multivector col = z * Multivector::blade(n, static_cast<BladeMask>(b));
        for (Eigen::Index o = 0; o < dim; ++o)
          a(static_cast<Eigen::Index>(i) * dim + o, (j - 1) * dim + b) = w * col[static_cast<BladeMask>(o)];
      }
    }
    for (Eigen::Index o = 0; o < dim; ++o)
      rhs(static_cast<Eigen::Index>(i) * dim + o) = w * smp.increment[static_cast<BladeMask>(o)];
  }
  const Eigen::MatrixXd normal = a.transpose() * a;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
  if (ldlt.info() != Eigen::Success || ldlt.rcond() < 1e-12)
    throw DegenerateSampleError("fit_lambda_linear_form: singular normal equations");
  const Eigen::VectorXd x = ldlt.solve(a.transpose() * rhs);

  LambdaFit fit;
  fit.form.lambda = lambda;
  fit.form.base_y0 = p.y0();
  for (int j = 1; j <= n; ++j) {
    Multivector aj(n);
    for (Eigen::Index b = 0; b < dim; ++b) aj[static_cast<BladeMask>(b)] = x((j - 1) * dim + b);
    fit.form.coefficients.push_back(aj);
  }

  for (const auto& smp : samples) {
    Multivector lin(n);
    for (int j = 1; j <= n; ++j)
      lin += zeta(j, smp.delta, conv) * fit.form.coefficients[static_cast<std::size_t>(j - 1)];
    const double rem = modulus(smp.increment - lin);
    double& slot = smp.shell == 0 ? fit.remainder_outer : fit.remainder_inner;
    slot = std::max(slot, rem);
  }
  const double floor = 1e3 * std::numeric_limits<double>::epsilon() * (1.0 + modulus(g0));
  if (fit.remainder_outer <= floor)
    fit.remainder_order = std::numeric_limits<double>::infinity();
  else
    fit.remainder_order = std::log2(fit.remainder_outer / std::max(fit.remainder_inner, floor * 1e-3));
  return fit;
}

}  // namespace cliffwb
