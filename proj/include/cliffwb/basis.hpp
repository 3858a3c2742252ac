#pragma once

// Closed-form solution families used as ground truth by every suite:
// the degree-1 monomials zeta_j, their symmetric powers V_beta, Taylor
// series in V_beta, plane waves of the Fourier-side construction, and the
// lambda-linear form fitted to sampled increments.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "cliffwb/algebra.hpp"
#include "cliffwb/convention.hpp"
#include "cliffwb/field.hpp"
#include "cliffwb/mass_term.hpp"
#include "cliffwb/polynomial.hpp"

namespace cliffwb {

inline constexpr int kMaxSymmetricFactors = 8;

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  // beta with a single 1 in direction j (1-based).
  static MultiIndex unit(int n, int j);

  int n() const noexcept { return static_cast<int>(entries_.size()); }
  int order() const noexcept { return order_; }
  int operator[](int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

// All multi-indices in n directions with order <= max_order, ordered by
// order and then lexicographically.
std::vector<MultiIndex> multi_indices_up_to(int n, int max_order);

// zeta_j(p) = y0 e_j + s y_j e0.
Multivector zeta(int j, const Point& p, const Convention& conv = kLedgerConvention);
Polynomial zeta_polynomial(int j, int n, const Convention& conv = kLedgerConvention);

// (1/k!) sum over all orderings of the Clifford product of the factors.
template <class T>
T symmetric_product(std::span<const T> factors) {
  const std::size_t k = factors.size();
  if (k == 0) throw DomainError("symmetric_product: no factors");
  if (k > static_cast<std::size_t>(kMaxSymmetricFactors))
    throw DomainError("symmetric_product: more than 8 factors");
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  T sum = factors[0] * 0.0;
  double count = 0.0;
  do {
    T prod = factors[order[0]];
    for (std::size_t i = 1; i < k; ++i) prod = prod * factors[order[i]];
    sum += prod;
    count += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum * (1.0 / count);
}

// V_beta(p): symmetric product of zeta_j(p) taken beta_j times; V_0 = e0.
Multivector symmetric_power(const Point& p, const MultiIndex& beta,
                            const Convention& conv = kLedgerConvention);
Polynomial symmetric_power_polynomial(const MultiIndex& beta,
                                      const Convention& conv = kLedgerConvention);

// Finite Taylor series  sum_beta V_beta(y - a) c_beta  carried to an
// M-solution by the right exponential exp(-s y0 lambda).
struct TaylorSeries {
  Point center;
  MassTerm lambda;
  std::map<MultiIndex, Multivector> terms;
  int max_order = 0;

  void validate() const;
};

Multivector taylor_eval(const TaylorSeries& s, const Point& p,
                        const Convention& conv = kLedgerConvention);
// Same values through a precomputed polynomial.
Field taylor_field(const TaylorSeries& s, const Convention& conv = kLedgerConvention);

struct PlaneWaveParam {
  std::vector<double> eta;
  ComplexMultivector weight;
};

// exp(-i sum_j eta_j zeta_j(p)) * weight.
ComplexMultivector plane_wave(const PlaneWaveParam& param, const Point& p,
                              const Convention& conv = kLedgerConvention);

// y -> exp(-s y0 M) sum_k plane_wave(params_k, y).
ComplexField superpose_plane_waves(std::vector<PlaneWaveParam> params, const MassTerm& m,
                                   const Convention& conv = kLedgerConvention);

// Value at y0 = 0 of a polynomial field; V_beta collapses to (s y)^beta e0.
Multivector restrict_to_hyperplane(const Polynomial& f, std::span<const double> spatial);

struct LambdaLinearForm {
  std::vector<Multivector> coefficients;
  MassTerm lambda;
  double base_y0 = 0.0;

  // sum_j zeta_j(delta) A_j exp(-s y0 lambda).
  Multivector evaluate(const Point& delta, const Convention& conv = kLedgerConvention) const;
};

struct LambdaFit {
  LambdaLinearForm form;
  // log2 of the worst remainder at radius r over that at r/2; +inf when
  // both are at rounding level.
  double remainder_order = 0.0;
  double remainder_outer = 0.0;
  double remainder_inner = 0.0;
};

struct FitOptions {
  std::uint64_t seed = 1;
  // Random direction pairs besides the coordinate axes; 0 picks max(1, n).
  int random_directions = 0;
};

LambdaFit fit_lambda_linear_form(const Field& f, const Point& p, const MassTerm& lambda,
                                 double radius, const Convention& conv = kLedgerConvention,
                                 FitOptions opt = {});

}  // namespace cliffwb
