#pragma once

#include <string>
#include <string_view>

namespace cliffwb {

// The three signs that must be chosen together for the operator, the
// monomials and the mass equation to be mutually consistent.
//
//   D       = d/dy0 + dirac_sign * sum_j e_j d/dy_j        (left action)
//   zeta_j  = y0 e_j + monomial_sign * y_j e0
//   M-solution:  (D + mass_sign * M) f = 0
//
// With these, D zeta_j = 0 requires monomial_sign = -dirac_sign, and
// f -> exp(mass_sign * y0 * M) f maps M-solutions onto ker D.
// Points are embedded as y0 + dirac_sign * sum y_j e_j so that the Cauchy
// kernel and the oriented surface element stay adapted to D.
struct Convention {
  std::string_view name;
  int dirac_sign;
  int monomial_sign;
  int mass_sign;

  friend bool operator==(const Convention&, const Convention&) = default;
};

// D = d0 + sum e_j d_j, zeta_j = y0 e_j - y_j, (D + M) f = 0.
inline constexpr Convention kLedgerConvention{"ledger", +1, -1, +1};

// D = d0 - sum e_j d_j, zeta_j = y0 e_j + y_j, d0 f = (sum e_j d_j + M) f.
inline constexpr Convention kPrintedConvention{"printed", -1, +1, -1};

// Accepts "ledger" or "printed".
Convention convention_from_name(std::string_view name);

}  // namespace cliffwb
