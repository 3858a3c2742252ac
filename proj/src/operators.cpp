#include "cliffwb/operators.hpp"

#include <cmath>

namespace cliffwb {

void validate(const StencilSpec& st) {
  if (!(st.h > 0.0) || !std::isfinite(st.h)) throw ConfigError("stencil step h must be positive");
  if (st.order != 2 && st.order != 4) throw ConfigError("stencil order must be 2 or 4");
}

namespace {

Polynomial symbolic_dirac(const Polynomial& f, int sign, Side side) {
  Polynomial r = f.derivative(0);
  for (int j = 1; j <= f.n(); ++j) {
    const auto ej = Multivector::generator(f.n(), j);
    const Polynomial dj = f.derivative(j);
    const Polynomial term = side == Side::left ? ej * dj : dj * ej;
    if (sign > 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

}  // namespace

Polynomial symbolic_D(const Polynomial& f, const Convention& conv, Side side) {
  return symbolic_dirac(f, conv.dirac_sign, side);
}

Polynomial symbolic_D_conj(const Polynomial& f, const Convention& conv, Side side) {
  return symbolic_dirac(f, -conv.dirac_sign, side);
}

Polynomial symbolic_laplacian(const Polynomial& f) {
  Polynomial r(f.n());
  for (int k = 0; k <= f.n(); ++k) r += f.derivative(k).derivative(k);
  return r;
}

}  // namespace cliffwb
