#pragma once

#include <utility>
#include <vector>

#include "dynalg/polynomial.hpp"

namespace dynalg {

struct RootSet {
  /// Field-rational roots with multiplicities, in canonical order.
  std::vector<std::pair<Scalar, int>> roots;
  /// Monic factors left over with no root found in the field.
  std::vector<Polynomial> unresolved;
};

/// Exact root extraction: linear and quadratic factors over the active field,
/// plus a rational (Q) or Gaussian-rational (Qi) candidate search for higher
/// degree. Anything else is reported in `unresolved`, never dropped.
RootSet exact_roots(const Polynomial& p, Field field);

/// All solutions of r^k = c inside the field.
std::vector<Scalar> kth_roots_in_field(const Scalar& c, int k, Field field);

/// Deterministic root choice: positive real part first, then positive imaginary part.
const Scalar& preferred_root(const std::vector<Scalar>& roots);

}  // namespace dynalg
