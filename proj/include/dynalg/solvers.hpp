#pragma once

#include <optional>

#include "dynalg/series.hpp"

namespace dynalg {

/// Normalized Poincaré series P with P(0) = z0, P'(0) = 1 and
/// A(P(z)) = P(lambda z) mod z^{N+1}, lambda = A'(z0).
///
/// p_k = m_k / (lambda^k - lambda), m_k being the order-k mismatch left by the
/// partial series.
TruncatedPowerSeries poincare_series(const RationalFunction& a, const PointP1& z0, int order);

/// A(P(z)) - P(lambda z) modulo z^{N+1}.
TruncatedPowerSeries poincare_residual(const RationalFunction& a, const TruncatedPowerSeries& p,
                                       const Scalar& lambda);

/// Böttcher series B with B(z^n) = A(B(z)), solved top-down. Without an explicit
/// leading choice, a_{-1} is the preferred root of lead(A) a^{n-1} = 1 in the field.
BoettcherSeries boettcher_series(const Polynomial& a, int order, Field field,
                                 const std::optional<Scalar>& leading_choice = std::nullopt);

/// B(z^n) - A(B(z)) in the variable w = 1/z, over the exponents fixed by the
/// computed coefficients.
LaurentSeries boettcher_residual(const Polynomial& a, const BoettcherSeries& b);
/// Highest w-exponent the residual can certify.
int boettcher_residual_top(const Polynomial& a, const BoettcherSeries& b);

}  // namespace dynalg
