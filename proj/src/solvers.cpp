#include "dynalg/solvers.hpp"

#include "dynalg/fixed_points.hpp"
#include "dynalg/roots.hpp"

namespace dynalg {

TruncatedPowerSeries poincare_series(const RationalFunction& a, const PointP1& z0, int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "series order must be at least 1");
  if (z0.is_infinity()) {
    throw Error(ErrorCode::PreconditionFailed,
                "base point at infinity: conjugate the map by 1/z and solve at 0");
  }
  const Scalar& z = z0.value();
  if (a.denominator().evaluate(z).is_zero()) {
    throw Error(ErrorCode::PoleAtBasePoint, "base point " + z.to_string() + " is a pole of " + a.to_string());
  }
  const Scalar lambda = multiplier_at(a, z0);
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroMultiplier, "superattracting fixed point has no Poincaré series");
  {
    Scalar lk = lambda;
    for (int k = 2; k <= order; ++k) {
      lk *= lambda;
      if (lk == lambda) {
        throw Error(ErrorCode::ResonantMultiplier,
                    "multiplier " + lambda.to_string() + " is resonant at order " + std::to_string(k));
      }
    }
  }

  // Taylor coefficients beta_j of A(z0 + t).
  const std::size_t n1 = static_cast<std::size_t>(order) + 1;
  auto shifted = [&](const Polynomial& p) {
    std::vector<Scalar> c = p.taylor_shift(z).coefficients();
    c.resize(n1);
    return TruncatedPowerSeries(std::move(c));
  };
  const TruncatedPowerSeries beta = series_divide(shifted(a.numerator()), shifted(a.denominator()));

  // pw[j][k] = [t^k] T^j for T = P - z0, filled column by column.
  std::vector<std::vector<Scalar>> pw(n1, std::vector<Scalar>(n1));
  std::vector<Scalar> p(n1);
  p[0] = z;
  p[1] = Scalar(1);
  pw[1][1] = Scalar(1);
  Scalar lk = lambda;
  for (std::size_t k = 2; k < n1; ++k) {
    lk *= lambda;
    Scalar mismatch;
    for (std::size_t j = 2; j <= k; ++j) {
      Scalar acc;
      for (std::size_t t = 1; t + (j - 1) <= k; ++t) {
        if (!pw[1][t].is_zero() && !pw[j - 1][k - t].is_zero()) acc += pw[1][t] * pw[j - 1][k - t];
      }
      pw[j][k] = acc;
      if (!beta[static_cast<int>(j)].is_zero()) mismatch += beta[static_cast<int>(j)] * acc;
    }
    p[k] = mismatch / (lk - lambda);
    pw[1][k] = p[k];
  }
  return TruncatedPowerSeries(std::move(p), z0);
}

TruncatedPowerSeries poincare_residual(const RationalFunction& a, const TruncatedPowerSeries& p,
                                       const Scalar& lambda) {
  return transport_poincare(a, p) - rescale(p, lambda);
}

BoettcherSeries boettcher_series(const Polynomial& a, int order, Field field,
                                 const std::optional<Scalar>& leading_choice) {
  const int n = a.degree();
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "Böttcher series needs degree at least 2");
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "Böttcher order must be nonnegative");
  const Scalar& lead = a.leading();
  Scalar u0;
  if (leading_choice) {
    if (!(lead * leading_choice->pow(n - 1)).is_one()) {
      throw Error(ErrorCode::InvalidArgument,
                  "leading choice " + leading_choice->to_string() + " does not satisfy lead*a^" +
                      std::to_string(n - 1) + " = 1");
    }
    u0 = *leading_choice;
  } else {
    const Scalar radicand = lead.inverse();
    auto roots = kth_roots_in_field(radicand, n - 1, field);
    if (roots.empty()) {
      throw Error(ErrorCode::LeadingCoefficientNotSolvable,
                  "no a in " + std::string(field_name(field)) + " with a^" + std::to_string(n - 1) + " = " +
                      radicand.to_string());
    }
    u0 = preferred_root(roots);
  }

  // In w = 1/z with V(w) = w B: V(w^n) = sum_j alpha_j w^{n-j} V(w)^j.
  const std::size_t len = static_cast<std::size_t>(order) + 2;
  std::vector<Scalar> u(len);
  std::vector<std::vector<Scalar>> pw(static_cast<std::size_t>(n) + 1, std::vector<Scalar>(len));
  u[0] = u0;
  pw[0][0] = Scalar(1);
  for (int j = 1; j <= n; ++j) pw[static_cast<std::size_t>(j)][0] = u0.pow(j);
  const Scalar inv_n = Scalar(n).inverse();
  for (std::size_t k = 1; k < len; ++k) {
    // Powers at index k with u_k provisionally zero.
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
      Scalar acc;
      for (std::size_t t = 1; t < k; ++t) {
        if (!u[t].is_zero() && !pw[j - 1][k - t].is_zero()) acc += u[t] * pw[j - 1][k - t];
      }
      if (j >= 2) acc += u[0] * pw[j - 1][k];
      pw[j][k] = acc;
    }
    Scalar rest;
    for (int j = 0; j <= n; ++j) {
      const int shift = n - j;
      if (static_cast<int>(k) - shift < 0) continue;
      const Scalar c = a.coeff(j);
      if (!c.is_zero()) rest += c * pw[static_cast<std::size_t>(j)][k - static_cast<std::size_t>(shift)];
    }
    const Scalar lhs = k % static_cast<std::size_t>(n) == 0 ? u[k / static_cast<std::size_t>(n)] : Scalar(0);
    u[k] = (lhs - rest) * inv_n;
    // Fold u_k into the powers: d(V^j)_k / du_k = j u0^{j-1}.
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
      pw[j][k] += Scalar(static_cast<long>(j)) * pw[j - 1][0] * u[k];
    }
  }
  return BoettcherSeries{n, std::move(u)};
}

int boettcher_residual_top(const Polynomial& a, const BoettcherSeries& b) { return b.order() + 1 - a.degree(); }

LaurentSeries boettcher_residual(const Polynomial& a, const BoettcherSeries& b) {
  const LaurentSeries s = b.in_reciprocal_variable();
  const int top = boettcher_residual_top(a, b);
  LaurentSeries lhs = s.substitute_power(a.degree());
  LaurentSeries rhs = evaluate_polynomial(a, s, top);
  return lhs.plus(rhs.scaled(Scalar(-1)));
}

}  // namespace dynalg
