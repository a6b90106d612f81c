#pragma once

#include <vector>

#include "dynalg/rational_function.hpp"

namespace dynalg {

/// c_0 + c_1 z + ... + c_N z^N, known modulo z^{N+1}, expanded around `base_point`
/// in the sense that c_0 is the value there.
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries() = default;
  TruncatedPowerSeries(std::vector<Scalar> coefficients, PointP1 base_point = PointP1());

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  const Scalar& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Scalar& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const PointP1& base_point() const { return base_; }
  void set_base_point(PointP1 p) { base_ = std::move(p); }

  TruncatedPowerSeries truncated(int order) const;
  bool is_zero() const;

  friend TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend TruncatedPowerSeries operator-(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend TruncatedPowerSeries operator*(const Scalar& s, TruncatedPowerSeries a);
  friend bool operator==(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Scalar> c_{Scalar(0)};
  PointP1 base_;
};

/// a / b modulo z^{N+1}; b(0) must be nonzero.
TruncatedPowerSeries series_divide(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
/// p(S) for a polynomial p, truncated at the order of S.
TruncatedPowerSeries evaluate_polynomial(const Polynomial& p, const TruncatedPowerSeries& s);
/// X(S); throws PoleAtBasePoint when X has a pole at S(0).
TruncatedPowerSeries transport_poincare(const RationalFunction& x, const TruncatedPowerSeries& s);
/// S(z^d) truncated at the order of S.
TruncatedPowerSeries series_substitute_power(const TruncatedPowerSeries& s, int d);
/// S(c z).
TruncatedPowerSeries rescale(const TruncatedPowerSeries& s, const Scalar& c);

/// Precision used for series that are exact (finitely many terms).
inline constexpr int kExactPrecision = 1 << 28;

/// Laurent series sum_{e >= valuation} c_e z^e whose coefficients are known
/// for every exponent below `precision`. Stored coefficients may stop early;
/// the missing ones are zero.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int valuation, std::vector<Scalar> coefficients, int precision);
  static LaurentSeries from_power_series(const TruncatedPowerSeries& s);

  int valuation() const { return valuation_; }
  int precision() const { return precision_; }
  /// Coefficient of z^e; throws InsufficientOrder at or beyond the precision.
  Scalar coeff(int e) const;

  /// Product with exponents above `max_exponent` dropped.
  LaurentSeries times(const LaurentSeries& o, int max_exponent) const;
  LaurentSeries plus(const LaurentSeries& o) const;
  LaurentSeries scaled(const Scalar& s) const;
  LaurentSeries substitute_power(int d) const;
  LaurentSeries rescale(const Scalar& c) const;
  /// All known coefficients with exponent <= max_exponent vanish.
  bool vanishes_through(int max_exponent) const;

 private:
  int valuation_ = 0;
  std::vector<Scalar> c_;
  int precision_ = 0;
};

/// p(S) for a polynomial p on Laurent series.
LaurentSeries evaluate_polynomial(const Polynomial& p, const LaurentSeries& s, int max_exponent);

/// Böttcher coordinate a_{-1} z + a_0 + a_1 z^{-1} + ... + a_M z^{-M}.
struct BoettcherSeries {
  int map_degree = 0;
  std::vector<Scalar> a;  // a[k] is the coefficient a_{k-1} of z^{1-k}

  int order() const { return static_cast<int>(a.size()) - 2; }
  /// The same series in the variable w = 1/z: valuation -1, exact below w^{M+1}.
  LaurentSeries in_reciprocal_variable() const;
};

}  // namespace dynalg
