#include "dynalg/series.hpp"

#include <algorithm>

namespace dynalg {

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<Scalar> coefficients, PointP1 base_point)
    : c_(std::move(coefficients)), base_(std::move(base_point)) {
  if (c_.empty()) c_.push_back(Scalar(0));
}

TruncatedPowerSeries TruncatedPowerSeries::truncated(int order) const {
  std::vector<Scalar> v(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(order) + 1));
  v.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedPowerSeries(std::move(v), base_);
}

bool TruncatedPowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[k] + b[k];
  return TruncatedPowerSeries(std::move(v), a.base_);
}

TruncatedPowerSeries operator-(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[k] - b[k];
  return TruncatedPowerSeries(std::move(v), a.base_);
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return TruncatedPowerSeries(std::move(v), a.base_);
}

TruncatedPowerSeries operator*(const Scalar& s, TruncatedPowerSeries a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

TruncatedPowerSeries series_divide(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  if (b[0].is_zero()) throw Error(ErrorCode::DivisionByZero, "series division by a series vanishing at 0");
  const int n = std::min(a.order(), b.order());
  const Scalar inv = b[0].inverse();
  std::vector<Scalar> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar acc = a[k];
    for (int j = 1; j <= k; ++j) {
      if (!b[j].is_zero()) acc -= b[j] * q[static_cast<std::size_t>(k - j)];
    }
    q[static_cast<std::size_t>(k)] = acc * inv;
  }
  return TruncatedPowerSeries(std::move(q), a.base_point());
}

TruncatedPowerSeries evaluate_polynomial(const Polynomial& p, const TruncatedPowerSeries& s) {
  std::vector<Scalar> zero(static_cast<std::size_t>(s.order()) + 1);
  TruncatedPowerSeries acc(zero);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * s;
    acc[0] += p.coeff(k);
  }
  return acc;
}

TruncatedPowerSeries transport_poincare(const RationalFunction& x, const TruncatedPowerSeries& s) {
  const Scalar d0 = x.denominator().evaluate(s[0]);
  if (d0.is_zero()) {
    throw Error(ErrorCode::PoleAtBasePoint, x.to_string() + " has a pole at " + s[0].to_string());
  }
  TruncatedPowerSeries num = evaluate_polynomial(x.numerator(), s);
  TruncatedPowerSeries out =
      x.is_polynomial() ? num : series_divide(num, evaluate_polynomial(x.denominator(), s));
  out.set_base_point(PointP1(out[0]));
  return out;
}

TruncatedPowerSeries series_substitute_power(const TruncatedPowerSeries& s, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "substituted power must be positive");
  std::vector<Scalar> v(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 0; k * d <= s.order(); ++k) v[static_cast<std::size_t>(k * d)] = s[k];
  return TruncatedPowerSeries(std::move(v), s.base_point());
}

TruncatedPowerSeries rescale(const TruncatedPowerSeries& s, const Scalar& c) {
  TruncatedPowerSeries out = s;
  Scalar p(1);
  for (int k = 0; k <= s.order(); ++k) {
    out[k] = s[k] * p;
    p *= c;
  }
  return out;
}

LaurentSeries::LaurentSeries(int valuation, std::vector<Scalar> coefficients, int precision)
    : valuation_(valuation), c_(std::move(coefficients)), precision_(precision) {
  if (static_cast<long>(c_.size()) > static_cast<long>(precision_) - valuation_)
    c_.resize(static_cast<std::size_t>(std::max(precision_ - valuation_, 0)));
}

LaurentSeries LaurentSeries::from_power_series(const TruncatedPowerSeries& s) {
  return LaurentSeries(0, s.coefficients(), s.order() + 1);
}

Scalar LaurentSeries::coeff(int e) const {
  if (e >= precision_) {
    throw Error(ErrorCode::InsufficientOrder,
                "coefficient of exponent " + std::to_string(e) + " is beyond the known precision");
  }
  if (e < valuation_ || static_cast<std::size_t>(e - valuation_) >= c_.size()) return Scalar(0);
  return c_[static_cast<std::size_t>(e - valuation_)];
}

LaurentSeries LaurentSeries::times(const LaurentSeries& o, int max_exponent) const {
  const int v = valuation_ + o.valuation_;
  const int prec = std::min({precision_ + o.valuation_, o.precision_ + valuation_, max_exponent + 1});
  const long span = std::min<long>(static_cast<long>(prec) - v,
                                   static_cast<long>(c_.size() + o.c_.size()));
  std::vector<Scalar> out(static_cast<std::size_t>(std::max(span, 0L)));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size() && static_cast<long>(i + j) < span; ++j) {
      if (!o.c_[j].is_zero()) out[i + j] += c_[i] * o.c_[j];
    }
  }
  return LaurentSeries(v, std::move(out), prec);
}

LaurentSeries LaurentSeries::plus(const LaurentSeries& o) const {
  const int v = std::min(valuation_, o.valuation_);
  const int prec = std::min(precision_, o.precision_);
  const int top = std::min(prec, std::max(valuation_ + static_cast<int>(c_.size()),
                                          o.valuation_ + static_cast<int>(o.c_.size())));
  std::vector<Scalar> out(static_cast<std::size_t>(std::max(top - v, 0)));
  for (int e = v; e < top; ++e) out[static_cast<std::size_t>(e - v)] = coeff(e) + o.coeff(e);
  return LaurentSeries(v, std::move(out), prec);
}

LaurentSeries LaurentSeries::scaled(const Scalar& s) const {
  LaurentSeries out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

LaurentSeries LaurentSeries::substitute_power(int d) const {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "substituted power must be positive");
  const int v = valuation_ * d;
  std::vector<Scalar> out(c_.empty() ? 0 : (c_.size() - 1) * static_cast<std::size_t>(d) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) out[k * static_cast<std::size_t>(d)] = c_[k];
  // The first unknown coefficient moves to exponent d * precision.
  const long prec = std::min<long>(static_cast<long>(precision_) * d, kExactPrecision);
  return LaurentSeries(v, std::move(out), static_cast<int>(prec));
}

LaurentSeries LaurentSeries::rescale(const Scalar& c) const {
  LaurentSeries out = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] *= c.pow(valuation_ + static_cast<long>(k));
  return out;
}

bool LaurentSeries::vanishes_through(int max_exponent) const {
  if (max_exponent >= precision_) {
    throw Error(ErrorCode::InsufficientOrder,
                "cannot check exponent " + std::to_string(max_exponent) + " beyond the known precision");
  }
  for (int e = valuation_; e <= max_exponent; ++e)
    if (!coeff(e).is_zero()) return false;
  return true;
}

LaurentSeries evaluate_polynomial(const Polynomial& p, const LaurentSeries& s, int max_exponent) {
  if (p.is_zero()) return LaurentSeries(0, {}, kExactPrecision);
  // Intermediate products need headroom when s has a pole.
  const int cap = max_exponent - std::min(s.valuation(), 0) * p.degree();
  LaurentSeries acc(0, {p.leading()}, kExactPrecision);
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc.times(s, cap);
    acc = acc.plus(LaurentSeries(0, {p.coeff(k)}, kExactPrecision));
  }
  return acc;
}

LaurentSeries BoettcherSeries::in_reciprocal_variable() const {
  return LaurentSeries(-1, a, static_cast<int>(a.size()) - 1);
}

}  // namespace dynalg
