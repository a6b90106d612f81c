#pragma once

#include <optional>
#include <string>

#include "dynalg/polynomial.hpp"

namespace dynalg {

/// A point of the Riemann sphere: a field element or infinity.
class PointP1 {
 public:
  PointP1() : value_(Scalar(0)) {}
  PointP1(Scalar v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static PointP1 infinity() {
    PointP1 p;
    p.value_.reset();
    return p;
  }

  bool is_infinity() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Finite coordinate; throws on infinity.
  const Scalar& value() const;

  friend bool operator==(const PointP1& a, const PointP1& b) { return a.value_ == b.value_; }
  /// Finite points in canonical order, infinity last.
  friend bool canonical_less(const PointP1& a, const PointP1& b);

  /// Scalar literal or `inf`.
  std::string to_string() const;

 private:
  std::optional<Scalar> value_;
};

PointP1 parse_point(std::string_view text, Field field = Field::Qi);

/// Default cap on the degree of compositions and iterates.
inline constexpr int kDefaultDegreeCap = 4096;

/// Reduced quotient of polynomials with a monic denominator.
///
/// The canonical form makes equality structural, which is what every
/// diagram check relies on.
class RationalFunction {
 public:
  RationalFunction() : den_(Scalar(1)) {}
  RationalFunction(Polynomial p)  // NOLINT(google-explicit-constructor)
      : num_(std::move(p)), den_(Scalar(1)) {}
  RationalFunction(Scalar c) : RationalFunction(Polynomial(std::move(c))) {}  // NOLINT
  /// Reduces by the gcd; throws ZeroDenominator for a zero denominator.
  RationalFunction(const Polynomial& num, const Polynomial& den);
  static RationalFunction identity() { return RationalFunction(Polynomial::x()); }
  static RationalFunction reciprocal();  // 1/z

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// max(deg num, deg den); 0 for constants.
  int degree() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// The polynomial itself; throws when the denominator is nontrivial.
  Polynomial as_polynomial() const;

  PointP1 evaluate(const PointP1& z) const;
  /// Finite value at a finite point; throws PoleAtBasePoint at a pole.
  Scalar evaluate_finite(const Scalar& z) const;
  RationalFunction derivative() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction pow(int e) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical expression text, parseable back to the same value.
  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced);
  friend RationalFunction compose(const RationalFunction&, const RationalFunction&, int);

  Polynomial num_;
  Polynomial den_;
};

/// outer(inner(z)). Throws IterationBudgetExceeded if the degree would exceed the cap.
RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner,
                         int degree_cap = kDefaultDegreeCap);
/// A^{∘l}, l >= 1.
RationalFunction iterate(const RationalFunction& a, int l, int degree_cap = kDefaultDegreeCap);
RationalFunction derivative(const RationalFunction& a);

/// Conjugate by 1/z: the same map seen in the chart at infinity.
RationalFunction conjugate_by_reciprocal(const RationalFunction& a);

/// Multiplicity of X(z) - X(z0) at z0 (chart swap at poles and at infinity).
int local_degree(const RationalFunction& x, const PointP1& z0);

}  // namespace dynalg
