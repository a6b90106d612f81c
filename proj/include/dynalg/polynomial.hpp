#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dynalg/scalar.hpp"

namespace dynalg {

/// Dense univariate polynomial over Q(i), coefficients in ascending degree.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients
/// and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Scalar> coefficients);
  static Polynomial monomial(Scalar c, int degree);
  static Polynomial x() { return monomial(Scalar(1), 1); }
  /// (z - root)
  static Polynomial linear_factor(const Scalar& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  /// Coefficient of z^k, zero beyond the degree.
  Scalar coeff(int k) const;
  const Scalar& leading() const;
  bool is_real() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& z) const;
  /// p(q(z))
  Polynomial compose(const Polynomial& inner) const;
  /// p(z + shift)
  Polynomial taylor_shift(const Scalar& shift) const;
  Polynomial pow(int e) const;
  /// z^degree * p(1/z) for the given formal degree.
  Polynomial reversed(int formal_degree) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Canonical printing in the expression grammar, e.g. `2*z^2-1`.
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Multiplicity of `root` in p (p nonzero).
int root_multiplicity(const Polynomial& p, const Scalar& root);
/// Yun's algorithm: monic squarefree factors with their multiplicities.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace dynalg
