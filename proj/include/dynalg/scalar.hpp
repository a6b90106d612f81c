#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "dynalg/error.hpp"

namespace dynalg {

/// Coefficient field of a computation. Qi admits Gaussian rationals.
enum class Field { Q, Qi };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// An element of Q(i) held as two canonical GMP rationals.
///
/// Values are always normalized: each part is reduced with a positive
/// denominator, so structural equality is field equality. In Q-mode
/// computations the imaginary part simply stays zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);
  static Scalar ratio(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;

  /// re^2 + im^2, exact.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  /// |z| > 1, decided exactly through the squared norm.
  bool exceeds_unit_modulus() const { return norm2() > 1; }
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Bit size used for pivot selection.
  std::size_t bit_size() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Canonical total order (real part, then imaginary part). Not a field order.
  friend std::strong_ordering canonical_cmp(const Scalar& a, const Scalar& b);
  friend bool canonical_less(const Scalar& a, const Scalar& b) {
    return canonical_cmp(a, b) < 0;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

enum class ScalarOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations; Div by zero throws DivisionByZero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

/// Parses `p`, `p/q`, `p/q+r/si`, `r/si`, `i` with optional signs; whitespace is ignored.
/// Imaginary parts are rejected in Q mode.
Scalar parse_scalar(std::string_view text, Field field = Field::Qi);

/// Square root inside the active field, if one exists there.
bool sqrt_in_field(const Scalar& v, Field field, Scalar& out);

}  // namespace dynalg
