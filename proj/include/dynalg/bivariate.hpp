#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynalg/polynomial.hpp"

namespace dynalg {

/// Sparse polynomial in x and y over Q(i); key (i, j) stands for x^i y^j.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;

  BivariatePolynomial() = default;
  BivariatePolynomial(Scalar c);  // NOLINT(google-explicit-constructor)
  static BivariatePolynomial x();
  static BivariatePolynomial y();
  static BivariatePolynomial monomial(Scalar c, int i, int j);
  /// p(x) or p(y).
  static BivariatePolynomial in_x(const Polynomial& p);
  static BivariatePolynomial in_y(const Polynomial& p);

  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coeff(int i, int j) const;
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;

  /// Coefficients of y^0..y^n, each a polynomial in x.
  std::vector<Polynomial> coefficients_in_y() const;
  static BivariatePolynomial from_coefficients_in_y(const std::vector<Polynomial>& c);
  /// Coefficients of x^0..x^m, each a polynomial in y.
  std::vector<Polynomial> coefficients_in_x() const;

  /// Scaled so that the first nonzero coefficient in graded-lex order is 1.
  BivariatePolynomial normalized() const;
  Scalar evaluate(const Scalar& x, const Scalar& y) const;
  BivariatePolynomial swapped() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  BivariatePolynomial operator-() const;
  BivariatePolynomial pow(int e) const;
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.t_ == b.t_; }

  /// Terms by descending total degree, e.g. `x-y^2`.
  std::string to_string() const;

 private:
  void add_term(const Key& k, const Scalar& c);
  std::map<Key, Scalar> t_;
};

/// Graded-lex rank of x^i y^j: total degree first, then larger i first.
bool graded_lex_less(const BivariatePolynomial::Key& a, const BivariatePolynomial::Key& b);

/// Exact quotient; throws when b does not divide a.
BivariatePolynomial divide_exact(const BivariatePolynomial& a, const BivariatePolynomial& b);
bool divides(const BivariatePolynomial& b, const BivariatePolynomial& a);

/// Parses `x-y^2`, `2*x*y+1/2`, ... (variables x and y, literals, + - * ^).
BivariatePolynomial parse_bivariate(std::string_view text, Field field = Field::Qi);

// Ring hooks used by the generic resultant.
inline bool ring_is_zero(const Scalar& a) { return a.is_zero(); }
inline bool ring_is_zero(const Polynomial& a) { return a.is_zero(); }
inline bool ring_is_zero(const BivariatePolynomial& a) { return a.is_zero(); }
inline Scalar ring_divide(const Scalar& a, const Scalar& b) { return a / b; }
inline Polynomial ring_divide(const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); }
inline BivariatePolynomial ring_divide(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return divide_exact(a, b);
}

/// Dense univariate polynomial in t over a ring R, ascending, trimmed.
template <class R>
using RingPoly = std::vector<R>;

template <class R>
void ring_trim(RingPoly<R>& p) {
  while (!p.empty() && ring_is_zero(p.back())) p.pop_back();
}

template <class R>
int ring_degree(const RingPoly<R>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R>
R ring_pow(const R& a, int e) {
  R r(Scalar(1));
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

/// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a = q b + r.
template <class R>
RingPoly<R> pseudo_remainder(RingPoly<R> a, const RingPoly<R>& b) {
  const int db = ring_degree(b);
  if (db < 0) throw Error(ErrorCode::DivisionByZero, "pseudo-division by zero");
  const R& lb = b.back();
  int delta = ring_degree(a) - db + 1;
  while (ring_degree(a) >= db) {
    const int shift = ring_degree(a) - db;
    const R la = a.back();
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] = a[static_cast<std::size_t>(k + shift)] - la * b[static_cast<std::size_t>(k)];
    ring_trim(a);
    --delta;
  }
  if (delta > 0) {
    const R f = ring_pow(lb, delta);
    for (auto& c : a) c = c * f;
  }
  return a;
}

/// Resultant by the subresultant polynomial remainder sequence.
template <class R>
R resultant(RingPoly<R> a, RingPoly<R> b) {
  ring_trim(a);
  ring_trim(b);
  if (a.empty() || b.empty()) return R();
  bool negate = false;
  if (ring_degree(a) < ring_degree(b)) {
    std::swap(a, b);
    if (ring_degree(a) % 2 == 1 && ring_degree(b) % 2 == 1) negate = true;
  }
  if (ring_degree(b) == 0) {
    R r = ring_pow(b.back(), ring_degree(a));
    return negate ? R() - r : r;
  }
  R g(Scalar(1)), h(Scalar(1));
  for (;;) {
    const int delta = ring_degree(a) - ring_degree(b);
    if (ring_degree(a) % 2 == 1 && ring_degree(b) % 2 == 1) negate = !negate;
    RingPoly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    const R div = g * ring_pow(h, delta);
    for (auto& c : r) c = ring_divide(c, div);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = ring_divide(ring_pow(g, delta), ring_pow(h, delta - 1));
    if (b.empty()) return R();
    if (ring_degree(b) == 0) break;
  }
  const int da = ring_degree(a);
  R out = da == 0 ? R(Scalar(1)) : ring_divide(ring_pow(b.back(), da), ring_pow(h, da - 1));
  return negate ? R() - out : out;
}

}  // namespace dynalg
