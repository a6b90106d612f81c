#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "dynalg/scalar.hpp"

namespace dynalg {

/// Trial division runs over primes below this bound; larger cofactors must be
/// provably prime (below the bound squared) or factorization fails loudly.
inline constexpr unsigned long kTrialDivisionBound = 1000000;

using IntegerFactorization = std::vector<std::pair<mpz_class, int>>;

/// Prime factorization of |n| for n != 0, primes ascending.
IntegerFactorization factor_integer(const mpz_class& n);

/// All positive divisors of |n|, ascending. Throws FactorizationBoundExceeded
/// if there would be more than `limit`.
std::vector<mpz_class> positive_divisors(const mpz_class& n, std::size_t limit = 200000);

struct GaussianInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  Scalar to_scalar() const { return Scalar(mpq_class(re), mpq_class(im)); }
};

/// Exact quotient a / b if b divides a in Z[i].
bool gaussian_divides(const GaussianInt& a, const GaussianInt& b, GaussianInt& quotient);

/// g = unit * prod(prime^exponent); primes normalized to re > 0, im >= 0.
struct GaussianFactorization {
  int unit_power = 0;  // unit = i^unit_power
  std::vector<std::pair<GaussianInt, int>> primes;
};

GaussianFactorization factor_gaussian(const GaussianInt& g);

/// Divisors of g up to units, each normalized to the first quadrant.
std::vector<GaussianInt> gaussian_divisors(const GaussianInt& g, std::size_t limit = 200000);

}  // namespace dynalg
