#include "dynalg/factor.hpp"

#include <algorithm>
#include <mutex>

namespace dynalg {

namespace {

const std::vector<unsigned long>& small_primes() {
  static std::vector<unsigned long> primes;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<bool> sieve(kTrialDivisionBound + 1, true);
    for (unsigned long p = 2; p <= kTrialDivisionBound; ++p) {
      if (!sieve[p]) continue;
      primes.push_back(p);
      for (unsigned long q = p * p; q <= kTrialDivisionBound; q += p) sieve[q] = false;
    }
  });
  return primes;
}

}  // namespace

IntegerFactorization factor_integer(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  mpz_class m = abs(n);
  IntegerFactorization out;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (mpz_class(p) * p > m) break;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(mpz_class(p), e);
  }
  if (m > 1) {
    mpz_class bound = mpz_class(kTrialDivisionBound) * kTrialDivisionBound;
    if (m > bound) {
      throw Error(ErrorCode::FactorizationBoundExceeded,
                  "cofactor " + m.get_str() + " exceeds the trial-division bound");
    }
    out.emplace_back(m, 1);
  }
  return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n, std::size_t limit) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    if (base * static_cast<std::size_t>(e + 1) > limit) {
      throw Error(ErrorCode::FactorizationBoundExceeded, "too many divisors of " + n.get_str());
    }
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool gaussian_divides(const GaussianInt& a, const GaussianInt& b, GaussianInt& quotient) {
  if (b.is_zero()) return false;
  mpz_class n = b.norm();
  // a * conj(b) / N(b)
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    return false;
  }
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  quotient = {re, im};
  return true;
}

namespace {

// Rotates g by units into re > 0, im >= 0; returns the power k with g = i^k * normalized.
int normalize_quadrant(GaussianInt& g) {
  int k = 0;
  while (!(g.re > 0 && g.im >= 0)) {
    // multiply by -i: (a + bi)(-i) = b - ai
    g = {g.im, -g.re};
    ++k;
    if (k > 4) break;
  }
  return k % 4;
}

GaussianInt split_prime(const mpz_class& p) {
  // p = 1 mod 4: find a^2 + b^2 = p by descending search from sqrt(p).
  mpz_class a = sqrt(p);
  for (; a > 0; --a) {
    mpz_class rest = p - a * a;
    if (mpz_perfect_square_p(rest.get_mpz_t())) return {a, sqrt(rest)};
  }
  throw Error(ErrorCode::InvalidArgument, "not a sum of two squares: " + p.get_str());
}

}  // namespace

GaussianFactorization factor_gaussian(const GaussianInt& g) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  GaussianFactorization out;
  GaussianInt rest = g;
  auto take = [&](const GaussianInt& pi) {
    int e = 0;
    GaussianInt q;
    while (gaussian_divides(rest, pi, q)) {
      rest = q;
      ++e;
    }
    if (e > 0) out.primes.emplace_back(pi, e);
  };
  for (const auto& [p, e] : factor_integer(g.norm())) {
    (void)e;
    if (p == 2) {
      take({1, 1});
    } else if (mpz_class(p % 4) == 3) {
      take({p, 0});
    } else {
      GaussianInt pi = split_prime(p);
      GaussianInt pi_bar{pi.re, -pi.im};
      normalize_quadrant(pi);
      normalize_quadrant(pi_bar);
      take(pi);
      take(pi_bar);
    }
  }
  // What remains is a unit i^k.
  if (rest == GaussianInt{1, 0}) out.unit_power = 0;
  else if (rest == GaussianInt{0, 1}) out.unit_power = 1;
  else if (rest == GaussianInt{-1, 0}) out.unit_power = 2;
  else if (rest == GaussianInt{0, -1}) out.unit_power = 3;
  else throw Error(ErrorCode::InvalidArgument, "gaussian factorization left a non-unit");
  return out;
}

std::vector<GaussianInt> gaussian_divisors(const GaussianInt& g, std::size_t limit) {
  std::vector<GaussianInt> divs{{1, 0}};
  for (const auto& [pi, e] : factor_gaussian(g).primes) {
    std::size_t base = divs.size();
    if (base * static_cast<std::size_t>(e + 1) > limit) {
      throw Error(ErrorCode::FactorizationBoundExceeded, "too many gaussian divisors");
    }
    GaussianInt pk{1, 0};
    for (int k = 1; k <= e; ++k) {
      pk = pk * pi;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  for (auto& d : divs) normalize_quadrant(d);
  return divs;
}

}  // namespace dynalg
