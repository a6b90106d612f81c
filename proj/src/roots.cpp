#include "dynalg/roots.hpp"

#include <algorithm>

#include "dynalg/factor.hpp"

namespace dynalg {

namespace {

constexpr std::size_t kCandidateLimit = 200000;

// Multiplies through by the lcm of all denominators.
std::vector<GaussianInt> integral_coefficients(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GaussianInt> out;
  for (const auto& c : p.coefficients()) {
    out.push_back({c.re().get_num() * (l / c.re().get_den()), c.im().get_num() * (l / c.im().get_den())});
  }
  return out;
}

// Candidate roots u/v with u | a0 and v | an (rational root theorem in Z or Z[i]).
std::vector<Scalar> root_candidates(const Polynomial& p, Field field) {
  auto ic = integral_coefficients(p);
  const GaussianInt& a0 = ic.front();
  const GaussianInt& an = ic.back();
  std::vector<Scalar> out;
  if (field == Field::Q) {
    if (!p.is_real()) return out;
    auto num = positive_divisors(a0.re, kCandidateLimit);
    auto den = positive_divisors(an.re, kCandidateLimit);
    if (num.size() * den.size() > kCandidateLimit) {
      throw Error(ErrorCode::FactorizationBoundExceeded, "too many rational root candidates");
    }
    for (const auto& u : num)
      for (const auto& v : den) {
        Scalar q(mpq_class(u, v));
        out.push_back(q);
        out.push_back(-q);
      }
  } else {
    auto num = gaussian_divisors(a0, kCandidateLimit);
    auto den = gaussian_divisors(an, kCandidateLimit);
    if (num.size() * den.size() * 4 > kCandidateLimit) {
      throw Error(ErrorCode::FactorizationBoundExceeded, "too many gaussian root candidates");
    }
    const Scalar units[4] = {Scalar(1), Scalar::imaginary_unit(), Scalar(-1), -Scalar::imaginary_unit()};
    for (const auto& u : num)
      for (const auto& v : den) {
        Scalar q = u.to_scalar() / v.to_scalar();
        for (const auto& unit : units) out.push_back(q * unit);
      }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void add_root(RootSet& set, const Scalar& r, int m) {
  for (auto& [root, mult] : set.roots) {
    if (root == r) {
      mult += m;
      return;
    }
  }
  set.roots.emplace_back(r, m);
}

// Strips the root r from p completely, recording its multiplicity.
void strip_root(RootSet& set, Polynomial& p, const Scalar& r) {
  int m = root_multiplicity(p, r);
  if (m == 0) return;
  const Polynomial f = Polynomial::linear_factor(r);
  for (int k = 0; k < m; ++k) p = divide_exact(p, f);
  add_root(set, r, m);
}

}  // namespace

RootSet exact_roots(const Polynomial& poly, Field field) {
  if (poly.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  RootSet set;
  Polynomial p = poly.monic();
  strip_root(set, p, Scalar(0));

  if (p.degree() >= 3) {
    try {
      for (const auto& cand : root_candidates(p, field)) {
        if (p.degree() < 3) break;
        if (p.evaluate(cand).is_zero()) strip_root(set, p, cand);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FactorizationBoundExceeded) throw;
      // Candidate search unavailable; whatever is left is surfaced below.
    }
  }
  if (p.degree() == 1) {
    add_root(set, -p.coeff(0), 1);
  } else if (p.degree() == 2) {
    const Scalar b = p.coeff(1), c = p.coeff(0);
    Scalar disc = b * b - Scalar(4) * c;
    Scalar s;
    if (sqrt_in_field(disc, field, s)) {
      Scalar r1 = (-b + s) / Scalar(2), r2 = (-b - s) / Scalar(2);
      add_root(set, r1, 1);
      add_root(set, r2, 1);
    } else {
      set.unresolved.push_back(p);
    }
  } else if (p.degree() >= 3) {
    set.unresolved.push_back(p);
  }
  std::sort(set.roots.begin(), set.roots.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return set;
}

std::vector<Scalar> kth_roots_in_field(const Scalar& c, int k, Field field) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (c.is_zero()) return {Scalar(0)};
  if (k == 1) return {c};
  Polynomial p = Polynomial::monomial(Scalar(1), k) - Polynomial(c);
  std::vector<Scalar> out;
  for (const auto& [r, m] : exact_roots(p, field).roots) {
    (void)m;
    out.push_back(r);
  }
  return out;
}

const Scalar& preferred_root(const std::vector<Scalar>& roots) {
  if (roots.empty()) throw Error(ErrorCode::InvalidArgument, "no root to choose from");
  auto key = [](const Scalar& s) { return std::make_pair(sgn(s.re()) > 0, sgn(s.im()) > 0); };
  const Scalar* best = &roots.front();
  for (const auto& r : roots) {
    if (key(r) > key(*best)) best = &r;
  }
  return *best;
}

}  // namespace dynalg
