#include "dynalg/dynsys.hpp"

#include <algorithm>
#include <numeric>

#include "dynalg/factor.hpp"
#include "dynalg/fixed_points.hpp"
#include "dynalg/solvers.hpp"

namespace dynalg {

SemiconjugacyTriple verify_semiconjugacy(const RationalFunction& a, const RationalFunction& x,
                                         const RationalFunction& b, int degree_cap) {
  return {a, x, b, compose(a, x, degree_cap) == compose(x, b, degree_cap)};
}

bool verify_commute(const RationalFunction& a, const RationalFunction& b, int degree_cap) {
  return compose(a, b, degree_cap) == compose(b, a, degree_cap);
}

namespace {

using ExponentMap = std::map<std::pair<mpz_class, mpz_class>, long>;

struct MultiplicativeData {
  ExponentMap exponents;
  int unit_power = 0;  // unit = i^unit_power
};

MultiplicativeData rational_data(const mpq_class& q) {
  MultiplicativeData d;
  d.unit_power = sgn(q) < 0 ? 2 : 0;
  for (const auto& [p, e] : factor_integer(q.get_num())) d.exponents[{p, 0}] += e;
  for (const auto& [p, e] : factor_integer(q.get_den())) d.exponents[{p, 0}] -= e;
  return d;
}

MultiplicativeData gaussian_data(const Scalar& s) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), s.re().get_den_mpz_t(), s.im().get_den_mpz_t());
  const GaussianInt g{s.re().get_num() * (l / s.re().get_den()), s.im().get_num() * (l / s.im().get_den())};
  MultiplicativeData d;
  const auto fg = factor_gaussian(g);
  const auto fl = factor_gaussian(GaussianInt{l, 0});
  d.unit_power = ((fg.unit_power - fl.unit_power) % 4 + 4) % 4;
  for (const auto& [p, e] : fg.primes) d.exponents[{p.re, p.im}] += e;
  for (const auto& [p, e] : fl.primes) d.exponents[{p.re, p.im}] -= e;
  for (auto it = d.exponents.begin(); it != d.exponents.end();) it = it->second == 0 ? d.exponents.erase(it) : ++it;
  return d;
}

// Minimal positive (a, b) with a*v1 = b*v2, if the vectors are positively proportional.
std::optional<std::pair<long, long>> proportional(const ExponentMap& v1, const ExponentMap& v2) {
  if (v1.empty() || v2.empty() || v1.size() != v2.size()) return std::nullopt;
  std::optional<std::pair<long, long>> ratio;
  for (auto i1 = v1.begin(), i2 = v2.begin(); i1 != v1.end(); ++i1, ++i2) {
    if (i1->first != i2->first) return std::nullopt;
    if ((i1->second > 0) != (i2->second > 0)) return std::nullopt;
    long e1 = std::labs(i1->second), e2 = std::labs(i2->second);
    const long g = std::gcd(e1, e2);
    std::pair<long, long> r{e2 / g, e1 / g};
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

}  // namespace

std::optional<ExponentPair> degree_compatibility(long n1, long n2) {
  if (n1 < 2 || n2 < 2) throw Error(ErrorCode::InvalidArgument, "degrees must be at least 2");
  auto r = proportional(rational_data(mpq_class(n1)).exponents, rational_data(mpq_class(n2)).exponents);
  if (!r) return std::nullopt;
  return ExponentPair{static_cast<int>(r->first), static_cast<int>(r->second)};
}

std::optional<ExponentPair> multiplier_dependence(const Scalar& lambda1, const Scalar& lambda2, int bound) {
  if (lambda1.is_zero() || lambda2.is_zero()) throw Error(ErrorCode::PreconditionFailed, "multipliers must be nonzero");
  if (!lambda1.exceeds_unit_modulus() || !lambda2.exceeds_unit_modulus()) {
    throw Error(ErrorCode::PreconditionFailed, "multipliers must have modulus greater than 1");
  }
  const bool real = lambda1.is_real() && lambda2.is_real();
  const auto d1 = real ? rational_data(lambda1.re()) : gaussian_data(lambda1);
  const auto d2 = real ? rational_data(lambda2.re()) : gaussian_data(lambda2);
  auto r = proportional(d1.exponents, d2.exponents);
  if (!r) return std::nullopt;
  // Smallest multiple t of (a, b) that also matches the units.
  for (long t : {1L, 2L, 4L}) {
    const long l1 = t * r->first, l2 = t * r->second;
    if (((d1.unit_power * l1 - d2.unit_power * l2) % 4 + 4) % 4 != 0) continue;
    if (l1 > bound || l2 > bound) return std::nullopt;
    return ExponentPair{static_cast<int>(l1), static_cast<int>(l2)};
  }
  return std::nullopt;
}

CommonIterateResult common_iterate_search(const RationalFunction& a, const RationalFunction& b, int budget) {
  if (a.degree() < 2 || b.degree() < 2) throw Error(ErrorCode::PreconditionFailed, "common iterates need degree >= 2");
  CommonIterateResult out;
  auto base = degree_compatibility(a.degree(), b.degree());
  if (!base) return out;
  for (int t = 1;; ++t) {
    const int l1 = t * base->first, l2 = t * base->second;
    mpz_class deg;
    mpz_ui_pow_ui(deg.get_mpz_t(), static_cast<unsigned long>(a.degree()), static_cast<unsigned long>(l1));
    if (deg > budget) {
      out.budget_exhausted = true;
      return out;
    }
    ++out.candidates_checked;
    if (iterate(a, l1, budget) == iterate(b, l2, budget)) {
      out.pair = ExponentPair{l1, l2};
      return out;
    }
  }
}

CompatibilityReport independence_check(const RationalFunction& a1, const PointP1& z1, const RationalFunction& a2,
                                       const PointP1& z2, int bound) {
  CompatibilityReport r;
  r.lambda1 = multiplier_at(a1, z1);
  r.lambda2 = multiplier_at(a2, z2);
  if (!r.lambda1.exceeds_unit_modulus() || !r.lambda2.exceeds_unit_modulus()) {
    throw Error(ErrorCode::PreconditionFailed, "both fixed points must be repelling");
  }
  r.degree_pair = degree_compatibility(a1.degree(), a2.degree());
  r.multiplier_pair = multiplier_dependence(r.lambda1, r.lambda2, bound);
  r.independent = !r.degree_pair || !r.multiplier_pair;
  r.summary = r.independent ? "independent (proved by the degree/multiplier criterion)"
                            : "compatibility witnesses found (dependence possible, not established)";
  return r;
}

bool TheoremReport::all() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& kv) { return kv.second; });
}

TheoremReport verify_theorem_conditions(const TheoremInput& in, int degree_cap) {
  if (std::gcd(in.d1, in.d2) != 1) {
    throw Error(ErrorCode::PreconditionFailed,
                "gcd(d1, d2) = " + std::to_string(std::gcd(in.d1, in.d2)) + " must be 1");
  }
  if (in.l1 < 1 || in.l2 < 1 || in.d1 < 1 || in.d2 < 1 || in.k < 1) {
    throw Error(ErrorCode::InvalidArgument, "iterate counts, d1, d2 and k must be positive");
  }
  TheoremReport r;
  r.conditions["diagram1"] = compose(iterate(in.a1, in.l1, degree_cap), in.x1, degree_cap) == compose(in.x1, in.b, degree_cap);
  r.conditions["diagram2"] = compose(iterate(in.a2, in.l2, degree_cap), in.x2, degree_cap) == compose(in.x2, in.b, degree_cap);

  bool rep = in.b.evaluate(in.z0) == in.z0;
  if (rep) {
    const Scalar mu = multiplier_at(in.b, in.z0);
    r.details["multiplier_b"] = mu.to_string();
    rep = mu.exceeds_unit_modulus();
  }
  r.conditions["repelling_fixed_point"] = rep;

  auto point_ok = [&](const RationalFunction& x, const RationalFunction& a, const std::optional<PointP1>& want,
                      const std::string& tag) {
    const PointP1 v = x.evaluate(in.z0);
    r.details[tag] = v.to_string();
    if (want && !(*want == v)) return false;
    if (!(a.evaluate(v) == v)) return false;
    const Scalar lam = multiplier_at(a, v);
    r.details["multiplier_" + tag] = lam.to_string();
    return lam.exceeds_unit_modulus();
  };
  const bool p1 = point_ok(in.x1, in.a1, in.z1, "z1");
  const bool p2 = point_ok(in.x2, in.a2, in.z2, "z2");
  r.conditions["base_values"] = p1 && p2;

  const int o1 = local_degree(in.x1, in.z0), o2 = local_degree(in.x2, in.z0);
  r.details["ord_x1"] = std::to_string(o1);
  r.details["ord_x2"] = std::to_string(o2);
  r.conditions["local_degrees"] = o1 == in.d1 * in.k && o2 == in.d2 * in.k;
  return r;
}

TransportReport poincare_transport_check(const RationalFunction& a, const RationalFunction& x,
                                         const RationalFunction& b, const PointP1& z0, int order) {
  if (!verify_semiconjugacy(a, x, b).verified) {
    throw Error(ErrorCode::PreconditionFailed, "A∘X != X∘B, nothing to transport");
  }
  TransportReport r;
  r.order = order;
  const PointP1 z1 = x.evaluate(z0);
  r.local_degree = local_degree(x, z0);
  r.lambda_b = multiplier_at(b, z0);
  r.lambda_a = multiplier_at(a, z1);
  r.multiplier_relation = r.lambda_a == r.lambda_b.pow(r.local_degree);
  const TruncatedPowerSeries pb = poincare_series(b, z0, order);
  const TruncatedPowerSeries pa = poincare_series(a, z1, order);
  r.lhs = transport_poincare(x, pb);
  r.scale = r.lhs[r.local_degree];
  r.rhs = series_substitute_power(rescale(pa, r.scale), r.local_degree);
  r.holds = r.multiplier_relation && r.lhs == r.rhs;
  return r;
}

BoettcherTransportReport transport_boettcher_check(const Polynomial& a, const Polynomial& x, const Polynomial& b,
                                                   int terms, Field field) {
  if (!verify_semiconjugacy(a, x, b).verified) {
    throw Error(ErrorCode::PreconditionFailed, "A∘X != X∘B for the Böttcher transport");
  }
  if (x.degree() < 1) throw Error(ErrorCode::PreconditionFailed, "X must be nonconstant");
  const int dx = x.degree();
  BoettcherTransportReport r;
  r.terms = terms;
  const BoettcherSeries bb = boettcher_series(b, terms + dx, field);
  r.leading_b = bb.a[0];
  r.leading_a = x.leading() * bb.a[0].pow(dx);
  const BoettcherSeries ba = boettcher_series(a, terms, field, r.leading_a);
  // Exponents in w = 1/z run from -dx through -dx + terms - 1.
  const int top = -dx + terms - 1;
  const LaurentSeries lhs = evaluate_polynomial(x, bb.in_reciprocal_variable(), top);
  const LaurentSeries rhs = ba.in_reciprocal_variable().substitute_power(dx);
  r.holds = lhs.plus(rhs.scaled(Scalar(-1))).vanishes_through(top);
  return r;
}

}  // namespace dynalg
