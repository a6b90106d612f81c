#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dynalg/rational_function.hpp"
#include "dynalg/series.hpp"

namespace dynalg {

struct SemiconjugacyTriple {
  RationalFunction a, x, b;
  bool verified = false;
};

/// A∘X == X∘B as reduced rational functions.
SemiconjugacyTriple verify_semiconjugacy(const RationalFunction& a, const RationalFunction& x,
                                         const RationalFunction& b, int degree_cap = kDefaultDegreeCap);
bool verify_commute(const RationalFunction& a, const RationalFunction& b, int degree_cap = kDefaultDegreeCap);

using ExponentPair = std::pair<int, int>;

/// Minimal (l1, l2) with n1^l1 = n2^l2, if any.
std::optional<ExponentPair> degree_compatibility(long n1, long n2);

struct CommonIterateResult {
  std::optional<ExponentPair> pair;
  bool budget_exhausted = false;  // degree-compatible candidates existed beyond the budget
  int candidates_checked = 0;
};

/// Tries the degree-compatible pairs t*(l1, l2) while (deg A)^{t l1} <= budget.
CommonIterateResult common_iterate_search(const RationalFunction& a, const RationalFunction& b, int budget);

/// Minimal (l1, l2), both >= 1, with lambda1^l1 = lambda2^l2 and l1, l2 <= bound.
std::optional<ExponentPair> multiplier_dependence(const Scalar& lambda1, const Scalar& lambda2, int bound = 12);

struct CompatibilityReport {
  Scalar lambda1, lambda2;
  std::optional<ExponentPair> degree_pair;
  std::optional<ExponentPair> multiplier_pair;
  bool independent = false;
  std::string summary;
};

/// The degree and multiplier tests for two repelling fixed points. "independent"
/// is a proof; the opposite verdict only reports that both necessary conditions hold.
CompatibilityReport independence_check(const RationalFunction& a1, const PointP1& z1, const RationalFunction& a2,
                                       const PointP1& z2, int bound = 12);

struct TheoremInput {
  RationalFunction x1, x2, b, a1, a2;
  PointP1 z0;
  int l1 = 1, l2 = 1, d1 = 1, d2 = 1, k = 1;
  std::optional<PointP1> z1, z2;
};

struct TheoremReport {
  std::map<std::string, bool> conditions;  // diagram1, diagram2, repelling_fixed_point, base_values, local_degrees
  std::map<std::string, std::string> details;
  bool all() const;
};

/// Checks each hypothesis of the dependence theorem separately. gcd(d1, d2) must be 1.
TheoremReport verify_theorem_conditions(const TheoremInput& in, int degree_cap = kDefaultDegreeCap);

struct TransportReport {
  bool holds = false;
  bool multiplier_relation = false;
  Scalar lambda_a, lambda_b, scale;
  int local_degree = 0;
  int order = 0;
  TruncatedPowerSeries lhs, rhs;
};

/// For a semiconjugacy A∘X = X∘B and a fixed point z0 of B: compares X∘P_B with
/// P_A(c z^d), d = ord_{z0} X, c the leading coefficient of X∘P_B - X(z0).
TransportReport poincare_transport_check(const RationalFunction& a, const RationalFunction& x,
                                         const RationalFunction& b, const PointP1& z0, int order);

struct BoettcherTransportReport {
  bool holds = false;
  Scalar leading_a, leading_b;
  int terms = 0;
};

/// X∘B_B against B_A(z^{deg X}) through `terms` Laurent coefficients, B_A taken
/// with the leading coefficient that X∘B_B forces.
BoettcherTransportReport transport_boettcher_check(const Polynomial& a, const Polynomial& x, const Polynomial& b,
                                                   int terms, Field field);

}  // namespace dynalg
