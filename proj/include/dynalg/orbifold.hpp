#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynalg/rational_function.hpp"

namespace dynalg {

/// Ramification function on the sphere with finite support; nu = 1 off the support.
class Orbifold {
 public:
  Orbifold() = default;
  /// Points must be distinct and every nu >= 2.
  explicit Orbifold(std::vector<std::pair<PointP1, int>> support);

  const std::vector<std::pair<PointP1, int>>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  int nu(const PointP1& z) const;
  std::string to_string() const;  // "0:2,inf:2"

 private:
  std::vector<std::pair<PointP1, int>> support_;  // canonical point order
};

Orbifold parse_orbifold(std::string_view text, Field field = Field::Qi);

/// 2 + sum (1/nu - 1).
Scalar euler_char(const Orbifold& o);

/// One check of the orbifold equations: at a point z (or at every root of an
/// irreducible-over-the-field factor, all sharing the same data).
struct PointCheck {
  std::string where;
  int nu1 = 1;
  int local_degree = 1;
  int nu2 = 1;
  bool ok = true;
};

struct MapCheck {
  bool holds = true;
  std::vector<PointCheck> points;
  std::string reason;  // first failure
};

/// nu2(f(z)) = nu1(z) deg_z f everywhere, including that every critical point lies over supp O2.
MapCheck is_covering_map(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field);
/// nu2(f(z)) divides nu1(z) deg_z f everywhere.
MapCheck is_holomorphic_map(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field);
/// nu2(f(z)) = nu1(z) gcd(deg_z f, nu2(f(z))) everywhere (the divisibility check is included).
MapCheck is_minimal_holomorphic(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field);

struct LattesCheck {
  bool holds = false;
  bool minimal_holomorphic = false;
  Scalar chi;
  bool chi_nonnegative = false;
  MapCheck map;
};

/// A : O -> O minimal holomorphic, with chi(O) >= 0 reported alongside.
LattesCheck check_generalized_lattes(const RationalFunction& a, const Orbifold& o, Field field);

struct CandidateLogEntry {
  Orbifold candidate;
  bool accepted = false;
  std::string reason;
};

struct LattesDetection {
  std::optional<Orbifold> found;
  std::vector<PointP1> candidate_points;
  std::vector<CandidateLogEntry> log;
  std::vector<std::string> warnings;
  std::optional<std::string> special;  // syntactic recognition of z^n / ±T_n
};

/// Bounded search over orbifolds supported on at most four points taken from the
/// forward orbits of field-rational critical values (at most `support_budget`
/// points), with nu in 2..nu_max, chi >= 0 and a good signature (not (n), not (n, m)
/// with n != m). Candidates are tried by largest nu, then chi, ascending.
/// Finding none is not a proof of anything.
LattesDetection detect_generalized_lattes(const RationalFunction& a, int nu_max, int support_budget, Field field);

/// "power map z^n" or "Chebyshev ±T_n" when the polynomial is affinely conjugate
/// to one of them (degree <= 8 for Chebyshev).
std::optional<std::string> recognize_special_polynomial(const RationalFunction& a);

}  // namespace dynalg
