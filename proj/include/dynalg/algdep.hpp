#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dynalg/bivariate.hpp"
#include "dynalg/rational_function.hpp"
#include "dynalg/series.hpp"

namespace dynalg {

enum class Verdict { Relation, NoRelationUpTo };

/// Outcome of a relation search. A NoRelationUpTo verdict only says that no
/// relation of the given bidegree survives through the given order.
struct DependencyCertificate {
  Verdict verdict = Verdict::NoRelationUpTo;
  std::optional<BivariatePolynomial> relation;
  int m = 0;
  int n = 0;
  int order = 0;
  int verification_order = 0;
  Scalar scale{1};        // s2 was replaced by s2(scale * z)
  std::size_t rank = 0;   // rank of the constraint matrix (columns before the relation)
  std::size_t columns = 0;
};

struct RelationOptions {
  std::vector<Scalar> scales{Scalar(1)};
  int verification_extra = 10;
};

/// Looks for f of bidegree <= (m, n) with f(s1, s2) = 0 mod z^{N+1}, using the
/// monomials x^i y^j in graded-lex order. The first dependent column gives the
/// relation of smallest graded-lex leading monomial; it is re-checked at
/// N' = min(N + extra, available order) and a failure there raises InsufficientOrder.
DependencyCertificate find_relation(const LaurentSeries& s1, const LaurentSeries& s2, int m, int n, int order,
                                    const RelationOptions& options = {});
DependencyCertificate find_relation(const TruncatedPowerSeries& s1, const TruncatedPowerSeries& s2, int m, int n,
                                    int order, const RelationOptions& options = {});

/// Graded-lex list of exponent pairs (i, j), i <= m, j <= n.
std::vector<std::pair<int, int>> graded_lex_monomials(int m, int n);

/// f(X1(t), X2(t)) as a rational function of t.
RationalFunction substitute(const BivariatePolynomial& f, const RationalFunction& x1, const RationalFunction& x2);

/// Res_t(num X1 - x den X1, num X2 - y den X2), before content removal.
BivariatePolynomial parametrization_resultant(const RationalFunction& x1, const RationalFunction& x2);

/// The reduced implicit equation of the image of t -> (X1(t), X2(t)): the
/// resultant with x- and y-content removed and the fiber power taken out.
BivariatePolynomial implicitize(const RationalFunction& x1, const RationalFunction& x2);

struct OneToOneReport {
  bool one_to_one = false;
  int fiber_degree = 0;
};

/// d = deg X1 / deg_y f = deg X2 / deg_x f; throws InconsistentDegrees when the
/// two ratios disagree or are not integral.
OneToOneReport is_generically_one_to_one(const RationalFunction& x1, const RationalFunction& x2,
                                         const BivariatePolynomial& f);

/// Whether (A1, A2) maps the curve f = 0 into itself.
bool verify_invariant_curve(const BivariatePolynomial& f, const RationalFunction& a1, const RationalFunction& a2,
                            const std::optional<std::pair<RationalFunction, RationalFunction>>& param = std::nullopt);

}  // namespace dynalg
