#include "dynalg/fixed_points.hpp"

namespace dynalg {

std::string classify_multiplier(const Scalar& lambda) {
  if (lambda.is_zero()) return "superattracting";
  const mpq_class n = lambda.norm2();
  if (n < 1) return "attracting";
  if (n == 1) return "indifferent";
  return "repelling";
}

Scalar multiplier_at(const RationalFunction& a, const PointP1& z0) {
  if (!(a.evaluate(z0) == z0)) {
    throw Error(ErrorCode::NotAFixedPoint, z0.to_string() + " is not a fixed point of " + a.to_string());
  }
  if (z0.is_infinity()) return conjugate_by_reciprocal(a).derivative().evaluate_finite(Scalar(0));
  return a.derivative().evaluate_finite(z0.value());
}

namespace {

FixedPointRecord make_record(const RationalFunction& a, const PointP1& p) {
  FixedPointRecord r{a, p, multiplier_at(a, p), false, classify_multiplier(multiplier_at(a, p))};
  r.repelling = r.multiplier.exceeds_unit_modulus();
  if (p.is_infinity()) r.local_notes += "; multiplier taken in the chart 1/z";
  return r;
}

}  // namespace

FixedPointSet fixed_points(const RationalFunction& a, Field field) {
  if (a.degree() < 1) throw Error(ErrorCode::PreconditionFailed, "fixed points of a constant map");
  Polynomial eq = a.numerator() - Polynomial::x() * a.denominator();
  if (eq.is_zero()) throw Error(ErrorCode::PreconditionFailed, "every point is fixed by the identity map");
  FixedPointSet out;
  RootSet roots = exact_roots(eq, field);
  for (const auto& [z, mult] : roots.roots) {
    (void)mult;
    out.records.push_back(make_record(a, PointP1(z)));
  }
  out.unresolved = roots.unresolved;
  if (a.numerator().degree() > a.denominator().degree()) out.records.push_back(make_record(a, PointP1::infinity()));
  return out;
}

}  // namespace dynalg
