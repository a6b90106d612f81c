#pragma once

#include <string>
#include <vector>

#include "dynalg/rational_function.hpp"
#include "dynalg/roots.hpp"

namespace dynalg {

struct FixedPointRecord {
  RationalFunction map;
  PointP1 point;
  Scalar multiplier;
  bool repelling = false;
  std::string local_notes;
};

struct FixedPointSet {
  std::vector<FixedPointRecord> records;  // finite points in canonical order, then infinity
  /// Factors of numerator(A(z) - z) with no root in the field.
  std::vector<Polynomial> unresolved;
};

FixedPointSet fixed_points(const RationalFunction& a, Field field);

/// A'(z0) at a fixed point, computed in the chart 1/z at infinity.
/// Throws NotAFixedPoint when A(z0) != z0.
Scalar multiplier_at(const RationalFunction& a, const PointP1& z0);

/// "superattracting", "attracting", "indifferent" or "repelling".
std::string classify_multiplier(const Scalar& lambda);

}  // namespace dynalg
