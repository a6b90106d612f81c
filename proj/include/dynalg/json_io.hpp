#pragma once

#include <json.hpp>

#include "dynalg/algdep.hpp"
#include "dynalg/dynsys.hpp"
#include "dynalg/fixed_points.hpp"
#include "dynalg/orbifold.hpp"
#include "dynalg/series.hpp"

namespace dynalg {

using Json = nlohmann::json;

// Exact values are strings; counts are plain numbers. Object keys come out
// sorted, so dumps are canonical.
Json to_json(const Scalar& s);
Json to_json(const PointP1& p);
Json to_json(const RationalFunction& r);
Json to_json(const FixedPointRecord& r);
Json to_json(const FixedPointSet& s);
Json to_json(const TruncatedPowerSeries& s);
Json to_json(const BoettcherSeries& b);
Json to_json(const BivariatePolynomial& f);
Json to_json(const DependencyCertificate& c);
Json to_json(const Orbifold& o);
Json to_json(const MapCheck& m);
Json to_json(const LattesCheck& c);
Json to_json(const LattesDetection& d);
Json to_json(const CompatibilityReport& r);
Json to_json(const TheoremReport& r);
Json to_json(const TransportReport& r);
Json to_json(const BoettcherTransportReport& r);

Json error_json(const std::exception& e);

}  // namespace dynalg
