#ifndef WALLCROSS_JSON_IO_HPP_
#define WALLCROSS_JSON_IO_HPP_

// Canonical JSON for the library's values. Keys are emitted in a fixed
// insertion order, rationals as exact "p/q" strings, and integers as JSON
// numbers while they fit in 64 bits (decimal strings beyond that).

#include <string>
#include <vector>

#include "json.hpp"

#include "wallcross/chambers.hpp"
#include "wallcross/crossing.hpp"
#include "wallcross/lattice.hpp"
#include "wallcross/swside.hpp"

namespace wallcross {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& n);
Json to_json(const Rational& q);
Json to_json(const LatticeClass& x);
Json to_json(const Isometry& m);
Json to_json(const ChamberPoint& p);
Json to_json(const Wall& w);
Json to_json(const std::vector<Wall>& walls);
Json to_json(const Crossing& c);
Json to_json(const CrossingReport& report);
Json to_json(const SegmentCrossing& c);
Json to_json(const InvariantExpression& e);
Json to_json(const SwResult& r);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
LatticeClass lattice_class_from_json(const Json& j);
Isometry isometry_from_json(const Json& j);
ChamberPoint chamber_point_from_json(const Json& j);
Wall wall_from_json(const Json& j);
std::vector<Wall> walls_from_json(const Json& j);
CrossingReport crossing_report_from_json(const Json& j);
InvariantExpression invariant_from_json(const Json& j);

/// Compact canonical text.
template <typename T>
std::string emit_json(const T& value) {
  return to_json(value).dump();
}

} // namespace wallcross

#endif
