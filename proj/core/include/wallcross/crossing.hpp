#ifndef WALLCROSS_CROSSING_HPP_
#define WALLCROSS_CROSSING_HPP_

// Signed wall-crossing counts along a path from p0 to M p0 and the formal
// 1-parameter invariant 2 (gamma . W) D_X built from them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/chambers.hpp"
#include "wallcross/lattice.hpp"

namespace wallcross {

/// Each transverse crossing of a wall contributes +-2 times the degree-0
/// invariant of the other summand: the Euler number of T S^2.
inline constexpr int kGluingMultiplicity = 2;

/// Action of a lattice isometry on a chamber point (x, y, z) ~ x e1 + y e2 + z s.
/// Throws NotForwardSheet if the image lands on the backward sheet.
ChamberPoint act(const Isometry& m, const ChamberPoint& p);

struct Crossing {
  Wall wall;
  int direction = 0;     // +1 when the path ends on the side where cz-ax-by > 0
  int contribution = 0;  // eps * direction

  int doubled() const { return kGluingMultiplicity * contribution; }
};

struct CrossingReport {
  std::vector<Crossing> crossings;  // sorted by wall
  long gamma_dot_W = 0;
  ChamberPoint start;
  ChamberPoint end;
};

/// Optional settings shared by the crossing computations. A catalog, when
/// supplied, must have been built with the same orientation and reach at
/// least wall_bound(start, end); otherwise walls are enumerated on the fly.
struct CrossingOptions {
  HomologyOrientation orientation = HomologyOrientation::Positive;
  const WallCatalog* catalog = nullptr;
};

/// Net crossings from p0 to M p0: every wall separating the endpoints.
/// Throws NonGenericPoint if an endpoint lies on a wall.
CrossingReport separation_crossings(const Isometry& m, const ChamberPoint& p0,
                                    const CrossingOptions& options = {});

/// Separation count between two arbitrary points.
CrossingReport separation_crossings(const ChamberPoint& p0, const ChamberPoint& p1,
                                    const CrossingOptions& options = {});

struct SegmentCrossing {
  Wall wall;
  Rational t;  // Klein-chart segment parameter in (0, 1)
  int direction = 0;
};

/// Crossings of the straight Klein segment p0 -> p1, ordered along the
/// segment. Throws DegenerateSegment if p0 == p1 and NonGenericPoint if an
/// endpoint is on a wall.
std::vector<SegmentCrossing> segment_crossings_oracle(const ChamberPoint& p0,
                                                      const ChamberPoint& p1,
                                                      const CrossingOptions& options = {});

/// Formal combination of manifold symbols over Z or Z2.
class InvariantExpression {
public:
  explicit InvariantExpression(CoefficientRing ring = CoefficientRing::Z) : ring_(ring) {}
  InvariantExpression(CoefficientRing ring, std::map<std::string, Integer> terms);

  CoefficientRing ring() const { return ring_; }
  const std::map<std::string, Integer>& terms() const { return terms_; }

  /// Coefficient of `symbol`, zero if absent.
  Integer coefficient(const std::string& symbol) const;

  /// The same expression read in Z2.
  InvariantExpression reduced_mod2() const;

  friend bool operator==(const InvariantExpression&, const InvariantExpression&) = default;

private:
  void normalize();

  CoefficientRing ring_;
  std::map<std::string, Integer> terms_;
};

InvariantExpression invariant_add(const InvariantExpression& e1, const InvariantExpression& e2);
InvariantExpression invariant_negate(const InvariantExpression& e);

/// Substitutes values for the symbols. The result is reduced to {0, 1} in Z2.
/// Throws MissingSymbol.
Integer evaluate(const InvariantExpression& e, const std::map<std::string, Integer>& values);

/// The expression {symbol: 2 gamma_dot_W} in ring ym_ring(M, c).
InvariantExpression one_param_invariant(const Isometry& m, const ChamberPoint& p0,
                                        const std::string& symbol, const LatticeClass& w2_lift,
                                        const CrossingOptions& options = {});

/// Same, from a report already computed for M.
InvariantExpression one_param_invariant(const CrossingReport& report, CoefficientRing ring,
                                        const std::string& symbol);

} // namespace wallcross

#endif
