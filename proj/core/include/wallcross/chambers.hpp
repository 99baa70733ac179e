#ifndef WALLCROSS_CHAMBERS_HPP_
#define WALLCROSS_CHAMBERS_HPP_

// The chamber space: the forward sheet z^2 - x^2 - y^2 = 1, z > 0, of
// normalized self-dual classes, and the walls cz - ax - by = 0 cut out by the
// reductions L(a,b,c) of the bundle with c1 = s + e1 + e2.

#include <span>
#include <utility>
#include <vector>

#include "wallcross/lattice.hpp"

namespace wallcross {

/// Exact rational point on the forward hyperboloid sheet.
class ChamberPoint {
public:
  ChamberPoint() : x_(0), y_(0), z_(1) {}

  /// Throws NotForwardSheet unless z^2 - x^2 - y^2 = 1 and z > 0.
  ChamberPoint(Rational x, Rational y, Rational z);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  friend bool operator==(const ChamberPoint& p, const ChamberPoint& q) {
    return p.x_ == q.x_ && p.y_ == q.y_ && p.z_ == q.z_;
  }

private:
  Rational x_, y_, z_;
};

/// Sign convention for the base orientation. Negative flips every epsilon.
enum class HomologyOrientation { Positive, Negative };

inline int orientation_sign(HomologyOrientation o) {
  return o == HomologyOrientation::Positive ? 1 : -1;
}

/// Wall W(a,b,c) with its transverse orientation sign.
struct Wall {
  Integer a, b, c;
  int eps = 1;

  LatticeClass reduction() const { return {a, b, c}; }
  std::string label() const;  // "W(a,b,c)"

  friend bool operator==(const Wall& x, const Wall& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.eps == y.eps;
  }
  /// Lexicographic by (c, a, b).
  friend bool operator<(const Wall& x, const Wall& y);
};

/// (-1)^(((c-1)/2)^2 - ((a-1)/2)^2 - ((b-1)/2)^2). Throws NotOdd.
int epsilon(const Integer& a, const Integer& b, const Integer& c);

/// Builds a wall after checking c > 0, all odd, c^2 - a^2 - b^2 = -1.
Wall make_wall(const Integer& a, const Integer& b, const Integer& c,
               HomologyOrientation orientation = HomologyOrientation::Positive);

/// Every wall with c <= c_max, sorted by (c, a, b).
std::vector<Wall> enumerate_walls(const Integer& c_max,
                                  HomologyOrientation orientation = HomologyOrientation::Positive);

/// Sorted wall list that can hand out the prefix with c <= bound without
/// re-enumerating. Immutable after construction.
class WallCatalog {
public:
  explicit WallCatalog(const Integer& c_max,
                       HomologyOrientation orientation = HomologyOrientation::Positive);

  const Integer& c_max() const { return c_max_; }
  HomologyOrientation orientation() const { return orientation_; }
  std::span<const Wall> all() const { return walls_; }

  /// Walls with c <= bound. Throws InvalidInput if bound exceeds c_max().
  std::span<const Wall> up_to(const Integer& bound) const;

private:
  Integer c_max_;
  HomologyOrientation orientation_;
  std::vector<Wall> walls_;
};

/// Lift of a rational Poincare-disk point. Throws OutsideDisk if u^2 + v^2 >= 1.
ChamberPoint poincare_to_hyperboloid(const Rational& u, const Rational& v);

/// (x/(1+z), y/(1+z)).
std::pair<Rational, Rational> poincare_coords(const ChamberPoint& p);

/// (x/z, y/z); walls are straight chords in this chart.
std::pair<Rational, Rational> klein_coords(const ChamberPoint& p);

/// c z - a x - b y.
Rational wall_value(const Wall& w, const ChamberPoint& p);

/// Sign of wall_value; throws OnWall when it vanishes.
int wall_sign(const Wall& w, const ChamberPoint& p);

/// A c_max beyond which no wall can separate p0 from p1.
Integer wall_bound(const ChamberPoint& p0, const ChamberPoint& p1);

/// True iff no two distinct walls with c <= c_max meet inside the open disk
/// (checked on Klein chords).
bool walls_disjoint_check(const Integer& c_max);

} // namespace wallcross

#endif
