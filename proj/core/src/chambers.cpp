#include "wallcross/chambers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

// Positive odd solutions of a^2 + b^2 = c^2 + 1 for one odd c, found with a
// two-pointer sweep (a increasing, b decreasing). Since both are odd and
// a^2 + b^2 = c^2 + 1, each lies in [1, c].
template <typename Int>
void positive_solutions(const Int& c, std::vector<std::pair<Int, Int>>& out) {
  const Int target = c * c + 1;
  Int a = 1;
  Int b = c;
  while (a <= c && b >= 1) {
    const Int sum = a * a + b * b;
    if (sum == target) {
      out.emplace_back(a, b);
      a += 2;
      b -= 2;
    } else if (sum < target) {
      a += 2;
    } else {
      b -= 2;
    }
  }
}

void push_signed(std::vector<Wall>& walls, const Integer& a, const Integer& b,
                 const Integer& c, int orient) {
  for (int sa : {-1, 1})
    for (int sb : {-1, 1}) {
      Integer sa_a = sa * a;
      Integer sb_b = sb * b;
      walls.push_back(Wall{sa_a, sb_b, c, orient * epsilon(sa_a, sb_b, c)});
    }
}

} // namespace

ChamberPoint::ChamberPoint(Rational x, Rational y, Rational z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (z_ <= 0 || z_ * z_ - x_ * x_ - y_ * y_ != 1)
    throw Error(ErrorKind::NotForwardSheet,
                "(" + rational_str(x_) + "," + rational_str(y_) + "," + rational_str(z_) +
                    ") is not on the forward sheet");
}

std::string Wall::label() const {
  return "W(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

bool operator<(const Wall& x, const Wall& y) {
  if (x.c != y.c) return x.c < y.c;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

int epsilon(const Integer& a, const Integer& b, const Integer& c) {
  if (!parity(a) || !parity(b) || !parity(c))
    throw Error(ErrorKind::NotOdd,
                "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ") has an even entry");
  // Exact division: odd minus one is even, including for negative values.
  Integer hc = (c - 1) / 2;
  Integer ha = (a - 1) / 2;
  Integer hb = (b - 1) / 2;
  Integer exponent = hc * hc - ha * ha - hb * hb;
  return parity(exponent) ? -1 : 1;
}

Wall make_wall(const Integer& a, const Integer& b, const Integer& c,
               HomologyOrientation orientation) {
  if (c <= 0 || c * c - a * a - b * b != -1)
    throw Error(ErrorKind::InvalidInput,
                "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() +
                    ") is not a reduction: need c > 0 and c^2 - a^2 - b^2 = -1");
  return Wall{a, b, c, orientation_sign(orientation) * epsilon(a, b, c)};
}

std::vector<Wall> enumerate_walls(const Integer& c_max, HomologyOrientation orientation) {
  std::vector<Wall> walls;
  const int orient = orientation_sign(orientation);
  // Native arithmetic is exact while 2 c^2 fits in int64.
  const Integer native_limit = Integer(1) << 31;
  for (Integer c = 1; c <= c_max; c += 2) {
    if (c < native_limit) {
      std::vector<std::pair<std::int64_t, std::int64_t>> sols;
      positive_solutions<std::int64_t>(c.get_si(), sols);
      for (const auto& [a, b] : sols)
        push_signed(walls, Integer(static_cast<long>(a)), Integer(static_cast<long>(b)), c, orient);
    } else {
      std::vector<std::pair<Integer, Integer>> sols;
      positive_solutions<Integer>(c, sols);
      for (const auto& [a, b] : sols) push_signed(walls, a, b, c, orient);
    }
  }
  std::sort(walls.begin(), walls.end());
  return walls;
}

WallCatalog::WallCatalog(const Integer& c_max, HomologyOrientation orientation)
    : c_max_(c_max), orientation_(orientation), walls_(enumerate_walls(c_max, orientation)) {}

std::span<const Wall> WallCatalog::up_to(const Integer& bound) const {
  if (bound > c_max_)
    throw Error(ErrorKind::InvalidInput,
                "catalog holds walls up to c = " + c_max_.get_str() + ", requested " + bound.get_str());
  auto end = std::upper_bound(walls_.begin(), walls_.end(), bound,
                              [](const Integer& v, const Wall& w) { return v < w.c; });
  return {walls_.data(), static_cast<std::size_t>(end - walls_.begin())};
}

ChamberPoint poincare_to_hyperboloid(const Rational& u, const Rational& v) {
  Rational r2 = u * u + v * v;
  if (r2 >= 1)
    throw Error(ErrorKind::OutsideDisk,
                "(" + rational_str(u) + "," + rational_str(v) + ") is not inside the unit disk");
  Rational d = 1 - r2;
  return ChamberPoint(Rational(2 * u / d), Rational(2 * v / d), Rational((1 + r2) / d));
}

std::pair<Rational, Rational> poincare_coords(const ChamberPoint& p) {
  Rational d = 1 + p.z();
  return {Rational(p.x() / d), Rational(p.y() / d)};
}

std::pair<Rational, Rational> klein_coords(const ChamberPoint& p) {
  return {Rational(p.x() / p.z()), Rational(p.y() / p.z())};
}

Rational wall_value(const Wall& w, const ChamberPoint& p) {
  return w.c * p.z() - w.a * p.x() - w.b * p.y();
}

int wall_sign(const Wall& w, const ChamberPoint& p) {
  const int s = sgn(wall_value(w, p));
  if (s == 0)
    throw Error(ErrorKind::OnWall, "point lies on " + w.label());
  return s;
}

Integer wall_bound(const ChamberPoint& p0, const ChamberPoint& p1) {
  // Klein radius^2 of each endpoint; the segment stays inside the larger disk.
  Rational r2 = std::max(Rational((p0.x() * p0.x() + p0.y() * p0.y()) / (p0.z() * p0.z())),
                         Rational((p1.x() * p1.x() + p1.y() * p1.y()) / (p1.z() * p1.z())));
  // The chord of W(a,b,c) sits at distance c / sqrt(c^2 + 1) from the origin,
  // so it meets the closed r-disk only if c^2 <= r^2 / (1 - r^2).
  Rational q = r2 / (1 - r2);
  return isqrt(floor_of(q));
}

bool walls_disjoint_check(const Integer& c_max) {
  const std::vector<Wall> walls = enumerate_walls(c_max);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      const Wall& p = walls[i];
      const Wall& q = walls[j];
      // Chords a u + b v = c.
      Integer det = p.a * q.b - q.a * p.b;
      if (det == 0) continue;
      Integer un = p.c * q.b - q.c * p.b;
      Integer vn = p.a * q.c - q.a * p.c;
      if (un * un + vn * vn < det * det) return false;
    }
  }
  return true;
}

} // namespace wallcross
