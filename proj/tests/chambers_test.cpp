#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "wallcross/chambers.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/sampling.hpp"

namespace wallcross {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

ChamberPoint point(long x, long y, long z) { return ChamberPoint(x, y, z); }

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon(1, 1, 1), 1);
  EXPECT_EQ(epsilon(7, 11, 13), 1);
  EXPECT_EQ(epsilon(-1, -1, 1), 1);
  EXPECT_EQ(epsilon(-1, 1, 1), -1);
  EXPECT_EQ(epsilon(1, 3, 3), 1);
}

TEST(Epsilon, RejectsEvenEntries) {
  EXPECT_EQ(kind_of([] { epsilon(2, 1, 1); }), ErrorKind::NotOdd);
  EXPECT_EQ(kind_of([] { epsilon(1, 0, 1); }), ErrorKind::NotOdd);
  EXPECT_EQ(kind_of([] { epsilon(1, 1, 4); }), ErrorKind::NotOdd);
}

TEST(Epsilon, AgreesWithBruteForceSignOnWalls) {
  for (const auto& [c, a, b] : oracle::brute_force_walls(61))
    EXPECT_EQ(epsilon(a, b, c), oracle::brute_epsilon(a, b, c)) << a << "," << b << "," << c;
}

TEST(EnumerateWalls, SmallCases) {
  EXPECT_TRUE(enumerate_walls(0).empty());
  const auto one = enumerate_walls(1);
  ASSERT_EQ(one.size(), 4u);
  EXPECT_EQ(one[0].reduction(), LatticeClass(-1, -1, 1));
  EXPECT_EQ(one[3].reduction(), LatticeClass(1, 1, 1));
  const auto three = enumerate_walls(3);
  ASSERT_EQ(three.size(), 12u);
  std::set<std::tuple<long, long, long>> got;
  for (const auto& w : three) got.emplace(w.a.get_si(), w.b.get_si(), w.c.get_si());
  for (long sa : {-1, 1})
    for (long sb : {-1, 1}) {
      EXPECT_TRUE(got.count({sa, sb, 1}));
      EXPECT_TRUE(got.count({sa, 3 * sb, 3}));
      EXPECT_TRUE(got.count({3 * sa, sb, 3}));
    }
  // Even c_max includes nothing new.
  EXPECT_EQ(enumerate_walls(2).size(), 4u);
}

TEST(EnumerateWalls, MatchesBruteForce) {
  for (long c_max : {1L, 5L, 13L, 45L, 101L}) {
    const auto walls = enumerate_walls(c_max);
    const auto brute = oracle::brute_force_walls(c_max);
    ASSERT_EQ(walls.size(), brute.size()) << c_max;
    for (std::size_t i = 0; i < walls.size(); ++i) {
      const auto& [c, a, b] = brute[i];
      EXPECT_EQ(walls[i].a, a);
      EXPECT_EQ(walls[i].b, b);
      EXPECT_EQ(walls[i].c, c);
    }
  }
}

TEST(EnumerateWalls, EveryWallSatisfiesItsInvariants) {
  for (const auto& w : enumerate_walls(201)) {
    EXPECT_GT(w.c, 0);
    EXPECT_TRUE(parity(w.a) && parity(w.b) && parity(w.c));
    EXPECT_EQ(w.c * w.c - w.a * w.a - w.b * w.b, -1);
    EXPECT_EQ(w.eps, epsilon(w.a, w.b, w.c));
  }
}

TEST(EnumerateWalls, NegativeOrientationFlipsEverySign) {
  const auto pos = enumerate_walls(25);
  const auto neg = enumerate_walls(25, HomologyOrientation::Negative);
  ASSERT_EQ(pos.size(), neg.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    EXPECT_EQ(pos[i].reduction(), neg[i].reduction());
    EXPECT_EQ(pos[i].eps, -neg[i].eps);
  }
}

TEST(WallCatalog, PrefixByC) {
  const WallCatalog catalog(13);
  EXPECT_EQ(catalog.up_to(3).size(), 12u);
  EXPECT_EQ(catalog.up_to(0).size(), 0u);
  EXPECT_EQ(catalog.up_to(13).size(), catalog.all().size());
  EXPECT_EQ(std::vector<Wall>(catalog.up_to(7).begin(), catalog.up_to(7).end()), enumerate_walls(7));
  EXPECT_EQ(kind_of([&] { catalog.up_to(15); }), ErrorKind::InvalidInput);
}

TEST(MakeWall, Validates) {
  EXPECT_EQ(make_wall(7, 11, 13).eps, 1);
  EXPECT_EQ(make_wall(-1, 1, 1).eps, -1);
  EXPECT_EQ(kind_of([] { make_wall(1, 1, 3); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { make_wall(-1, -1, -1); }), ErrorKind::InvalidInput);
}

TEST(ChamberPoint, SheetValidation) {
  EXPECT_NO_THROW(point(4, 8, 9));
  EXPECT_EQ(kind_of([] { point(0, 0, -1); }), ErrorKind::NotForwardSheet);
  EXPECT_EQ(kind_of([] { point(1, 1, 1); }), ErrorKind::NotForwardSheet);
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_to_hyperboloid(0, 0), point(0, 0, 1));
  EXPECT_EQ(poincare_to_hyperboloid(Rational(-1, 2), Rational(-1, 2)), point(-2, -2, 3));
  EXPECT_EQ(kind_of([] { poincare_to_hyperboloid(1, 0); }), ErrorKind::OutsideDisk);
  EXPECT_EQ(kind_of([] { poincare_to_hyperboloid(Rational(3, 5), Rational(4, 5)); }), ErrorKind::OutsideDisk);
}

TEST(Poincare, RoundTripOnRandomDiskPoints) {
  InstanceSampler sampler(7);
  for (int i = 0; i < 300; ++i) {
    const long q1 = sampler.uniform(1, 50), q2 = sampler.uniform(1, 50);
    Rational u(sampler.uniform(-q1, q1), q1), v(sampler.uniform(-q2, q2), q2);
    u.canonicalize();
    v.canonicalize();
    if (u * u + v * v >= 1) continue;
    const ChamberPoint p = poincare_to_hyperboloid(u, v);
    EXPECT_EQ(p.z() * p.z() - p.x() * p.x() - p.y() * p.y(), 1);
    const auto [u2, v2] = poincare_coords(p);
    EXPECT_EQ(u2, u);
    EXPECT_EQ(v2, v);
  }
}

TEST(Klein, Examples) {
  EXPECT_EQ(klein_coords(point(0, 0, 1)), std::make_pair(Rational(0), Rational(0)));
  EXPECT_EQ(klein_coords(point(-2, -2, 3)), std::make_pair(Rational(-2, 3), Rational(-2, 3)));
  EXPECT_EQ(klein_coords(point(4, 8, 9)), std::make_pair(Rational(4, 9), Rational(8, 9)));
  const auto [u, v] = klein_coords(point(18, 30, 35));
  EXPECT_LT(u * u + v * v, 1);
}

TEST(WallSign, Examples) {
  EXPECT_EQ(wall_sign(make_wall(1, 1, 1), point(0, 0, 1)), 1);
  EXPECT_EQ(wall_sign(make_wall(1, 1, 1), point(18, 30, 35)), -1);
  EXPECT_EQ(wall_sign(make_wall(-1, -1, 1), point(-2, -2, 3)), -1);
  // (1, 1/2, 3/2) satisfies 3/2 - 1 - 1/2 = 0.
  const ChamberPoint on(Rational(1), Rational(1, 2), Rational(3, 2));
  EXPECT_EQ(kind_of([&] { wall_sign(make_wall(1, 1, 1), on); }), ErrorKind::OnWall);
}

TEST(WallSign, InvariantUnderPositiveRescaling) {
  InstanceSampler sampler(99);
  const auto walls = enumerate_walls(15);
  for (int i = 0; i < 100; ++i) {
    const ChamberPoint p = sampler.poincare_point();
    const Rational k(sampler.uniform(1, 1000), sampler.uniform(1, 1000));
    for (const auto& w : walls) {
      const Rational value = wall_value(w, p);
      const Rational scaled = (k * w.c) * p.z() - (k * w.a) * p.x() - (k * w.b) * p.y();
      EXPECT_EQ(sgn(scaled), sgn(value));
    }
  }
}

TEST(WallBound, Examples) {
  EXPECT_EQ(wall_bound(point(0, 0, 1), point(0, 0, 1)), 0);
  EXPECT_EQ(wall_bound(point(0, 0, 1), point(4, 8, 9)), 8);
  EXPECT_EQ(wall_bound(point(-2, -2, 3), point(18, 30, 35)), 34);
}

// No wall beyond the bound may change sign between two points: check every
// wall up to three times the bound with the brute-force list.
TEST(WallBound, NeverExcludesASeparatingWall) {
  InstanceSampler sampler(2024);
  for (int i = 0; i < 40; ++i) {
    const ChamberPoint p = sampler.poincare_point();
    const ChamberPoint q = sampler.poincare_point();
    const long bound = wall_bound(p, q).get_si();
    for (const auto& [c, a, b] : oracle::brute_force_walls(3 * bound + 9)) {
      if (c <= bound) continue;
      const Wall w{a, b, c, 1};
      EXPECT_EQ(sgn(wall_value(w, p)), sgn(wall_value(w, q))) << w.label();
    }
  }
}

TEST(WallsDisjoint, Examples) {
  EXPECT_TRUE(walls_disjoint_check(1));
  EXPECT_TRUE(walls_disjoint_check(3));
  EXPECT_TRUE(walls_disjoint_check(15));
  // Chords of W(1,1,1) and W(1,3,3), u + v = 1 and u + 3v = 3, meet at
  // (0,1) on the boundary circle (Cramer's rule).
  const Wall p = make_wall(1, 1, 1), q = make_wall(1, 3, 3);
  const Integer det = p.a * q.b - q.a * p.b;
  Rational u(Integer(p.c * q.b - q.c * p.b), det), v(Integer(p.a * q.c - q.a * p.c), det);
  u.canonicalize();
  v.canonicalize();
  EXPECT_EQ(u, 0);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(u * u + v * v, 1);
  // W(1,1,1) and W(-1,-1,1) are parallel chords.
  EXPECT_EQ(Integer(1 * -1 - (-1) * 1), 0);
}

// Two (-1)-classes span geodesics that meet inside the disk exactly when
// their pairing is 0; for all-odd classes the pairing is a sum of three odd
// products, hence odd.
TEST(WallsDisjoint, PairingParityAgrees) {
  const auto walls = enumerate_walls(31);
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (std::size_t j = i + 1; j < walls.size(); ++j)
      EXPECT_EQ(parity(pairing(walls[i].reduction(), walls[j].reduction())), 1);
  EXPECT_TRUE(walls_disjoint_check(31));
}

} // namespace
} // namespace wallcross
