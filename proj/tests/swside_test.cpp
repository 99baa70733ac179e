#include <gtest/gtest.h>

#include <functional>

#include "wallcross/errors.hpp"
#include "wallcross/swside.hpp"

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

TEST(SwEpsilonParity, Examples) {
  EXPECT_EQ(sw_epsilon_parity(4), 1);
  EXPECT_EQ(sw_epsilon_parity(2), 0);
  EXPECT_EQ(sw_epsilon_parity(8), 1);
  EXPECT_EQ(sw_epsilon_parity(0), 1);
  EXPECT_EQ(sw_epsilon_parity(6), 0);
  EXPECT_EQ(kind_of([] { sw_epsilon_parity(3); }), ErrorKind::OddBPlus);
  EXPECT_EQ(kind_of([] { sw_epsilon_parity(-1); }), ErrorKind::OddBPlus);
}

TEST(SwRing, SignTable) {
  EXPECT_EQ(sw_ring(1, 0), CoefficientRing::Z);
  EXPECT_EQ(sw_ring(1, 1), CoefficientRing::Z2);
  EXPECT_EQ(sw_ring(-1, 0), CoefficientRing::Z2);
  EXPECT_EQ(sw_ring(-1, 1), CoefficientRing::Z);
}

TEST(MorganSzabo, Examples) {
  EXPECT_EQ(morgan_szabo_parity(3), 1);
  EXPECT_EQ(morgan_szabo_parity(7), 0);
  EXPECT_EQ(morgan_szabo_parity(11), 0);
  EXPECT_EQ(kind_of([] { morgan_szabo_parity(4); }), ErrorKind::RohlinViolation);
  EXPECT_EQ(kind_of([] { morgan_szabo_parity(5); }), ErrorKind::RohlinViolation);
  EXPECT_EQ(kind_of([] { morgan_szabo_parity(-1); }), ErrorKind::RohlinViolation);
}

TEST(SwContext, Validates) {
  const SwContext ctx(3, 1);
  EXPECT_EQ(ctx.b_plus_Z(), 4);
  EXPECT_EQ(kind_of([] { SwContext(4, 1); }), ErrorKind::RohlinViolation);
  EXPECT_EQ(kind_of([] { SwContext(3, 0); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { SwContext(3, 2); }), ErrorKind::InvalidInput);
}

TEST(SwReflectionInvariant, Examples) {
  const SwResult k3 = sw_reflection_invariant(SwContext(3, 1));
  EXPECT_EQ(k3.parity, 1);
  EXPECT_EQ(k3.epsilon_parity, 1);
  EXPECT_EQ(k3.ring, CoefficientRing::Z2);
  const SwResult b7 = sw_reflection_invariant(SwContext(7, 1));
  EXPECT_EQ(b7.parity, 0);
  EXPECT_EQ(b7.epsilon_parity, 1);
  EXPECT_EQ(b7.ring, CoefficientRing::Z2);
  EXPECT_EQ(sw_reflection_invariant(SwContext(11, 1)).parity, 0);
}

// b_plus_X = 3 mod 4 makes b_plus_Z = 0 mod 4, so b_plus_Z/2 + 1 is odd and
// a sheet-preserving reflection always lands in Z2.
TEST(SwReflectionInvariant, PropertiesOverRange) {
  for (long b = 3; b < 400; b += 4) {
    const SwResult r = sw_reflection_invariant(SwContext(b, 1));
    EXPECT_EQ(r.parity, b == 3 ? 1 : 0) << b;
    EXPECT_EQ(r.epsilon_parity, 1) << b;
    EXPECT_EQ(r.ring, CoefficientRing::Z2) << b;
    EXPECT_EQ(sw_reflection_invariant(SwContext(b, -1)).ring, CoefficientRing::Z) << b;
  }
  for (long b = 0; b < 400; b += 4) EXPECT_EQ(sw_ring(1, sw_epsilon_parity(b)), CoefficientRing::Z2) << b;
  for (long b = 0; b < 400; ++b)
    if (b % 4 != 3) EXPECT_EQ(kind_of([b] { morgan_szabo_parity(b); }), ErrorKind::RohlinViolation) << b;
}

TEST(SwReflectionInvariant, HugeBPlus) {
  Integer b("100000000000000000000000000003");
  EXPECT_EQ(sw_reflection_invariant(SwContext(b, 1)).parity, 0);
}

} // namespace
} // namespace wallcross
