#ifndef WALLCROSS_SWSIDE_HPP_
#define WALLCROSS_SWSIDE_HPP_

// Mod-2 Seiberg-Witten bookkeeping for the single-reflection diffeomorphism on
// X # N with X spin, c1 = 0 and a zero-dimensional moduli space.

#include "wallcross/lattice.hpp"

namespace wallcross {

/// Parity of b_plus/2 + 1. Throws OddBPlus for odd b_plus.
int sw_epsilon_parity(const Integer& b_plus);

/// Z when (-1)^eps * alpha = +1, else Z2.
CoefficientRing sw_ring(int alpha, int eps_parity);

/// 1 iff b_plus_X = 3. Throws RohlinViolation unless b_plus_X = 3 mod 4 and
/// b_plus_X >= 3.
int morgan_szabo_parity(const Integer& b_plus_X);

class SwContext {
public:
  /// Throws RohlinViolation when b_plus_X is not 3 mod 4 (or below 3), and
  /// InvalidInput when alpha is not +-1.
  SwContext(Integer b_plus_X, int alpha);

  const Integer& b_plus_X() const { return b_plus_X_; }
  Integer b_plus_Z() const { return b_plus_X_ + 1; }
  int alpha() const { return alpha_; }

private:
  Integer b_plus_X_;
  int alpha_;
};

struct SwResult {
  int parity = 0;
  CoefficientRing ring = CoefficientRing::Z2;
  int epsilon_parity = 0;
};

/// Mod-2 value of SW(f, P_Z) for f the reflection in s + e1 + e2.
SwResult sw_reflection_invariant(const SwContext& ctx);

} // namespace wallcross

#endif
