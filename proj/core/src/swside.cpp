#include "wallcross/swside.hpp"

#include "wallcross/errors.hpp"

namespace wallcross {

int sw_epsilon_parity(const Integer& b_plus) {
  if (parity(b_plus))
    throw Error(ErrorKind::OddBPlus, "b2+ = " + b_plus.get_str() + " is odd");
  Integer eps = b_plus / 2 + 1;
  return parity(eps);
}

CoefficientRing sw_ring(int alpha, int eps_parity) {
  const int sign = (eps_parity % 2 ? -1 : 1) * alpha;
  return sign == 1 ? CoefficientRing::Z : CoefficientRing::Z2;
}

namespace {

void check_rohlin(const Integer& b_plus_X) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), b_plus_X.get_mpz_t(), 4);
  if (r != 3 || b_plus_X < 3)
    throw Error(ErrorKind::RohlinViolation,
                "b2+(X) = " + b_plus_X.get_str() + " is not 3 mod 4");
}

} // namespace

int morgan_szabo_parity(const Integer& b_plus_X) {
  check_rohlin(b_plus_X);
  return b_plus_X == 3 ? 1 : 0;
}

SwContext::SwContext(Integer b_plus_X, int alpha) : b_plus_X_(std::move(b_plus_X)), alpha_(alpha) {
  check_rohlin(b_plus_X_);
  if (alpha_ != 1 && alpha_ != -1)
    throw Error(ErrorKind::InvalidInput, "alpha must be +1 or -1");
}

SwResult sw_reflection_invariant(const SwContext& ctx) {
  SwResult result;
  result.parity = morgan_szabo_parity(ctx.b_plus_X());
  result.epsilon_parity = sw_epsilon_parity(ctx.b_plus_Z());
  result.ring = sw_ring(ctx.alpha(), result.epsilon_parity);
  return result;
}

} // namespace wallcross
