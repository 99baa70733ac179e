#ifndef WALLCROSS_TESTS_ORACLES_HPP_
#define WALLCROSS_TESTS_ORACLES_HPP_

// Independent reference computations for the tests. Nothing here calls the
// enumeration or crossing code it is compared against.

#include <tuple>
#include <vector>

#include "wallcross/chambers.hpp"
#include "wallcross/lattice.hpp"

namespace wallcross::oracle {

// All odd (a, b, c), 0 < c <= c_max, with c^2 - a^2 - b^2 = -1, by a plain
// double loop over a and b. Sorted by (c, a, b).
inline std::vector<std::tuple<long, long, long>> brute_force_walls(long c_max) {
  std::vector<std::tuple<long, long, long>> out;
  for (long c = 1; c <= c_max; c += 2)
    for (long a = -c - 2; a <= c + 2; ++a)
      for (long b = -c - 2; b <= c + 2; ++b)
        if ((a & 1) && (b & 1) && c * c - a * a - b * b == -1) out.emplace_back(c, a, b);
  return out;
}

// (-1)^e for an integer exponent, via repeated sign flips.
inline int minus_one_power(long e) {
  int sign = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) sign = -sign;
  return sign;
}

inline int brute_epsilon(long a, long b, long c) {
  const long ha = (a - 1) / 2, hb = (b - 1) / 2, hc = (c - 1) / 2;
  return minus_one_power(hc * hc - ha * ha - hb * hb);
}

// Signed count of walls separating p from q, evaluated with rational wall
// values and brute-force walls up to c_max.
inline long brute_gamma(const ChamberPoint& p, const ChamberPoint& q, long c_max, int orientation = 1) {
  long total = 0;
  for (const auto& [c, a, b] : brute_force_walls(c_max)) {
    Rational vp = c * p.z() - a * p.x() - b * p.y();
    Rational vq = c * q.z() - a * q.x() - b * q.y();
    if (sgn(vp) == sgn(vq)) continue;
    const int direction = sgn(vq);
    total += orientation * brute_epsilon(a, b, c) * direction;
  }
  return total;
}

// Cofactor-free determinant by the Leibniz sum over permutations.
inline Integer leibniz_det(const Matrix3& m) {
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  Integer det = 0;
  for (int k = 0; k < 6; ++k) {
    Integer term = k < 3 ? 1 : -1;
    for (int r = 0; r < 3; ++r) term *= m(r, perms[k][r]);
    det += term;
  }
  return det;
}

} // namespace wallcross::oracle

#endif
