#ifndef WALLCROSS_SAMPLING_HPP_
#define WALLCROSS_SAMPLING_HPP_

// Seeded generators for the randomized consistency checks. The streams depend
// only on the seed, so every run reproduces the same instances.

#include <cstdint>
#include <random>
#include <vector>

#include "wallcross/chambers.hpp"
#include "wallcross/lattice.hpp"

namespace wallcross {

class InstanceSampler {
public:
  explicit InstanceSampler(std::uint64_t seed) : engine_(seed) {}

  /// Poincare point (p1/q1, p2/q2) with q_i <= max_den and radius <= max_radius.
  ChamberPoint poincare_point(int max_den = 20, const Rational& max_radius = Rational(9, 10));

  /// Word of length in [min_len, max_len] over `alphabet`.
  std::vector<LatticeClass> word(const std::vector<LatticeClass>& alphabet, int min_len, int max_len);

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

private:
  std::mt19937_64 engine_;
};

/// s +- e1 +- e2: the four reflections generating the random words.
std::vector<LatticeClass> basic_reflections();

} // namespace wallcross

#endif
