#include "wallcross/sampling.hpp"

namespace wallcross {

long InstanceSampler::uniform(long lo, long hi) {
  // Plain modulo keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

ChamberPoint InstanceSampler::poincare_point(int max_den, const Rational& max_radius) {
  const Rational r2 = max_radius * max_radius;
  while (true) {
    const long q1 = uniform(1, max_den);
    const long q2 = uniform(1, max_den);
    Rational u(uniform(-q1, q1), q1);
    Rational v(uniform(-q2, q2), q2);
    u.canonicalize();
    v.canonicalize();
    if (u * u + v * v <= r2) return poincare_to_hyperboloid(u, v);
  }
}

std::vector<LatticeClass> InstanceSampler::word(const std::vector<LatticeClass>& alphabet,
                                                int min_len, int max_len) {
  const long len = uniform(min_len, max_len);
  std::vector<LatticeClass> w;
  for (long i = 0; i < len; ++i)
    w.push_back(alphabet[static_cast<std::size_t>(uniform(0, static_cast<long>(alphabet.size()) - 1))]);
  return w;
}

std::vector<LatticeClass> basic_reflections() {
  return {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}};
}

} // namespace wallcross
