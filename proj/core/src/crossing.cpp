#include "wallcross/crossing.hpp"

#include <algorithm>

#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

// Walls that may separate p0 from p1, either from the caller's catalog or
// freshly enumerated into `storage`.
std::span<const Wall> candidate_walls(const ChamberPoint& p0, const ChamberPoint& p1,
                                      const CrossingOptions& options,
                                      std::vector<Wall>& storage) {
  const Integer bound = wall_bound(p0, p1);
  if (options.catalog != nullptr) {
    if (options.catalog->orientation() != options.orientation)
      throw Error(ErrorKind::InvalidInput, "wall catalog orientation does not match options");
    return options.catalog->up_to(bound);
  }
  storage = enumerate_walls(bound, options.orientation);
  return storage;
}

[[noreturn]] void throw_non_generic(const Wall& w, const ChamberPoint& p) {
  throw Error(ErrorKind::NonGenericPoint,
              "point (" + p.x().get_str() + "," + p.y().get_str() + "," + p.z().get_str() +
                  ") lies on " + w.label());
}

// Integer representative (X, Y, Z) of a rational point with a positive common
// denominator, so that sign(cz - ax - by) = sign(cZ - aX - bY).
struct ScaledPoint {
  Integer x, y, z;
};

ScaledPoint scaled(const Rational& x, const Rational& y, const Rational& z) {
  Integer den;
  mpz_lcm(den.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), z.get_den_mpz_t());
  auto lift = [&den](const Rational& q) { return Integer(q.get_num() * (den / q.get_den())); };
  return {lift(x), lift(y), lift(z)};
}

int scaled_sign(const Wall& w, const ScaledPoint& p) {
  Integer value = w.c * p.z - w.a * p.x - w.b * p.y;
  return sgn(value);
}

} // namespace

ChamberPoint act(const Isometry& m, const ChamberPoint& p) {
  const Matrix3& a = m.matrix();
  Rational x = a(0, 0) * p.x() + a(0, 1) * p.y() + a(0, 2) * p.z();
  Rational y = a(1, 0) * p.x() + a(1, 1) * p.y() + a(1, 2) * p.z();
  Rational z = a(2, 0) * p.x() + a(2, 1) * p.y() + a(2, 2) * p.z();
  return ChamberPoint(std::move(x), std::move(y), std::move(z));
}

CrossingReport separation_crossings(const ChamberPoint& p0, const ChamberPoint& p1,
                                    const CrossingOptions& options) {
  CrossingReport report;
  report.start = p0;
  report.end = p1;
  const ScaledPoint q0 = scaled(p0.x(), p0.y(), p0.z());
  const ScaledPoint q1 = scaled(p1.x(), p1.y(), p1.z());
  std::vector<Wall> storage;
  for (const Wall& w : candidate_walls(p0, p1, options, storage)) {
    const int s0 = scaled_sign(w, q0);
    const int s1 = scaled_sign(w, q1);
    if (s0 == 0) throw_non_generic(w, p0);
    if (s1 == 0) throw_non_generic(w, p1);
    if (s0 == s1) continue;
    const int direction = (s1 - s0) / 2;
    const int contribution = w.eps * direction;
    report.crossings.push_back(Crossing{w, direction, contribution});
    report.gamma_dot_W += contribution;
  }
  return report;
}

CrossingReport separation_crossings(const Isometry& m, const ChamberPoint& p0,
                                    const CrossingOptions& options) {
  return separation_crossings(p0, act(m, p0), options);
}

std::vector<SegmentCrossing> segment_crossings_oracle(const ChamberPoint& p0,
                                                      const ChamberPoint& p1,
                                                      const CrossingOptions& options) {
  if (p0 == p1) throw Error(ErrorKind::DegenerateSegment, "segment endpoints coincide");
  const auto [u0, v0] = klein_coords(p0);
  const auto [u1, v1] = klein_coords(p1);
  // Klein points (u, v, 1) over a common denominator, for fast sign screening.
  const ScaledPoint k0 = scaled(u0, v0, Rational(1));
  const ScaledPoint k1 = scaled(u1, v1, Rational(1));
  std::vector<SegmentCrossing> out;
  std::vector<Wall> storage;
  for (const Wall& w : candidate_walls(p0, p1, options, storage)) {
    const int s0 = scaled_sign(w, k0);
    const int s1 = scaled_sign(w, k1);
    if (s0 == 0) throw_non_generic(w, p0);
    if (s1 == 0) throw_non_generic(w, p1);
    if (s0 == s1) continue;
    // Along (1-t) k0 + t k1 the chord function c - a u - b v is affine in t.
    Rational l0 = w.c - w.a * u0 - w.b * v0;
    Rational l1 = w.c - w.a * u1 - w.b * v1;
    Rational t = l0 / (l0 - l1);
    out.push_back(SegmentCrossing{w, std::move(t), s1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SegmentCrossing& x, const SegmentCrossing& y) { return x.t < y.t; });
  return out;
}

InvariantExpression::InvariantExpression(CoefficientRing ring, std::map<std::string, Integer> terms)
    : ring_(ring), terms_(std::move(terms)) {
  normalize();
}

void InvariantExpression::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (ring_ == CoefficientRing::Z2) it->second = parity(it->second);
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Integer InvariantExpression::coefficient(const std::string& symbol) const {
  auto it = terms_.find(symbol);
  return it == terms_.end() ? Integer(0) : it->second;
}

InvariantExpression InvariantExpression::reduced_mod2() const {
  return InvariantExpression(CoefficientRing::Z2, terms_);
}

InvariantExpression invariant_add(const InvariantExpression& e1, const InvariantExpression& e2) {
  const CoefficientRing ring =
      (e1.ring() == CoefficientRing::Z2 || e2.ring() == CoefficientRing::Z2) ? CoefficientRing::Z2
                                                                               : CoefficientRing::Z;
  std::map<std::string, Integer> terms = e1.terms();
  for (const auto& [symbol, coeff] : e2.terms()) terms[symbol] += coeff;
  return InvariantExpression(ring, std::move(terms));
}

InvariantExpression invariant_negate(const InvariantExpression& e) {
  std::map<std::string, Integer> terms;
  for (const auto& [symbol, coeff] : e.terms()) terms.emplace(symbol, -coeff);
  return InvariantExpression(e.ring(), std::move(terms));
}

Integer evaluate(const InvariantExpression& e, const std::map<std::string, Integer>& values) {
  Integer total = 0;
  for (const auto& [symbol, coeff] : e.terms()) {
    auto it = values.find(symbol);
    if (it == values.end())
      throw Error(ErrorKind::MissingSymbol, "no value supplied for " + symbol);
    total += coeff * it->second;
  }
  if (e.ring() == CoefficientRing::Z2) return parity(total);
  return total;
}

InvariantExpression one_param_invariant(const CrossingReport& report, CoefficientRing ring,
                                        const std::string& symbol) {
  Integer coeff = kGluingMultiplicity * report.gamma_dot_W;
  return InvariantExpression(ring, {{symbol, coeff}});
}

InvariantExpression one_param_invariant(const Isometry& m, const ChamberPoint& p0,
                                        const std::string& symbol, const LatticeClass& w2_lift,
                                        const CrossingOptions& options) {
  const CoefficientRing ring = ym_ring(m, w2_lift);
  return one_param_invariant(separation_crossings(m, p0, options), ring, symbol);
}

} // namespace wallcross
