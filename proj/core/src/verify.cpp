#include "wallcross/verify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "wallcross/errors.hpp"
#include "wallcross/figure.hpp"
#include "wallcross/sampling.hpp"

namespace wallcross {

namespace {

constexpr std::uint64_t kSeed = 20240229;

std::vector<LatticeClass> f0_word() { return {sigma_minus(), sigma_plus()}; }

// Crossing list reduced to what the reference values pin down.
Json crossing_summary(const CrossingReport& report) {
  Json crossings = Json::array();
  for (const auto& c : report.crossings)
    crossings.push_back(Json{{"wall", c.wall.label()}, {"direction", c.direction}, {"doubled", c.doubled()}});
  return Json{{"crossings", std::move(crossings)},
              {"gamma_dot_W", report.gamma_dot_W},
              {"doubled_total", kGluingMultiplicity * report.gamma_dot_W}};
}

Json summary_json(const RandomCheckSummary& s) {
  Json observed = Json::array();
  for (long g : s.observed) observed.push_back(g);
  return Json{{"instances", s.instances}, {"violations", s.violations}, {"observed", std::move(observed)}};
}

Json expected_summary(int instances, std::vector<long> observed) {
  Json obs = Json::array();
  for (long g : observed) obs.push_back(g);
  return Json{{"instances", instances}, {"violations", 0}, {"observed", std::move(obs)}};
}

// A generated instance: start point and one or two words.
struct Instance {
  ChamberPoint start;
  std::vector<LatticeClass> first;
  std::vector<LatticeClass> second;
};

// Catalog reaching every endpoint any of the instances can produce.
WallCatalog catalog_for(const std::vector<Instance>& instances, HomologyOrientation orientation) {
  Integer bound = 0;
  for (const auto& inst : instances) {
    const ChamberPoint mid = act(compose_word(inst.first), inst.start);
    const ChamberPoint end = act(compose_word(inst.second), mid);
    for (const auto& p : {mid, end}) bound = std::max(bound, wall_bound(inst.start, p));
    bound = std::max(bound, wall_bound(mid, end));
  }
  return WallCatalog(bound, orientation);
}

template <typename Check>
RandomCheckSummary run_random(std::uint64_t seed, int samples, int min_len, int max_len,
                              bool two_words, Check&& check) {
  InstanceSampler sampler(seed);
  const auto alphabet = basic_reflections();
  std::vector<Instance> pool;
  for (int i = 0; i < 10 * samples; ++i) {
    Instance inst{sampler.poincare_point(), sampler.word(alphabet, min_len, max_len), {}};
    if (two_words) inst.second = sampler.word(alphabet, min_len, max_len);
    pool.push_back(std::move(inst));
  }
  const WallCatalog positive = catalog_for(pool, HomologyOrientation::Positive);
  RandomCheckSummary summary;
  std::set<long> observed;
  for (const auto& inst : pool) {
    if (summary.instances == samples) break;
    try {
      std::optional<long> value = check(inst, positive);
      ++summary.instances;
      if (!value) ++summary.violations;
      else observed.insert(*value);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericPoint) throw;
      ++summary.skipped;
    }
  }
  summary.observed.assign(observed.begin(), observed.end());
  return summary;
}

using Multiset = std::vector<std::tuple<std::string, int>>;

Fixture make(std::string name, int criterion, Json expected, std::function<Json()> compute) {
  return Fixture{std::move(name), criterion, std::move(expected), std::move(compute)};
}

} // namespace

RandomCheckSummary check_start_point_independence(std::uint64_t seed, int samples) {
  const Isometry f0 = compose_word(f0_word());
  InstanceSampler sampler(seed);
  std::vector<ChamberPoint> points;
  for (int i = 0; i < 10 * samples; ++i) points.push_back(sampler.poincare_point());
  Integer bound = 0;
  for (const auto& p : points) bound = std::max(bound, wall_bound(p, act(f0, p)));
  const WallCatalog catalog(bound);
  CrossingOptions options;
  options.catalog = &catalog;

  RandomCheckSummary summary;
  std::set<long> observed;
  for (const auto& p : points) {
    if (summary.instances == samples) break;
    try {
      const long g = separation_crossings(f0, p, options).gamma_dot_W;
      ++summary.instances;
      observed.insert(g);
      if (g != -2) ++summary.violations;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericPoint) throw;
      ++summary.skipped;
    }
  }
  summary.observed.assign(observed.begin(), observed.end());
  return summary;
}

RandomCheckSummary check_oracle_equivalence(std::uint64_t seed, int samples) {
  return run_random(seed, samples, 1, 4, false,
                    [](const Instance& inst, const WallCatalog& catalog) -> std::optional<long> {
                      CrossingOptions options;
                      options.catalog = &catalog;
                      const ChamberPoint end = act(compose_word(inst.first), inst.start);
                      const CrossingReport report = separation_crossings(inst.start, end, options);
                      if (inst.start == end) return report.crossings.empty() ? std::optional<long>(0) : std::nullopt;
                      const auto oracle = segment_crossings_oracle(inst.start, end, options);
                      Multiset lhs, rhs;
                      for (const auto& c : report.crossings) lhs.emplace_back(c.wall.label(), c.direction);
                      for (const auto& c : oracle) rhs.emplace_back(c.wall.label(), c.direction);
                      std::sort(lhs.begin(), lhs.end());
                      std::sort(rhs.begin(), rhs.end());
                      if (lhs != rhs) return std::nullopt;
                      return 0L;
                    });
}

RandomCheckSummary check_additivity(std::uint64_t seed, int samples) {
  return run_random(seed, samples, 0, 3, true,
                    [](const Instance& inst, const WallCatalog& catalog) -> std::optional<long> {
                      CrossingOptions options;
                      options.catalog = &catalog;
                      const Isometry m1 = compose_word(inst.first);
                      const Isometry m2 = compose_word(inst.second);
                      const Isometry both = m1.then(m2);
                      const long whole = separation_crossings(both, inst.start, options).gamma_dot_W;
                      const long part1 = separation_crossings(m1, inst.start, options).gamma_dot_W;
                      const long part2 = separation_crossings(m2, act(m1, inst.start), options).gamma_dot_W;
                      if (whole != part1 + part2) return std::nullopt;
                      return 0L;
                    });
}

RandomCheckSummary check_inverse_antisymmetry(std::uint64_t seed, int samples) {
  return run_random(seed, samples, 0, 4, false,
                    [](const Instance& inst, const WallCatalog& catalog) -> std::optional<long> {
                      CrossingOptions options;
                      options.catalog = &catalog;
                      const Isometry m = compose_word(inst.first);
                      const long forward = separation_crossings(m, inst.start, options).gamma_dot_W;
                      const long backward =
                          separation_crossings(m.inverse(), act(m, inst.start), options).gamma_dot_W;
                      if (forward != -backward) return std::nullopt;
                      return 0L;
                    });
}

RandomCheckSummary check_orientation_flip(std::uint64_t seed, int samples) {
  return run_random(seed, samples, 0, 4, false,
                    [](const Instance& inst, const WallCatalog& catalog) -> std::optional<long> {
                      CrossingOptions positive;
                      positive.catalog = &catalog;
                      CrossingOptions negative;
                      negative.orientation = HomologyOrientation::Negative;
                      const Isometry m = compose_word(inst.first);
                      const long g = separation_crossings(m, inst.start, positive).gamma_dot_W;
                      const long flipped = separation_crossings(m, inst.start, negative).gamma_dot_W;
                      if (flipped != -g) return std::nullopt;
                      return 0L;
                    });
}

Fixture invariant_fixture(std::string name, std::vector<LatticeClass> word, Rational u, Rational v,
                          std::string symbol, Json expected) {
  return make(std::move(name), 3, std::move(expected),
              [word = std::move(word), u = std::move(u), v = std::move(v), symbol = std::move(symbol)] {
                return to_json(one_param_invariant(compose_word(word), poincare_to_hyperboloid(u, v),
                                                   symbol, sigma_plus()));
              });
}

std::vector<Fixture> reference_fixtures() {
  std::vector<Fixture> f;
  const LatticeClass c = sigma_plus();  // s + e1 + e2, the lift of w2 on N

  // 1: reflections of s.
  f.push_back(make("pairing_sigma_square", 1, -1, [] { return to_json(square(sigma_plus())); }));
  f.push_back(make("reflect_sigma_plus_s", 1, Json::array({2, 2, 3}),
                   [] { return to_json(reflect(sigma_plus(), class_s())); }));
  f.push_back(make("reflect_sigma_minus_s", 1, Json::array({-2, 2, 3}),
                   [] { return to_json(reflect(sigma_minus(), class_s())); }));
  f.push_back(make("alpha_single_reflection", 1, 1,
                   [] { return alpha(reflection_matrix(sigma_plus())); }));

  // 2: the two composites and their relation.
  f.push_back(make("word_f0_image", 2, Json::array({1, 5, 5}),
                   [c] { return to_json(compose_word(f0_word())(c)); }));
  f.push_back(make("word_reverse_image", 2, Json::array({1, -3, -3}), [c] {
    const std::vector<LatticeClass> w{sigma_plus(), sigma_minus()};
    return to_json(compose_word(w)(c));
  }));
  f.push_back(make("words_mutually_inverse", 2, true, [] {
    const std::vector<LatticeClass> w{sigma_plus(), sigma_minus()};
    return compose_word(f0_word()).then(compose_word(w)) == Isometry() &&
           compose_word(f0_word()).inverse() == compose_word(w);
  }));

  // 3: the path from the origin of the disk.
  f.push_back(make("poincare_origin_lift", 3, Json{{"x", "0"}, {"y", "0"}, {"z", "1"}},
                   [] { return to_json(poincare_to_hyperboloid(0, 0)); }));
  f.push_back(make("figure_origin_crossings", 3,
                   Json{{"crossings", Json::array({Json{{"wall", "W(1,1,1)"}, {"direction", -1}, {"doubled", -2}},
                                                    Json{{"wall", "W(1,3,3)"}, {"direction", -1}, {"doubled", -2}}})},
                        {"gamma_dot_W", -2},
                        {"doubled_total", -4}},
                   [] { return crossing_summary(separation_crossings(compose_word(f0_word()), ChamberPoint())); }));
  f.push_back(invariant_fixture("invariant_f0", f0_word(), 0, 0, "X0",
                                Json{{"ring", "Z"}, {"terms", Json{{"X0", -4}}}}));

  // 4: the path from (-1/2, -1/2).
  f.push_back(make("figure_half_crossings", 4,
                   Json{{"crossings", Json::array({Json{{"wall", "W(-1,-1,1)"}, {"direction", 1}, {"doubled", 2}},
                                                    Json{{"wall", "W(1,1,1)"}, {"direction", -1}, {"doubled", -2}},
                                                    Json{{"wall", "W(1,3,3)"}, {"direction", -1}, {"doubled", -2}},
                                                    Json{{"wall", "W(7,11,13)"}, {"direction", -1}, {"doubled", -2}}})},
                        {"gamma_dot_W", -2},
                        {"doubled_total", -4}},
                   [] {
                     const ChamberPoint p = poincare_to_hyperboloid(Rational(-1, 2), Rational(-1, 2));
                     return crossing_summary(separation_crossings(compose_word(f0_word()), p));
                   }));
  f.push_back(make("figure_half_order", 4, Json::array({"W(-1,-1,1)", "W(1,1,1)", "W(1,3,3)", "W(7,11,13)"}), [] {
    const ChamberPoint p = poincare_to_hyperboloid(Rational(-1, 2), Rational(-1, 2));
    Json order = Json::array();
    for (const auto& x : segment_crossings_oracle(p, act(compose_word(f0_word()), p))) order.push_back(x.wall.label());
    return order;
  }));
  f.push_back(make("figure_includes_w7_11_13", 4, true, [] {
    return render_figure(FigureSpec::standard()).find(">W(7,11,13)<") != std::string::npos;
  }));

  // 5: the composite f = f1 f0^{-1}.
  auto composite = [] {
    const Isometry f0 = compose_word(f0_word());
    const InvariantExpression d0 = one_param_invariant(f0, ChamberPoint(), "X0", sigma_plus());
    const InvariantExpression d1 = one_param_invariant(f0, ChamberPoint(), "X1", sigma_plus());
    return invariant_add(d1, invariant_negate(d0));
  };
  f.push_back(make("negate_invariant_f0", 5, Json{{"ring", "Z"}, {"terms", Json{{"X0", 4}}}}, [] {
    return to_json(invariant_negate(one_param_invariant(compose_word(f0_word()), ChamberPoint(), "X0", sigma_plus())));
  }));
  f.push_back(make("composite_invariant", 5, Json{{"ring", "Z"}, {"terms", Json{{"X0", 4}, {"X1", -4}}}},
                   [composite] { return to_json(composite()); }));
  f.push_back(make("composite_equal_invariants", 5, 0, [composite] {
    return to_json(evaluate(composite(), {{"X0", 5}, {"X1", 5}}));
  }));
  f.push_back(make("composite_distinct_invariants", 5, -4, [composite] {
    return to_json(evaluate(composite(), {{"X0", 1}, {"X1", 2}}));
  }));

  // 6-8: randomized consistency.
  f.push_back(make("start_point_independence", 6, expected_summary(100, {-2}),
                   [] { return summary_json(check_start_point_independence(kSeed, 100)); }));
  f.push_back(make("oracle_equivalence", 7, expected_summary(200, {0}),
                   [] { return summary_json(check_oracle_equivalence(kSeed + 1, 200)); }));
  f.push_back(make("additivity", 8, expected_summary(200, {0}),
                   [] { return summary_json(check_additivity(kSeed + 2, 200)); }));
  f.push_back(make("inverse_antisymmetry", 8, expected_summary(200, {0}),
                   [] { return summary_json(check_inverse_antisymmetry(kSeed + 3, 200)); }));
  f.push_back(make("orientation_flip", 8, expected_summary(200, {0}),
                   [] { return summary_json(check_orientation_flip(kSeed + 4, 200)); }));

  // 9: wall structure.
  f.push_back(make("walls_c3_count", 9, 12, [] { return static_cast<int>(enumerate_walls(3).size()); }));
  f.push_back(make("walls_disjoint_c15", 9, true, [] { return walls_disjoint_check(15); }));
  f.push_back(make("epsilon_figure_walls", 9, Json::array({1, 1, 1, 1}), [] {
    return Json::array({epsilon(1, 1, 1), epsilon(1, 3, 3), epsilon(-1, -1, 1), epsilon(7, 11, 13)});
  }));

  // 10: coefficient rings.
  f.push_back(make("ring_single_reflection", 10, "Z2",
                   [c] { return to_string(ym_ring(reflection_matrix(sigma_plus()), c)); }));
  f.push_back(make("ring_f0", 10, "Z", [c] { return to_string(ym_ring(compose_word(f0_word()), c)); }));
  f.push_back(make("sw_epsilon_parity_b4", 10, 1, [] { return sw_epsilon_parity(4); }));
  f.push_back(make("ring_sw_b4", 10, "Z2", [] {
    return to_string(sw_ring(alpha(reflection_matrix(sigma_plus())), sw_epsilon_parity(4)));
  }));

  // 11: dimension and Seiberg-Witten parities.
  f.push_back(make("ym_dimension_N", 11, -4, [] {
    const BundleData bundle = BundleData::reducible(sigma_plus());
    return to_json(ym_dimension(bundle.p1, bundle.b_plus_N));
  }));
  f.push_back(make("morgan_szabo_b3", 11, 1, [] { return morgan_szabo_parity(3); }));
  f.push_back(make("morgan_szabo_b7", 11, 0, [] { return morgan_szabo_parity(7); }));
  f.push_back(make("sw_reflection_b3", 11, Json{{"parity", 1}, {"ring", "Z2"}, {"epsilon_parity", 1}},
                   [] { return to_json(sw_reflection_invariant(SwContext(3, alpha(reflection_matrix(sigma_plus()))))); }));
  f.push_back(make("sw_reflection_b7", 11, Json{{"parity", 0}, {"ring", "Z2"}, {"epsilon_parity", 1}},
                   [] { return to_json(sw_reflection_invariant(SwContext(7, alpha(reflection_matrix(sigma_plus()))))); }));
  return f;
}

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures,
                                        const std::vector<std::string>& only) {
  std::vector<FixtureResult> results;
  for (const auto& fixture : fixtures) {
    if (!only.empty() && std::find(only.begin(), only.end(), fixture.name) == only.end()) continue;
    FixtureResult r;
    r.name = fixture.name;
    r.expected = fixture.expected.dump();
    try {
      r.actual = fixture.compute().dump();
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.pass = r.actual == r.expected;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<FixtureResult> run_verify(const std::vector<std::string>& only) {
  return run_fixtures(reference_fixtures(), only);
}

} // namespace wallcross
