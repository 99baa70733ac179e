#ifndef WALLCROSS_VERIFY_HPP_
#define WALLCROSS_VERIFY_HPP_

// Reference computations replayed as fixtures: each pairs a canonical JSON
// expectation with a computation, and passes when the two texts agree.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/json_io.hpp"

namespace wallcross {

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Fixture {
  std::string name;
  int criterion = 0;  // acceptance criterion the fixture belongs to
  Json expected;
  std::function<Json()> compute;
};

/// Every reference fixture, in criterion order.
std::vector<Fixture> reference_fixtures();

/// The D_Z fixture for a given word; exposed so a deliberately altered word
/// can be checked to fail.
Fixture invariant_fixture(std::string name, std::vector<LatticeClass> word, Rational u, Rational v,
                          std::string symbol, Json expected);

/// Runs fixtures whose name is in `only` (all of them when `only` is empty).
/// Exceptions are recorded as failures.
std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures,
                                        const std::vector<std::string>& only = {});

std::vector<FixtureResult> run_verify(const std::vector<std::string>& only = {});

inline bool all_pass(const std::vector<FixtureResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

// Randomized checks shared with the acceptance suite. Each returns the number
// of instances that violated the property; non-generic draws are skipped.
struct RandomCheckSummary {
  int instances = 0;
  int skipped = 0;
  int violations = 0;
  std::vector<long> observed;  // distinct gamma values, where relevant
};

RandomCheckSummary check_start_point_independence(std::uint64_t seed, int samples);
RandomCheckSummary check_oracle_equivalence(std::uint64_t seed, int samples);
RandomCheckSummary check_additivity(std::uint64_t seed, int samples);
RandomCheckSummary check_inverse_antisymmetry(std::uint64_t seed, int samples);
RandomCheckSummary check_orientation_flip(std::uint64_t seed, int samples);

} // namespace wallcross

#endif
