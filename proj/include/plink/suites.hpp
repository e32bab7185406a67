#pragma once

// Randomized invariant suites shared by the CLI selftest and the acceptance run.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plink/diagram.hpp"
#include "plink/homfly.hpp"
#include "plink/periodic.hpp"

namespace plink {

struct SuiteResult {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return cases > 0 && failures.empty(); }
  std::string line() const;
};

BraidWord random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int min_len, int max_len);

/// v^-1 P(D+) - v P(D-) = z P(D0) at every crossing of random closures.
SuiteResult skein_consistency_suite(std::uint64_t seed, int closures = 100, int max_crossings = 10);
/// Conjugation and stabilization of random braids.
SuiteResult markov_suite(std::uint64_t seed, int braids = 20);
/// P(D u unknot) = (v^-1 - v) z^-1 P(D), and P(D u E) for two nontrivial pieces.
SuiteResult split_union_suite(std::uint64_t seed, int cases = 20);
/// Both axis conventions give the same polynomial.
SuiteResult axis_convention_suite(std::uint64_t seed, int braids = 20);

struct PeriodicSuiteOptions {
  int p = 3;
  std::vector<int> strands{3};
  std::vector<int> rs{1};
  int count = 50;
  int max_length = 6;
  std::size_t max_crossings = 24;
};

struct PeriodicSuiteResult {
  SuiteResult conditions;  ///< both conditions with the sampled r
  SuiteResult lowest;  ///< lowest coefficient against the linking-number formula
  std::vector<FactorPresentation> factors;
};

/// Distinct sampled factors, cycling through the strand and r choices.
PeriodicSuiteResult periodic_suite(std::uint64_t seed, const PeriodicSuiteOptions& opt);

/// Residual of the equivariant skein congruence on generated triples.
SuiteResult lemma32_suite(std::uint64_t seed, int count = 20, int p = 3, int strands = 3,
                          std::size_t max_crossings = 24);

}  // namespace plink
