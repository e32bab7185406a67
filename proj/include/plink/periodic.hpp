#pragma once

// Extended strongly periodic links presented as the closure of a p-th power
// braid word together with r parallel copies of the braid axis.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "plink/diagram.hpp"

namespace plink {

struct FactorPresentation {
  BraidWord factor;
  int p = 3;
  int r = 1;

  bool operator==(const FactorPresentation&) const = default;
};

/// Reads `p=3 r=1 braid=3: 1 2`; r defaults to 1 when absent.
FactorPresentation parse_factor(std::string_view text);
std::string format_factor(const FactorPresentation& f);

struct CycleReport {
  bool valid = false;
  std::vector<int> cycles;

  std::string describe() const;
};

/// Checks that every cycle of the factor permutation has length divisible by p.
/// Throws InputError unless p is an odd prime and r >= 1.
CycleReport validate_factor(const FactorPresentation& f);

/// Crossings of make_extended(f) without building it.
std::size_t extended_crossing_count(const FactorPresentation& f);

/// Closure of factor^p with r axis copies. Throws InputError when validation fails.
LinkDiagram make_extended(const FactorPresentation& f, AxisConvention conv = AxisConvention::OverFirst);

/// (s1 s2 ... s_{p-1})^k on p strands.
BraidWord torus_factor(int p, int k);
/// T(p, pk) together with r axis copies.
LinkDiagram make_torus_extended(int p, int k, int r);

struct EquivariantTriple {
  int p = 3;
  int r = 1;
  bool strongly_periodic = false;  ///< the plus/minus factor passes validate_factor
  BraidWord plus_factor, minus_factor, zero_factor;
  LinkDiagram plus, minus, zero;
};

/// Replaces the marked letter (1-based) by its positive and negative forms and
/// deletes it, then closes the p-th power of each variant with r axis copies.
/// The congruence between the three only needs the p-fold symmetry, so the
/// variants are built whether or not they are strongly periodic.
EquivariantTriple skein_triple(const BraidWord& factor, int mark, int p, int r);

struct SamplerOptions {
  int strands = 3;
  int p = 3;
  int r = 1;
  int max_length = 6;
  std::size_t max_crossings = 24;
  int max_tries = 100000;
};

/// Draws uniform words (length, generators, signs) until one passes
/// validate_factor within the crossing budget. Empty when the tries run out.
std::optional<FactorPresentation> random_factor(std::mt19937_64& rng, const SamplerOptions& opt);

}  // namespace plink
