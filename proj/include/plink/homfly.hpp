#pragma once

// HOMFLYPT polynomial by skein recursion to descending diagrams.
//
// Normalization: P(unknot) = 1 and v^-1 P(L+) - v P(L-) = z P(L0).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>

#include "plink/diagram.hpp"
#include "plink/poly.hpp"

namespace plink {

/// Crossing limit from PLINK_CROSSING_LIMIT, or 24 when unset.
std::size_t default_crossing_limit();

struct HomflyOptions {
  std::size_t max_crossings = default_crossing_limit();
};

/// ((v^-1 - v) z^-1)^(components - 1), the value of the unlink.
VZPoly unlink_value(int components);

/// Owns a memo table of canonical diagram codes. Not thread-safe; use one per thread.
class HomflyEngine {
 public:
  explicit HomflyEngine(HomflyOptions options = {});
  ~HomflyEngine();
  HomflyEngine(HomflyEngine&&) noexcept;
  HomflyEngine& operator=(HomflyEngine&&) noexcept;

  /// Throws ResourceError when the diagram exceeds the crossing limit.
  VZPoly compute(const LinkDiagram& d);

  struct Stats {
    std::size_t nodes = 0;
    std::size_t memo_hits = 0;
    std::size_t memo_size = 0;
  };
  Stats stats() const;
  void clear_memo();
  const HomflyOptions& options() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Computes with a per-thread engine whose memo persists across calls.
VZPoly homfly(const LinkDiagram& d, const HomflyOptions& options = {});

/// The coefficients P_{1-n+2i}(v) keyed by i (nonzero ones only), n = component count.
std::map<int, VPoly> homfly_coeffs(const LinkDiagram& d, const HomflyOptions& options = {});
/// Same, from a polynomial already computed for an n-component link.
std::map<int, VPoly> coeffs_of(const VZPoly& p, int n);

/// Memo key of a diagram: equal for diagrams that differ only in edge labels,
/// crossing order or component order.
std::uint64_t canonical_key(const LinkDiagram& d);

/// Removes Reidemeister I kinks and II bigons found combinatorially. Axis flags are dropped.
LinkDiagram simplify(const LinkDiagram& d);

}  // namespace plink
