#pragma once

// Oriented link diagrams in PD notation, braid words and the constructions
// built from them (closures, sublinks, orientation reversal, axis cabling).
//
// A crossing is stored as its four edge labels counterclockwise from the
// incoming under-edge plus its sign. With edges [a, b, c, d] the under-strand
// runs a -> c; the over-strand runs d -> b on a positive crossing and
// b -> d on a negative one.
//
// Edge labels are 1-based and consecutive along each oriented component:
// component k owns the labels first..first+length-1 and label first+length-1
// is followed by first. Components without crossings (free loops) own no
// labels and always come after the components that do.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plink {

struct Crossing {
  std::array<int, 4> pd{};
  int sign = 1;

  int under_in() const { return pd[0]; }
  int under_out() const { return pd[2]; }
  int over_in() const { return sign > 0 ? pd[3] : pd[1]; }
  int over_out() const { return sign > 0 ? pd[1] : pd[3]; }

  bool operator==(const Crossing&) const = default;
};

struct ComponentSpan {
  int first = 0;   ///< first edge label; 0 for a free loop
  int length = 0;  ///< number of edges; 0 for a free loop

  bool operator==(const ComponentSpan&) const = default;
};

struct BraidLetter {
  int gen = 1;  ///< generator index, 1..strands-1
  int sign = 1;

  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  bool operator==(const BraidWord&) const = default;
};

class LinkDiagram;

/// Assembles a diagram from crossings over arbitrary edge ids. Ids joined with
/// join() become one edge; ids that end up in no crossing form free loops.
/// Components are ordered by the smallest id they contain (free loops last).
class DiagramBuilder {
 public:
  int new_edge();
  void add_crossing(std::array<int, 4> pd, int sign);
  /// Identifies two edge ids as one edge.
  void join(int a, int b);
  void add_free_loops(int count) { extra_loops_ += count; }
  /// Flags the component that will contain edge id `e` as an axis copy.
  void mark_axis(int e) { axis_ids_.push_back(e); }
  /// Throws InputError when the crossing data is not a consistent oriented diagram.
  LinkDiagram build() const;

 private:
  int find(int x) const;

  mutable std::vector<int> parent_;
  std::vector<Crossing> crossings_;
  std::vector<int> axis_ids_;
  int extra_loops_ = 0;
};

class LinkDiagram {
 public:
  /// The unknot as a single free loop.
  LinkDiagram() : LinkDiagram({}, {ComponentSpan{}}, {false}) {}

  static LinkDiagram unlink(int components);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int edge_count() const { return static_cast<int>(2 * crossings_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }
  int free_loop_count() const;
  const std::vector<ComponentSpan>& components() const { return components_; }

  /// Component owning edge label e.
  int component_of_edge(int e) const { return edge_component_[static_cast<std::size_t>(e)]; }
  int under_component(std::size_t x) const { return component_of_edge(crossings_[x].under_in()); }
  int over_component(std::size_t x) const { return component_of_edge(crossings_[x].over_in()); }
  /// Label following e along its component.
  int next_edge(int e) const;

  bool is_axis(int c) const { return axis_[static_cast<std::size_t>(c)]; }
  std::vector<int> axis_components() const;
  LinkDiagram with_axis_flags(std::vector<bool> axis) const;

  bool operator==(const LinkDiagram&) const = default;

 private:
  friend class DiagramBuilder;
  LinkDiagram(std::vector<Crossing> crossings, std::vector<ComponentSpan> components, std::vector<bool> axis);

  std::vector<Crossing> crossings_;
  std::vector<ComponentSpan> components_;
  std::vector<bool> axis_;
  std::vector<int> edge_component_;
};

// ---- text formats ----------------------------------------------------------

/// Parses `PD[X[a,b,c,d],...]`, optionally followed by `+ k loops`, and adds
/// `free_loops` further free loops. Orientation comes from the under-strands
/// and, for components that are never under, from consecutive edge numbering.
LinkDiagram parse_pd(std::string_view text, int free_loops = 0);
std::string format_pd(const LinkDiagram& d);

/// Parses `s: i1 i2 ...`, negative entries for inverse generators.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& b);

/// Parses either notation: text starting with `PD` is a PD code, anything else a braid.
LinkDiagram parse_diagram(std::string_view text);

// ---- braids ----------------------------------------------------------------

/// Image of each strand position under the braid's permutation (0-based).
std::vector<int> braid_permutation(const BraidWord& b);
/// Cycle lengths of the permutation, ordered by smallest position in the cycle.
std::vector<int> braid_cycles(const BraidWord& b);
BraidWord braid_power(const BraidWord& b, int p);

/// Standard closure; strands run downward, sigma_i (sign +1) is a positive crossing.
LinkDiagram braid_closure(const BraidWord& b);

enum class AxisConvention {
  OverFirst,  ///< axis passes over each strand where the strand first meets it
  UnderFirst,
};

/// Closure of b together with r parallel axis circles around all strands.
/// Every axis copy has linking number +1 with each strand.
LinkDiagram add_axis_cable(const BraidWord& b, int r, AxisConvention conv = AxisConvention::OverFirst);

// ---- structure -------------------------------------------------------------

struct LinkingData {
  std::vector<std::vector<int>> lk;  ///< symmetric, zero diagonal
  int writhe = 0;
  int total = 0;  ///< sum over pairs i<j
};

LinkingData linking_data(const LinkDiagram& d);

/// Keeps the listed components (in their original order); crossings with the
/// removed components are erased.
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep);
LinkDiagram reverse_component(const LinkDiagram& d, int c);
/// Applies reverse_component for each component c whose bit c is set.
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& bits);

LinkDiagram with_crossing_switched(const LinkDiagram& d, std::size_t x);
LinkDiagram with_crossing_smoothed(const LinkDiagram& d, std::size_t x);
/// Disjoint union; the second diagram's components follow the first's.
LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);
/// Mirror image: every crossing switched.
LinkDiagram mirror(const LinkDiagram& d);

}  // namespace plink
