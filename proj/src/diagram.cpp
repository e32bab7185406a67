#include "plink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "plink/error.hpp"

namespace plink {

// ---- DiagramBuilder ----------------------------------------------------------

int DiagramBuilder::new_edge() {
  parent_.push_back(static_cast<int>(parent_.size()));
  return parent_.back();
}

void DiagramBuilder::add_crossing(std::array<int, 4> pd, int sign) {
  for (int e : pd)
    if (e < 0 || e >= static_cast<int>(parent_.size())) throw InputError("crossing refers to an unknown edge id");
  crossings_.push_back({pd, sign > 0 ? 1 : -1});
}

int DiagramBuilder::find(int x) const {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& px = parent_[static_cast<std::size_t>(x)];
    px = parent_[static_cast<std::size_t>(px)];
    x = px;
  }
  return x;
}

void DiagramBuilder::join(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

LinkDiagram DiagramBuilder::build() const {
  const std::size_t n = parent_.size();
  // After path compression every root is the smallest id of its class.
  std::vector<int> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = find(static_cast<int>(i));

  std::vector<int> heads(n, 0), tails(n, 0), next(n, -1);
  for (const auto& x : crossings_) {
    const int ui = root[static_cast<std::size_t>(x.under_in())];
    const int uo = root[static_cast<std::size_t>(x.under_out())];
    const int oi = root[static_cast<std::size_t>(x.over_in())];
    const int oo = root[static_cast<std::size_t>(x.over_out())];
    ++heads[static_cast<std::size_t>(ui)];
    ++heads[static_cast<std::size_t>(oi)];
    ++tails[static_cast<std::size_t>(uo)];
    ++tails[static_cast<std::size_t>(oo)];
    next[static_cast<std::size_t>(ui)] = uo;
    next[static_cast<std::size_t>(oi)] = oo;
  }

  // Walk the cycles; each starts at its smallest root so the order is deterministic.
  std::vector<std::vector<int>> cycles;
  std::vector<int> loops;
  std::vector<char> seen(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (root[r] != static_cast<int>(r) || seen[r]) continue;
    if (heads[r] == 0 && tails[r] == 0) {
      loops.push_back(static_cast<int>(r));
      seen[r] = 1;
      continue;
    }
    if (heads[r] != 1 || tails[r] != 1) throw InputError("edge is not traversed exactly once in each direction");
    std::vector<int> cyc;
    int e = static_cast<int>(r);
    do {
      if (heads[static_cast<std::size_t>(e)] != 1 || tails[static_cast<std::size_t>(e)] != 1)
        throw InputError("edge is not traversed exactly once in each direction");
      if (seen[static_cast<std::size_t>(e)]) throw InputError("inconsistent component traversal");
      seen[static_cast<std::size_t>(e)] = 1;
      cyc.push_back(e);
      e = next[static_cast<std::size_t>(e)];
    } while (e != static_cast<int>(r));
    cycles.push_back(std::move(cyc));
  }

  std::vector<int> label(n, 0);
  std::vector<ComponentSpan> spans;
  int next_label = 1;
  for (const auto& cyc : cycles) {
    spans.push_back({next_label, static_cast<int>(cyc.size())});
    for (int e : cyc) label[static_cast<std::size_t>(e)] = next_label++;
  }
  std::map<int, int> loop_component;
  for (int l : loops) {
    loop_component[l] = static_cast<int>(spans.size());
    spans.push_back({});
  }
  for (int i = 0; i < extra_loops_; ++i) spans.push_back({});

  std::vector<Crossing> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) {
    Crossing c{{}, x.sign};
    for (int k = 0; k < 4; ++k) c.pd[k] = label[static_cast<std::size_t>(root[static_cast<std::size_t>(x.pd[k])])];
    out.push_back(c);
  }

  std::vector<bool> axis(spans.size(), false);
  for (int id : axis_ids_) {
    const int r = root[static_cast<std::size_t>(id)];
    const int l = label[static_cast<std::size_t>(r)];
    if (l != 0) {
      for (std::size_t c = 0; c < spans.size(); ++c)
        if (spans[c].length > 0 && l >= spans[c].first && l < spans[c].first + spans[c].length) axis[c] = true;
    } else {
      axis[static_cast<std::size_t>(loop_component.at(r))] = true;
    }
  }
  if (spans.empty()) throw InputError("diagram has no components");
  return LinkDiagram(std::move(out), std::move(spans), std::move(axis));
}

// ---- LinkDiagram -----------------------------------------------------------------

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<ComponentSpan> components, std::vector<bool> axis)
    : crossings_(std::move(crossings)), components_(std::move(components)), axis_(std::move(axis)) {
  const int edges = edge_count();
  edge_component_.assign(static_cast<std::size_t>(edges) + 1, -1);
  int expect = 1;
  bool loops_started = false;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& s = components_[c];
    if (s.length == 0) {
      loops_started = true;
      continue;
    }
    if (loops_started || s.first != expect) throw InputError("component edge ranges are not consecutive");
    for (int e = s.first; e < s.first + s.length; ++e) edge_component_[static_cast<std::size_t>(e)] = static_cast<int>(c);
    expect += s.length;
  }
  if (expect != edges + 1) throw InputError("edge labels do not cover 1.." + std::to_string(edges));
  std::vector<int> count(static_cast<std::size_t>(edges) + 1, 0);
  for (const auto& x : crossings_) {
    for (int e : x.pd) {
      if (e < 1 || e > edges) throw InputError("edge label out of range");
      ++count[static_cast<std::size_t>(e)];
    }
    if (next_edge(x.under_in()) != x.under_out() || next_edge(x.over_in()) != x.over_out())
      throw InputError("crossing is inconsistent with the component orientation");
  }
  for (int e = 1; e <= edges; ++e)
    if (count[static_cast<std::size_t>(e)] != 2) throw InputError("edge " + std::to_string(e) + " does not occur exactly twice");
  if (axis_.size() != components_.size()) axis_.resize(components_.size(), false);
}

LinkDiagram LinkDiagram::unlink(int components) {
  if (components < 1) throw InputError("an unlink needs at least one component");
  return LinkDiagram({}, std::vector<ComponentSpan>(static_cast<std::size_t>(components)),
                     std::vector<bool>(static_cast<std::size_t>(components), false));
}

int LinkDiagram::free_loop_count() const {
  return static_cast<int>(std::count_if(components_.begin(), components_.end(),
                                        [](const ComponentSpan& s) { return s.length == 0; }));
}

int LinkDiagram::next_edge(int e) const {
  const auto& s = components_[static_cast<std::size_t>(component_of_edge(e))];
  return e + 1 < s.first + s.length ? e + 1 : s.first;
}

std::vector<int> LinkDiagram::axis_components() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < axis_.size(); ++c)
    if (axis_[c]) out.push_back(static_cast<int>(c));
  return out;
}

LinkDiagram LinkDiagram::with_axis_flags(std::vector<bool> axis) const {
  if (axis.size() != components_.size()) throw InputError("axis flag count does not match component count");
  LinkDiagram out = *this;
  out.axis_ = std::move(axis);
  return out;
}

// ---- helpers shared by the transformers ------------------------------------------

namespace {

// A builder pre-populated with one id per edge label (id = label - 1) and one
// id per free loop, so the transformers can edit crossings in place.
struct Rebuild {
  DiagramBuilder b;
  std::vector<int> loop_id;  // per component; -1 for components with edges

  explicit Rebuild(const LinkDiagram& d) {
    for (int e = 1; e <= d.edge_count(); ++e) b.new_edge();
    loop_id.assign(static_cast<std::size_t>(d.component_count()), -1);
    for (int c = 0; c < d.component_count(); ++c)
      if (d.components()[static_cast<std::size_t>(c)].length == 0) loop_id[static_cast<std::size_t>(c)] = b.new_edge();
  }

  static int id(int label) { return label - 1; }

  int some_id(const LinkDiagram& d, int c) const {
    const auto& s = d.components()[static_cast<std::size_t>(c)];
    return s.length > 0 ? id(s.first) : loop_id[static_cast<std::size_t>(c)];
  }

  void keep_axis(const LinkDiagram& d) {
    for (int c : d.axis_components()) b.mark_axis(some_id(d, c));
  }

  void add(const Crossing& x) { b.add_crossing({id(x.pd[0]), id(x.pd[1]), id(x.pd[2]), id(x.pd[3])}, x.sign); }
};

Crossing switched(const Crossing& x) {
  const auto& e = x.pd;
  if (x.sign > 0) return {{e[3], e[0], e[1], e[2]}, -1};
  return {{e[1], e[2], e[3], e[0]}, 1};
}

}  // namespace

LinkDiagram with_crossing_switched(const LinkDiagram& d, std::size_t x) {
  if (x >= d.crossing_count()) throw InputError("crossing index out of range");
  Rebuild r(d);
  for (std::size_t i = 0; i < d.crossing_count(); ++i) r.add(i == x ? switched(d.crossings()[i]) : d.crossings()[i]);
  r.keep_axis(d);
  return r.b.build();
}

LinkDiagram with_crossing_smoothed(const LinkDiagram& d, std::size_t x) {
  if (x >= d.crossing_count()) throw InputError("crossing index out of range");
  Rebuild r(d);
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings()[i];
    if (i != x) {
      r.add(c);
      continue;
    }
    r.b.join(Rebuild::id(c.under_in()), Rebuild::id(c.over_out()));
    r.b.join(Rebuild::id(c.over_in()), Rebuild::id(c.under_out()));
  }
  r.keep_axis(d);
  return r.b.build();
}

LinkDiagram mirror(const LinkDiagram& d) {
  Rebuild r(d);
  for (const auto& c : d.crossings()) r.add(switched(c));
  r.keep_axis(d);
  return r.b.build();
}

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  DiagramBuilder out;
  auto copy_in = [&out](const LinkDiagram& d) {
    std::vector<int> ids(static_cast<std::size_t>(d.edge_count()) + 1, -1);
    for (int e = 1; e <= d.edge_count(); ++e) ids[static_cast<std::size_t>(e)] = out.new_edge();
    auto at = [&ids](int e) { return ids[static_cast<std::size_t>(e)]; };
    for (const auto& x : d.crossings()) out.add_crossing({at(x.pd[0]), at(x.pd[1]), at(x.pd[2]), at(x.pd[3])}, x.sign);
    for (int c = 0; c < d.component_count(); ++c) {
      const auto& s = d.components()[static_cast<std::size_t>(c)];
      const int some = s.length > 0 ? at(s.first) : out.new_edge();
      if (d.is_axis(c)) out.mark_axis(some);
    }
  };
  copy_in(a);
  copy_in(b);
  return out.build();
}

// ---- structure ---------------------------------------------------------------------

LinkingData linking_data(const LinkDiagram& d) {
  const auto n = static_cast<std::size_t>(d.component_count());
  LinkingData out;
  out.lk.assign(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const int s = d.crossings()[x].sign;
    out.writhe += s;
    const auto a = static_cast<std::size_t>(d.under_component(x));
    const auto b = static_cast<std::size_t>(d.over_component(x));
    if (a == b) continue;
    out.lk[a][b] += s;
    out.lk[b][a] += s;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (out.lk[i][j] % 2 != 0) throw InputError("odd signed crossing count between two components");
      out.lk[i][j] /= 2;
      if (i < j) out.total += out.lk[i][j];
    }
  }
  return out;
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep) {
  if (keep.empty()) throw InputError("sublink needs at least one component");
  std::vector<bool> kept(static_cast<std::size_t>(d.component_count()), false);
  for (int c : keep) {
    if (c < 0 || c >= d.component_count()) throw InputError("component index out of range");
    kept[static_cast<std::size_t>(c)] = true;
  }
  DiagramBuilder b;
  std::vector<int> id(static_cast<std::size_t>(d.edge_count()) + 1, -1);
  std::vector<int> comp_id(kept.size(), -1);
  for (int c = 0; c < d.component_count(); ++c) {
    if (!kept[static_cast<std::size_t>(c)]) continue;
    const auto& s = d.components()[static_cast<std::size_t>(c)];
    if (s.length == 0) {
      comp_id[static_cast<std::size_t>(c)] = b.new_edge();
      continue;
    }
    for (int e = s.first; e < s.first + s.length; ++e) id[static_cast<std::size_t>(e)] = b.new_edge();
    comp_id[static_cast<std::size_t>(c)] = id[static_cast<std::size_t>(s.first)];
  }
  auto at = [&id](int e) { return id[static_cast<std::size_t>(e)]; };
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& c = d.crossings()[x];
    const bool u = kept[static_cast<std::size_t>(d.under_component(x))];
    const bool o = kept[static_cast<std::size_t>(d.over_component(x))];
    if (u && o) {
      b.add_crossing({at(c.pd[0]), at(c.pd[1]), at(c.pd[2]), at(c.pd[3])}, c.sign);
    } else if (u) {
      b.join(at(c.under_in()), at(c.under_out()));
    } else if (o) {
      b.join(at(c.over_in()), at(c.over_out()));
    }
  }
  for (int c : d.axis_components())
    if (kept[static_cast<std::size_t>(c)]) b.mark_axis(comp_id[static_cast<std::size_t>(c)]);
  return b.build();
}

LinkDiagram reverse_component(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.component_count()) throw InputError("component index out of range");
  Rebuild r(d);
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    Crossing k = d.crossings()[x];
    const bool u = d.under_component(x) == c;
    const bool o = d.over_component(x) == c;
    if (u) k.pd = {k.pd[2], k.pd[3], k.pd[0], k.pd[1]};
    if (u != o) k.sign = -k.sign;
    r.add(k);
  }
  r.keep_axis(d);
  return r.b.build();
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& bits) {
  LinkDiagram out = d;
  for (std::size_t c = 0; c < bits.size(); ++c)
    if (bits[c]) out = reverse_component(out, static_cast<int>(c));
  return out;
}

// ---- braids ------------------------------------------------------------------------

std::vector<int> braid_permutation(const BraidWord& b) {
  // pos[k] = current position of the strand that started at k
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  std::iota(at.begin(), at.end(), 0);  // at[position] = starting strand
  for (const auto& l : b.letters) std::swap(at[static_cast<std::size_t>(l.gen - 1)], at[static_cast<std::size_t>(l.gen)]);
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

std::vector<int> braid_cycles(const BraidWord& b) {
  const auto perm = braid_permutation(b);
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (auto j = k; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

BraidWord braid_power(const BraidWord& b, int p) {
  if (p < 1) throw InputError("braid power must be positive");
  BraidWord out{b.strands, {}};
  out.letters.reserve(b.letters.size() * static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

namespace {

void check_braid(const BraidWord& b) {
  if (b.strands < 1) throw InputError("a braid needs at least one strand");
  for (const auto& l : b.letters)
    if (l.gen < 1 || l.gen >= b.strands) throw InputError("generator index " + std::to_string(l.gen) + " out of range");
}

// Lays out the braid top to bottom; returns the edge ids entering each position
// from above (top) and the current bottom edges (cur).
struct BraidLayout {
  std::vector<int> top, cur;
};

BraidLayout lay_out_braid(DiagramBuilder& b, const BraidWord& w) {
  BraidLayout out;
  for (int k = 0; k < w.strands; ++k) out.top.push_back(b.new_edge());
  out.cur = out.top;
  for (const auto& l : w.letters) {
    const auto i = static_cast<std::size_t>(l.gen - 1);
    const int a = out.cur[i];      // strand moving right
    const int c = out.cur[i + 1];  // strand moving left
    const int a2 = b.new_edge();
    const int c2 = b.new_edge();
    if (l.sign > 0) {
      b.add_crossing({a, c2, a2, c}, 1);  // left-moving strand over
    } else {
      b.add_crossing({c, a, c2, a2}, -1);  // right-moving strand over
    }
    out.cur[i] = c2;
    out.cur[i + 1] = a2;
  }
  return out;
}

}  // namespace

LinkDiagram braid_closure(const BraidWord& w) {
  check_braid(w);
  DiagramBuilder b;
  auto lay = lay_out_braid(b, w);
  for (std::size_t k = 0; k < lay.top.size(); ++k) b.join(lay.cur[k], lay.top[k]);
  return b.build();
}

LinkDiagram add_axis_cable(const BraidWord& w, int r, AxisConvention conv) {
  check_braid(w);
  if (r < 1) throw InputError("axis multiplicity must be positive");
  DiagramBuilder b;
  auto lay = lay_out_braid(b, w);
  const int s = w.strands;
  for (int t = 0; t < r; ++t) {
    // Each belt meets strand k at an upper level and then at a lower level.
    // OverFirst: upper arc over, traversed right to left; lower arc under, left to right.
    // UnderFirst: upper arc under, left to right; lower arc over, right to left.
    std::vector<int> mid(static_cast<std::size_t>(s)), below(static_cast<std::size_t>(s));
    for (int k = 0; k < s; ++k) {
      mid[static_cast<std::size_t>(k)] = b.new_edge();
      below[static_cast<std::size_t>(k)] = b.new_edge();
    }
    struct Stop {
      int strand;
      bool upper;
    };
    std::vector<Stop> order;
    if (conv == AxisConvention::OverFirst) {
      for (int k = s - 1; k >= 0; --k) order.push_back({k, true});
      for (int k = 0; k < s; ++k) order.push_back({k, false});
    } else {
      for (int k = 0; k < s; ++k) order.push_back({k, true});
      for (int k = s - 1; k >= 0; --k) order.push_back({k, false});
    }
    std::vector<int> belt(order.size());
    for (auto& g : belt) g = b.new_edge();
    const std::size_t m = order.size();
    for (std::size_t i = 0; i < m; ++i) {
      const auto k = static_cast<std::size_t>(order[i].strand);
      const int arc_in = belt[(i + m - 1) % m];
      const int arc_out = belt[i];
      const int s_in = order[i].upper ? lay.cur[k] : mid[k];
      const int s_out = order[i].upper ? mid[k] : below[k];
      const bool arc_over = (conv == AxisConvention::OverFirst) == order[i].upper;
      if (arc_over) {
        b.add_crossing({s_in, arc_out, s_out, arc_in}, 1);
      } else {
        b.add_crossing({arc_in, s_out, arc_out, s_in}, 1);
      }
    }
    lay.cur = below;
    b.mark_axis(belt[0]);
  }
  for (std::size_t k = 0; k < lay.top.size(); ++k) b.join(lay.cur[k], lay.top[k]);
  return b.build();
}

// ---- text formats ----------------------------------------------------------------------

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::optional<long> integer() {
    ws();
    long v = 0;
    const char* b = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(b, s_.data() + s_.size(), v);
    if (ec != std::errc{} || ptr == b) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - b);
    return v;
  }
  long expect_integer() {
    auto v = integer();
    if (!v) fail("expected an integer");
    return *v;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text, int free_loops) {
  if (free_loops < 0) throw InputError("negative free loop count");
  Scanner sc(text);
  if (!sc.eat_word("PD")) sc.fail("expected 'PD['");
  sc.expect('[');
  std::vector<std::array<int, 4>> xs;
  if (!sc.eat(']')) {
    do {
      if (!sc.eat('X')) sc.fail("expected 'X['");
      sc.expect('[');
      std::array<int, 4> pd{};
      for (int k = 0; k < 4; ++k) {
        if (k > 0) sc.expect(',');
        const long v = sc.expect_integer();
        if (v < 1 || v > std::numeric_limits<int>::max() / 4) sc.fail("edge labels must be positive");
        pd[static_cast<std::size_t>(k)] = static_cast<int>(v);
      }
      sc.expect(']');
      xs.push_back(pd);
    } while (sc.eat(','));
    sc.expect(']');
  }
  if (sc.eat('+')) {
    free_loops += static_cast<int>(sc.expect_integer());
    if (!sc.eat_word("loops") && !sc.eat_word("loop")) sc.fail("expected 'loops'");
  }
  if (!sc.done()) sc.fail("trailing characters");
  if (xs.empty() && free_loops == 0) throw InputError("empty diagram");

  // Slot occurrences per label.
  struct Slot {
    std::size_t x;
    int pos;
  };
  std::map<int, std::vector<Slot>> slots;
  for (std::size_t x = 0; x < xs.size(); ++x)
    for (int k = 0; k < 4; ++k) slots[xs[x][static_cast<std::size_t>(k)]].push_back({x, k});
  for (const auto& [label, occ] : slots)
    if (occ.size() != 2) throw InputError("edge " + std::to_string(label) + " occurs " + std::to_string(occ.size()) + " times");

  // dir[x]: +1 when the over-strand runs d -> b, -1 when b -> d, 0 unknown.
  std::vector<int> dir(xs.size(), 0);
  auto other = [&](int label, std::size_t x, int pos) -> const Slot& {
    const auto& occ = slots.at(label);
    return (occ[0].x == x && occ[0].pos == pos) ? occ[1] : occ[0];
  };
  // +1 head (edge enters the crossing), -1 tail, 0 unknown.
  auto role = [&](const Slot& s) {
    if (s.pos == 0) return 1;
    if (s.pos == 2) return -1;
    if (dir[s.x] == 0) return 0;
    const bool b_is_out = dir[s.x] > 0;
    return (s.pos == 1) == b_is_out ? -1 : 1;
  };
  for (const auto& x : xs)
    if (x[1] == x[3]) throw InputError("over-strand edge returns to its own crossing");

  auto propagate = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < xs.size(); ++x) {
        if (dir[x] != 0) continue;
        const int rb = role(other(xs[x][1], x, 1));
        const int rd = role(other(xs[x][3], x, 3));
        int want = 0;
        if (rb != 0) want = rb > 0 ? 1 : -1;  // b's far end is a head => b leaves here => d -> b
        if (rd != 0) {
          const int w = rd > 0 ? -1 : 1;
          if (want != 0 && want != w) throw InputError("inconsistent orientation at crossing " + std::to_string(x + 1));
          want = w;
        }
        if (want != 0) {
          dir[x] = want;
          changed = true;
        }
      }
    }
  };
  propagate();
  for (std::size_t x = 0; x < xs.size(); ++x) {
    if (dir[x] != 0) continue;
    // The over-strand belongs to a component that is never under: fall back to
    // the consecutive numbering of that component's labels.
    std::vector<int> labels;
    std::size_t cx = x;
    int cur = xs[x][1];
    do {
      labels.push_back(cur);
      const Slot& far = other(cur, cx, xs[cx][1] == cur ? 1 : 3);
      if (far.pos % 2 == 0) throw InputError("inconsistent orientation data");
      cx = far.x;
      cur = xs[cx][far.pos == 1 ? 3 : 1];
    } while (cur != xs[x][1]);
    std::sort(labels.begin(), labels.end());
    const int lo = labels.front();
    const int hi = labels.back();
    if (hi - lo + 1 != static_cast<int>(labels.size()))
      throw InputError("edges of an over-only component are not numbered consecutively");
    const int b = xs[x][1];
    const int d = xs[x][3];
    auto succ = [&](int e) { return e == hi ? lo : e + 1; };
    if (labels.size() == 2) {
      dir[x] = b < d ? -1 : 1;
    } else if (succ(b) == d) {
      dir[x] = -1;
    } else if (succ(d) == b) {
      dir[x] = 1;
    } else {
      throw InputError("ambiguous orientation at crossing " + std::to_string(x + 1));
    }
    propagate();
  }

  DiagramBuilder builder;
  std::map<int, int> id;
  for (const auto& [label, occ] : slots) id[label] = builder.new_edge();
  for (std::size_t x = 0; x < xs.size(); ++x) {
    const auto& e = xs[x];
    builder.add_crossing({id[e[0]], id[e[1]], id[e[2]], id[e[3]]}, dir[x]);
  }
  builder.add_free_loops(free_loops);
  return builder.build();
}

std::string format_pd(const LinkDiagram& d) {
  std::vector<std::size_t> order(d.crossing_count());
  std::iota(order.begin(), order.end(), 0);
  // A two-edge component that is never under is read back by the lower-label-first
  // rule at its first listed crossing; list the crossing its first edge enters first.
  std::vector<bool> has_under(static_cast<std::size_t>(d.component_count()), false);
  for (std::size_t x = 0; x < d.crossing_count(); ++x) has_under[static_cast<std::size_t>(d.under_component(x))] = true;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& s = d.components()[static_cast<std::size_t>(c)];
    if (s.length != 2 || has_under[static_cast<std::size_t>(c)]) continue;
    std::size_t enter = 0, leave = 0;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      if (d.crossings()[x].over_in() == s.first) enter = x;
      if (d.crossings()[x].over_in() == s.first + 1) leave = x;
    }
    auto pe = std::find(order.begin(), order.end(), enter);
    auto pl = std::find(order.begin(), order.end(), leave);
    if (pl < pe) {
      order.erase(pe);
      order.insert(std::find(order.begin(), order.end(), leave), enter);
    }
  }
  std::ostringstream out;
  out << "PD[";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& e = d.crossings()[order[i]].pd;
    out << (i ? "," : "") << "X[" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ']';
  }
  out << ']';
  if (const int loops = d.free_loop_count(); loops > 0) out << " + " << loops << (loops == 1 ? " loop" : " loops");
  return out.str();
}

BraidWord parse_braid(std::string_view text) {
  Scanner sc(text);
  const long s = sc.expect_integer();
  if (s < 1 || s > 10000) sc.fail("strand count out of range");
  sc.expect(':');
  BraidWord b{static_cast<int>(s), {}};
  while (!sc.done()) {
    sc.eat(',');
    const long g = sc.expect_integer();
    if (g == 0) throw InputError("generator index 0 is not allowed");
    const long mag = g < 0 ? -g : g;
    if (mag >= s) throw InputError("generator index " + std::to_string(mag) + " out of range for " + std::to_string(s) + " strands");
    b.letters.push_back({static_cast<int>(mag), g < 0 ? -1 : 1});
  }
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::string out = std::to_string(b.strands) + ":";
  for (const auto& l : b.letters) out += " " + std::to_string(l.sign * l.gen);
  return out;
}

LinkDiagram parse_diagram(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, 2) == "PD") return parse_pd(text);
  return braid_closure(parse_braid(text));
}

}  // namespace plink
