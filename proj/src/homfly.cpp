#include "plink/homfly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "plink/error.hpp"

namespace plink {

std::size_t default_crossing_limit() {
  if (const char* env = std::getenv("PLINK_CROSSING_LIMIT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 24;
}

VZPoly unlink_value(int components) {
  if (components < 1) throw InputError("an unlink needs at least one component");
  static const VZPoly delta = with_z(vinv_minus_v(), -1);
  return pow(delta, static_cast<unsigned>(components - 1));
}

namespace {

// Engine-side diagram: PD crossings over dense labels 0..2N-1 plus free loops.
struct X {
  std::array<int, 4> e;
  int sign;

  int under_in() const { return e[0]; }
  int under_out() const { return e[2]; }
  int over_in() const { return sign > 0 ? e[3] : e[1]; }
  int over_out() const { return sign > 0 ? e[1] : e[3]; }
};

struct Pd {
  std::vector<X> x;
  int loops = 0;

  int edges() const { return static_cast<int>(2 * x.size()); }
};

X switched(const X& c) {
  if (c.sign > 0) return {{c.e[3], c.e[0], c.e[1], c.e[2]}, -1};
  return {{c.e[1], c.e[2], c.e[3], c.e[0]}, 1};
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[static_cast<std::size_t>(a)] != a) {
      auto& pa = p[static_cast<std::size_t>(a)];
      pa = p[static_cast<std::size_t>(pa)];
      a = pa;
    }
    return a;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<std::size_t>(a)] = b;
  }
};

// Rebuilds after crossings were dropped and labels merged. Classes that no
// longer touch any crossing become free loops unless marked dead.
Pd rebuild(const Pd& pd, const std::vector<char>& drop, UnionFind& uf, const std::vector<char>& dead) {
  const int n = pd.edges();
  Pd out;
  out.loops = pd.loops;
  std::vector<int> relabel(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (std::size_t i = 0; i < pd.x.size(); ++i) {
    if (drop[i]) continue;
    X c = pd.x[i];
    for (auto& e : c.e) {
      const int r = uf.find(e);
      auto& l = relabel[static_cast<std::size_t>(r)];
      if (l < 0) l = next++;
      e = l;
    }
    out.x.push_back(c);
  }
  std::vector<char> counted(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < n; ++e) {
    if (dead[static_cast<std::size_t>(e)]) continue;
    const int r = uf.find(e);
    if (relabel[static_cast<std::size_t>(r)] < 0 && !counted[static_cast<std::size_t>(r)]) {
      counted[static_cast<std::size_t>(r)] = 1;
      ++out.loops;
    }
  }
  return out;
}

Pd smoothed(const Pd& pd, std::size_t i) {
  UnionFind uf(pd.edges());
  const X& c = pd.x[i];
  uf.join(c.under_in(), c.over_out());
  uf.join(c.over_in(), c.under_out());
  std::vector<char> drop(pd.x.size(), 0);
  drop[i] = 1;
  return rebuild(pd, drop, uf, std::vector<char>(static_cast<std::size_t>(pd.edges()), 0));
}

struct Slot {
  int x;
  int pos;
};

// slots[2*label], slots[2*label+1]
std::vector<Slot> slot_table(const Pd& pd) {
  std::vector<Slot> s(static_cast<std::size_t>(2 * pd.edges()), Slot{-1, -1});
  for (std::size_t i = 0; i < pd.x.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      const auto base = static_cast<std::size_t>(2 * pd.x[i].e[static_cast<std::size_t>(k)]);
      auto& dst = s[base].x < 0 ? s[base] : s[base + 1];
      dst = {static_cast<int>(i), k};
    }
  }
  return s;
}

bool remove_kink(Pd& pd) {
  for (std::size_t i = 0; i < pd.x.size(); ++i) {
    const auto& e = pd.x[i].e;
    for (int k = 0; k < 4; ++k) {
      if (e[static_cast<std::size_t>(k)] != e[static_cast<std::size_t>((k + 1) % 4)]) continue;
      const int loop = e[static_cast<std::size_t>(k)];
      const int a = e[static_cast<std::size_t>((k + 2) % 4)];
      const int b = e[static_cast<std::size_t>((k + 3) % 4)];
      UnionFind uf(pd.edges());
      uf.join(a, b);
      std::vector<char> drop(pd.x.size(), 0), dead(static_cast<std::size_t>(pd.edges()), 0);
      drop[i] = 1;
      dead[static_cast<std::size_t>(loop)] = 1;
      pd = rebuild(pd, drop, uf, dead);
      return true;
    }
  }
  return false;
}

bool remove_bigon(Pd& pd) {
  const auto slots = slot_table(pd);
  auto far_end = [&slots](int label, int x, int pos) {
    const auto& s0 = slots[static_cast<std::size_t>(2 * label)];
    const auto& s1 = slots[static_cast<std::size_t>(2 * label + 1)];
    return (s0.x == x && s0.pos == pos) ? s1 : s0;
  };
  for (std::size_t c = 0; c < pd.x.size(); ++c) {
    const auto& ec = pd.x[c].e;
    for (int i = 0; i < 4; ++i) {
      const int f = ec[static_cast<std::size_t>(i)];
      const Slot d = far_end(f, static_cast<int>(c), i);
      if (d.x == static_cast<int>(c) || (i - d.pos) % 2 != 0) continue;
      const auto& ed = pd.x[static_cast<std::size_t>(d.x)].e;
      int ic = -1, id = -1;
      // The face beside f closes after one more edge on either side.
      if (ed[static_cast<std::size_t>((d.pos + 1) % 4)] == ec[static_cast<std::size_t>((i + 3) % 4)]) {
        ic = (i + 3) % 4;
        id = (d.pos + 1) % 4;
      } else if (ed[static_cast<std::size_t>((d.pos + 3) % 4)] == ec[static_cast<std::size_t>((i + 1) % 4)]) {
        ic = (i + 1) % 4;
        id = (d.pos + 3) % 4;
      } else {
        continue;
      }
      const int g = ec[static_cast<std::size_t>(ic)];
      if (g == f) continue;
      // Remaining strand ends: the slot opposite f and opposite g at each crossing.
      const int fc_other = ec[static_cast<std::size_t>((i + 2) % 4)];
      const int gc_other = ec[static_cast<std::size_t>((ic + 2) % 4)];
      const int fd_other = ed[static_cast<std::size_t>((d.pos + 2) % 4)];
      const int gd_other = ed[static_cast<std::size_t>((id + 2) % 4)];
      UnionFind uf(pd.edges());
      uf.join(fc_other, fd_other);
      uf.join(gc_other, gd_other);
      std::vector<char> drop(pd.x.size(), 0), dead(static_cast<std::size_t>(pd.edges()), 0);
      drop[c] = 1;
      drop[static_cast<std::size_t>(d.x)] = 1;
      dead[static_cast<std::size_t>(f)] = 1;
      dead[static_cast<std::size_t>(g)] = 1;
      pd = rebuild(pd, drop, uf, dead);
      return true;
    }
  }
  return false;
}

void simplify_in_place(Pd& pd) {
  while (remove_kink(pd) || remove_bigon(pd)) {
  }
}

// Splits into connected pieces (each with zero free loops); returns loops separately.
std::vector<Pd> connected_pieces(const Pd& pd) {
  const std::size_t n = pd.x.size();
  UnionFind uf(static_cast<int>(n));
  std::vector<int> owner(static_cast<std::size_t>(pd.edges()), -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (int e : pd.x[i].e) {
      auto& o = owner[static_cast<std::size_t>(e)];
      if (o < 0) {
        o = static_cast<int>(i);
      } else {
        uf.join(o, static_cast<int>(i));
      }
    }
  }
  std::vector<int> piece_of(n, -1);
  std::vector<Pd> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(uf.find(static_cast<int>(i)));
    if (piece_of[r] < 0) {
      piece_of[r] = static_cast<int>(pieces.size());
      pieces.emplace_back();
    }
    pieces[static_cast<std::size_t>(piece_of[r])].x.push_back(pd.x[i]);
  }
  for (auto& p : pieces) {
    std::vector<int> relabel(static_cast<std::size_t>(pd.edges()), -1);
    int next = 0;
    for (auto& c : p.x)
      for (auto& e : c.e) {
        auto& l = relabel[static_cast<std::size_t>(e)];
        if (l < 0) l = next++;
        e = l;
      }
  }
  return pieces;
}

// Deterministic traversal from a root edge: walk its component, then the
// components reached from crossings in order of discovery.
struct Traversal {
  std::vector<int> label;       // edge -> visit index
  std::vector<int> components;  // number of components walked
  std::vector<int> code;
  int comps = 0;
};

struct PieceInfo {
  std::vector<int> code;
  std::vector<int> order;  // label of edges in the chosen traversal
  bool descending = true;
  int bad = 0;
  int components = 0;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Pd& pd) : pd_(pd), n_(pd.edges()) {
    succ_.assign(static_cast<std::size_t>(n_), -1);
    head_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < pd.x.size(); ++i) {
      const auto& c = pd.x[i];
      succ_[static_cast<std::size_t>(c.under_in())] = c.under_out();
      succ_[static_cast<std::size_t>(c.over_in())] = c.over_out();
      head_[static_cast<std::size_t>(c.under_in())] = static_cast<int>(i);
      head_[static_cast<std::size_t>(c.over_in())] = static_cast<int>(i);
    }
  }

  PieceInfo run() {
    PieceInfo best;
    bool have = false;
    int best_bad = 0;
    std::vector<int> best_order;
    bool best_desc = true;
    for (int root = 0; root < n_; ++root) {
      walk_from(root);
      if (!have || code_ < best.code) {
        best.code = code_;
        best.components = comps_;
        have = true;
      }
      int under_first = 0;
      for (const auto& c : pd_.x)
        if (lab_[static_cast<std::size_t>(c.under_in())] < lab_[static_cast<std::size_t>(c.over_in())]) ++under_first;
      const int over_first = static_cast<int>(pd_.x.size()) - under_first;
      const int bad = std::min(under_first, over_first);
      if (root == 0 || bad < best_bad) {
        best_bad = bad;
        best_order = lab_;
        best_desc = under_first <= over_first;
      }
    }
    best.order = std::move(best_order);
    best.bad = best_bad;
    best.descending = best_desc;
    return best;
  }

 private:
  void walk(int start) {
    int e = start;
    do {
      lab_[static_cast<std::size_t>(e)] = next_++;
      const int x = head_[static_cast<std::size_t>(e)];
      if (!xseen_[static_cast<std::size_t>(x)]) {
        xseen_[static_cast<std::size_t>(x)] = 1;
        xorder_.push_back(x);
      }
      e = succ_[static_cast<std::size_t>(e)];
    } while (e != start);
    ++comps_;
  }

  void walk_from(int root) {
    lab_.assign(static_cast<std::size_t>(n_), -1);
    xseen_.assign(pd_.x.size(), 0);
    xorder_.clear();
    next_ = 0;
    comps_ = 0;
    walk(root);
    for (std::size_t k = 0; k < xorder_.size(); ++k) {
      const auto& c = pd_.x[static_cast<std::size_t>(xorder_[k])];
      if (lab_[static_cast<std::size_t>(c.under_out())] < 0) walk(c.under_out());
      if (lab_[static_cast<std::size_t>(c.over_out())] < 0) walk(c.over_out());
    }
    code_.clear();
    code_.reserve(5 * xorder_.size());
    for (int x : xorder_) {
      const auto& c = pd_.x[static_cast<std::size_t>(x)];
      for (int e : c.e) code_.push_back(lab_[static_cast<std::size_t>(e)]);
      code_.push_back(c.sign);
    }
  }

  const Pd& pd_;
  int n_;
  std::vector<int> succ_, head_, lab_, xorder_, code_;
  std::vector<char> xseen_;
  int next_ = 0;
  int comps_ = 0;
};

struct CodeHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

Pd to_pd(const LinkDiagram& d) {
  Pd pd;
  for (const auto& c : d.crossings()) pd.x.push_back({{c.pd[0] - 1, c.pd[1] - 1, c.pd[2] - 1, c.pd[3] - 1}, c.sign});
  pd.loops = d.free_loop_count();
  return pd;
}

}  // namespace

struct HomflyEngine::Impl {
  HomflyOptions options;
  std::unordered_map<std::vector<int>, VZPoly, CodeHash> memo;
  Stats stats;
  static constexpr std::size_t kMemoCap = 1'000'000;

  VZPoly value(Pd pd) {
    ++stats.nodes;
    simplify_in_place(pd);
    auto pieces = connected_pieces(pd);
    const int split = static_cast<int>(pieces.size()) + pd.loops;
    if (split == 0) throw InputError("empty diagram");
    VZPoly out = unlink_value(split);
    for (const auto& p : pieces) out *= piece_value(p);
    return out;
  }

  VZPoly piece_value(const Pd& piece) {
    PieceInfo info = Canonicalizer(piece).run();
    if (auto it = memo.find(info.code); it != memo.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    // Crossings that break the descending (or ascending) property, in traversal order.
    std::vector<std::pair<int, std::size_t>> bad;
    for (std::size_t i = 0; i < piece.x.size(); ++i) {
      const int ui = info.order[static_cast<std::size_t>(piece.x[i].under_in())];
      const int oi = info.order[static_cast<std::size_t>(piece.x[i].over_in())];
      if ((ui < oi) == info.descending) bad.push_back({std::min(ui, oi), i});
    }
    std::sort(bad.begin(), bad.end());

    Pd work = piece;
    VZPoly acc;
    int vshift = 0;  // accumulated v^(2*sign) from the switches so far
    for (const auto& [when, i] : bad) {
      const int s = work.x[i].sign;
      // P(D_s) = v^(2s) P(D_-s) + s v^s z P(D_0)
      acc += value(smoothed(work, i)).shifted(VZExp{1, vshift + s}, s);
      work.x[i] = switched(work.x[i]);
      vshift += 2 * s;
    }
    acc += unlink_value(info.components).shifted(VZExp{0, vshift});
    if (memo.size() >= kMemoCap) memo.clear();
    memo.emplace(std::move(info.code), acc);
    stats.memo_size = memo.size();
    return acc;
  }
};

HomflyEngine::HomflyEngine(HomflyOptions options) : impl_(std::make_unique<Impl>()) { impl_->options = options; }
HomflyEngine::~HomflyEngine() = default;
HomflyEngine::HomflyEngine(HomflyEngine&&) noexcept = default;
HomflyEngine& HomflyEngine::operator=(HomflyEngine&&) noexcept = default;

VZPoly HomflyEngine::compute(const LinkDiagram& d) {
  if (d.crossing_count() > impl_->options.max_crossings)
    throw ResourceError("diagram has " + std::to_string(d.crossing_count()) + " crossings; limit is " +
                        std::to_string(impl_->options.max_crossings));
  return impl_->value(to_pd(d));
}

HomflyEngine::Stats HomflyEngine::stats() const { return impl_->stats; }
void HomflyEngine::clear_memo() {
  impl_->memo.clear();
  impl_->stats.memo_size = 0;
}
const HomflyOptions& HomflyEngine::options() const { return impl_->options; }

VZPoly homfly(const LinkDiagram& d, const HomflyOptions& options) {
  thread_local HomflyEngine engine(HomflyOptions{std::size_t(-1)});
  if (d.crossing_count() > options.max_crossings)
    throw ResourceError("diagram has " + std::to_string(d.crossing_count()) + " crossings; limit is " +
                        std::to_string(options.max_crossings));
  return engine.compute(d);
}

std::map<int, VPoly> coeffs_of(const VZPoly& p, int n) {
  std::map<int, VPoly> out;
  for (int e : z_exponents(p)) {
    const int shifted = e - (1 - n);
    if (shifted < 0 || shifted % 2 != 0)
      throw InputError("z-exponent " + std::to_string(e) + " is not of the form 1-n+2i for n=" + std::to_string(n));
    out.emplace(shifted / 2, z_coefficient(p, e));
  }
  return out;
}

std::map<int, VPoly> homfly_coeffs(const LinkDiagram& d, const HomflyOptions& options) {
  return coeffs_of(homfly(d, options), d.component_count());
}

std::uint64_t canonical_key(const LinkDiagram& d) {
  const Pd pd = to_pd(d);
  std::vector<std::vector<int>> codes;
  for (const auto& piece : connected_pieces(pd)) codes.push_back(Canonicalizer(piece).run().code);
  std::sort(codes.begin(), codes.end());
  std::vector<int> flat{pd.loops};
  for (const auto& c : codes) {
    flat.push_back(-1);
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return CodeHash{}(flat);
}

LinkDiagram simplify(const LinkDiagram& d) {
  Pd pd = to_pd(d);
  simplify_in_place(pd);
  DiagramBuilder b;
  for (int e = 0; e < pd.edges(); ++e) b.new_edge();
  for (const auto& c : pd.x) b.add_crossing(c.e, c.sign);
  b.add_free_loops(pd.loops);
  return b.build();
}

}  // namespace plink
