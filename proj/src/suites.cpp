#include "plink/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "plink/criteria.hpp"
#include "plink/error.hpp"

namespace plink {

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point t0_;
};

const VZPoly& delta() {
  static const VZPoly d = unlink_value(2);
  return d;
}

}  // namespace

std::string SuiteResult::line() const {
  std::ostringstream os;
  os << (ok() ? "PASS" : "FAIL") << "  " << name << "  cases=" << cases << " failures=" << failures.size();
  os.precision(2);
  os << std::fixed << " time=" << seconds << "s";
  for (std::size_t i = 0; i < failures.size() && i < 5; ++i) os << "\n      " << failures[i];
  return os.str();
}

BraidWord random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int min_len, int max_len) {
  std::uniform_int_distribution<int> s(min_strands, max_strands);
  std::uniform_int_distribution<int> l(min_len, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  BraidWord w{s(rng), {}};
  const int n = w.strands > 1 ? l(rng) : 0;
  std::uniform_int_distribution<int> g(1, std::max(1, w.strands - 1));
  for (int i = 0; i < n; ++i) w.letters.push_back({g(rng), coin(rng) ? 1 : -1});
  return w;
}

SuiteResult skein_consistency_suite(std::uint64_t seed, int closures, int max_crossings) {
  SuiteResult r;
  r.name = "skein consistency";
  Timer timer(r);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < closures; ++k) {
    const BraidWord b = random_braid(rng, 2, 4, 1, max_crossings);
    const LinkDiagram d = braid_closure(b);
    const VZPoly pd = homfly(d);
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      ++r.cases;
      const VZPoly sw = homfly(with_crossing_switched(d, x));
      const VZPoly sm = homfly(with_crossing_smoothed(d, x));
      const bool pos = d.crossings()[x].sign > 0;
      const VZPoly& plus = pos ? pd : sw;
      const VZPoly& minus = pos ? sw : pd;
      if (plus.shifted(VZExp{0, -1}) - minus.shifted(VZExp{0, 1}) != sm.shifted(VZExp{1, 0}))
        r.failures.push_back(format_braid(b) + " crossing " + std::to_string(x + 1));
    }
  }
  return r;
}

SuiteResult markov_suite(std::uint64_t seed, int braids) {
  SuiteResult r;
  r.name = "markov invariance";
  Timer timer(r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 0; k < braids; ++k) {
    const BraidWord b = random_braid(rng, 2, 4, 1, 8);
    const VZPoly base = homfly(braid_closure(b));
    std::uniform_int_distribution<int> g(1, b.strands - 1);
    const BraidLetter a{g(rng), coin(rng) ? 1 : -1};
    BraidWord conj{b.strands, {a}};
    conj.letters.insert(conj.letters.end(), b.letters.begin(), b.letters.end());
    conj.letters.push_back({a.gen, -a.sign});
    BraidWord stab{b.strands + 1, b.letters};
    stab.letters.push_back({b.strands, coin(rng) ? 1 : -1});
    r.cases += 2;
    if (homfly(braid_closure(conj)) != base) r.failures.push_back("conjugation " + format_braid(b));
    if (homfly(braid_closure(stab)) != base) r.failures.push_back("stabilization " + format_braid(b));
  }
  return r;
}

SuiteResult split_union_suite(std::uint64_t seed, int cases) {
  SuiteResult r;
  r.name = "split union";
  Timer timer(r);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < cases; ++k) {
    const LinkDiagram d = braid_closure(random_braid(rng, 2, 4, 1, 8));
    const LinkDiagram e = braid_closure(random_braid(rng, 2, 3, 1, 6));
    const VZPoly pd = homfly(d);
    r.cases += 2;
    if (homfly(split_union(d, LinkDiagram())) != delta() * pd)
      r.failures.push_back("with unknot: " + format_pd(d));
    if (homfly(split_union(d, e)) != delta() * pd * homfly(e))
      r.failures.push_back("pair: " + format_pd(d) + " / " + format_pd(e));
  }
  return r;
}

SuiteResult axis_convention_suite(std::uint64_t seed, int braids) {
  SuiteResult r;
  r.name = "axis convention";
  Timer timer(r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mult(1, 2);
  for (int k = 0; k < braids; ++k) {
    const BraidWord b = random_braid(rng, 2, 4, 1, 6);
    const int m = mult(rng);
    ++r.cases;
    if (homfly(add_axis_cable(b, m, AxisConvention::OverFirst)) !=
        homfly(add_axis_cable(b, m, AxisConvention::UnderFirst)))
      r.failures.push_back(format_braid(b) + " r=" + std::to_string(m));
  }
  return r;
}

PeriodicSuiteResult periodic_suite(std::uint64_t seed, const PeriodicSuiteOptions& opt) {
  PeriodicSuiteResult out;
  out.conditions.name = "congruences p=" + std::to_string(opt.p);
  out.lowest.name = "lowest coefficient p=" + std::to_string(opt.p);
  Timer t1(out.conditions);
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  const HomflyOptions hopt{opt.max_crossings};
  int attempts = 0;
  while (static_cast<int>(out.factors.size()) < opt.count) {
    if (++attempts > 50 * opt.count) {
      out.conditions.failures.push_back("sampler exhausted after " + std::to_string(out.factors.size()) + " factors");
      break;
    }
    const auto idx = static_cast<std::size_t>(attempts);
    SamplerOptions so;
    so.p = opt.p;
    so.strands = opt.strands[idx % opt.strands.size()];
    so.r = opt.rs[(idx / opt.strands.size()) % opt.rs.size()];
    so.max_length = opt.max_length;
    so.max_crossings = opt.max_crossings;
    auto f = random_factor(rng, so);
    if (!f || !seen.insert(format_factor(*f)).second) continue;
    out.factors.push_back(*f);
    const LinkDiagram d = make_extended(*f);
    const VZPoly P = homfly(d, hopt);
    const int n = d.component_count();
    ++out.conditions.cases;
    const auto rep = check_theorem(P, n, f->p, f->r, format_factor(*f));
    if (!rep.pass() || !rep.applicable) out.conditions.failures.push_back(format_factor(*f));
    ++out.lowest.cases;
    const auto l0 = std::chrono::steady_clock::now();
    if (lemma31_lowest(d, hopt) != z_coefficient(P, 1 - n)) out.lowest.failures.push_back(format_factor(*f));
    out.lowest.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - l0).count();
  }
  return out;
}

SuiteResult lemma32_suite(std::uint64_t seed, int count, int p, int strands, std::size_t max_crossings) {
  SuiteResult r;
  r.name = "equivariant skein p=" + std::to_string(p);
  Timer timer(r);
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  const HomflyOptions hopt{max_crossings};
  int attempts = 0;
  while (r.cases < count) {
    if (++attempts > 50 * count) {
      r.failures.push_back("sampler exhausted");
      break;
    }
    SamplerOptions so;
    so.p = p;
    so.strands = strands;
    so.max_crossings = max_crossings;
    auto f = random_factor(rng, so);
    if (!f) continue;
    std::uniform_int_distribution<int> pick(1, static_cast<int>(f->factor.letters.size()));
    const int mark = pick(rng);
    if (!seen.insert(format_factor(*f) + " mark=" + std::to_string(mark)).second) continue;
    ++r.cases;
    const auto t = skein_triple(f->factor, mark, p, f->r);
    if (!lemma32_residual(t, p, hopt).is_zero())
      r.failures.push_back(format_factor(*f) + " mark=" + std::to_string(mark));
  }
  return r;
}

}  // namespace plink
