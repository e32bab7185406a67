#include "plink/periodic.hpp"

#include <charconv>
#include <sstream>

#include "plink/error.hpp"
#include "plink/poly.hpp"

namespace plink {

namespace {

void check_prime(int p) {
  if (p < 3 || !is_prime(p)) throw InputError("p must be an odd prime, got " + std::to_string(p));
}

int parse_int_field(std::string_view key, std::string_view v) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw InputError("bad value for " + std::string(key) + ": '" + std::string(v) + "'");
  return out;
}

}  // namespace

FactorPresentation parse_factor(std::string_view text) {
  FactorPresentation f;
  bool have_p = false, have_braid = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    const auto eq = text.find('=', pos);
    if (eq == std::string_view::npos) throw InputError("expected key=value in factor presentation");
    const auto key = text.substr(pos, eq - pos);
    if (key == "braid") {
      f.factor = parse_braid(text.substr(eq + 1));
      have_braid = true;
      break;
    }
    auto end = text.find(' ', eq);
    if (end == std::string_view::npos) end = text.size();
    const auto value = text.substr(eq + 1, end - eq - 1);
    if (key == "p") {
      f.p = parse_int_field(key, value);
      have_p = true;
    } else if (key == "r") {
      f.r = parse_int_field(key, value);
    } else {
      throw InputError("unknown key '" + std::string(key) + "' in factor presentation");
    }
    pos = end;
  }
  if (!have_p || !have_braid) throw InputError("factor presentation needs p= and braid=");
  return f;
}

std::string format_factor(const FactorPresentation& f) {
  return "p=" + std::to_string(f.p) + " r=" + std::to_string(f.r) + " braid=" + format_braid(f.factor);
}

std::string CycleReport::describe() const {
  std::ostringstream os;
  os << "cycle lengths [";
  for (std::size_t i = 0; i < cycles.size(); ++i) os << (i ? ", " : "") << cycles[i];
  os << "]";
  return os.str();
}

CycleReport validate_factor(const FactorPresentation& f) {
  check_prime(f.p);
  if (f.r < 1) throw InputError("axis multiplicity must be positive");
  CycleReport rep;
  rep.cycles = braid_cycles(f.factor);
  rep.valid = true;
  for (int c : rep.cycles)
    if (c % f.p != 0) rep.valid = false;
  return rep;
}

std::size_t extended_crossing_count(const FactorPresentation& f) {
  return f.factor.letters.size() * static_cast<std::size_t>(f.p) +
         2 * static_cast<std::size_t>(f.factor.strands) * static_cast<std::size_t>(f.r);
}

LinkDiagram make_extended(const FactorPresentation& f, AxisConvention conv) {
  const auto rep = validate_factor(f);
  if (!rep.valid)
    throw InputError("factor is not strongly " + std::to_string(f.p) + "-periodic: " + rep.describe());
  return add_axis_cable(braid_power(f.factor, f.p), f.r, conv);
}

BraidWord torus_factor(int p, int k) {
  if (k < 1) throw InputError("k must be positive");
  BraidWord w{p, {}};
  for (int j = 0; j < k; ++j)
    for (int g = 1; g < p; ++g) w.letters.push_back({g, 1});
  return w;
}

LinkDiagram make_torus_extended(int p, int k, int r) { return make_extended({torus_factor(p, k), p, r}); }

EquivariantTriple skein_triple(const BraidWord& factor, int mark, int p, int r) {
  if (mark < 1 || mark > static_cast<int>(factor.letters.size()))
    throw InputError("marked letter " + std::to_string(mark) + " out of range 1.." +
                     std::to_string(factor.letters.size()));
  const auto at = static_cast<std::size_t>(mark - 1);
  EquivariantTriple t;
  t.p = p;
  t.r = r;
  t.plus_factor = t.minus_factor = t.zero_factor = factor;
  t.plus_factor.letters[at].sign = 1;
  t.minus_factor.letters[at].sign = -1;
  t.zero_factor.letters.erase(t.zero_factor.letters.begin() + static_cast<std::ptrdiff_t>(at));
  t.strongly_periodic = validate_factor({t.plus_factor, p, r}).valid;
  t.plus = add_axis_cable(braid_power(t.plus_factor, p), r);
  t.minus = add_axis_cable(braid_power(t.minus_factor, p), r);
  t.zero = add_axis_cable(braid_power(t.zero_factor, p), r);
  return t;
}

std::optional<FactorPresentation> random_factor(std::mt19937_64& rng, const SamplerOptions& opt) {
  check_prime(opt.p);
  if (opt.strands < 2 || opt.max_length < 1) throw InputError("sampler needs >= 2 strands and length >= 1");
  std::uniform_int_distribution<int> len(1, opt.max_length);
  std::uniform_int_distribution<int> gen(1, opt.strands - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < opt.max_tries; ++t) {
    FactorPresentation f{{opt.strands, {}}, opt.p, opt.r};
    const int n = len(rng);
    for (int i = 0; i < n; ++i) f.factor.letters.push_back({gen(rng), coin(rng) ? 1 : -1});
    if (extended_crossing_count(f) > opt.max_crossings) continue;
    if (validate_factor(f).valid) return f;
  }
  return std::nullopt;
}

}  // namespace plink
