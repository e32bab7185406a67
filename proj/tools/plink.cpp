// Command-line front end: plink <subcommand> ...
// Exit codes: 0 ok, 1 obstruction found (check) or failed selftest, 2 bad input, 3 resource limit.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "plink/corpus.hpp"
#include "plink/criteria.hpp"
#include "plink/error.hpp"
#include "plink/homfly.hpp"
#include "plink/periodic.hpp"
#include "plink/suites.hpp"

using namespace plink;

namespace {

void print_report(const CriterionReport& rep) {
  std::cout << "n=" << rep.n << " p=" << rep.p << " r=" << rep.r << " applicable=" << (rep.applicable ? "yes" : "no")
            << "\n";
  const auto& c1 = rep.condition1;
  std::cout << "condition1: " << (c1.pass ? "pass" : "fail") << "  P_" << c1.exponent << " = "
            << to_string(c1.coefficient) << "\n";
  if (rep.r > 1) std::cout << "  divided: " << to_string(c1.divided) << "\n";
  std::cout << "  mod " << rep.p << ": " << to_string(c1.reduced) << "\n";
  if (!c1.pass) std::cout << "  failure: " << to_string(c1.failure) << "  witness: " << to_string(c1.witness) << "\n";
  for (const auto& c : rep.condition2)
    std::cout << "condition2 i=" << c.i << ": " << (c.pass ? "pass" : "fail") << "  P_" << c.exponent << " = "
              << to_string(c.coefficient) << "  mod " << rep.p << ": " << to_string(c.reduced) << "\n";
  std::cout << (rep.pass() ? "no obstruction" : "obstruction present") << "\n";
}

int selftest(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  results.push_back(skein_consistency_suite(seed, 100, 10));
  results.push_back(markov_suite(seed + 1, 20));
  results.push_back(split_union_suite(seed + 2, 20));
  results.push_back(axis_convention_suite(seed + 3, 20));
  auto t11 = periodic_suite(seed + 4, {3, {3, 6}, {1}, 50, 6, 24});
  results.push_back(t11.conditions);
  results.push_back(t11.lowest);
  auto t12 = periodic_suite(seed + 5, {3, {3}, {2, 3}, 10, 6, 24});
  t12.conditions.name = "congruences p=3 r=2,3";
  t12.lowest.name = "lowest coefficient p=3 r=2,3";
  results.push_back(t12.conditions);
  results.push_back(t12.lowest);
  results.push_back(lemma32_suite(seed + 6, 20, 3, 3, 24));
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.line() << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLYPT polynomials and periodicity obstructions for links"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t limit = 0;
  app.add_option("--max-crossings", limit, "crossing limit (default: PLINK_CROSSING_LIMIT or 24)");

  std::string diagram;
  bool json = false;
  int p = 3, r = 1, mark = 0;

  auto* compute = app.add_subcommand("compute", "HOMFLYPT polynomial of a PD code or braid word");
  compute->add_option("diagram", diagram, "PD[...] or 's: i1 i2 ...'")->required();

  auto* coeffs = app.add_subcommand("coeffs", "coefficients P_{1-n+2i}(v)");
  coeffs->add_option("diagram", diagram)->required();

  auto* check = app.add_subcommand("check", "test the congruence conditions");
  check->add_option("diagram", diagram)->required();
  check->add_option("--p", p, "odd prime")->required();
  check->add_option("--r", r, "axis multiplicity");
  check->add_flag("--json", json);

  std::string path;
  int components = 0;
  bool both = false, allow_mismatch = false;
  auto* scanc = app.add_subcommand("scan", "check every record of a corpus file");
  scanc->add_option("corpus", path, "CSV file")->required();
  scanc->add_option("--p", p, "odd prime")->required();
  scanc->add_option("--components", components, "only records with this many components (default: n = 1 mod p)");
  scanc->add_flag("--json", json);
  scanc->add_flag("--both", both, "summarize records passing both conditions instead of condition 2 alone");
  scanc->add_flag("--allow-mismatch", allow_mismatch, "summarize even when stored polynomials disagree");

  std::string braid;
  bool under_first = false;
  int random = 0, strands = 3, max_length = 6;
  std::uint64_t seed = 1;
  auto* generate = app.add_subcommand("generate", "emit an extended periodic diagram");
  generate->add_option("--p", p, "odd prime")->required();
  generate->add_option("--braid", braid, "factor braid 's: i1 i2 ...'");
  generate->add_option("--r", r, "axis multiplicity");
  generate->add_flag("--under-first", under_first, "axis passes under each strand first");
  generate->add_option("--random", random, "emit this many random factors instead");
  generate->add_option("--strands", strands, "strands for random factors");
  generate->add_option("--max-length", max_length, "word length bound for random factors");
  generate->add_option("--seed", seed);

  auto* triple = app.add_subcommand("triple", "equivariant skein triple and its residual");
  triple->add_option("--p", p, "odd prime")->required();
  triple->add_option("--braid", braid, "factor braid")->required();
  triple->add_option("--mark", mark, "1-based letter index")->required();
  triple->add_option("--r", r, "axis multiplicity");

  auto* self = app.add_subcommand("selftest", "run the randomized invariant suites");
  self->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  HomflyOptions hopt;
  if (limit > 0) hopt.max_crossings = limit;

  try {
    if (*compute) {
      std::cout << to_string(homfly(parse_diagram(diagram), hopt)) << "\n";
    } else if (*coeffs) {
      const auto d = parse_diagram(diagram);
      for (const auto& [i, c] : homfly_coeffs(d, hopt))
        std::cout << "i=" << i << "  P_" << (1 - d.component_count() + 2 * i) << " = " << to_string(c) << "\n";
    } else if (*check) {
      const auto d = parse_diagram(diagram);
      const auto rep = check_theorem(homfly(d, hopt), d.component_count(), p, r, diagram);
      if (json) {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        print_report(rep);
      }
      return rep.pass() ? 0 : 1;
    } else if (*scanc) {
      const auto in = ingest_file(path);
      for (const auto& e : in.errors) std::cerr << path << ":" << e.line << ": " << e.message << "\n";
      ScanOptions so;
      so.p = p;
      if (components > 0) so.components = components;
      so.rule = both ? SummaryRule::Both : SummaryRule::Condition2;
      so.allow_mismatch = allow_mismatch;
      so.homfly = hopt;
      const auto rep = scan(in.records, so);
      if (json) {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << format_scan(rep);
      }
      return rep.refused ? 2 : 0;
    } else if (*generate) {
      if (random > 0) {
        std::mt19937_64 rng(seed);
        SamplerOptions so;
        so.p = p;
        so.r = r;
        so.strands = strands;
        so.max_length = max_length;
        so.max_crossings = hopt.max_crossings;
        for (int k = 0; k < random; ++k) {
          auto f = random_factor(rng, so);
          if (!f) throw InputError("no valid factor found within the sampling budget");
          std::cout << format_factor(*f) << "\n";
        }
        return 0;
      }
      if (braid.empty()) throw InputError("generate needs --braid or --random");
      const FactorPresentation f{parse_braid(braid), p, r};
      const auto rep = validate_factor(f);
      if (!rep.valid) throw InputError("factor is not strongly " + std::to_string(p) + "-periodic: " + rep.describe());
      const auto d = make_extended(f, under_first ? AxisConvention::UnderFirst : AxisConvention::OverFirst);
      std::cout << format_factor(f) << "\n"
                << "components=" << d.component_count() << " crossings=" << d.crossing_count() << "\n"
                << format_pd(d) << "\n";
    } else if (*triple) {
      const auto t = skein_triple(parse_braid(braid), mark, p, r);
      std::cout << "plus:  " << format_braid(t.plus_factor) << "  " << format_pd(t.plus) << "\n"
                << "minus: " << format_braid(t.minus_factor) << "  " << format_pd(t.minus) << "\n"
                << "zero:  " << format_braid(t.zero_factor) << "  " << format_pd(t.zero) << "\n"
                << "residual mod " << p << ": " << to_string(lemma32_residual(t, p, hopt)) << "\n";
    } else if (*self) {
      return selftest(seed);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DivisibilityError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
