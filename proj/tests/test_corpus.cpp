#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "plink/corpus.hpp"
#include "plink/error.hpp"

using namespace plink;

namespace {

const std::string kCensus = std::string(PLINK_DATA_DIR) + "/linkinfo_4comp_le11.csv";
const std::string kSmall = std::string(PLINK_DATA_DIR) + "/linkinfo_le8.csv";

IngestResult from_text(const std::string& s) {
  std::istringstream in(s);
  return ingest(in);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kHeader = "name,components,pd,homfly,variant\n";
const std::string kTrefoilPd = "\"PD[X[1,5,2,4],X[5,3,6,2],X[3,1,4,6]]\"";

}  // namespace

TEST_CASE("ingest basics") {
  const auto r = from_text(kHeader + "3_1," + "1," + kTrefoilPd + ",2*v^2 - v^4 + v^2*z^2,\n");
  REQUIRE(r.errors.empty());
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].components == 1);
  CHECK(r.records[0].diagram.crossing_count() == 3);
  CHECK(r.records[0].line == 2);
}

TEST_CASE("bad lines are reported and skipped") {
  const auto r = from_text(kHeader + "bad,2," + kTrefoilPd + ",,\n" + "ok,1," + kTrefoilPd + ",,\n" +
                           "junk,1,\"PD[X[1,2]]\",,\n" + "few,1\n" + "x,zero," + kTrefoilPd + ",,\n");
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].name == "ok");
  REQUIRE(r.errors.size() == 4);
  CHECK(r.errors[0].line == 2);
  CHECK(r.errors[0].message.find("declared 2") != std::string::npos);
  CHECK(r.errors[1].line == 4);
  CHECK(r.errors[2].line == 5);
  CHECK(r.errors[3].line == 6);
}

TEST_CASE("header and quoting") {
  CHECK(from_text("a,b,c\n").errors.size() == 1);
  CHECK(from_text("").errors.size() == 1);
  const auto q = from_text("name,components,pd\n\"a \"\"quoted\"\", name\",1," + kTrefoilPd + "\n");
  REQUIRE(q.records.size() == 1);
  CHECK(q.records[0].name == "a \"quoted\", name");
  const auto u = from_text(kHeader + "a,1,\"PD[X[1,5,2,4]\n");
  CHECK(u.records.empty());
  CHECK(u.errors.size() == 1);
  const auto crlf = from_text("name,components,pd\r\nk,1," + kTrefoilPd + "\r\n");
  CHECK(crlf.records.size() == 1);
}

TEST_CASE("empty stored polynomial is valid") {
  const auto r = from_text(kHeader + "3_1,1," + kTrefoilPd + ",,\n");
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].homfly.empty());
  CHECK_THROWS_AS(cross_check(r.records[0]), InputError);
}

TEST_CASE("cross_check") {
  auto rec = from_text(kHeader + "3_1,1,\"2: 1 1 1\",2*v^2 - v^4 + v^2*z^2,\n").records.at(0);
  CHECK(cross_check(rec));
  rec.homfly = "v^2*z^2 - v^4 + 2*v^2";
  CHECK(cross_check(rec));
  rec.homfly = "2*v^2 - v^4 + 2*v^2*z^2";
  CHECK_FALSE(cross_check(rec));
  rec.homfly = "2*v^2 +";
  CHECK_THROWS_AS(cross_check(rec), InputError);
}

TEST_CASE("orientation bits") {
  CHECK(parse_variant_bits("0,1,0") == std::vector<bool>{false, true, false});
  CHECK(parse_variant_bits("{1,1}") == std::vector<bool>{true, true});
  CHECK(parse_variant_bits("01") == std::vector<bool>{false, true});
  CHECK_THROWS_AS(parse_variant_bits("0,2"), InputError);
  const auto r = from_text(kHeader + "hopf,2,\"2: 1 1\",,1\nhopf0,2,\"2: 1 1\",,0\ntoo_many,2,\"2: 1 1\",,1,1\n");
  REQUIRE(r.records.size() == 2);
  CHECK(linking_data(r.records[0].diagram).total == -1);
  CHECK(linking_data(r.records[1].diagram).total == 1);
  CHECK(r.errors.size() == 1);
}

TEST_CASE("emit round-trips the bundled files") {
  for (const auto& path : {kCensus, kSmall}) {
    const auto in = ingest_file(path);
    CHECK(in.errors.empty());
    std::ostringstream out;
    emit(out, in.records);
    CHECK(out.str() == slurp(path));
  }
  CHECK_THROWS_AS(ingest_file("/nonexistent/x.csv"), InputError);
}

TEST_CASE("every stored polynomial agrees, with the lowest coefficient from linking numbers") {
  for (const auto& path : {kSmall, kCensus}) {
    const auto in = ingest_file(path);
    REQUIRE(in.errors.empty());
    for (const auto& rec : in.records) {
      CAPTURE(rec.name);
      REQUIRE(cross_check(rec));
      const auto P = homfly(rec.diagram);
      const int n = rec.components;
      REQUIRE(P.min_exp().z == 1 - n);
      REQUIRE(lemma31_lowest(rec.diagram) == z_coefficient(P, 1 - n));
    }
  }
}

TEST_CASE("scan filters, sorts and summarizes") {
  const auto in = ingest_file(kSmall);
  ScanOptions o;
  o.p = 3;
  o.components = 2;
  const auto rep = scan(in.records, o);
  CHECK_FALSE(rep.refused);
  CHECK(std::is_sorted(rep.entries.begin(), rep.entries.end(),
                       [](const ScanEntry& a, const ScanEntry& b) { return a.name < b.name; }));
  for (const auto& e : rep.entries) CHECK(e.n == 2);
  std::set<std::size_t> summary(rep.summary.begin(), rep.summary.end());
  for (std::size_t i = 0; i < rep.entries.size(); ++i)
    CHECK((summary.count(i) == 1) == rep.entries[i].report->condition2_pass());

  ScanOptions def;
  def.p = 3;
  for (const auto& e : scan(in.records, def).entries) CHECK(e.n % 3 == 1);
  ScanOptions bad;
  bad.p = 4;
  CHECK_THROWS_AS(scan(in.records, bad), InputError);
}

TEST_CASE("scan is deterministic") {
  auto records = ingest_file(kCensus).records;
  const auto a = to_json(scan(records)).dump();
  const auto ta = format_scan(scan(records));
  std::mt19937_64 rng(1);
  std::shuffle(records.begin(), records.end(), rng);
  CHECK(to_json(scan(records)).dump() == a);
  CHECK(format_scan(scan(records)) == ta);
}

TEST_CASE("scan refuses to summarize after a mismatch") {
  auto records = ingest_file(kSmall).records;
  records[5].homfly = "v";
  ScanOptions o;
  o.components = records[5].components;
  const auto rep = scan(records, o);
  CHECK(rep.refused);
  CHECK(rep.summary.empty());
  CHECK(rep.mismatches == std::vector<std::string>{records[5].name});
  CHECK(format_scan(rep).find("refusing") != std::string::npos);
  o.allow_mismatch = true;
  CHECK_FALSE(scan(records, o).summary.empty());
}

TEST_CASE("resource errors stay per record") {
  const auto records = ingest_file(kSmall).records;
  ScanOptions o;
  o.components = 2;
  o.homfly.max_crossings = 6;
  const auto rep = scan(records, o);
  int errors = 0, reports = 0;
  for (const auto& e : rep.entries) {
    if (!e.error.empty()) {
      ++errors;
      CHECK(e.error.rfind("resource", 0) == 0);
    }
    if (e.report) ++reports;
  }
  CHECK(errors > 0);
  CHECK(reports > 0);
}
