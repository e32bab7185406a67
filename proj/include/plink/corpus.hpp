#pragma once

// Link census files and batch scans over them.
//
// CSV columns: name,components,pd,homfly,variant (RFC 4180 quoting). homfly may
// be empty; variant holds orientation bits b1..bk (e.g. `0,1,0` or `010`) and
// reverses component i+1 when bit i is 1.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plink/criteria.hpp"
#include "plink/diagram.hpp"
#include "plink/homfly.hpp"

namespace plink {

struct CorpusRecord {
  std::string name;
  int components = 0;
  std::string pd;
  std::string homfly;   ///< stored polynomial text; empty when absent
  std::string variant;  ///< orientation bits as written; empty for none
  int line = 0;
  LinkDiagram diagram;  ///< parsed pd with the variant applied
};

struct IngestError {
  int line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<CorpusRecord> records;
  std::vector<IngestError> errors;
};

IngestResult ingest(std::istream& in);
/// Throws InputError when the file cannot be opened.
IngestResult ingest_file(const std::string& path);
void emit(std::ostream& out, const std::vector<CorpusRecord>& records);

/// Parses `0,1,0` or `010`.
std::vector<bool> parse_variant_bits(const std::string& text);

/// Compares the engine's value with the stored polynomial. Throws InputError
/// when there is no stored polynomial or it does not parse.
bool cross_check(const CorpusRecord& rec, const HomflyOptions& options = {});

enum class SummaryRule { Condition2, Both };

struct ScanOptions {
  int p = 3;
  std::optional<int> components;  ///< default filter: n == 1 (mod p)
  SummaryRule rule = SummaryRule::Condition2;
  bool allow_mismatch = false;
  HomflyOptions homfly;
};

struct ScanEntry {
  std::string name;
  int n = 0;
  std::string polynomial;
  std::optional<bool> cross_check;  ///< empty when nothing stored
  std::optional<CriterionReport> report;
  std::string error;  ///< resource or parse error; report empty
};

struct ScanReport {
  int p = 3;
  std::optional<int> components;
  SummaryRule rule = SummaryRule::Condition2;
  std::vector<ScanEntry> entries;  ///< records passing the filter, sorted by name
  std::vector<std::string> mismatches;
  bool refused = false;               ///< a cross-check failed and was not overridden
  std::vector<std::size_t> summary;  ///< indices into entries that pass
};

ScanReport scan(const std::vector<CorpusRecord>& records, const ScanOptions& options = {});

std::string format_scan(const ScanReport& rep);
nlohmann::ordered_json to_json(const ScanReport& rep);

}  // namespace plink
