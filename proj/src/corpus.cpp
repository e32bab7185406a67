#include "plink/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "plink/error.hpp"

namespace plink {

namespace {

// Reads one CSV record, which may span lines inside quotes. Returns false at EOF.
bool read_row(std::istream& in, std::vector<std::string>& fields, int& line) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string cur;
  bool quoted = false;
  char ch;
  ++line;
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          cur += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) throw InputError("unterminated quoted field");
  fields.push_back(std::move(cur));
  return true;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

int parse_count(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < 1) throw InputError("bad component count '" + s + "'");
  return v;
}

}  // namespace

std::vector<bool> parse_variant_bits(const std::string& text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c == '1');
    } else if (c != ',' && c != ' ' && c != '{' && c != '}') {
      throw InputError("bad orientation bits '" + text + "'");
    }
  }
  return bits;
}

IngestResult ingest(std::istream& in) {
  IngestResult out;
  std::vector<std::string> f;
  int line = 0;
  bool header = true;
  while (true) {
    const int start = line + 1;
    try {
      if (!read_row(in, f, line)) break;
    } catch (const InputError& e) {
      out.errors.push_back({start, e.what()});
      break;
    }
    if (f.size() == 1 && f[0].empty()) continue;
    if (header) {
      header = false;
      if (f.size() < 3 || f[0] != "name" || f[1] != "components" || f[2] != "pd") {
        out.errors.push_back({start, "expected header name,components,pd[,homfly[,variant]]"});
        return out;
      }
      continue;
    }
    try {
      if (f.size() < 3 || f.size() > 5) throw InputError("expected 3 to 5 fields, got " + std::to_string(f.size()));
      CorpusRecord r;
      r.line = start;
      r.name = f[0];
      if (r.name.empty()) throw InputError("empty name");
      r.components = parse_count(f[1]);
      r.pd = f[2];
      if (f.size() > 3) r.homfly = f[3];
      if (f.size() > 4) r.variant = f[4];
      r.diagram = parse_diagram(r.pd);
      if (!r.variant.empty()) {
        auto bits = parse_variant_bits(r.variant);
        if (static_cast<int>(bits.size()) >= r.diagram.component_count())
          throw InputError("too many orientation bits for " + std::to_string(r.diagram.component_count()) +
                           " components");
        bits.insert(bits.begin(), false);
        r.diagram = reverse_components(r.diagram, bits);
      }
      if (r.diagram.component_count() != r.components)
        throw InputError("declared " + std::to_string(r.components) + " components, diagram has " +
                         std::to_string(r.diagram.component_count()));
      out.records.push_back(std::move(r));
    } catch (const InputError& e) {
      out.errors.push_back({start, e.what()});
    }
  }
  if (header) out.errors.push_back({1, "missing header"});
  return out;
}

IngestResult ingest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return ingest(in);
}

void emit(std::ostream& out, const std::vector<CorpusRecord>& records) {
  out << "name,components,pd,homfly,variant\n";
  for (const auto& r : records)
    out << quote(r.name) << ',' << r.components << ',' << quote(r.pd) << ',' << quote(r.homfly) << ','
        << quote(r.variant) << '\n';
}

bool cross_check(const CorpusRecord& rec, const HomflyOptions& options) {
  if (rec.homfly.empty()) throw InputError(rec.name + ": no stored polynomial");
  const VZPoly stored = parse_vzpoly(rec.homfly);
  return to_string(homfly(rec.diagram, options)) == to_string(stored);
}

ScanReport scan(const std::vector<CorpusRecord>& records, const ScanOptions& options) {
  ScanReport rep;
  rep.p = options.p;
  rep.components = options.components;
  rep.rule = options.rule;
  if (options.p < 3 || !is_prime(options.p)) throw InputError("p must be an odd prime");

  std::vector<const CorpusRecord*> chosen;
  for (const auto& r : records) {
    const bool keep = options.components ? r.components == *options.components : (r.components - 1) % options.p == 0;
    if (keep) chosen.push_back(&r);
  }
  std::stable_sort(chosen.begin(), chosen.end(),
                   [](const CorpusRecord* a, const CorpusRecord* b) { return a->name < b->name; });

  for (const auto* r : chosen) {
    ScanEntry e;
    e.name = r->name;
    e.n = r->components;
    try {
      const VZPoly P = homfly(r->diagram, options.homfly);
      e.polynomial = to_string(P);
      if (!r->homfly.empty()) {
        e.cross_check = e.polynomial == to_string(parse_vzpoly(r->homfly));
        if (!*e.cross_check) rep.mismatches.push_back(r->name);
      }
      e.report = check_theorem(P, r->components, options.p, 1, r->name);
    } catch (const ResourceError& ex) {
      e.error = std::string("resource: ") + ex.what();
    } catch (const InputError& ex) {
      e.error = std::string("input: ") + ex.what();
    }
    rep.entries.push_back(std::move(e));
  }

  rep.refused = !rep.mismatches.empty() && !options.allow_mismatch;
  if (!rep.refused) {
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const auto& rr = rep.entries[i].report;
      if (!rr) continue;
      const bool ok = options.rule == SummaryRule::Both ? rr->pass() : rr->condition2_pass();
      if (ok) rep.summary.push_back(i);
    }
  }
  return rep;
}

namespace {

const char* rule_name(SummaryRule r) { return r == SummaryRule::Both ? "condition1+condition2" : "condition2"; }

}  // namespace

std::string format_scan(const ScanReport& rep) {
  std::ostringstream os;
  os << "p=" << rep.p << " components=";
  if (rep.components) {
    os << *rep.components;
  } else {
    os << "1 mod " << rep.p;
  }
  os << " rule=" << rule_name(rep.rule) << " records=" << rep.entries.size() << "\n";
  os << "name\tn\tcond1\tcond2\tcheck\n";
  for (const auto& e : rep.entries) {
    os << e.name << '\t' << e.n << '\t';
    if (e.report) {
      os << (e.report->condition1.pass ? "pass" : std::string("fail:") + to_string(e.report->condition1.failure))
         << '\t' << (e.report->condition2_pass() ? "pass" : "fail") << '\t';
    } else {
      os << "-\t-\t";
    }
    os << (e.cross_check ? (*e.cross_check ? "ok" : "MISMATCH") : "-");
    if (!e.error.empty()) os << '\t' << e.error;
    os << '\n';
  }
  if (rep.refused) {
    os << "refusing to summarize: " << rep.mismatches.size() << " cross-check mismatch(es):";
    for (const auto& m : rep.mismatches) os << ' ' << m;
    os << '\n';
    return os.str();
  }
  os << "passing (" << rule_name(rep.rule) << "): " << rep.summary.size() << "\n";
  for (auto i : rep.summary) {
    const auto& e = rep.entries[i];
    os << e.name;
    for (const auto& c : e.report->condition2) os << "\tP_" << c.exponent << " = " << to_string(c.coefficient);
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const ScanReport& rep) {
  nlohmann::ordered_json j;
  j["p"] = rep.p;
  j["components"] = rep.components ? nlohmann::ordered_json(*rep.components) : nlohmann::ordered_json(nullptr);
  j["rule"] = rule_name(rep.rule);
  j["refused"] = rep.refused;
  j["mismatches"] = rep.mismatches;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : rep.entries) {
    nlohmann::ordered_json x;
    x["name"] = e.name;
    x["n"] = e.n;
    x["homfly"] = e.polynomial;
    x["cross_check"] = e.cross_check ? nlohmann::ordered_json(*e.cross_check) : nlohmann::ordered_json(nullptr);
    x["report"] = e.report ? to_json(*e.report) : nlohmann::ordered_json(nullptr);
    if (!e.error.empty()) x["error"] = e.error;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  auto summary = nlohmann::ordered_json::array();
  for (auto i : rep.summary) {
    const auto& e = rep.entries[i];
    nlohmann::ordered_json s;
    s["name"] = e.name;
    for (const auto& c : e.report->condition2) s["P_" + std::to_string(c.exponent)] = to_string(c.coefficient);
    summary.push_back(std::move(s));
  }
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace plink
