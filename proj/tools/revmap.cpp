// Command-line front end: group, triples, map, classify, verify.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "revmap/classify.hpp"
#include "revmap/errors.hpp"
#include "revmap/families.hpp"
#include "revmap/homomorphism.hpp"
#include "revmap/maps.hpp"
#include "revmap/records.hpp"
#include "revmap/structure.hpp"
#include "revmap/suites.hpp"

using namespace revmap;

namespace {

struct Options {
  std::string group;
  std::string kind = "rev";
  std::string triple;
  std::string suite;
  std::string out;
  std::string format = "json";
  std::string report;
  long long max_n = 0;  // 0 keeps the sweep defaults
  std::size_t cap = 0;  // 0 keeps REVMAP_CAP or the built-in default
};

std::size_t cap_of(const Options& o) { return o.cap ? o.cap : default_enumeration_cap(); }

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Flat records print as aligned "key  value" lines; nested values stay JSON.
void print_text(std::ostream& os, const Json& record) {
  std::size_t width = 0;
  for (const auto& [k, v] : record.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : record.items()) {
    os << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << '\n';
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// One header row from the first record, then one row per record.
void print_csv(std::ostream& os, const std::vector<Json>& records) {
  if (records.empty()) return;
  bool first = true;
  for (const auto& [k, v] : records.front().items()) {
    os << (first ? "" : ",") << csv_cell(k);
    first = false;
  }
  os << '\n';
  for (const auto& r : records) {
    first = true;
    for (const auto& [k, v] : records.front().items()) {
      os << (first ? "" : ",") << (r.contains(k) ? csv_cell(scalar_text(r[k])) : "");
      first = false;
    }
    os << '\n';
  }
}

void emit(const Options& o, const std::vector<Json>& records) {
  if (o.format == "csv") {
    print_csv(std::cout, records);
  } else if (o.format == "text") {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i) std::cout << '\n';
      print_text(std::cout, records[i]);
    }
  } else {
    for (const auto& r : records) std::cout << r.dump() << '\n';
  }
}

LabeledGroup load_group(const Options& o) {
  if (o.group.empty()) throw ValidationError("--group is required");
  return build_family(FamilySpec::parse(o.group));
}

ReversingTriple parse_triple(const LabeledGroup& lg, const std::string& text) {
  std::vector<ElementId> ids;
  std::stringstream ss(text);
  std::string word;
  while (std::getline(ss, word, ',')) ids.push_back(lg.word(word));
  if (ids.size() != 3) throw ValidationError("--triple needs three comma-separated words, got '" + text + "'");
  return make_reversing_triple(lg.group, ids[0], ids[1], ids[2]);
}

std::array<std::string, 3> split_words(const std::string& text) {
  std::array<std::string, 3> out;
  std::stringstream ss(text);
  for (auto& w : out) std::getline(ss, w, ',');
  return out;
}

std::string spell(const LabeledGroup& lg, const ReversingTriple& t) {
  return lg.spell(t.x) + "," + lg.spell(t.y) + "," + lg.spell(t.z);
}

int run_group(const Options& o) {
  LabeledGroup lg = load_group(o);
  const FiniteGroup& g = *lg.group;
  Json record;
  record["group"] = lg.spec.to_string();
  record["order"] = g.order();
  record["degree"] = g.degree();
  Json gens = Json::array();
  for (const auto& gen : g.generators()) gens.push_back({{"label", gen.label}, {"order", g.element_order(gen.id)}});
  record["generators"] = gens;
  record["involutions"] = involutions(g).size();
  if (o.report == "structure") {
    record["structure"] = to_json(structure_report(lg.group));
  } else if (!o.report.empty()) {
    throw ValidationError("unknown report '" + o.report + "' (known: structure)");
  }
  emit(o, {record});
  return 0;
}

int run_triples(const Options& o) {
  LabeledGroup lg = load_group(o);
  const MapKind kind = parse_map_kind(o.kind);
  const std::size_t cap = cap_of(o);
  const bool regular = kind == MapKind::Reg;
  auto triples = regular ? enumerate_regular_triples(lg.group, cap) : enumerate_reversing_triples(lg.group, cap);
  auto auts = automorphism_group(lg.group, cap);
  auto classes = equivalence_classes(triples, auts, !regular);
  std::vector<Json> records;
  for (const auto& cls : classes) {
    records.push_back({{"group", lg.spec.to_string()},
                       {"kind", regular ? "reg" : "reversing"},
                       {"representative", spell(lg, cls.representative)},
                       {"class_size", cls.size()}});
  }
  std::cerr << triples.size() << " triples, " << auts.size() << " automorphisms, " << classes.size() << " classes\n";
  emit(o, records);
  return 0;
}

Json clause_json(const MapClause& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  Json out = {{"clause", to_string(c.clause)}, {"params", params}, {"reason", c.reason}};
  out["form"] = c.form ? Json(to_string(*c.form)) : Json(nullptr);
  return out;
}

Json classify_one(const LabeledGroup& lg, const ReversingTriple& t, MapKind kind,
                  const std::vector<Automorphism>& auts, const std::array<std::string, 3>& words) {
  CosetMap map = build_map(t, kind);
  MapInvariants inv = map_invariants(map);
  Json record = map_record(lg, words, inv);
  if (kind != MapKind::Reg) {
    CanonicalTag tag = match_canonical_form(lg, t, auts);
    Json forms = Json::array();
    for (const auto& m : tag.matches) forms.push_back(to_string(m.form));
    record["canonical_forms"] = forms;
  }
  record["classification"] = clause_json(classify_map(lg, map, inv, auts));
  return record;
}

int run_map(const Options& o) {
  LabeledGroup lg = load_group(o);
  if (o.triple.empty()) throw ValidationError("--triple is required");
  ReversingTriple t = parse_triple(lg, o.triple);
  MapInvariants inv = map_invariants(build_map(t, parse_map_kind(o.kind)));
  emit(o, {map_record(lg, split_words(o.triple), inv)});
  return 0;
}

int run_classify(const Options& o) {
  LabeledGroup lg = load_group(o);
  const MapKind kind = parse_map_kind(o.kind);
  const std::size_t cap = cap_of(o);
  auto auts = automorphism_group(lg.group, cap);
  std::vector<Json> records;
  if (!o.triple.empty()) {
    records.push_back(classify_one(lg, parse_triple(lg, o.triple), kind, auts, split_words(o.triple)));
  } else {
    const bool regular = kind == MapKind::Reg;
    auto triples = regular ? enumerate_regular_triples(lg.group, cap) : enumerate_reversing_triples(lg.group, cap);
    for (const auto& cls : equivalence_classes(triples, auts, !regular)) {
      const ReversingTriple& t = cls.representative;
      Json r = classify_one(lg, t, kind, auts, {lg.spell(t.x), lg.spell(t.y), lg.spell(t.z)});
      r["class_size"] = cls.size();
      records.push_back(std::move(r));
    }
  }
  emit(o, records);
  return 0;
}

int run_verify(const Options& o) {
  SweepConfig cfg;
  cfg.cap = cap_of(o);
  if (o.max_n > 0) cfg.max_n = cfg.max_disc_n = cfg.max_family_n = o.max_n;
  std::vector<std::string> names;
  if (o.suite.empty() || o.suite == "all") {
    names = suite_names();
  } else {
    names = {o.suite};
  }
  bool ok = true;
  for (const auto& name : names) {
    Report report = run_suite(name, cfg);
    ok = ok && report.ok();
    if (!o.out.empty()) {
      std::filesystem::create_directories(o.out);
      std::ofstream(std::filesystem::path(o.out) / (name + ".json")) << report.to_json().dump(2) << '\n';
      std::ofstream(std::filesystem::path(o.out) / (name + ".csv")) << report.to_csv();
    }
    if (o.format == "csv") std::cout << report.to_csv();
    else if (o.format == "text") std::cout << report.to_text();
    else std::cout << report.to_json().dump() << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revmap: reversing triples, coset maps and their classification"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("-g,--group,--spec", o.group, "family spec: D:n, DxD:m,n, R3:m,n,l, S4C:m, MC:n,m,lambda, PERM:<file>")
        ->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "enumeration cap (default: REVMAP_CAP or 500)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "map kind")->check(CLI::IsMember({"rev", "birev", "reg"}));
  };

  auto* group = app.add_subcommand("group", "describe a family group");
  add_group(group);
  add_common(group);
  group->add_option("--report", o.report, "extra report: structure");

  auto* triples = app.add_subcommand("triples", "reversing (or, with --kind reg, regular) triples up to equivalence");
  add_group(triples);
  add_kind(triples);
  add_common(triples);

  auto* map = app.add_subcommand("map", "build one map and print its record");
  add_group(map);
  add_kind(map);
  add_common(map);
  map->add_option("--triple", o.triple, "three words in the group's labels, e.g. u,v,abw")->required();

  auto* classify = app.add_subcommand("classify", "canonical form and clause of one triple or of every class");
  add_group(classify);
  add_kind(classify);
  add_common(classify);
  classify->add_option("--triple", o.triple, "three words; omit to classify every class");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name or 'all'");
  verify->add_option("--max-n", o.max_n, "dihedral bound for every sweep");
  verify->add_option("--out", o.out, "directory for <suite>.json and <suite>.csv");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*group) return run_group(o);
    if (*triples) return run_triples(o);
    if (*map) return run_map(o);
    if (*classify) return run_classify(o);
    if (*verify) return run_verify(o);
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "; raise it with --cap or REVMAP_CAP\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
