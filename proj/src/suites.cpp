#include "revmap/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "revmap/errors.hpp"
#include "revmap/homomorphism.hpp"
#include "revmap/numeric.hpp"
#include "revmap/records.hpp"
#include "revmap/structure.hpp"

namespace revmap {

void SweepConfig::validate() const {
  if (max_n < 3 || max_disc_n < 3 || max_family_n < 3) {
    throw ValidationError("sweep bounds must be at least 3");
  }
  const std::size_t need = largest_order();
  if (cap < need) {
    throw ValidationError("enumeration cap " + std::to_string(cap) + " is below the largest swept order " +
                          std::to_string(need));
  }
}

std::size_t SweepConfig::largest_order() const {
  long long best = 2 * std::max({max_n, max_disc_n, max_family_n});
  for (const auto& [m, n] : dxd) best = std::max(best, 4 * m * n);
  for (const auto& [m, n] : regular_dxd) best = std::max(best, 4 * m * n);
  for (const auto& t : r3) best = std::max(best, 4 * t[0] * t[1] * t[2]);
  for (long long m : s4c) best = std::max(best, 8 * m);
  for (long long m : regular_s4c) best = std::max(best, 8 * m);
  return static_cast<std::size_t>(best);
}

namespace {

std::string spell_triple(const LabeledGroup& lg, const ReversingTriple& t) {
  return lg.spell(t.x) + "," + lg.spell(t.y) + "," + lg.spell(t.z);
}

ReversingTriple triple_of(const LabeledGroup& lg, ElementId x, ElementId y, ElementId z) {
  return make_reversing_triple(lg.group, x, y, z);
}

/// Everything that must survive an automorphism or the (x, y)-swap. The edge
/// list of an unrecognized graph depends on coset numbering, so only its
/// sizes enter.
std::string signature(const MapInvariants& inv) {
  std::string orient = inv.orientable ? (*inv.orientable ? "o" : "n") : "?";
  const GraphDescriptor& d = inv.graph;
  std::string graph = d.family == GraphFamily::Other
                          ? "Other(" + std::to_string(d.vertices) + "," + std::to_string(d.base_valency) + "," +
                                std::to_string(d.multiplicity) + ")"
                          : d.to_string();
  return std::to_string(inv.num_vertices) + "/" + std::to_string(inv.num_edges) + "/" +
         std::to_string(inv.num_faces) + "/" + std::to_string(inv.chi) + "/" + orient + "/" + graph;
}

/// Each member, pushed through its recorded automorphism and swap, lands on
/// the representative.
bool certificate_holds(const EquivalenceClass& cls, const std::vector<Automorphism>& auts) {
  for (const auto& member : cls.members) {
    if (member.automorphism >= auts.size()) return false;
    ReversingTriple t = apply(auts[member.automorphism], member.triple);
    if (member.swapped) t = swap_xy(t);
    if (!(t == cls.representative)) return false;
  }
  return true;
}

struct Sweep {
  LabeledGroup lg;
  std::vector<Automorphism> auts;
  std::size_t triples = 0;
  std::vector<EquivalenceClass> classes;
};

Sweep sweep(const LabeledGroup& lg, std::size_t cap, bool regular) {
  Sweep s{lg, automorphism_group(lg.group, cap), 0, {}};
  auto triples = regular ? enumerate_regular_triples(lg.group, cap) : enumerate_reversing_triples(lg.group, cap);
  s.triples = triples.size();
  s.classes = equivalence_classes(triples, s.auts, !regular);
  return s;
}

std::vector<LabeledGroup> family_groups(const SweepConfig& cfg) {
  std::vector<LabeledGroup> out;
  for (long long n = 3; n <= cfg.max_family_n; ++n) out.push_back(dihedral(n));
  for (const auto& [m, n] : cfg.dxd) out.push_back(dihedral_product(m, n));
  for (const auto& t : cfg.r3) out.push_back(rank3_cyclic_ext(t[0], t[1], t[2]));
  for (long long m : cfg.s4c) out.push_back(s4_cover(m));
  return out;
}

std::vector<LabeledGroup> regular_groups(const SweepConfig& cfg) {
  std::vector<LabeledGroup> out;
  for (const auto& [m, n] : cfg.regular_dxd) out.push_back(dihedral_product(m, n));
  for (long long m : cfg.regular_s4c) out.push_back(s4_cover(m));
  for (long long n = 2; n <= cfg.max_family_n; ++n) out.push_back(dihedral(n));
  return out;
}

Clause family_clause(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Dihedral: return Clause::Dihedral;
    case FamilyKind::DihedralProduct: return Clause::DihedralProduct;
    case FamilyKind::Rank3CyclicExt: return Clause::Rank3Cover;
    case FamilyKind::S4Cover: return Clause::S4Cover;
    default: return Clause::Unmatched;
  }
}

std::string tensor_text(long long a, long long b, long long mult) {
  if (a > b) std::swap(a, b);
  std::string base = "C" + std::to_string(a) + "xC" + std::to_string(b);
  return mult == 1 ? base : "(" + base + ")^(" + std::to_string(mult) + ")";
}

std::string cycle_text(long long k, long long mult) {
  return "C" + std::to_string(k) + "^(" + std::to_string(mult) + ")";
}

/// One explicitly named family triple, built for every choice of z.
struct FamilyTriple {
  std::string name;
  std::array<ElementId, 3> elements;
};

/// The three maps (p, q, r), (p, r, q), (q, r, p): every entry in turn as z.
std::vector<ReversingTriple> z_choices(const LabeledGroup& lg, const std::array<ElementId, 3>& e) {
  return {triple_of(lg, e[0], e[1], e[2]), triple_of(lg, e[0], e[2], e[1]), triple_of(lg, e[1], e[2], e[0])};
}

/// The family triples of criteria 1 to 3 with the values they must produce.
struct ExplicitExpectation {
  LabeledGroup lg;
  std::string name;
  std::vector<ReversingTriple> triples;
  long long chi = 0;
  std::size_t edges = 0;
  std::set<std::string> graphs;  // exactly this set as z varies
  bool require_nonorientable = false;
};

std::vector<ExplicitExpectation> explicit_families(const SweepConfig& cfg) {
  std::vector<ExplicitExpectation> out;
  for (const auto& [m, n] : cfg.dxd) {
    LabeledGroup lg = dihedral_product(m, n);
    const FiniteGroup& g = *lg.group;
    ElementId abw = g.mul(g.mul(lg.label("a"), lg.label("b")), lg.label("w"));
    out.push_back({lg, "u,v,abw", z_choices(lg, {lg.label("u"), lg.label("v"), abw}), m + n - m * n,
                   static_cast<std::size_t>(2 * m * n),
                   {cycle_text(m, 2 * n), cycle_text(n, 2 * m), tensor_text(m, n, 1)}, true});
  }
  for (const auto& p : cfg.r3) {
    const long long m = p[0], n = p[1], l = p[2];
    LabeledGroup lg = rank3_cyclic_ext(m, n, l);
    const FiniteGroup& g = *lg.group;
    ElementId cv = g.mul(lg.label("c"), lg.label("v"));
    ElementId abw = g.mul(g.mul(lg.label("a"), lg.label("b")), lg.label("w"));
    out.push_back({lg, "u,cv,abw", z_choices(lg, {lg.label("u"), cv, abw}), m * n + m * l + n * l - 2 * m * n * l,
                   static_cast<std::size_t>(2 * m * n * l),
                   {tensor_text(m, n, l), tensor_text(m, l, n), tensor_text(n, l, m)}, false});
  }
  for (long long m : cfg.s4c) {
    LabeledGroup lg = s4_cover(m);
    const FiniteGroup& g = *lg.group;
    ElementId v = lg.label("v"), h = lg.label("h"), w = lg.label("w");
    ElementId w2 = g.mul(w, w);
    for (long long i = 1; i < m; ++i) {
      if (gcd(i, m) != 1) continue;
      ElementId hiv = g.mul(g.pow(h, i), v);
      out.push_back({lg, "v,h" + std::to_string(i) + "v,w2", z_choices(lg, {v, hiv, w2}), 4 - m,
                     static_cast<std::size_t>(4 * m),
                     {"K4^(" + std::to_string(2 * m / 3) + ")", cycle_text(m, 4), "C" + std::to_string(m) + "[2K1]"},
                     false});
    }
  }
  return out;
}

/// The S4-cover triples {v, h^i v, t} for the t other than w^2.
struct S4Alternative {
  LabeledGroup lg;
  long long i = 0;
  std::string t;
  ReversingTriple triple;
};

std::vector<S4Alternative> s4_alternatives(const SweepConfig& cfg) {
  std::vector<S4Alternative> out;
  for (long long m : cfg.s4c) {
    LabeledGroup lg = s4_cover(m);
    const FiniteGroup& g = *lg.group;
    ElementId v = lg.label("v"), h = lg.label("h"), w = lg.label("w"), u = lg.label("u");
    ElementId w2 = g.mul(w, w);
    for (long long i = 1; i < m; ++i) {
      if (gcd(i, m) != 1) continue;
      ElementId hiv = g.mul(g.pow(h, i), v);
      out.push_back({lg, i, "u", triple_of(lg, v, hiv, u)});
      out.push_back({lg, i, "w2v", triple_of(lg, v, hiv, g.mul(w2, v))});
    }
  }
  return out;
}

/// Pairs 0 < i, j < n with gcd(i, j, n) = 1.
template <typename F>
void for_each_dihedral_pair(long long n, F&& f) {
  for (long long i = 1; i < n; ++i) {
    for (long long j = 1; j < n; ++j) {
      if (gcd(i, j, n) == 1) f(i, j);
    }
  }
}

ReversingTriple dihedral_reflections(const LabeledGroup& lg, long long i, long long j) {
  const FiniteGroup& g = *lg.group;
  ElementId gg = lg.label("g"), h = lg.label("h");
  return triple_of(lg, h, g.mul(g.pow(gg, i), h), g.mul(g.pow(gg, j), h));
}

long long built_chi(const CosetMap& map) {
  return static_cast<long long>(map.num_vertices()) - static_cast<long long>(map.num_edges()) +
         static_cast<long long>(map.num_faces());
}

/// The exponent e when n = p^e for an odd prime p, else 0.
long long odd_prime_power_exponent(long long n) {
  auto primes = prime_divisors(static_cast<std::uint64_t>(n));
  if (primes.size() != 1 || primes.front() == 2) return 0;
  long long e = 0;
  for (auto p = static_cast<long long>(primes.front()); n > 1; n /= p) ++e;
  return e;
}

}  // namespace

std::string repro_command(const LabeledGroup& group, const ReversingTriple& triple, MapKind kind) {
  return "revmap map --group " + group.spec.to_string() + " --kind " + to_string(kind) + " --triple " +
         spell_triple(group, triple);
}

std::vector<CorpusMap> map_corpus(const SweepConfig& cfg) {
  std::vector<CorpusMap> out;
  for (const auto& e : explicit_families(cfg)) {
    for (const auto& t : e.triples) out.push_back({e.lg, t, MapKind::Rev, "family " + e.name});
  }
  for (const auto& a : s4_alternatives(cfg)) {
    out.push_back({a.lg, a.triple, MapKind::Rev, "s4-cover t=" + a.t});
  }
  for (long long n = 3; n <= cfg.max_disc_n; ++n) {
    LabeledGroup lg = dihedral(n);
    for_each_dihedral_pair(n, [&](long long i, long long j) {
      ReversingTriple t = dihedral_reflections(lg, i, j);
      out.push_back({lg, t, MapKind::Rev, "discriminant"});
      out.push_back({lg, t, MapKind::BiRev, "discriminant"});
    });
  }
  for (const auto& lg : family_groups(cfg)) {
    Sweep s = sweep(lg, cfg.cap, false);
    for (const auto& cls : s.classes) {
      out.push_back({lg, cls.representative, MapKind::Rev, "class representative"});
      out.push_back({lg, cls.representative, MapKind::BiRev, "class representative"});
    }
  }
  for (const auto& lg : regular_groups(cfg)) {
    Sweep s = sweep(lg, cfg.cap, true);
    for (const auto& cls : s.classes) {
      const ReversingTriple& t = cls.representative;
      out.push_back({lg, t, MapKind::Reg, "regular representative"});
      out.push_back({lg, ReversingTriple{t.group, t.x, t.z, t.y}, MapKind::Reg, "regular dual"});
    }
  }
  return out;
}

Report dihedral_canonical_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "dihedral-canonical";
  for (long long n = 3; n <= cfg.max_n; ++n) {
    LabeledGroup lg = dihedral(n);
    Sweep s = sweep(lg, cfg.cap, false);
    std::map<std::string, std::size_t> tally;
    Json offender;
    for (const auto& cls : s.classes) {
      CanonicalTag tag = match_canonical_form(lg, cls.representative, s.auts);
      std::string problem;
      if (tag.matches.size() != 1) {
        problem = "matches " + std::to_string(tag.matches.size()) + " canonical families";
      } else if (!verify_match(tag.matches.front(), cls.representative, s.auts)) {
        problem = "stored witness does not map the triple onto the pattern";
      } else if (!certificate_holds(cls, s.auts)) {
        problem = "class certificate does not reach the representative";
      }
      if (tag.matches.size() == 1) ++tally[to_string(tag.matches.front().form)];
      if (!problem.empty() && offender.is_null()) {
        Json forms = Json::array();
        for (const auto& m : tag.matches) forms.push_back(to_string(m.form));
        offender = {{"group", lg.spec.to_string()}, {"triple", spell_triple(lg, cls.representative)},
                    {"class_size", cls.size()}, {"forms", forms}, {"problem", problem}};
      }
    }
    Json record = {{"group", lg.spec.to_string()}, {"triples", s.triples}, {"classes", s.classes.size()},
                   {"forms", tally}};
    const bool ok = offender.is_null();
    if (!ok) record["offender"] = offender;
    std::string reason = ok ? std::to_string(s.triples) + " triples in " + std::to_string(s.classes.size()) +
                                  " classes, each matching exactly one canonical family"
                            : offender["triple"].get<std::string>() + ": " + offender["problem"].get<std::string>();
    report.check(ok, lg.spec.to_string(), reason, std::move(record),
                 "revmap classify --group " + lg.spec.to_string());
  }
  return report;
}

Report dihedral_discriminants_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "dihedral-discriminants";
  for (long long n = 3; n <= cfg.max_disc_n; ++n) {
    LabeledGroup lg = dihedral(n);
    std::size_t pairs = 0, valid = 0;
    Json offender;
    std::string repro;
    Json prime_power_offender;
    for_each_dihedral_pair(n, [&](long long i, long long j) {
      ++pairs;
      DihedralDiscriminants d = dihedral_discriminants(n, i, j);
      ReversingTriple t = dihedral_reflections(lg, i, j);
      CosetMap rev = build_map(t, MapKind::Rev);
      CosetMap birev = build_map(t, MapKind::BiRev);
      const long long chi_rev = built_chi(rev), chi_birev = built_chi(birev);
      // E = n for both kinds, and gcd(chi, n) = gcd(sum, n) is the discriminant.
      const bool rev_coprime = gcd(chi_rev, static_cast<long long>(rev.num_edges())) == 1;
      const bool birev_coprime = gcd(chi_birev, static_cast<long long>(birev.num_edges())) == 1;
      std::string problem;
      if (chi_rev != d.chi_rev) problem = "Rev chi " + std::to_string(chi_rev) + " != closed form " + std::to_string(d.chi_rev);
      else if (chi_birev != d.chi_birev)
        problem = "BiRev chi " + std::to_string(chi_birev) + " != closed form " + std::to_string(d.chi_birev);
      else if (rev_coprime != (d.delta_rev == 1)) problem = "Rev coprimality disagrees with delta_rev";
      else if (birev_coprime != (d.delta_birev == 1)) problem = "BiRev coprimality disagrees with delta_birev";
      if (!problem.empty() && offender.is_null()) {
        offender = {{"i", i}, {"j", j}, {"chi_rev", chi_rev}, {"chi_birev", chi_birev},
                    {"closed_chi_rev", d.chi_rev}, {"closed_chi_birev", d.chi_birev},
                    {"delta_rev", d.delta_rev}, {"delta_birev", d.delta_birev}, {"problem", problem}};
        repro = repro_command(lg, t, chi_rev != d.chi_rev ? MapKind::Rev : MapKind::BiRev);
      }
      if (valid_dihedral_pair(n, i, j)) {
        ++valid;
        // Delta_BiRev = 1 is only claimed for exponent above 1.
        const long long e = odd_prime_power_exponent(n);
        if (e > 0 && (d.delta_rev != 1 || (e > 1 && d.delta_birev != 1)) && prime_power_offender.is_null()) {
          prime_power_offender = {{"i", i}, {"j", j}, {"delta_rev", d.delta_rev}, {"delta_birev", d.delta_birev}};
        }
      }
    });
    const std::string spec = lg.spec.to_string();
    Json record = {{"group", spec}, {"pairs", pairs}, {"valid_pairs", valid}};
    if (!offender.is_null()) record["offender"] = offender;
    report.check(offender.is_null(), spec + " chi",
                 offender.is_null() ? std::to_string(pairs) + " generating pairs: closed forms equal built Rev and BiRev chi"
                                    : offender["problem"].get<std::string>(),
                 std::move(record), repro);
    if (const long long e = odd_prime_power_exponent(n); e > 0) {
      Json pp = {{"group", spec}, {"valid_pairs", valid}};
      if (!prime_power_offender.is_null()) pp["offender"] = prime_power_offender;
      report.check(prime_power_offender.is_null(), spec + " prime power",
                   prime_power_offender.is_null()
                       ? std::to_string(valid) + " valid pairs, all with delta_rev = 1" +
                             (e > 1 ? " and delta_birev = 1" : "")
                       : "a valid pair has a discriminant other than 1",
                   std::move(pp), "revmap classify --group " + spec);
    }
  }
  return report;
}

Report reversing_families_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "reversing-families";

  // The named family maps, each z-choice in turn.
  std::map<std::string, std::vector<Automorphism>> aut_cache;
  auto auts_of = [&](const LabeledGroup& lg) -> const std::vector<Automorphism>& {
    auto key = lg.spec.to_string();
    auto it = aut_cache.find(key);
    if (it == aut_cache.end()) it = aut_cache.emplace(key, automorphism_group(lg.group, cfg.cap)).first;
    return it->second;
  };
  for (const auto& e : explicit_families(cfg)) {
    const auto& auts = auts_of(e.lg);
    const Clause want = family_clause(e.lg.spec.kind);
    std::set<std::string> graphs;
    std::string problem, repro;
    Json maps = Json::array();
    for (const auto& t : e.triples) {
      CosetMap map = build_map(t, MapKind::Rev);
      MapInvariants inv = map_invariants(map);
      MapClause clause = classify_map(e.lg, map, inv, auts);
      graphs.insert(inv.graph.to_string());
      Json rec = map_record(e.lg, t, inv);
      rec["clause"] = to_string(clause.clause);
      rec["clause_reason"] = clause.reason;
      maps.push_back(rec);
      std::string p;
      if (inv.chi != e.chi) p = "chi " + std::to_string(inv.chi) + " != " + std::to_string(e.chi);
      else if (inv.num_edges != e.edges) p = "|E| = " + std::to_string(inv.num_edges);
      else if (!inv.coprime) p = "fails the coprime filter";
      else if (e.require_nonorientable && inv.orientable != false) p = "not non-orientable";
      else if (clause.clause != want) p = "clause " + to_string(clause.clause) + ": " + clause.reason;
      if (!p.empty() && problem.empty()) {
        problem = spell_triple(e.lg, t) + ": " + p;
        repro = repro_command(e.lg, t, MapKind::Rev);
      }
    }
    if (problem.empty() && graphs != e.graphs) {
      problem = "graphs differ from the expected set";
      repro = repro_command(e.lg, e.triples.front(), MapKind::Rev);
    }
    Json expected = e.graphs;
    Json record = {{"group", e.lg.spec.to_string()}, {"maps", maps}, {"expected_graphs", expected}};
    std::string graph_list;
    for (const auto& g : graphs) graph_list += (graph_list.empty() ? "" : ", ") + g;
    report.check(problem.empty(), e.lg.spec.to_string() + " rev " + e.name,
                 problem.empty() ? "chi " + std::to_string(e.chi) + ", |E| " + std::to_string(e.edges) +
                                       ", coprime, graphs {" + graph_list + "}"
                                 : problem,
                 std::move(record), repro);
  }

  // The other choices of t in the S4 cover: either the filter rejects them
  // or they are equivalent to a w^2 triple.
  for (const auto& a : s4_alternatives(cfg)) {
    const long long m = a.lg.spec.params[0];
    CosetMap map = build_map(a.triple, MapKind::Rev);
    MapInvariants inv = map_invariants(map);
    Json record = map_record(a.lg, a.triple, inv);
    bool ok = false;
    std::string reason;
    if (a.t == "w2v") {
      ok = !inv.coprime && inv.chi == 8 - 2 * m;
      reason = "chi " + std::to_string(inv.chi) + (inv.coprime ? ", passes the filter" : ", fails the filter");
    } else if (!inv.coprime) {
      ok = inv.chi == 4 - 2 * m;
      reason = "chi " + std::to_string(inv.chi) + ", fails the filter";
    } else {
      std::vector<CanonicalPattern> basic;
      for (auto& pat : canonical_patterns(a.lg)) {
        if (pat.form != CanonicalForm::S4CBasic) continue;
        for (const auto& [k, v] : pat.params) {
          if (k == "t" && v == 0) basic.push_back(pat);
        }
      }
      CanonicalTag tag = match_patterns(a.lg, a.triple, auts_of(a.lg), basic);
      ok = inv.chi == 4 - m && tag.form.has_value() && verify_match(tag.matches.front(), a.triple, auts_of(a.lg));
      reason = "chi " + std::to_string(inv.chi) + ", coprime, " +
               (tag.form ? "equivalent to {v, h^i v, w^2}" : "not equivalent to a w^2 triple");
    }
    report.check(ok, a.lg.spec.to_string() + " rev v,h" + std::to_string(a.i) + "v," + a.t, reason,
                 std::move(record), repro_command(a.lg, a.triple, MapKind::Rev));
  }

  // Every class of every family group: the filter and the classifier agree,
  // no BiRev map of a non-metacyclic group passes, and sampled members carry
  // the representative's invariants.
  std::mt19937_64 rng(cfg.seed);
  for (const auto& lg : family_groups(cfg)) {
    Sweep s = sweep(lg, cfg.cap, false);
    const bool metacyclic = is_metacyclic(lg.group);
    const Clause want = family_clause(lg.spec.kind);
    std::map<std::string, std::map<std::string, std::size_t>> tally;
    std::string problem, repro;
    Json offender;
    auto fail = [&](std::string p, const ReversingTriple& t, MapKind kind, Json rec) {
      if (!problem.empty()) return;
      problem = spell_triple(lg, t) + " " + to_string(kind) + ": " + p;
      repro = repro_command(lg, t, kind);
      offender = std::move(rec);
    };
    for (const auto& cls : s.classes) {
      const ReversingTriple& rep = cls.representative;
      if (!certificate_holds(cls, s.auts)) fail("class certificate fails", rep, MapKind::Rev, Json::object());
      for (MapKind kind : {MapKind::Rev, MapKind::BiRev}) {
        CosetMap map = build_map(rep, kind);
        MapInvariants inv = map_invariants(map);
        MapClause clause = classify_map(lg, map, inv, s.auts);
        Json rec = map_record(lg, rep, inv);
        rec["clause"] = to_string(clause.clause);
        rec["clause_reason"] = clause.reason;
        if (coprime_filter(rep, kind).passes != inv.coprime) fail("filter and invariants disagree", rep, kind, rec);
        if (inv.coprime) {
          ++tally[to_string(kind)][to_string(clause.clause)];
          if (clause.clause != want && clause.clause != Clause::Small) {
            fail("coprime map assigned " + to_string(clause.clause) + ": " + clause.reason, rep, kind, rec);
          }
          if (kind == MapKind::BiRev && !metacyclic) fail("BiRev map of a non-metacyclic group passes", rep, kind, rec);
        } else if (clause.clause != Clause::Unmatched) {
          fail("non-coprime map assigned " + to_string(clause.clause), rep, kind, rec);
        }
        const std::string sig = signature(inv);
        std::vector<std::size_t> picks(cls.size());
        for (std::size_t k = 0; k < picks.size(); ++k) picks[k] = k;
        if (picks.size() > cfg.sample) {
          std::shuffle(picks.begin(), picks.end(), rng);
          picks.resize(cfg.sample);
        }
        for (std::size_t k : picks) {
          const ReversingTriple& t = cls.members[k].triple;
          MapInvariants other = map_invariants(build_map(t, kind));
          if (signature(other) != sig) {
            fail("class member " + spell_triple(lg, t) + " has invariants " + signature(other) + " not " + sig, rep,
                 kind, rec);
          }
        }
      }
    }
    Json record = {{"group", lg.spec.to_string()}, {"triples", s.triples}, {"classes", s.classes.size()},
                   {"metacyclic", metacyclic}, {"coprime_clauses", tally}};
    if (!offender.is_null() && !offender.empty()) record["offender"] = offender;
    std::string summary = std::to_string(s.classes.size()) + " classes;";
    for (const char* kind : {"rev", "birev"}) {
      summary += std::string(" ") + kind + ":";
      if (!tally.count(kind)) summary += " none coprime;";
      else
        for (const auto& [c, k] : tally[kind]) summary += " " + std::to_string(k) + " " + c + ";";
    }
    summary.pop_back();
    report.check(problem.empty(), lg.spec.to_string() + " classes", problem.empty() ? summary : problem,
                 std::move(record), repro.empty() ? "revmap classify --group " + lg.spec.to_string() : repro);
  }
  return report;
}

std::string coprime_consequence_violation(const StructureReport& structure, const MapInvariants& inv) {
  const long long order = static_cast<long long>(inv.group_order);
  const long long chi = inv.chi < 0 ? -inv.chi : inv.chi;
  const long long d = gcd(chi, order);
  if (inv.num_edges % 2 == 0 && d != 1) return "|E| even but gcd(|chi|,|G|) = " + std::to_string(d);
  if (inv.num_edges % 2 == 1 && 4 % d != 0) return "|E| odd but gcd(|chi|,|G|) = " + std::to_string(d) + " does not divide 4";
  for (const auto& s : structure.sylow) {
    if (s.shape != SylowShape::Cyclic && s.shape != SylowShape::Dihedral) {
      return "Sylow " + std::to_string(s.prime) + "-subgroup is " + to_string(s.shape);
    }
  }
  long long l = 1;
  for (const auto& st : inv.stabilizers) l = lcm(l, static_cast<long long>(st.order));
  if (l != order) return "lcm of stabilizer orders " + std::to_string(l) + " != |G|";
  return {};
}

Report coprime_consequences_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "coprime-consequences";
  struct Bucket {
    LabeledGroup lg;
    MapKind kind;
    std::size_t maps = 0;
    std::size_t coprime = 0;
    std::string problem;
    Json record;
    std::string repro;
  };
  std::map<std::string, StructureReport> structures;
  std::vector<Bucket> buckets;
  std::map<std::string, std::size_t> bucket_of;
  for (const auto& c : map_corpus(cfg)) {
    const std::string spec = c.group.spec.to_string();
    const std::string key = spec + " " + to_string(c.kind);
    auto [it, fresh] = bucket_of.emplace(key, buckets.size());
    if (fresh) buckets.push_back({c.group, c.kind, 0, 0, {}, Json::object(), {}});
    Bucket& b = buckets[it->second];
    ++b.maps;
    MapInvariants inv = map_invariants(build_map(c.triple, c.kind));
    if (!inv.coprime) continue;
    ++b.coprime;
    auto s = structures.find(spec);
    if (s == structures.end()) s = structures.emplace(spec, structure_report(c.group.group)).first;
    std::string v = coprime_consequence_violation(s->second, inv);
    if (!v.empty() && b.problem.empty()) {
      b.problem = spell_triple(c.group, c.triple) + " (" + c.source + "): " + v;
      b.record = map_record(c.group, c.triple, inv);
      b.repro = repro_command(c.group, c.triple, c.kind);
    }
  }
  for (auto& b : buckets) {
    const std::string name = b.lg.spec.to_string() + " " + to_string(b.kind);
    if (b.coprime == 0) {
      report.add({name, CaseStatus::Skip, std::to_string(b.maps) + " maps, none coprime", Json::object(), ""});
      continue;
    }
    Json record = {{"group", b.lg.spec.to_string()}, {"kind", to_string(b.kind)}, {"maps", b.maps},
                   {"coprime", b.coprime}};
    if (!b.problem.empty()) record["offender"] = b.record;
    report.check(b.problem.empty(), name,
                 b.problem.empty() ? std::to_string(b.coprime) + " coprime maps of " + std::to_string(b.maps) +
                                         " satisfy all four consequences"
                                   : b.problem,
                 std::move(record), b.repro);
  }
  return report;
}

Report regular_table_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "regular-table";
  for (const auto& lg : regular_groups(cfg)) report.merge(verify_regular_table(lg, cfg.cap));
  return report;
}

Report structure_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "structure";

  {
    std::string bad;
    for (long long n = 3; n <= 30 && bad.empty(); ++n) {
      if (!is_dihedral(whole_group(dihedral(n).group))) bad = "D:" + std::to_string(n);
    }
    report.check(bad.empty(), "dihedral recognition", bad.empty() ? "D:3..D:30 recognized" : bad + " not recognized",
                 Json::object(), bad.empty() ? "" : "revmap group --group " + bad + " --report structure");
  }

  for (const auto& lg : family_groups(cfg)) {
    const std::string spec = lg.spec.to_string();
    StructureReport sr = structure_report(lg.group);
    std::string problem;
    if (!sr.is_solvable) problem = "not solvable";
    else if (!sr.is_almost_sylow_cyclic) problem = "not almost Sylow-cyclic";
    for (const auto& s : sr.sylow) {
      if (problem.empty() && s.order != p_part(sr.order, s.prime)) {
        problem = "Sylow " + std::to_string(s.prime) + "-subgroup has order " + std::to_string(s.order);
      }
    }
    // Coset counting: |G| = |G : H| |H| for each labeled cyclic subgroup.
    for (const auto& gen : lg.group->generators()) {
      Subgroup h = subgroup_generated(lg.group, {gen.id});
      if (problem.empty() && left_cosets(lg.group, h).size() * h.order() != lg.group->order()) {
        problem = "cosets of <" + gen.label + "> do not tile the group";
      }
    }
    report.check(problem.empty(), spec + " structure",
                 problem.empty() ? "solvable, almost Sylow-cyclic, Sylow orders equal the p-parts" : problem,
                 to_json(sr), "revmap group --group " + spec + " --report structure");
  }

  auto iso_case = [&](const std::string& name, const GroupPtr& a, const GroupPtr& b, const std::string& what) {
    std::optional<GroupHom> iso = is_isomorphic(a, b, cfg.cap);
    const bool ok = iso && iso->is_bijective() && iso->is_multiplicative();
    report.check(ok, name, ok ? what + " with a verified witness" : "no isomorphism " + what,
                 Json{{"order", a->order()}}, "");
  };

  LabeledGroup s4 = s4_cover(3);
  for (long long m : cfg.quotient_s4c) {
    LabeledGroup lg = s4_cover(m);
    const FiniteGroup& g = *lg.group;
    Quotient q = quotient_group(subgroup_generated(lg.group, {g.pow(lg.label("h"), 3)}));
    iso_case(lg.spec.to_string() + "/<h^3>", q.group, s4.group, "quotient isomorphic to S4C:3");
  }
  for (const auto& t : cfg.r3) {
    LabeledGroup lg = rank3_cyclic_ext(t[0], t[1], t[2]);
    Quotient q = quotient_group(subgroup_generated(lg.group, {lg.label("c")}));
    LabeledGroup target = dihedral_product(t[0], t[1]);
    iso_case(lg.spec.to_string() + "/<c>", q.group, target.group, "quotient isomorphic to " + target.spec.to_string());
  }
  for (const auto& [m, n] : cfg.dxd) {
    LabeledGroup lg = dihedral_product(m, n);
    GroupPtr product = direct_product(*dihedral(m).group, *dihedral(n).group);
    iso_case(lg.spec.to_string() + " product", lg.group, product, "isomorphic to D:" + std::to_string(m) + " x D:" +
                                                                   std::to_string(n));
  }

  // Each enumerated automorphism is a bijective homomorphism.
  std::vector<LabeledGroup> small{dihedral(9), s4_cover(3), s4_cover(9)};
  if (!cfg.dxd.empty()) small.push_back(dihedral_product(cfg.dxd.front().first, cfg.dxd.front().second));
  for (const auto& lg : small) {
    auto auts = automorphism_group(lg.group, cfg.cap);
    std::size_t bad = 0;
    for (const auto& a : auts) {
      if (!a.is_bijective() || !a.is_multiplicative()) ++bad;
    }
    report.check(bad == 0, lg.spec.to_string() + " automorphisms",
                 std::to_string(auts.size()) + " automorphisms, " + std::to_string(bad) + " not bijective homomorphisms",
                 Json{{"automorphisms", auts.size()}}, "");
  }
  return report;
}

Report flags_suite(const SweepConfig& cfg) {
  Report report;
  report.suite = "flags";
  struct Bucket {
    std::size_t maps = 0;
    std::string problem;
    Json record;
    std::string repro;
  };
  std::vector<std::string> order;
  std::map<std::string, Bucket> buckets;
  for (const auto& c : map_corpus(cfg)) {
    const std::string key = c.group.spec.to_string() + " " + to_string(c.kind);
    if (!buckets.count(key)) order.push_back(key);
    Bucket& b = buckets[key];
    ++b.maps;
    CosetMap map = build_map(c.triple, c.kind);
    std::string problem;
    try {
      FlagSystem fs = flag_system(map);
      const std::size_t n = fs.flags.size();
      if (n != 4 * map.num_edges()) problem = std::to_string(n) + " flags for " + std::to_string(map.num_edges()) + " edges";
      // Independent recheck of the partner maps.
      for (const auto* sigma : {&fs.sigma_vertex, &fs.sigma_edge, &fs.sigma_face}) {
        for (std::size_t f = 0; f < n && problem.empty(); ++f) {
          const std::uint32_t p = (*sigma)[f];
          if (p >= n || p == f || (*sigma)[p] != f) problem = "partner map is not a fixed-point-free involution";
        }
      }
      for (std::size_t f = 0; f < n && problem.empty(); ++f) {
        const Flag& a = fs.flags[f];
        const Flag& v = fs.flags[fs.sigma_vertex[f]];
        const Flag& e = fs.flags[fs.sigma_edge[f]];
        const Flag& fa = fs.flags[fs.sigma_face[f]];
        if (v.edge != a.edge || v.face != a.face || e.vertex != a.vertex || e.face != a.face ||
            fa.vertex != a.vertex || fa.edge != a.edge) {
          problem = "a partner changes more than its own object";
        }
      }
      const bool orientable = is_orientable(fs);
      const long long chi = built_chi(map);
      if (problem.empty() && chi % 2 != 0 && orientable) problem = "odd chi but orientable";
      if (problem.empty() && c.kind == MapKind::Reg && orientable != orientation_subgroup_has_index_two(c.triple)) {
        problem = "bipartiteness disagrees with the index-2 test on <xy,xz>";
      }
    } catch (const StructuralError& e) {
      problem = e.what();
    }
    if (!problem.empty() && b.problem.empty()) {
      b.problem = spell_triple(c.group, c.triple) + " (" + c.source + "): " + problem;
      b.record = map_record(c.group, c.triple, map_invariants(map));
      b.repro = repro_command(c.group, c.triple, c.kind);
    }
  }
  for (const auto& key : order) {
    Bucket& b = buckets[key];
    Json record = {{"maps", b.maps}};
    if (!b.problem.empty()) record["offender"] = b.record;
    report.check(b.problem.empty(), key,
                 b.problem.empty() ? std::to_string(b.maps) + " maps: 4|E| flags, well-formed partners, parity and "
                                                             "orientation tests agree"
                                   : b.problem,
                 std::move(record), b.repro);
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dihedral-canonical", "dihedral-discriminants", "reversing-families",
                                              "coprime-consequences", "regular-table", "structure", "flags"};
  return names;
}

Report run_suite(const std::string& name, const SweepConfig& cfg) {
  cfg.validate();
  if (name == "dihedral-canonical") return dihedral_canonical_suite(cfg);
  if (name == "dihedral-discriminants") return dihedral_discriminants_suite(cfg);
  if (name == "reversing-families") return reversing_families_suite(cfg);
  if (name == "coprime-consequences") return coprime_consequences_suite(cfg);
  if (name == "regular-table") return regular_table_suite(cfg);
  if (name == "structure") return structure_suite(cfg);
  if (name == "flags") return flags_suite(cfg);
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace revmap
