#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "revmap/classify.hpp"
#include "revmap/errors.hpp"
#include "revmap/families.hpp"
#include "revmap/homomorphism.hpp"

using namespace revmap;

namespace {

ReversingTriple words(const LabeledGroup& lg, const char* x, const char* y, const char* z) {
  return make_reversing_triple(lg.group, lg.word(x), lg.word(y), lg.word(z));
}

const EquivalenceClass& class_of(const std::vector<EquivalenceClass>& classes, const ReversingTriple& t) {
  for (const auto& c : classes) {
    for (const auto& m : c.members) {
      if (m.triple == t) return c;
    }
  }
  throw std::runtime_error("triple in no class");
}

long long param(const Params& params, const std::string& name) {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  return -1;
}

}  // namespace

TEST(Enumeration, Counts) {
  // D6 has 3 reflections; 27 ordered triples minus the 3 constant ones, and
  // any two distinct reflections generate.
  EXPECT_EQ(enumerate_reversing_triples(dihedral(3).group).size(), 24u);
  EXPECT_TRUE(enumerate_reversing_triples(oracle::perm_group(5, {"(0 1 2 3 4)"})).empty());
  GroupPtr dxd = dihedral_product(3, 5).group;
  EXPECT_EQ(enumerate_reversing_triples(dxd).size(), oracle::count_reversing_triples(*dxd));
  EXPECT_THROW(enumerate_reversing_triples(dihedral(300).group), OverflowError);
}

TEST(Enumeration, RegularTriples) {
  for (const auto& t : enumerate_regular_triples(dihedral_product(3, 5).group)) {
    const FiniteGroup& g = *t.group;
    EXPECT_NE(t.y, t.z);
    EXPECT_EQ(g.mul(t.y, t.z), g.mul(t.z, t.y));
  }
}

TEST(Equivalence, DihedralExample) {
  LabeledGroup d10 = dihedral(10);
  auto auts = automorphism_group(d10.group);
  auto classes = equivalence_classes(enumerate_reversing_triples(d10.group), auts);
  const auto& a = class_of(classes, words(d10, "g5", "h", "gh"));
  const auto& b = class_of(classes, words(d10, "g5", "g^-1h", "h"));
  EXPECT_EQ(a.representative, b.representative);
  // Swapping x and y never leaves the class.
  for (const auto& c : classes) {
    for (const auto& m : c.members) EXPECT_EQ(class_of(classes, swap_xy(m.triple)).representative, c.representative);
  }
}

TEST(Equivalence, CertificatesReachRepresentative) {
  LabeledGroup dxd = dihedral_product(3, 5);
  auto auts = automorphism_group(dxd.group);
  for (const auto& c : equivalence_classes(enumerate_reversing_triples(dxd.group), auts)) {
    for (const auto& m : c.members) {
      ReversingTriple t = apply(auts[m.automorphism], m.triple);
      if (m.swapped) t = swap_xy(t);
      EXPECT_EQ(t, c.representative);
    }
  }
}

TEST(Equivalence, Rank3ClassesContainTheFamilyTriple) {
  LabeledGroup r3 = rank3_cyclic_ext(3, 5, 7);
  auto auts = automorphism_group(r3.group);
  auto classes = equivalence_classes(enumerate_reversing_triples(r3.group), auts);
  const FiniteGroup& g = *r3.group;
  ElementId u = r3.label("u"), cv = r3.word("cv"), abw = r3.word("abw");
  for (const auto& c : classes) {
    bool found = false;
    for (const auto& m : c.members) {
      std::array<ElementId, 3> s{m.triple.x, m.triple.y, m.triple.z}, want{u, cv, abw};
      std::sort(s.begin(), s.end());
      std::sort(want.begin(), want.end());
      found = found || s == want;
    }
    EXPECT_TRUE(found) << r3.spell(c.representative.x);
  }
  EXPECT_EQ(g.order(), 420u);
}

TEST(Filter, Examples) {
  LabeledGroup d9 = dihedral(9);
  FilterResult a = coprime_filter(words(d9, "h", "gh", "g3h"), MapKind::Rev);
  EXPECT_TRUE(a.passes);
  EXPECT_EQ(a.invariants.chi, -4);
  EXPECT_EQ(a.invariants.num_edges, 9u);
  FilterResult b = coprime_filter(words(dihedral(15), "h", "g3h", "g5h"), MapKind::Rev);
  EXPECT_FALSE(b.passes);
  EXPECT_EQ(b.invariants.chi, -6);
  EXPECT_EQ(b.invariants.num_edges, 15u);
  EXPECT_TRUE(coprime_filter(words(dihedral_product(3, 5), "u", "v", "abw"), MapKind::Rev).passes);
}

TEST(Canonical, DihedralForms) {
  LabeledGroup d10 = dihedral(10);
  auto auts = automorphism_group(d10.group);
  CanonicalTag red = match_canonical_form(d10, words(d10, "g5", "h", "gh"), auts);
  ASSERT_EQ(red.matches.size(), 1u);
  EXPECT_EQ(red.form, CanonicalForm::DihedralRedundant);
  EXPECT_TRUE(verify_match(red.matches.front(), words(d10, "g5", "h", "gh"), auts));
  CanonicalTag split = match_canonical_form(d10, words(d10, "g5", "h", "g2h"), auts);
  ASSERT_EQ(split.matches.size(), 1u);
  EXPECT_EQ(split.form, CanonicalForm::DihedralSplit);
}

TEST(Canonical, S4CoverBasic) {
  LabeledGroup s9 = s4_cover(9);
  auto auts = automorphism_group(s9.group);
  ReversingTriple t = words(s9, "v", "hv", "w2");
  CanonicalTag tag = match_canonical_form(s9, t, auts);
  auto it = std::find_if(tag.matches.begin(), tag.matches.end(),
                         [](const CanonicalMatch& m) { return m.form == CanonicalForm::S4CBasic; });
  ASSERT_NE(it, tag.matches.end());
  EXPECT_TRUE(verify_match(*it, t, auts));
  // The identity automorphism already witnesses i = 1, t = w^2.
  std::vector<CanonicalPattern> pats;
  for (auto& p : canonical_patterns(s9)) {
    if (p.form == CanonicalForm::S4CBasic && param(p.params, "i") == 1 && param(p.params, "t") == 0) pats.push_back(p);
  }
  ASSERT_EQ(pats.size(), 1u);
  CanonicalTag exact = match_patterns(s9, t, auts, pats);
  ASSERT_TRUE(exact.form.has_value());
  EXPECT_EQ(param(exact.matches.front().params, "i"), 1);
}

TEST(Classify, FamilyClauses) {
  LabeledGroup dxd = dihedral_product(3, 5);
  auto dxd_auts = automorphism_group(dxd.group);
  CosetMap m1 = build_map(words(dxd, "u", "v", "abw"), MapKind::Rev);
  MapClause c1 = classify_map(dxd, m1, map_invariants(m1), dxd_auts);
  EXPECT_EQ(c1.clause, Clause::DihedralProduct);

  LabeledGroup r3 = rank3_cyclic_ext(3, 5, 7);
  CosetMap m2 = build_map(words(r3, "u", "cv", "abw"), MapKind::Rev);
  MapClause c2 = classify_map(r3, m2, map_invariants(m2), automorphism_group(r3.group));
  EXPECT_EQ(c2.clause, Clause::Rank3Cover);

  LabeledGroup s3 = s4_cover(3);
  CosetMap m3 = build_map(words(s3, "v", "hv", "w2"), MapKind::Rev);
  MapInvariants inv3 = map_invariants(m3);
  MapClause c3 = classify_map(s3, m3, inv3, automorphism_group(s3.group));
  EXPECT_EQ(c3.clause, Clause::S4Cover);
  EXPECT_EQ(param(c3.params, "f"), 0);
  EXPECT_EQ(param(c3.params, "n"), 1);
  EXPECT_EQ(inv3.chi, 1);

  CosetMap bad = build_map(words(dihedral(15), "h", "g3h", "g5h"), MapKind::Rev);
  LabeledGroup d15 = dihedral(15);
  EXPECT_EQ(classify_map(d15, bad, map_invariants(bad), automorphism_group(d15.group)).clause, Clause::Unmatched);
}

TEST(Discriminants, Examples) {
  DihedralDiscriminants a = dihedral_discriminants(9, 1, 3);
  EXPECT_EQ(a.delta_rev, 1);
  EXPECT_EQ(a.chi_rev, -4);
  DihedralDiscriminants b = dihedral_discriminants(9, 1, 2);
  EXPECT_EQ(b.delta_birev, 1);
  EXPECT_EQ(b.chi_birev, -5);
  LabeledGroup d9 = dihedral(9);
  EXPECT_EQ(map_invariants(build_map(words(d9, "h", "gh", "g2h"), MapKind::BiRev)).chi, -5);
  EXPECT_EQ(map_invariants(build_map(words(d9, "h", "gh", "g3h"), MapKind::Rev)).chi, -4);
  EXPECT_TRUE(valid_dihedral_pair(9, 1, 3));
  EXPECT_FALSE(valid_dihedral_pair(9, 3, 6));
}

TEST(RegularTable, DxD) {
  LabeledGroup dxd = dihedral_product(3, 5);
  Report r = verify_regular_table(dxd);
  EXPECT_EQ(r.failed(), 0u);
  EXPECT_GT(r.passed(), 0u);
  // Every table case is equivalent to (abw, v, u) or (abw, u, v).
  auto auts = automorphism_group(dxd.group);
  auto classes = equivalence_classes(enumerate_regular_triples(dxd.group), auts, false);
  const auto& a = class_of(classes, words(dxd, "abw", "v", "u")).representative;
  const auto& b = class_of(classes, words(dxd, "abw", "u", "v")).representative;
  for (const auto& c : r.cases) {
    if (c.status != CaseStatus::Pass) continue;
    std::string triple = c.record["triple"];
    auto comma1 = triple.find(','), comma2 = triple.rfind(',');
    ReversingTriple t = make_reversing_triple(dxd.group, dxd.word(triple.substr(0, comma1)),
                                              dxd.word(triple.substr(comma1 + 1, comma2 - comma1 - 1)),
                                              dxd.word(triple.substr(comma2 + 1)));
    ReversingTriple dual{t.group, t.x, t.z, t.y};
    EXPECT_TRUE(t == a || t == b || dual == a || dual == b) << triple;
  }
}

TEST(RegularTable, S4CoverRows) {
  LabeledGroup s3 = s4_cover(3);
  MapInvariants basic = map_invariants(build_map(words(s3, "hv", "v", "w2"), MapKind::Reg));
  EXPECT_EQ(basic.chi, 1);
  MapInvariants m2 = map_invariants(build_map(words(s3, "hv", "v", "w2v"), MapKind::Reg));
  EXPECT_EQ(m2.chi, 2);
  EXPECT_EQ(m2.orientable, true);
  EXPECT_EQ(verify_regular_table(s3).failed(), 0u);
}
