#include <gtest/gtest.h>

#include "oracles.hpp"
#include "revmap/errors.hpp"
#include "revmap/families.hpp"
#include "revmap/homomorphism.hpp"
#include "revmap/structure.hpp"

using namespace revmap;

TEST(Families, Orders) {
  EXPECT_EQ(dihedral(9).group->order(), 18u);
  EXPECT_EQ(dihedral(1).group->order(), 2u);
  EXPECT_EQ(dihedral_product(3, 5).group->order(), 60u);
  EXPECT_EQ(rank3_cyclic_ext(3, 5, 7).group->order(), 420u);
  EXPECT_EQ(s4_cover(3).group->order(), 24u);
  EXPECT_EQ(s4_cover(9).group->order(), 72u);
  EXPECT_EQ(metacyclic(5, 4, 2).group->order(), 20u);
  EXPECT_EQ(metacyclic(7, 1, 1).group->order(), 7u);
}

TEST(Families, DomainChecks) {
  EXPECT_THROW(dihedral_product(3, 9), ValidationError);
  EXPECT_THROW(dihedral_product(4, 5), ValidationError);
  EXPECT_THROW(rank3_cyclic_ext(3, 5, 15), ValidationError);
  EXPECT_THROW(s4_cover(5), ValidationError);
  EXPECT_THROW(s4_cover(6), ValidationError);
  EXPECT_THROW(metacyclic(7, 2, 3), ValidationError);  // 3^2 = 2 mod 7
}

TEST(Families, SpecRoundTrip) {
  for (std::string text : {"D:9", "DxD:3,5", "R3:3,5,7", "S4C:9", "MC:9,2,8"}) {
    EXPECT_EQ(FamilySpec::parse(text).to_string(), text);
  }
  EXPECT_THROW(FamilySpec::parse("Q:8"), ValidationError);
  EXPECT_THROW(FamilySpec::parse("D:"), ValidationError);
}

TEST(Families, WordsAndSpelling) {
  LabeledGroup dxd = dihedral_product(3, 5);
  const FiniteGroup& g = *dxd.group;
  EXPECT_EQ(dxd.word("abw"), g.mul(g.mul(dxd.label("a"), dxd.label("b")), dxd.label("w")));
  EXPECT_EQ(dxd.word("uv"), dxd.label("w"));
  for (ElementId e = 0; e < g.order(); ++e) EXPECT_EQ(dxd.word(dxd.spell(e)), e);
  LabeledGroup d10 = dihedral(10);
  EXPECT_EQ(d10.word("g^-1h"), d10.group->mul(d10.group->inv(d10.label("g")), d10.label("h")));
  EXPECT_THROW(d10.word("q"), ValidationError);
}

TEST(Families, DihedralProductStructure) {
  LabeledGroup dxd = dihedral_product(3, 7);
  StructureReport r = structure_report(dxd.group);
  EXPECT_TRUE(r.is_solvable);
  EXPECT_TRUE(r.is_almost_sylow_cyclic);
  EXPECT_FALSE(r.is_metacyclic);
}

TEST(Families, Rank3) {
  LabeledGroup r3 = rank3_cyclic_ext(3, 5, 7);
  EXPECT_EQ(center(r3.group).order(), 1u);
  Quotient q = quotient_group(subgroup_generated(r3.group, {r3.label("c")}));
  EXPECT_TRUE(is_isomorphic(q.group, dihedral_product(3, 5).group).has_value());
}

TEST(Families, S4CoverRelations) {
  LabeledGroup s3 = s4_cover(3);
  EXPECT_TRUE(is_isomorphic(s3.group, oracle::perm_group(4, {"(0 1 2 3)", "(0 1)"})).has_value());
  LabeledGroup s9 = s4_cover(9);
  const FiniteGroup& g = *s9.group;
  EXPECT_TRUE(is_normal(subgroup_generated(s9.group, {g.pow(s9.label("h"), 3)})));
  ElementId w = s9.label("w"), v = s9.label("v");
  EXPECT_EQ(s9.label("u"), g.mul(w, v));
  EXPECT_EQ(subgroup_generated(s9.group, {w, v}).order(), 8u);
}

TEST(Families, S4CoverInvolutionOrbits) {
  // The involutions split into v^<h>, (w^2 v)^<h> and {w^2, u, w^2 u}.
  LabeledGroup s = s4_cover(15);
  const FiniteGroup& g = *s.group;
  ElementId h = s.label("h"), v = s.label("v"), w2 = g.mul(s.label("w"), s.label("w")), u = s.label("u");
  auto orbit = [&](ElementId x) {
    std::set<ElementId> out;
    for (long long k = 0; k < 15; ++k) out.insert(g.conj(x, g.pow(h, k)));
    return out;
  };
  std::set<ElementId> a = orbit(v), b = orbit(g.mul(w2, v)), c{w2, u, g.mul(w2, u)};
  EXPECT_EQ(orbit(w2), c);
  std::set<ElementId> all;
  for (const auto* part : {&a, &b, &c}) all.insert(part->begin(), part->end());
  EXPECT_EQ(all.size(), a.size() + b.size() + c.size());
  auto inv = involutions(g);
  EXPECT_EQ(std::set<ElementId>(inv.begin(), inv.end()), all);
}

TEST(Families, Metacyclic) {
  StructureReport r = structure_report(metacyclic(5, 4, 2).group);
  ASSERT_EQ(r.sylow.front().prime, 2u);
  EXPECT_EQ(r.sylow.front().shape, SylowShape::Cyclic);
  EXPECT_TRUE(structure_report(metacyclic(7, 1, 1).group).is_cyclic);
}

TEST(Structure, SylowSubgroups) {
  GroupPtr dxd = dihedral_product(3, 5).group;
  Subgroup p2 = sylow_subgroup(dxd, 2);
  EXPECT_EQ(p2.order(), 4u);
  EXPECT_FALSE(is_cyclic(p2));
  EXPECT_TRUE(is_dihedral(p2));
  Subgroup p5 = sylow_subgroup(dxd, 5);
  EXPECT_EQ(p5.order(), 5u);
  EXPECT_TRUE(is_cyclic(p5));
  Subgroup s2 = sylow_subgroup(s4_cover(3).group, 2);
  EXPECT_EQ(s2.order(), 8u);
  EXPECT_EQ(sylow_shape(s2), SylowShape::Dihedral);
  EXPECT_EQ(sylow_shape(sylow_subgroup(oracle::quaternion_group(), 2)), SylowShape::IndexTwoCyclic);
}

TEST(Structure, AlmostSylowCyclic) {
  EXPECT_TRUE(structure_report(dihedral(15).group).is_almost_sylow_cyclic);
  GroupPtr e8 = oracle::perm_group(6, {"(0 1)", "(2 3)", "(4 5)"});
  EXPECT_FALSE(structure_report(e8).is_almost_sylow_cyclic);
  EXPECT_FALSE(oracle::almost_sylow_cyclic(*e8));
  StructureReport r = structure_report(dihedral_product(3, 5).group);
  EXPECT_TRUE(r.is_solvable);
  EXPECT_TRUE(r.is_almost_sylow_cyclic);
}

TEST(Structure, Recognizers) {
  for (long long n = 3; n <= 12; ++n) EXPECT_TRUE(is_dihedral(whole_group(dihedral(n).group))) << n;
  EXPECT_FALSE(is_dihedral(whole_group(oracle::quaternion_group())));
  EXPECT_TRUE(has_cyclic_index_two_subgroup(whole_group(oracle::quaternion_group())));
  EXPECT_TRUE(is_metacyclic(dihedral(9).group));
  EXPECT_FALSE(is_metacyclic(s4_cover(3).group));
  EXPECT_FALSE(is_solvable(oracle::perm_group(5, {"(0 1 2 3 4)", "(0 1 2)"})));  // A5
  EXPECT_EQ(shape_tag(whole_group(dihedral(5).group)), "D10");
}
