#include <gtest/gtest.h>

#include "oracles.hpp"
#include "revmap/errors.hpp"
#include "revmap/families.hpp"
#include "revmap/homomorphism.hpp"
#include "revmap/subgroup.hpp"

using namespace revmap;

TEST(Permutation, ComposesLeftToRight) {
  Permutation a = Permutation::parse("(0 1 2)", 3);
  Permutation b = Permutation::parse("(1 2)", 3);
  // right action: (a*b)(p) = b(a(p))
  Permutation ab = a * b;
  for (Point p = 0; p < 3; ++p) EXPECT_EQ(ab(p), b(a(p)));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a.pow(-1), a.inverse());
}

TEST(Permutation, RejectsRepeatedPoints) {
  EXPECT_THROW(Permutation::parse("(0 1 0)", 3), ValidationError);
  EXPECT_THROW(Permutation::parse("(0 5)", 3), ValidationError);
}

TEST(FiniteGroup, SmallClosures) {
  EXPECT_EQ(oracle::perm_group(3, {"(0 1 2)", "(1 2)"})->order(), 6u);
  EXPECT_EQ(oracle::perm_group(3, {"()"})->order(), 1u);
}

TEST(FiniteGroup, QuaternionHasOneInvolution) {
  GroupPtr q8 = oracle::quaternion_group();
  ASSERT_EQ(q8->order(), 8u);
  EXPECT_EQ(involutions(*q8).size(), 1u);
  EXPECT_EQ(oracle::count_involutions(*q8), 1u);
}

TEST(FiniteGroup, ClosureCapRaises) {
  auto gens = std::vector<LabeledPermutation>{{"a", Permutation::parse("(0 1 2 3 4 5 6)", 7)},
                                              {"b", Permutation::parse("(0 1)", 7)}};
  EXPECT_THROW(FiniteGroup::from_generators(7, gens, 100), OverflowError);
}

TEST(FiniteGroup, InvolutionCountsMatchScan) {
  EXPECT_EQ(involutions(*dihedral(3).group).size(), 3u);
  EXPECT_EQ(involutions(*dihedral(4).group).size(), 5u);
  GroupPtr dxd = dihedral_product(3, 5).group;
  EXPECT_EQ(involutions(*dxd).size(), 23u);
  EXPECT_EQ(oracle::count_involutions(*dxd), 23u);
}

TEST(Subgroup, GeneratedOrders) {
  LabeledGroup d9 = dihedral(9);
  const FiniteGroup& g = *d9.group;
  ElementId g3h = g.mul(g.pow(d9.label("g"), 3), d9.label("h"));
  EXPECT_EQ(subgroup_generated(d9.group, {d9.label("h"), g3h}).order(), 6u);
  EXPECT_EQ(oracle::closure(g, {d9.label("h"), g3h}).size(), 6u);
  EXPECT_EQ(subgroup_generated(d9.group, std::span<const ElementId>{}).order(), 1u);

  LabeledGroup dxd = dihedral_product(3, 5);
  Subgroup uv = subgroup_generated(dxd.group, {dxd.label("u"), dxd.label("v")});
  EXPECT_EQ(uv.order(), 4u);
  EXPECT_EQ(oracle::count_involutions(*oracle::perm_group(4, {"(0 1)", "(2 3)"})), 3u);
  Subgroup ab = subgroup_generated(dxd.group, {dxd.label("a"), dxd.label("b")});
  EXPECT_EQ(intersection(uv, ab).order(), 1u);
}

TEST(Subgroup, Cosets) {
  LabeledGroup d3 = dihedral(3);
  EXPECT_EQ(left_cosets(d3.group, subgroup_generated(d3.group, {d3.label("h")})).size(), 3u);
  EXPECT_EQ(left_cosets(d3.group, whole_group(d3.group)).size(), 1u);
  LabeledGroup dxd = dihedral_product(3, 5);
  auto cosets = left_cosets(dxd.group, subgroup_generated(dxd.group, {dxd.label("u"), dxd.label("v")}));
  EXPECT_EQ(cosets.size(), 15u);
  // The cosets partition the group.
  std::vector<int> hits(dxd.group->order(), 0);
  for (const auto& c : cosets) {
    for (ElementId e : c.elements) ++hits[e];
  }
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST(Subgroup, CenterOfDihedral10) {
  LabeledGroup d10 = dihedral(10);
  Subgroup z = center(d10.group);
  ASSERT_EQ(z.order(), 2u);
  EXPECT_TRUE(z.contains(d10.word("g5")));
}

TEST(Homomorphism, AutomorphismCounts) {
  EXPECT_EQ(automorphism_group(oracle::perm_group(4, {"(0 1)", "(2 3)"})).size(), 6u);
  EXPECT_EQ(automorphism_group(dihedral(3).group).size(), 6u);
  EXPECT_EQ(automorphism_group(oracle::perm_group(5, {"(0 1 2 3 4)"})).size(), 4u);
  for (const auto& a : automorphism_group(dihedral(6).group)) {
    EXPECT_TRUE(a.is_bijective());
    EXPECT_TRUE(a.is_multiplicative());
  }
}

TEST(Homomorphism, Quotients) {
  LabeledGroup s9 = s4_cover(9);
  const FiniteGroup& g = *s9.group;
  Subgroup n = subgroup_generated(s9.group, {g.pow(s9.label("h"), 3)});
  ASSERT_EQ(n.order(), 3u);
  EXPECT_TRUE(is_normal(n));
  Quotient q = quotient_group(n);
  EXPECT_EQ(q.group->order(), 24u);
  auto iso = is_isomorphic(q.group, s4_cover(3).group);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_bijective());
  EXPECT_TRUE(iso->is_multiplicative());

  LabeledGroup d9 = dihedral(9);
  Quotient qd = quotient_group(subgroup_generated(d9.group, {d9.group->pow(d9.label("g"), 3)}));
  EXPECT_EQ(qd.group->order(), 6u);
  EXPECT_TRUE(is_isomorphic(qd.group, dihedral(3).group).has_value());

  Quotient trivial = quotient_group(trivial_subgroup(d9.group));
  EXPECT_TRUE(is_isomorphic(trivial.group, d9.group).has_value());

  LabeledGroup d10 = dihedral(10);
  EXPECT_THROW(quotient_group(subgroup_generated(d10.group, {d10.label("h")})), ValidationError);
}

TEST(Homomorphism, Isomorphism) {
  EXPECT_TRUE(is_isomorphic(dihedral(3).group, oracle::perm_group(3, {"(0 1 2)", "(0 1)"})).has_value());
  EXPECT_FALSE(is_isomorphic(dihedral(4).group, oracle::quaternion_group()).has_value());
  EXPECT_TRUE(is_isomorphic(metacyclic(9, 2, 8).group, dihedral(9).group).has_value());
  EXPECT_TRUE(is_isomorphic(dihedral_product(3, 5).group,
                            direct_product(*dihedral(3).group, *dihedral(5).group))
                  .has_value());
}

TEST(Homomorphism, EnumerationCapRaises) {
  EXPECT_THROW(automorphism_group(dihedral(30).group, 50), OverflowError);
}
