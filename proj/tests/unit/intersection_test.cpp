#include <gtest/gtest.h>

#include <map>

#include "jetfiber/intersection.hpp"
#include "support.hpp"

namespace jetfiber {
namespace {

using testing::P;

struct Fixture {
  Decomposition dec;
  IntersectionPoset poset;
};

const Fixture& fixture(Surface s, int m) {
  static std::map<std::pair<Surface, int>, Fixture> cache;
  auto it = cache.find({s, m});
  if (it == cache.end()) {
    Decomposition d = decompose(s, m);
    IntersectionPoset p = pairwise_intersections(d.components);
    it = cache.emplace(std::pair{s, m}, Fixture{std::move(d), std::move(p)}).first;
  }
  return it->second;
}

LabelPair pair(int a, int b) { return LabelPair::of(static_cast<Label>(a), static_cast<Label>(b)); }

const std::vector<LabelPair> kStar = {pair(0, 1), pair(0, 2), pair(0, 3)};

Graph graph_of(std::initializer_list<std::pair<int, int>> edges) {
  Graph g{{kLabels.begin(), kLabels.end()}, {}};
  for (auto [a, b] : edges) g.edges.push_back(pair(a, b));
  return g;
}

TEST(LabelPair, IsUnordered) {
  EXPECT_EQ(pair(2, 1), pair(1, 2));
  EXPECT_EQ(pair(3, 0).first, Label::Z0);
  EXPECT_TRUE(pair(1, 3).contains(Label::Z3));
  EXPECT_EQ(to_string(pair(1, 0)), "Z0&Z1");
}

TEST(Poset, D40Examples) {
  const auto& p = fixture(Surface::D40, 5).poset;
  ASSERT_EQ(p.records.size(), 6u);
  const auto& r12 = p.records[p.index_of(pair(1, 2))];
  EXPECT_FALSE(r12.maximal);
  EXPECT_NE(std::find(r12.strict_subset_of.begin(), r12.strict_subset_of.end(), pair(0, 1)), r12.strict_subset_of.end());
  EXPECT_NE(std::find(r12.strict_subset_of.begin(), r12.strict_subset_of.end(), pair(0, 2)), r12.strict_subset_of.end());
  EXPECT_TRUE(p.records[p.index_of(pair(0, 1))].maximal);
  EXPECT_FALSE(p.included(pair(0, 1), pair(0, 2)));
  EXPECT_FALSE(p.included(pair(0, 2), pair(0, 1)));
}

TEST(Poset, MaximalIffNothingStrictlyAbove) {
  for (const auto s : {Surface::D40, Surface::D41})
    for (const auto& r : fixture(s, 5).poset.records) EXPECT_EQ(r.maximal, r.strict_subset_of.empty());
}

TEST(Poset, MaximalElementsAreTheCenterPairs) {
  for (const auto s : {Surface::D40, Surface::D41})
    for (int m = 5; m <= 6; ++m) {
      const auto& p = fixture(s, m).poset;
      const auto mx = maximal_elements(p.records);
      std::vector<LabelPair> got;
      for (const auto& r : mx) got.push_back(r.pair);
      EXPECT_EQ(got, kStar) << to_string(s) << " m = " << m;
      EXPECT_TRUE(pairwise_distinct(p, mx));
      EXPECT_EQ(p.weakest_tier(), EvidenceTier::Symbolic);
      EXPECT_TRUE(transitive(p));
      EXPECT_TRUE(symmetry_coherent(p, {Label::Z0, Label::Z2, Label::Z1, Label::Z3}));
      EXPECT_TRUE(symmetry_coherent(p, {Label::Z0, Label::Z1, Label::Z3, Label::Z2}));
    }
  EXPECT_TRUE(maximal_elements({}).empty());
}

TEST(Poset, IncoherentPermutationIsRejected) {
  // Swapping Z0 with a leaf cannot preserve the table.
  EXPECT_FALSE(symmetry_coherent(fixture(Surface::D40, 5).poset, {Label::Z1, Label::Z0, Label::Z2, Label::Z3}));
}

TEST(Radical, KeyMemberships) {
  for (const auto s : {Surface::D40, Surface::D41})
    for (int m = 5; m <= 6; ++m) {
      const auto& c = fixture(s, m).dec.components;
      EXPECT_TRUE(radical_member(P("x2"), c[1].sat_ideal + c[2].sat_ideal)) << to_string(s) << " m = " << m;
    }
  const auto& d40 = fixture(Surface::D40, 5).dec.components;
  EXPECT_TRUE(radical_member(P("z2"), d40[0].sat_ideal + d40[2].sat_ideal));
  const auto& d41 = fixture(Surface::D41, 5).dec.components;
  EXPECT_TRUE(radical_member(P("y2"), d41[0].sat_ideal + d41[1].sat_ideal));
}

TEST(Inclusion, WitnessDecidesNonInclusion) {
  const auto& c = fixture(Surface::D40, 5).dec.components;
  const std::vector<Jet> pool = {Jet::parse("(0, 0, t^2)", 5)};
  const InclusionVerdict v = variety_inclusion(c[0].sat_ideal + c[1].sat_ideal, c[0].sat_ideal + c[2].sat_ideal, pool);
  EXPECT_FALSE(v.included);
  EXPECT_EQ(v.method, "witness");
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, pool[0].to_string());
}

TEST(Inclusion, RadicalDecidesInclusion) {
  const auto& c = fixture(Surface::D40, 5).dec.components;
  const InclusionVerdict v =
      variety_inclusion(c[1].sat_ideal + c[2].sat_ideal, c[0].sat_ideal + c[1].sat_ideal, witness_pool(Surface::D40, 5));
  EXPECT_TRUE(v.included);
  EXPECT_EQ(v.method, "radical");
  EXPECT_EQ(v.tier, EvidenceTier::Symbolic);
}

TEST(Inclusion, PointFallbackOnTinyBudget) {
  const Ideal a = build_J(Surface::D40, 1, 3), b({P("x1"), P("y1*z1")}, 3);
  const InclusionVerdict v = variety_inclusion(a, b, {}, 1);
  EXPECT_TRUE(v.included);
  EXPECT_FALSE(variety_inclusion(b, a, {}, 1).included);
  EXPECT_EQ(v.tier, EvidenceTier::Oracle);
  EXPECT_EQ(v.method, "points");
}

TEST(Graph, StarForBothSurfaces) {
  for (const auto s : {Surface::D40, Surface::D41})
    for (int m = 5; m <= 7; ++m) {
      const auto& f = fixture(s, m);
      const Graph g = build_graph(f.dec.components, maximal_elements(f.poset.records));
      EXPECT_EQ(g.vertices.size(), 4u);
      EXPECT_EQ(g.edges, kStar);
      EXPECT_TRUE(dynkin_d4_check(g));
      EXPECT_EQ(to_dot(g), "graph Gamma { Z0 -- Z1; Z0 -- Z2; Z0 -- Z3; }");
    }
}

TEST(Graph, EmptyMaximalsGiveEdgelessGraph) {
  const auto& c = fixture(Surface::D40, 5).dec.components;
  const Graph g = build_graph(c, {});
  EXPECT_EQ(g.vertices.size(), 4u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_FALSE(dynkin_d4_check(g));
  EXPECT_EQ(to_dot(g), "graph Gamma { Z0; Z1; Z2; Z3; }");
}

TEST(Dynkin, NegativeControls) {
  EXPECT_TRUE(dynkin_d4_check(graph_of({{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_TRUE(dynkin_d4_check(graph_of({{2, 0}, {2, 1}, {2, 3}})));
  EXPECT_FALSE(dynkin_d4_check(graph_of({{0, 1}, {1, 2}, {2, 3}})));
  EXPECT_FALSE(dynkin_d4_check(graph_of({{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  EXPECT_FALSE(dynkin_d4_check(graph_of({{0, 1}, {0, 2}, {0, 3}, {1, 2}})));
  EXPECT_FALSE(dynkin_d4_check(graph_of({{0, 1}, {0, 2}})));
}

}  // namespace
}  // namespace jetfiber
