#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "jetfiber/errors.hpp"
#include "jetfiber/oracle.hpp"
#include "jetfiber/suite.hpp"
#include "support.hpp"

namespace jetfiber {
namespace {

using testing::P;

Ideal fiber(Surface s, int m) { return center_ideal(s, m, {1, 1, 1}); }

std::string key(Surface s) { return s == Surface::D40 ? "D40" : "D41"; }

bool point_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.keys.begin(), b.keys.end(), a.keys.begin(), a.keys.end());
}

TEST(PointCount, Examples) {
  EXPECT_EQ(point_count(build_L({1, 1, 1}, 1), 1).count, 8u);
  EXPECT_EQ(point_count(Ideal({Polynomial::one()}, 2), 1).count, 0u);
  EXPECT_EQ(point_count(Ideal({Polynomial::one()}, 2), 2).count, 0u);
  EXPECT_EQ(point_count(build_L({1, 1, 1}, 1), 2).count, 64u);
}

TEST(PointCount, SamplesLieOnTheVariety) {
  const Ideal J = build_J(Surface::D41, 1, 3);
  const PointCountReport r = point_count(J, 2, 4);
  EXPECT_EQ(r.samples.size(), 4u);
  for (const auto& g : r.samples)
    for (const auto& h : J.generators()) EXPECT_TRUE(g.value_at(h).is_zero()) << g.to_string();
}

TEST(PointCount, BoundedByAmbientSize) {
  for (int k = 1; k <= 2; ++k)
    for (int m = 0; m <= 1; ++m)
      EXPECT_LE(point_count(fiber(Surface::D40, m).with({}), k).count + 0, std::uint64_t{1} << (3 * k * (m + 1)));
  EXPECT_EQ(point_count(Ideal({}, 1), 2).count, std::uint64_t{1} << 12);
}

TEST(PointCount, BudgetIsEnforced) {
  EXPECT_THROW(point_count(Ideal({}, 3), 3), BudgetExceeded);
  EXPECT_THROW(point_count(build_L({1, 1, 1}, 5), 2), BudgetExceeded);
  // 12 free variables over GF(4) sit exactly on the 2^24 edge.
  EXPECT_EQ(point_count(build_L({1, 1, 1}, 4), 2).count, std::uint64_t{1} << 24);
}

TEST(PointCount, Deterministic) {
  const Ideal J = build_J(Surface::D40, 3, 3);
  const PointSet a = point_set(J, 2), b = point_set(J, 2);
  EXPECT_EQ(a, b);
  const auto ra = point_count(J, 1), rb = point_count(J, 1);
  EXPECT_EQ(ra.count, rb.count);
  ASSERT_EQ(ra.samples.size(), rb.samples.size());
  for (std::size_t i = 0; i < ra.samples.size(); ++i) EXPECT_EQ(ra.samples[i].to_string(), rb.samples[i].to_string());
}

TEST(PointSet, DecodeRoundTrip) {
  const PointSet pts = point_set(build_J(Surface::D40, 2, 3), 1);
  ASSERT_FALSE(pts.keys.empty());
  for (std::size_t i = 0; i < pts.keys.size(); i += 7) {
    const Jet g = decode_point(pts, pts.keys[i], 3);
    EXPECT_TRUE(g.value_at(base_equation(Surface::D40)).is_zero());
    EXPECT_TRUE(g.value_at(P("z1")).is_zero());
  }
}

// The cover at m = 3 against the independently enumerated counts.
TEST(Cover, MatchesIndependentCountsOverGF2) {
  for (const auto s : {Surface::D40, Surface::D41}) {
    const auto& want = testing::fixtures()["counts_m3"][key(s)]["1"];
    const PointSet S = point_set(fiber(s, 3), 1);
    const PointSet J1 = point_set(build_J(s, 1, 3), 1), J2 = point_set(build_J(s, 2, 3), 1),
                   J3 = point_set(build_J(s, 3, 3), 1);
    EXPECT_EQ(S.size(), want["S"].get<std::size_t>());
    EXPECT_EQ(J1.size(), want["J1"].get<std::size_t>());
    EXPECT_EQ(J2.size(), want["J2"].get<std::size_t>());
    EXPECT_EQ(J3.size(), want["J3"].get<std::size_t>());
    const PointSet U = set_union(set_union(J1, J2), J3);
    EXPECT_EQ(U.size(), want["union"].get<std::size_t>());
    EXPECT_EQ(S == U, want["fiber_equals_union"].get<bool>());
    EXPECT_TRUE(S == U);
  }
}

TEST(Cover, GF4CountsAtMThree) {
  const auto& want = testing::fixtures()["counts_m3"]["D41"]["2"];
  const PointSet J3 = point_set(build_J(Surface::D41, 3, 3), 2);
  EXPECT_EQ(J3.size(), want["J3"].get<std::size_t>());
}

TEST(SetUnion, Basics) {
  PointSet a{1, jet_ambient(0), {1, 4, 9}}, b{1, jet_ambient(0), {2, 4, 10}};
  EXPECT_EQ(set_union(a, b).keys, (std::vector<std::uint64_t>{1, 2, 4, 9, 10}));
  b.k = 2;
  EXPECT_THROW(set_union(a, b), PreconditionError);
}

TEST(DimensionProbe, Examples) {
  const DimensionProbe sub = dimension_probe(build_L({2, 2, 2}, 2));
  EXPECT_EQ(sub.estimate, 3);
  EXPECT_EQ(sub.count_k1, 8u);
  EXPECT_EQ(sub.count_k2, 64u);

  const Ideal J = build_J(Surface::D40, 1, 3);
  EXPECT_EQ(dimension_probe(J).estimate, dimension(J));

  const DimensionProbe lines = dimension_probe(Ideal({P("x1*y1")}, 1), std::vector<VarId>{X(1), Y(1)});
  EXPECT_EQ(lines.count_k1, 3u);
  EXPECT_EQ(lines.count_k2, 7u);
  EXPECT_EQ(lines.estimate, 1);

  EXPECT_EQ(dimension_probe(Ideal({Polynomial::one()}, 1)).estimate, -1);
}

TEST(Irreducible, AgreesWithIndependentSearch) {
  const auto& want = testing::fixtures()["irreducible"];
  const Polynomial base = P("x0^2 + y0^2*z0 + y0*z0^2");
  EXPECT_EQ(irreducible_over(base, 1), want["base_gf2"].get<bool>());
  EXPECT_EQ(irreducible_over(base, 2), want["base_gf4"].get<bool>());
  EXPECT_EQ(!irreducible_over(P("x0^2 + y0^2"), 1), want["control_reducible"].get<bool>());
  EXPECT_TRUE(irreducible_check_d40_form());
}

TEST(Irreducible, MoreControls) {
  EXPECT_FALSE(irreducible_over(P("x0*y0 + x0"), 1));
  EXPECT_TRUE(irreducible_over(P("x0^2 + x0 + 1"), 1));
  // x^2 + x + 1 splits over GF(4).
  EXPECT_FALSE(irreducible_over(P("x0^2 + x0 + 1"), 2));
  EXPECT_THROW(irreducible_over(P("x0^4 + y0"), 1), PreconditionError);
}

// Where both are computable (m <= 3) the point oracle over GF(2) and GF(4) together agrees with the
// symbolic test. GF(2) alone is too small: y1 z1 (y1 + z1) vanishes at all of its points.
TEST(Agreement, OracleAndSymbolicInclusion) {
  for (const auto s : {Surface::D40, Surface::D41}) {
    const std::vector<Ideal> ideals = {fiber(s, 3), build_J(s, 1, 3), build_J(s, 2, 3), build_J(s, 3, 3),
                                       build_L({2, 2, 2}, 3), build_L({2, 1, 1}, 3)};
    std::vector<PointSet> k1, k2;
    for (const auto& I : ideals) {
      k1.push_back(point_set(I, 1));
      k2.push_back(point_set(I, 2));
    }
    int strict = 0;
    for (std::size_t a = 0; a < ideals.size(); ++a)
      for (std::size_t b = 0; b < ideals.size(); ++b) {
        const bool oracle = point_subset(k1[a], k1[b]) && point_subset(k2[a], k2[b]);
        EXPECT_EQ(variety_subset(ideals[a], ideals[b]), oracle) << to_string(s) << " " << a << " in " << b;
        strict += oracle ? 0 : 1;
      }
    EXPECT_GT(strict, 0);
  }
}

TEST(Suite, RejectsSmallOrder) {
  EXPECT_THROW(run_paper_suite(Surface::D40, 4), PreconditionError);
  EXPECT_THROW(verify_center_cases(1, 5), PreconditionError);
  EXPECT_THROW(verify_center_cases(1, 12), PreconditionError);
}

TEST(Suite, CoversEveryAnchor) {
  SuiteReport all = run_paper_suite(Surface::D40, 5);
  all.append(run_paper_suite(Surface::D41, 6));
  for (int m = 6; m <= 11; ++m) all.append(verify_center_cases(1, m));
  std::set<std::string> seen;
  const auto& manifest = anchor_manifest();
  for (const auto& c : all.checks) {
    EXPECT_NE(std::find(manifest.begin(), manifest.end(), c.anchor), manifest.end()) << c.id << " -> " << c.anchor;
    seen.insert(c.anchor);
  }
  for (const auto& a : manifest) EXPECT_TRUE(seen.contains(a)) << "no check for " << a;
  EXPECT_TRUE(all.passed());
  EXPECT_EQ(all.count(CheckStatus::Fail), 0u);
}

TEST(Suite, IdsAreUnique) {
  const SuiteReport r = run_paper_suite(Surface::D41, 6);
  std::set<std::string> ids;
  for (const auto& c : r.checks) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_EQ(r.count(CheckStatus::SkippedBudget), 0u);
}

TEST(Suite, CenterCaseExamples) {
  const auto codim = [](const SuiteReport& r) {
    for (const auto& c : r.checks)
      if (c.anchor == "center.codimension") return c;
    return CheckRecord{};
  };
  const SuiteReport six = verify_center_cases(1, 6);
  EXPECT_TRUE(six.passed());
  EXPECT_EQ(codim(six).status, CheckStatus::Pass);
  EXPECT_NE(codim(six).detail.find("codim 8"), std::string::npos) << codim(six).detail;
  const SuiteReport nine = verify_center_cases(1, 9);
  EXPECT_TRUE(nine.passed());
  EXPECT_NE(codim(nine).detail.find("codim 11"), std::string::npos) << codim(nine).detail;
}

TEST(Suite, LargerCentersAreReportedAsSkipped) {
  const SuiteReport r = verify_center_cases(2, 12);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.count(CheckStatus::SkippedBudget), 0u);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::SkippedBudget) << c.id;
}

TEST(Suite, BudgetExhaustionIsReportedPerCheck) {
  const SuiteReport r = run_paper_suite(Surface::D40, 5, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.count(CheckStatus::SkippedBudget), 0u);
  std::map<std::string, CheckStatus> by_id;
  for (const auto& c : r.checks) {
    by_id[c.id] = c.status;
    if (c.status == CheckStatus::SkippedBudget) EXPECT_FALSE(c.detail.empty()) << c.id;
  }
  EXPECT_EQ(by_id.at("d40.decomposition"), CheckStatus::SkippedBudget);
  EXPECT_EQ(by_id.at("d40.graph.dynkin"), CheckStatus::SkippedBudget);
  // Checks that need no Groebner basis still run.
  EXPECT_EQ(by_id.at("d40.stable-factor"), CheckStatus::Pass);
  EXPECT_EQ(by_id.at("d40.cover.m3.k1"), CheckStatus::Pass);
}

}  // namespace
}  // namespace jetfiber
