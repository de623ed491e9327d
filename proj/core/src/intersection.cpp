#include "jetfiber/intersection.hpp"

#include <algorithm>
#include <map>

#include "jetfiber/errors.hpp"
#include "jetfiber/oracle.hpp"

namespace jetfiber {
namespace {

bool vanishes_on(const Jet& gamma, std::span<const Polynomial> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return gamma.value_at(g).is_zero(); });
}

InclusionVerdict by_points(const Ideal& a, const Ideal& b) {
  const PointSet points = point_set(a, 1);
  for (auto key : points.keys) {
    const Jet gamma = decode_point(points, key, a.m());
    if (!vanishes_on(gamma, b.generators())) return {false, EvidenceTier::Oracle, "points", gamma.to_string()};
  }
  return {true, EvidenceTier::Oracle, "points", std::nullopt};
}

}  // namespace

LabelPair LabelPair::of(Label a, Label b) {
  if (a == b) throw PreconditionError("a pair needs two distinct labels");
  return a < b ? LabelPair{a, b} : LabelPair{b, a};
}

std::string to_string(LabelPair p) { return to_string(p.first) + "&" + to_string(p.second); }

std::string to_string(EvidenceTier t) {
  switch (t) {
    case EvidenceTier::Symbolic:
      return "symbolic";
    case EvidenceTier::Identity:
      return "identity";
    case EvidenceTier::Oracle:
      return "oracle";
  }
  return "?";
}

std::size_t IntersectionPoset::index_of(LabelPair p) const {
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].pair == p) return i;
  throw PreconditionError("no record for " + to_string(p));
}

bool IntersectionPoset::included(LabelPair a, LabelPair b) const {
  const std::size_t i = index_of(a), j = index_of(b);
  if (i == j) return true;
  return inclusion[i][j]->included;
}

EvidenceTier IntersectionPoset::weakest_tier() const {
  EvidenceTier worst = EvidenceTier::Symbolic;
  for (const auto& row : inclusion)
    for (const auto& v : row)
      if (v && v->tier > worst) worst = v->tier;
  return worst;
}

InclusionVerdict variety_inclusion(const Ideal& a, const Ideal& b, std::span<const Jet> witnesses, std::uint64_t budget) {
  for (const auto& gamma : witnesses)
    if (gamma.m() == a.m() && vanishes_on(gamma, a.generators()) && !vanishes_on(gamma, b.generators()))
      return {false, EvidenceTier::Symbolic, "witness", gamma.to_string()};
  try {
    const Ideal ga = groebner(a, budget);
    for (const auto& h : b.generators())
      if (!radical_member(h, ga, budget)) return {false, EvidenceTier::Symbolic, "radical", std::nullopt};
    return {true, EvidenceTier::Symbolic, "radical", std::nullopt};
  } catch (const BudgetExceeded&) {
    return by_points(a, b);
  }
}

std::vector<Jet> witness_pool(Surface s, int m) {
  std::vector<Jet> out;
  for (auto l : kLabels) out.push_back(distinguishing_jet(s, l, m));
  for (const char* text : {"(0, 0, 0)", "(0, 0, t^2)", "(0, t^2, 0)", "(0, t^2, t^2)", "(t^3, 0, 0)"})
    out.push_back(Jet::parse(text, m));
  return out;
}

IntersectionPoset pairwise_intersections(std::span<const Component> comps, std::uint64_t budget) {
  if (comps.size() != 4) throw PreconditionError("intersections need the four components");
  IntersectionPoset poset{comps[0].surface, comps[0].m, {}, {}};
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].surface != poset.surface || comps[j].m != poset.m)
        throw PreconditionError("components from different decompositions");
      poset.records.push_back({LabelPair::of(comps[i].label, comps[j].label), comps[i].sat_ideal + comps[j].sat_ideal,
                               false, {}});
    }
  std::sort(poset.records.begin(), poset.records.end(), [](const auto& a, const auto& b) { return a.pair < b.pair; });

  const auto pool = witness_pool(poset.surface, poset.m);
  const std::size_t n = poset.records.size();
  poset.inclusion.assign(n, std::vector<std::optional<InclusionVerdict>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) poset.inclusion[a][b] = variety_inclusion(poset.records[a].ideal, poset.records[b].ideal, pool, budget);

  for (std::size_t a = 0; a < n; ++a) {
    auto& r = poset.records[a];
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && poset.inclusion[a][b]->included && !poset.inclusion[b][a]->included)
        r.strict_subset_of.push_back(poset.records[b].pair);
    r.maximal = r.strict_subset_of.empty();
  }
  return poset;
}

std::vector<IntersectionRecord> maximal_elements(std::span<const IntersectionRecord> records) {
  std::vector<IntersectionRecord> out;
  for (const auto& r : records)
    if (r.strict_subset_of.empty()) out.push_back(r);
  return out;
}

bool pairwise_distinct(const IntersectionPoset& poset, std::span<const IntersectionRecord> records) {
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j)
      if (poset.included(records[i].pair, records[j].pair) && poset.included(records[j].pair, records[i].pair))
        return false;
  return true;
}

bool transitive(const IntersectionPoset& poset) {
  for (const auto& a : poset.records)
    for (const auto& b : poset.records)
      for (const auto& c : poset.records)
        if (poset.included(a.pair, b.pair) && poset.included(b.pair, c.pair) && !poset.included(a.pair, c.pair))
          return false;
  return true;
}

bool symmetry_coherent(const IntersectionPoset& poset, const std::array<Label, 4>& perm) {
  auto image = [&](LabelPair p) {
    return LabelPair::of(perm[static_cast<std::size_t>(p.first)], perm[static_cast<std::size_t>(p.second)]);
  };
  for (const auto& a : poset.records)
    for (const auto& b : poset.records)
      if (poset.included(a.pair, b.pair) != poset.included(image(a.pair), image(b.pair))) return false;
  return true;
}

Graph build_graph(std::span<const Component> comps, std::span<const IntersectionRecord> maximals) {
  Graph g;
  for (const auto& c : comps) g.vertices.push_back(c.label);
  for (const auto& r : maximals) g.edges.push_back(r.pair);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool dynkin_d4_check(const Graph& g) {
  if (g.vertices.size() != 4 || g.edges.size() != 3) return false;
  std::map<Label, int> degree;
  for (auto v : g.vertices) degree[v] = 0;
  if (degree.size() != 4) return false;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.first == e.second || !degree.contains(e.first) || !degree.contains(e.second)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (g.edges[j] == e) return false;
    ++degree[e.first];
    ++degree[e.second];
  }
  std::vector<int> seq;
  for (const auto& [v, d] : degree) seq.push_back(d);
  std::sort(seq.begin(), seq.end());
  return seq == std::vector<int>{1, 1, 1, 3};
}

std::string to_dot(const Graph& g) {
  std::string out = "graph Gamma {";
  for (const auto& v : g.vertices)
    if (std::none_of(g.edges.begin(), g.edges.end(), [&](const LabelPair& e) { return e.contains(v); }))
      out += " " + to_string(v) + ";";
  for (const auto& e : g.edges) out += " " + to_string(e.first) + " -- " + to_string(e.second) + ";";
  return out + " }";
}

}  // namespace jetfiber
