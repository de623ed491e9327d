#ifndef JETFIBER_INTERSECTION_HPP
#define JETFIBER_INTERSECTION_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jetfiber/components.hpp"

namespace jetfiber {

/// Unordered pair of distinct labels, stored with first < second.
struct LabelPair {
  Label first;
  Label second;

  static LabelPair of(Label a, Label b);
  bool contains(Label l) const { return first == l || second == l; }
  friend auto operator<=>(const LabelPair&, const LabelPair&) = default;
};

std::string to_string(LabelPair p);

/// How strongly a verdict is backed: Groebner computation (symbolic), an explicit polynomial
/// identity, or finite-field point enumeration (evidence only).
enum class EvidenceTier { Symbolic, Identity, Oracle };
std::string to_string(EvidenceTier t);

struct InclusionVerdict {
  bool included = false;
  EvidenceTier tier = EvidenceTier::Symbolic;
  /// "radical", "witness" or "points".
  std::string method;
  /// For a non-inclusion decided by a jet: the jet in the smaller set but not the larger.
  std::optional<std::string> witness;
};

struct IntersectionRecord {
  LabelPair pair;
  /// I^i + I^j; its variety is Z^i intersected with Z^j.
  Ideal ideal;
  bool maximal = false;
  std::vector<LabelPair> strict_subset_of;
};

/// The six pairwise intersections with the full inclusion table between them.
struct IntersectionPoset {
  Surface surface;
  int m;
  std::vector<IntersectionRecord> records;
  /// inclusion[a][b]: V(records[a]) subset of V(records[b]); the diagonal is unset.
  std::vector<std::vector<std::optional<InclusionVerdict>>> inclusion;

  std::size_t index_of(LabelPair p) const;
  bool included(LabelPair a, LabelPair b) const;
  /// Lowest tier used by any verdict.
  EvidenceTier weakest_tier() const;
};

/// Inclusion of the varieties of two ideals. Tries exact witness jets for a quick negative
/// answer, then radical membership; on budget exhaustion falls back to GF(2) points.
InclusionVerdict variety_inclusion(const Ideal& a, const Ideal& b, std::span<const Jet> witnesses,
                                   std::uint64_t budget = kDefaultBudget);

/// Jets used as quick non-inclusion certificates for the fiber of order m.
std::vector<Jet> witness_pool(Surface s, int m);

/// All six intersections of four components of one decomposition.
IntersectionPoset pairwise_intersections(std::span<const Component> comps, std::uint64_t budget = kDefaultBudget);

/// Records with nothing strictly above them.
std::vector<IntersectionRecord> maximal_elements(std::span<const IntersectionRecord> records);

/// No two of `records` have the same variety according to `poset`.
bool pairwise_distinct(const IntersectionPoset& poset, std::span<const IntersectionRecord> records);

/// A included in B and B in C imply A in C for every triple of records.
bool transitive(const IntersectionPoset& poset);

/// The inclusion table is invariant under relabeling the components by `perm`.
bool symmetry_coherent(const IntersectionPoset& poset, const std::array<Label, 4>& perm);

struct Graph {
  std::vector<Label> vertices;
  std::vector<LabelPair> edges;
};

/// Vertices are the component labels; edges the maximal intersections.
Graph build_graph(std::span<const Component> comps, std::span<const IntersectionRecord> maximals);

/// True iff `g` is the star with one center and three leaves.
bool dynkin_d4_check(const Graph& g);

/// `graph Gamma { Z0 -- Z1; Z0 -- Z2; Z0 -- Z3; }`. Isolated vertices are listed first.
std::string to_dot(const Graph& g);

}  // namespace jetfiber

#endif  // JETFIBER_INTERSECTION_HPP
