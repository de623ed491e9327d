#ifndef JETFIBER_ORACLE_HPP
#define JETFIBER_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetfiber/components.hpp"
#include "jetfiber/ideal.hpp"

namespace jetfiber {

/// Largest number of enumerated bits (free variables times k) a point enumeration may use.
inline constexpr int kEnumerationBits = 24;
/// Largest extension degree supported by the enumerator.
inline constexpr int kMaxEnumerationDegree = 8;

/// Sorted set of GF(2^k)-points, each packed as k bits per ambient variable.
struct PointSet {
  int k = 1;
  std::vector<VarId> ambient;
  std::vector<std::uint64_t> keys;

  std::size_t size() const { return keys.size(); }
  bool contains(std::uint64_t key) const;
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

PointSet set_union(const PointSet& a, const PointSet& b);

struct PointCountReport {
  std::string description;
  int k = 1;
  int m = 0;
  std::uint64_t count = 0;
  std::vector<Jet> samples;
};

/// All jet variables x_0..x_m, y_0..y_m, z_0..z_m.
std::vector<VarId> jet_ambient(int m);

/// Every GF(2^k)-point of V(I) in the span of `ambient` (default: all jet variables of R_m).
/// Single-variable generators pin their variable to 0; the remaining variables are enumerated
/// exhaustively, which must fit in kEnumerationBits bits or BudgetExceeded is thrown.
PointSet point_set(const Ideal& I, int k, std::optional<std::vector<VarId>> ambient = std::nullopt);

/// Counts points of V(I) over GF(2^k) in the full jet space of R_m, with a few sample points.
PointCountReport point_count(const Ideal& I, int k, std::size_t max_samples = 4);

/// The jet at a packed point of `points`.
Jet decode_point(const PointSet& points, std::uint64_t key, int m);

/// Heuristic dimension from point counts over GF(2) and GF(4).
struct DimensionProbe {
  std::uint64_t count_k1 = 0;
  std::uint64_t count_k2 = 0;
  double slope = 0;
  /// Rounded slope; -1 when no point was found. Evidence only, never a proof.
  int estimate = -1;
};

DimensionProbe dimension_probe(const Ideal& I, std::optional<std::vector<VarId>> ambient = std::nullopt);

/// No factorization into nonunits over GF(2^k). Only total degree <= 3 is supported, where
/// every split has a linear factor; linear factors are found by exhaustive trial division.
bool irreducible_over(const Polynomial& p, int k);

/// x^2 + y^2 z + y z^2 is irreducible over GF(2) and GF(4).
bool irreducible_check_d40_form();

}  // namespace jetfiber

#endif  // JETFIBER_ORACLE_HPP
