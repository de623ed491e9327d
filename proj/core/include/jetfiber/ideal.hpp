#ifndef JETFIBER_IDEAL_HPP
#define JETFIBER_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "jetfiber/jet.hpp"
#include "jetfiber/order.hpp"
#include "jetfiber/polynomial.hpp"

namespace jetfiber {

/// Default number of reduction steps a single Groebner computation may take.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

namespace detail {
struct BasisData;
}

/// A reduced Groebner basis, immutable and cheap to copy.
class GroebnerBasis {
public:
  const MonomialOrder& order() const;
  /// Elements in canonical layout, sorted by decreasing leading monomial.
  std::span<const Polynomial> elements() const;
  /// Leading monomials (canonical layout), aligned with `elements()`.
  std::span<const Monomial> leading_monomials() const;
  bool is_unit() const;
  /// Reduction steps spent building this basis.
  std::uint64_t steps() const;

  /// Fully reduced remainder of `p`.
  Polynomial normal_form(const Polynomial& p) const;
  bool reduces_to_zero(const Polynomial& p) const { return normal_form(p).is_zero(); }

private:
  explicit GroebnerBasis(std::shared_ptr<const detail::BasisData> data) : data_(std::move(data)) {}
  friend struct detail::BasisData;

  std::shared_ptr<const detail::BasisData> data_;
};

/// An ideal of R_m = GF(2)[x_0..x_m, y_0..y_m, z_0..z_m] given by generators, with an
/// optional cached reduced Groebner basis.
class Ideal {
public:
  /// Throws PreconditionError when a generator uses an index above `m` or an auxiliary variable.
  Ideal(std::vector<Polynomial> gens, int m, MonomialOrder order = {});

  int m() const { return m_; }
  std::span<const Polynomial> generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const GroebnerBasis* basis() const { return gb_ ? &*gb_ : nullptr; }

  Ideal with(std::vector<Polynomial> extra) const;
  /// Image under a ring map of R_m (bindings must stay within index m); drops the cached basis.
  Ideal mapped(const Bindings& bindings) const;

  friend Ideal operator+(const Ideal& a, const Ideal& b);

private:
  Ideal(std::vector<Polynomial> gens, int m, MonomialOrder order, GroebnerBasis gb);

  friend Ideal groebner(const Ideal& I, std::uint64_t budget);
  friend Ideal saturate(const Ideal& I, VarId v, std::uint64_t budget);

  std::vector<Polynomial> gens_;
  int m_;
  MonomialOrder order_;
  std::optional<GroebnerBasis> gb_;
};

/// L_pqr inside R_m. Requires 1 <= p, q, r <= m + 1.
Ideal build_L(TruncationSpec spec, int m);
/// J_m^1 = L_221 + jets, J_m^2 = L_212 + jets, J_m^3 = L_211 + <y1 + z1> + jets. Requires m >= 3.
Ideal build_J(Surface s, int i, int m);

/// Buchberger over GF(2) with Gebauer-Moeller pair elimination and the sugar strategy.
/// Returns `I` with its reduced basis cached (a no-op if already present for the same order).
/// Throws BudgetExceeded after `budget` reduction steps.
Ideal groebner(const Ideal& I, std::uint64_t budget = kDefaultBudget);

/// Reduced basis of `gens` in `order`, seeded with the reduced basis `seed` in the same order.
/// Pairs inside `seed` are skipped. Generators may use auxiliary variables.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order,
                             std::uint64_t budget = kDefaultBudget, const GroebnerBasis* seed = nullptr);

Polynomial normal_form(const Polynomial& p, const Ideal& I, std::uint64_t budget = kDefaultBudget);

/// Krull dimension of V(I) in affine 3(m+1)-space; -1 for the unit ideal.
int dimension(const Ideal& I, std::uint64_t budget = kDefaultBudget);

/// (I : v^infinity), via an auxiliary w with w*v + 1 eliminated in a block order.
Ideal saturate(const Ideal& I, VarId v, std::uint64_t budget = kDefaultBudget);

/// h in sqrt(I), decided by 1 in I + <w*h + 1>.
bool radical_member(const Polynomial& h, const Ideal& I, std::uint64_t budget = kDefaultBudget);

/// J subset of I as ideals.
bool ideal_contains(const Ideal& I, const Ideal& J, std::uint64_t budget = kDefaultBudget);
/// Equal as ideals (containment both ways).
bool same_ideal(const Ideal& a, const Ideal& b, std::uint64_t budget = kDefaultBudget);
/// V(a) subset of V(b), i.e. every generator of b lies in sqrt(a).
bool variety_subset(const Ideal& a, const Ideal& b, std::uint64_t budget = kDefaultBudget);
/// V(a) == V(b); tries ideal equality first.
bool same_variety(const Ideal& a, const Ideal& b, std::uint64_t budget = kDefaultBudget);

struct SolvedStep {
  VarId var;
  /// Exponent of the unit in the solving generator unit^e * var + rest.
  int unit_power = 0;
  Polynomial generator;
};

/// Presentation of I localized at `unit` as coordinate generators plus variables solved one
/// at a time (each linear with a unit-power coefficient), optionally followed by a single
/// leftover generator of the irreducible shape x^2 + y^2 z + y z^2 in unsolved variables.
struct TriangularCertificate {
  VarId unit;
  std::vector<VarId> coordinates;
  std::vector<SolvedStep> solved;
  std::optional<Polynomial> base;

  std::vector<VarId> solved_vars() const {
    std::vector<VarId> out;
    for (const auto& s : solved) out.push_back(s.var);
    return out;
  }
  int height() const {
    return static_cast<int>(coordinates.size() + solved.size()) + (base ? 1 : 0);
  }
};

struct TriangularOutcome {
  std::optional<TriangularCertificate> certificate;
  /// Generators left unsolved when certification fails.
  std::vector<Polynomial> leftover;

  bool ok() const { return certificate.has_value(); }
};

/// Tries to certify that I*(R_m)_unit is prime via a triangular presentation.
/// Pass `allow_base` to accept one irreducible leftover of D4 base shape.
TriangularOutcome triangular_certify(const Ideal& I, VarId unit, bool allow_base = false);

/// True when `p` is x_a^2 + y_b^2 z_c + y_b z_c^2 up to the y/z roles, in three distinct variables.
bool is_base_form(const Polynomial& p);

}  // namespace jetfiber

#endif  // JETFIBER_IDEAL_HPP
