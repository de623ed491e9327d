#ifndef JETFIBER_COMPONENTS_HPP
#define JETFIBER_COMPONENTS_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetfiber/eval.hpp"
#include "jetfiber/ideal.hpp"

namespace jetfiber {

enum class Label { Z0 = 0, Z1 = 1, Z2 = 2, Z3 = 3 };
inline constexpr std::array<Label, 4> kLabels = {Label::Z0, Label::Z1, Label::Z2, Label::Z3};

std::string to_string(Label l);
Label parse_label(const std::string& text);

/// One irreducible component Z_m^i of the singular fiber.
struct Component {
  Label label;
  Surface surface;
  int m;
  /// The defining closed ideal before localization (a J ideal, or L_322 plus jets for Z0).
  Ideal closed_ideal;
  std::optional<VarId> localizer;
  /// Materialized ideal of the component, with its reduced basis cached.
  Ideal sat_ideal;
  int dim;
  /// Present when the localized ideal was certified prime by a triangular presentation.
  std::optional<TriangularCertificate> certificate;
};

/// Builds and certifies one component. Requires m >= 5.
/// Throws VerificationFailure when the certificate height disagrees with the Groebner dimension.
Component component_ideal(Surface s, int m, Label label, std::uint64_t budget = kDefaultBudget);

/// L_pqr plus the nonzero reductions of the surface's jets modulo L_pqr. With the default
/// (3, 2, 2) this is L_322 + <G^(6), ..., G^(m)>.
Ideal center_ideal(Surface s, int m, TruncationSpec spec = {3, 2, 2});

/// A point of the jet space over GF(2^k), coefficients possibly affine in one parameter s.
class Jet {
public:
  Jet(int m, int k);

  /// Parses "(0, s*t + t^2, t)": three series in t with coefficients 0, 1, s or 1 + s.
  static Jet parse(const std::string& text, int m, int k = 1);

  int m() const { return m_; }
  int field_degree() const { return k_; }
  bool parametric() const;

  const ParamPoly& coeff(VarId v) const;
  void set(VarId v, ParamPoly c);

  /// Value of `p` at this jet, a polynomial in s. Variables of index above m are an error.
  ParamPoly value(const Polynomial& p) const;
  /// Same as `value` for a jet without parameter.
  FieldElem value_at(const Polynomial& p) const;

  std::string to_string() const;

private:
  int m_;
  int k_;
  std::array<std::vector<ParamPoly>, 3> coeffs_;
};

/// Every generator of the component's ideal vanishes at `gamma`. Throws for parametric jets.
bool jet_member(const Jet& gamma, const Component& c);

/// Every generator of J vanishes identically in s at `gamma_s` and the chart coordinate is a
/// nonzero polynomial in s, so the s -> 0 limit lies in the closure of V(J) on D(chart).
bool family_witness(const Jet& gamma_s, const Ideal& J, VarId chart);

/// Fixed jet lying on exactly one component (m >= 5). Z0 uses GF(4) coefficients.
Jet distinguishing_jet(Surface s, Label label, int m);

struct DistinctnessCheck {
  Label owner;
  Jet witness;
  /// Membership of the witness in Z0..Z3.
  std::array<bool, 4> member;
  bool ok() const;
};

struct Decomposition {
  Surface surface;
  int m;
  std::vector<Component> components;
  std::vector<DistinctnessCheck> witnesses;
  bool distinct() const;
};

/// The four components of the singular fiber for m >= 5, with distinctness witnesses.
Decomposition decompose(Surface s, int m, std::uint64_t budget = kDefaultBudget);

enum class Symmetry { Psi1, Psi2 };
std::string to_string(Symmetry s);

/// Ring map of R_m induced by the symmetry: y <-> z, or the surface's shear of z.
Bindings symmetry_bindings(Surface s, Symmetry which, int m);

/// The component among `all` whose variety is the image of `c`.
/// Throws VerificationFailure when no component matches.
const Component& apply_symmetry(Symmetry which, const Component& c, std::span<const Component> all,
                                std::uint64_t budget = kDefaultBudget);

/// For every 6 <= l <= m, f^(l) mod L_322 equals f^(l-6) shifted by x+3, y+2, z+2 (D40).
bool stable_iso_check(int m);

}  // namespace jetfiber

#endif  // JETFIBER_COMPONENTS_HPP
