#ifndef JETFIBER_JET_HPP
#define JETFIBER_JET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jetfiber/polynomial.hpp"

namespace jetfiber {

/// The two characteristic-2 surfaces with a D4 resolution graph.
enum class Surface { D40, D41 };

std::string to_string(Surface s);
/// Accepts "d40"/"d41" (case-insensitive); throws PreconditionError otherwise.
Surface parse_surface(const std::string& text);

/// x0^2 + y0^2 z0 + y0 z0^2, plus x0 y0 z0 for D41.
Polynomial base_equation(Surface s);

/// Jet equations of one surface truncated at order m: coeffs[l] is the coefficient of t^l.
struct JetSystem {
  Surface surface = Surface::D40;
  int order = 0;
  std::vector<Polynomial> coeffs;
};

/// Expands the base equation at x = sum x_i t^i (same for y, z) modulo t^(m+1).
JetSystem jet_coeffs(Surface s, int m);

/// Same expansion for an arbitrary polynomial in x0, y0, z0.
std::vector<Polynomial> expand_jets(const Polynomial& base, int m);

/// Number of leading coefficients killed in each coordinate series.
struct TruncationSpec {
  int p = 1;
  int q = 1;
  int r = 1;

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

/// Canonical-slot mask of x_0..x_{p-1}, y_0..y_{q-1}, z_0..z_{r-1}.
std::uint64_t truncation_mask(TruncationSpec spec);

/// Image of `p` under x_i -> 0 (i < p), y_j -> 0 (j < q), z_k -> 0 (k < r).
Polynomial reduce_mod_L(const Polynomial& p, TruncationSpec spec);

/// Coefficient of t^l in the base equation evaluated at the truncated series
/// x_p t^p + ..., y_q t^q + ..., z_r t^r + ..., written as the closed four-sum formula.
/// For D40 the x*y*z sum is absent.
Polynomial closed_form_G(TruncationSpec spec, int l, Surface s = Surface::D41);

enum class CheckKind { Value, TopY, TopZ };

struct CaseCheck {
  int case_id = 0;
  CheckKind kind = CheckKind::Value;
  Polynomial predicted;
  Polynomial actual;
  bool match = false;
};

/// Outcome of checking the seven reduction identities on one (p, q, r, l).
/// Overlapping cases are all checked.
struct CaseReport {
  TruncationSpec spec;
  int l = 0;
  Polynomial closed_form;
  std::vector<CaseCheck> checks;

  bool all_match() const {
    for (const auto& c : checks)
      if (!c.match) return false;
    return true;
  }
};

CaseReport verify_G_lemma(TruncationSpec spec, int l);

/// y_i <-> z_i for i <= m.
Bindings swap_yz(int m);
/// z_i -> y_i + z_i (D40) or z_i -> x_i + y_i + z_i (D41) for i <= m.
Bindings shear_z(Surface s, int m);
/// x_i -> x_{i+dx}, y_i -> y_{i+dy}, z_i -> z_{i+dz} for i <= m.
Bindings index_shift(int dx, int dy, int dz, int m);

}  // namespace jetfiber

#endif  // JETFIBER_JET_HPP
