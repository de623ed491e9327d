#include "jetfiber/components.hpp"

#include <algorithm>
#include <cctype>

#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace {

constexpr TruncationSpec kCenter{3, 2, 2};

std::size_t family_index(Family f) { return static_cast<std::size_t>(f); }

struct Recipe {
  int j_index;
  VarId localizer;
};

Recipe recipe(Label label) {
  switch (label) {
    case Label::Z1:
      return {1, Z(1)};
    case Label::Z2:
      return {2, Y(1)};
    case Label::Z3:
      return {3, Y(1)};
    case Label::Z0:
      break;
  }
  throw PreconditionError("Z0 has no J ideal");
}

void check_height(const Component& c) {
  if (!c.certificate) return;
  const int from_cert = 3 * (c.m + 1) - c.certificate->height();
  if (from_cert != c.dim)
    throw VerificationFailure(to_string(c.label) + ": certificate gives dimension " + std::to_string(from_cert) +
                              " but the Groebner basis gives " + std::to_string(c.dim));
}

}  // namespace

std::string to_string(Label l) { return "Z" + std::to_string(static_cast<int>(l)); }

Label parse_label(const std::string& text) {
  for (auto l : kLabels)
    if (to_string(l) == text) return l;
  throw PreconditionError("unknown component label '" + text + "'");
}

Ideal center_ideal(Surface s, int m, TruncationSpec spec) {
  const Ideal L = build_L(spec, m);
  std::vector<Polynomial> gens(L.generators().begin(), L.generators().end());
  for (const auto& c : jet_coeffs(s, m).coeffs)
    if (Polynomial r = reduce_mod_L(c, spec); !r.is_zero()) gens.push_back(std::move(r));
  return {std::move(gens), m};
}

Component component_ideal(Surface s, int m, Label label, std::uint64_t budget) {
  if (m < 5) throw PreconditionError("components are defined for m >= 5");
  if (label != Label::Z0) {
    const auto [j, v] = recipe(label);
    Ideal J = build_J(s, j, m);
    Ideal I = saturate(J, v, budget);
    const int dim = dimension(I, budget);
    auto cert = triangular_certify(J, v);
    Component c{label, s, m, std::move(J), v, std::move(I), dim, std::move(cert.certificate)};
    check_height(c);
    return c;
  }

  Ideal closed = center_ideal(s, m);
  if (s == Surface::D40) {
    Ideal I = groebner(closed, budget);
    const int dim = dimension(I, budget);
    return {label, s, m, std::move(closed), std::nullopt, std::move(I), dim, std::nullopt};
  }
  // D41: the closed set is the closure of its y2-chart, which also equals the closure of the z2-chart.
  Ideal I = saturate(closed, Y(2), budget);
  if (!same_variety(I, saturate(closed, Z(2), budget), budget))
    throw VerificationFailure("Z0: the y2 and z2 charts have different closures");
  if (!variety_subset(groebner(closed, budget), I, budget))
    throw VerificationFailure("Z0: the center set is not the closure of its y2 chart");
  const int dim = dimension(I, budget);
  auto cert = triangular_certify(closed, Y(2), true);
  Component c{label, s, m, std::move(closed), Y(2), std::move(I), dim, std::move(cert.certificate)};
  check_height(c);
  return c;
}

// ---------------------------------------------------------------------------------------------

Jet::Jet(int m, int k) : m_(m), k_(k) {
  if (m < 0 || m > kMaxJetIndex) throw PreconditionError("jet order out of range");
  if (k < 1 || k > kMaxFieldDegree) throw PreconditionError("field degree out of range");
  for (auto& v : coeffs_) v.assign(static_cast<std::size_t>(m) + 1, ParamPoly(k));
}

bool Jet::parametric() const {
  for (const auto& v : coeffs_)
    for (const auto& c : v)
      if (c.degree() > 0) return true;
  return false;
}

const ParamPoly& Jet::coeff(VarId v) const {
  if (v.family == Family::AUX || v.index > m_) throw PreconditionError("no jet coordinate " + jetfiber::to_string(v));
  return coeffs_[family_index(v.family)][v.index];
}

void Jet::set(VarId v, ParamPoly c) {
  if (v.family == Family::AUX || v.index > m_) throw PreconditionError("no jet coordinate " + jetfiber::to_string(v));
  if (c.field_degree() != k_) throw PreconditionError("coefficient from a different field");
  coeffs_[family_index(v.family)][v.index] = std::move(c);
}

ParamPoly Jet::value(const Polynomial& p) const {
  return evaluate_with<ParamPoly>(
      p,
      [&](VarId v) -> std::optional<ParamPoly> {
        if (v.family == Family::AUX || v.index > m_) return std::nullopt;
        return coeffs_[family_index(v.family)][v.index];
      },
      ParamPoly(k_), ParamPoly(FieldElem::one(k_)));
}

FieldElem Jet::value_at(const Polynomial& p) const {
  if (parametric()) throw PreconditionError("jet carries a parameter");
  return value(p).coeff(0);
}

namespace {

// 0, 1, w or w^j with w the field generator.
std::string power_form(FieldElem c) {
  if (c.is_zero()) return "0";
  const FieldElem w = FieldElem::generator(c.degree());
  FieldElem acc = FieldElem::one(c.degree());
  for (int j = 0;; ++j, acc *= w)
    if (acc == c) return j == 0 ? "1" : j == 1 ? "w" : "w^" + std::to_string(j);
}

std::string coeff_form(const ParamPoly& c) {
  std::string out;
  if (!c.coeff(0).is_zero()) out = power_form(c.coeff(0));
  if (const FieldElem s = c.coeff(1); !s.is_zero()) {
    if (!out.empty()) out += " + ";
    out += s == FieldElem::one(s.degree()) ? "s" : power_form(s) + "*s";
  }
  return out;
}

}  // namespace

std::string Jet::to_string() const {
  std::string out = "(";
  for (std::size_t f = 0; f < 3; ++f) {
    if (f > 0) out += ", ";
    std::string series;
    for (std::size_t i = 0; i < coeffs_[f].size(); ++i) {
      const auto& c = coeffs_[f][i];
      if (c.is_zero()) continue;
      if (!series.empty()) series += " + ";
      const std::string t = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
      const std::string cs = coeff_form(c);
      if (t.empty())
        series += cs;
      else if (cs == "1")
        series += t;
      else if (c.coeff(0).is_zero() || c.coeff(1).is_zero())
        series += cs + "*" + t;
      else
        series += "(" + cs + ")*" + t;
    }
    out += series.empty() ? "0" : series;
  }
  return out + ")";
}

namespace {

class JetParser {
public:
  JetParser(const std::string& text, Jet& jet) : text_(text), jet_(jet) {}

  void run() {
    expect('(');
    for (auto f : {Family::X, Family::Y, Family::Z}) {
      if (f != Family::X) expect(',');
      series(f);
    }
    expect(')');
    skip();
    if (pos_ != text_.size()) fail("trailing input");
  }

private:
  void series(Family f) {
    term(f);
    while (peek() == '+') {
      ++pos_;
      term(f);
    }
  }

  // Product of factors from {0, 1, s, w[^e], t[^e]}.
  void term(Family f) {
    const int k = jet_.field_degree();
    FieldElem scalar = FieldElem::one(k);
    bool has_s = false;
    int power = 0;
    for (;;) {
      const char c = peek();
      if (c == '0' || c == '1') {
        ++pos_;
        if (c == '0') scalar = FieldElem::zero(k);
      } else if (c == 's') {
        ++pos_;
        if (has_s) fail("parameter s may appear at most once per term");
        has_s = true;
      } else if (c == 'w' || c == 't') {
        ++pos_;
        const int e = exponent();
        if (c == 'w')
          scalar *= FieldElem::generator(k).pow(static_cast<std::uint64_t>(e));
        else
          power += e;
      } else {
        fail("expected a factor");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    if (power > jet_.m()) return;  // truncated away
    const VarId v{f, static_cast<std::uint8_t>(power)};
    const ParamPoly add = has_s ? ParamPoly::affine(FieldElem::zero(k), scalar) : ParamPoly(scalar);
    jet_.set(v, jet_.coeff(v) + add);
  }

  int exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    int e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      e = e * 10 + (text_[pos_++] - '0');
    if (pos_ == start || e > 64) fail("bad exponent");
    return e;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  const std::string& text_;
  Jet& jet_;
  std::size_t pos_ = 0;
};

}  // namespace

Jet Jet::parse(const std::string& text, int m, int k) {
  Jet jet(m, k);
  JetParser(text, jet).run();
  return jet;
}

bool jet_member(const Jet& gamma, const Component& c) {
  if (gamma.parametric()) throw PreconditionError("membership needs a jet without parameter");
  if (gamma.m() != c.m) throw PreconditionError("jet order differs from the component's");
  const auto gens = c.sat_ideal.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return gamma.value_at(g).is_zero(); });
}

bool family_witness(const Jet& gamma_s, const Ideal& J, VarId chart) {
  if (!gamma_s.parametric()) throw PreconditionError("family witness needs a jet with parameter s");
  const auto gens = J.generators();
  const bool on_J = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return gamma_s.value(g).is_zero(); });
  return on_J && !gamma_s.coeff(chart).is_zero();
}

Jet distinguishing_jet(Surface s, Label label, int m) {
  switch (label) {
    case Label::Z1:
      return Jet::parse("(0, 0, t)", m);
    case Label::Z2:
      return Jet::parse("(0, t, 0)", m);
    case Label::Z3:
      return Jet::parse("(0, t, t)", m);
    case Label::Z0:
      break;
  }
  // (t^3, t^2, w t^2 + ...) over GF(4): x3 = y2 = 1 and z2 = w keep x2 + ... off every other
  // component. The coefficient of t^l is linear in z_{l-4} with coefficient y2^2 = 1, which fixes
  // the higher z coefficients one at a time.
  Jet jet = Jet::parse("(t^3, t^2, w*t^2)", m, 2);
  const auto jets = jet_coeffs(s, m).coeffs;
  for (int l = 7; l <= m; ++l) {
    const FieldElem c = jet.value_at(jets[static_cast<std::size_t>(l)]);
    jet.set(Z(l - 4), jet.coeff(Z(l - 4)) + ParamPoly(c));
  }
  return jet;
}

bool DistinctnessCheck::ok() const {
  for (auto l : kLabels)
    if (member[static_cast<std::size_t>(l)] != (l == owner)) return false;
  return true;
}

bool Decomposition::distinct() const {
  return witnesses.size() == 4 && std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.ok(); });
}

Decomposition decompose(Surface s, int m, std::uint64_t budget) {
  if (m < 5) throw PreconditionError("the decomposition needs m >= 5");
  Decomposition d{s, m, {}, {}};
  for (auto l : kLabels) d.components.push_back(component_ideal(s, m, l, budget));
  for (auto owner : kLabels) {
    DistinctnessCheck w{owner, distinguishing_jet(s, owner, m), {}};
    for (const auto& c : d.components) w.member[static_cast<std::size_t>(c.label)] = jet_member(w.witness, c);
    d.witnesses.push_back(std::move(w));
  }
  return d;
}

std::string to_string(Symmetry s) { return s == Symmetry::Psi1 ? "psi1" : "psi2"; }

Bindings symmetry_bindings(Surface s, Symmetry which, int m) {
  return which == Symmetry::Psi1 ? swap_yz(m) : shear_z(s, m);
}

const Component& apply_symmetry(Symmetry which, const Component& c, std::span<const Component> all,
                                std::uint64_t budget) {
  const Ideal image = groebner(c.sat_ideal.mapped(symmetry_bindings(c.surface, which, c.m)), budget);
  auto comparable = [&](const Component& o) { return o.surface == c.surface && o.m == c.m; };
  for (const auto& other : all)
    if (comparable(other) && same_ideal(image, other.sat_ideal, budget)) return other;
  // Radical comparison, skipping candidates whose own witness jet is off the image.
  for (const auto& other : all) {
    if (!comparable(other)) continue;
    const Jet w = distinguishing_jet(c.surface, other.label, c.m);
    const auto gens = image.generators();
    if (!std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return w.value_at(g).is_zero(); }))
      continue;
    if (same_variety(image, other.sat_ideal, budget)) return other;
  }
  throw VerificationFailure(to_string(which) + " maps " + to_string(c.label) + " onto no component");
}

bool stable_iso_check(int m) {
  if (m < 6) throw PreconditionError("the stable factor appears for m >= 6");
  const auto jets = jet_coeffs(Surface::D40, m).coeffs;
  const Bindings shift = index_shift(3, 2, 2, m - 6);
  for (int l = 6; l <= m; ++l) {
    const auto& lhs = reduce_mod_L(jets[static_cast<std::size_t>(l)], kCenter);
    if (lhs != substitute(jets[static_cast<std::size_t>(l - 6)], shift)) return false;
  }
  return true;
}

}  // namespace jetfiber
