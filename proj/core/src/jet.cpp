#include "jetfiber/jet.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace {

using Series = std::vector<Polynomial>;

Series series_mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

void check_order(int m) {
  if (m < 0) throw PreconditionError("jet order must be nonnegative");
  if (m > kMaxJetIndex) throw PreconditionError("jet order exceeds " + std::to_string(kMaxJetIndex));
}

void check_index(int i) {
  if (i > kMaxJetIndex) throw PreconditionError("jet index " + std::to_string(i) + " exceeds supported maximum");
}

Polynomial x(int i) { return Polynomial::var(X(i)); }
Polynomial y(int i) { return Polynomial::var(Y(i)); }
Polynomial z(int i) { return Polynomial::var(Z(i)); }

}  // namespace

std::string to_string(Surface s) { return s == Surface::D40 ? "d40" : "d41"; }

Surface parse_surface(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "d40") return Surface::D40;
  if (t == "d41") return Surface::D41;
  throw PreconditionError("unknown surface '" + text + "' (expected d40 or d41)");
}

Polynomial base_equation(Surface s) {
  Polynomial f = x(0) * x(0) + y(0) * y(0) * z(0) + y(0) * z(0) * z(0);
  if (s == Surface::D41) f += x(0) * y(0) * z(0);
  return f;
}

std::vector<Polynomial> expand_jets(const Polynomial& base, int m) {
  check_order(m);
  for (const auto& v : base.variables())
    if (v.family == Family::AUX || v.index != 0)
      throw PreconditionError("base equation must be a polynomial in x0, y0, z0");

  const std::size_t n = static_cast<std::size_t>(m) + 1;
  std::array<Series, 3> coord;
  for (std::size_t i = 0; i < n; ++i) {
    coord[0].push_back(x(static_cast<int>(i)));
    coord[1].push_back(y(static_cast<int>(i)));
    coord[2].push_back(z(static_cast<int>(i)));
  }
  std::map<std::pair<int, int>, Series> powers;
  auto power = [&](int c, int e) -> const Series& {
    auto [it, fresh] = powers.try_emplace({c, e});
    if (fresh) {
      Series s(n);
      s[0] = Polynomial::one();
      for (int i = 0; i < e; ++i) s = series_mul(s, coord[static_cast<std::size_t>(c)]);
      it->second = std::move(s);
    }
    return it->second;
  };

  Series total(n);
  for (const auto& t : base.terms()) {
    Series term(n);
    term[0] = Polynomial::one();
    const int ex = t.exponent(slot_of(X(0)));
    const int ey = t.exponent(slot_of(Y(0)));
    const int ez = t.exponent(slot_of(Z(0)));
    if (ex > 0) term = series_mul(term, power(0, ex));
    if (ey > 0) term = series_mul(term, power(1, ey));
    if (ez > 0) term = series_mul(term, power(2, ez));
    for (std::size_t l = 0; l < n; ++l) total[l] += term[l];
  }
  return total;
}

JetSystem jet_coeffs(Surface s, int m) {
  return JetSystem{s, m, expand_jets(base_equation(s), m)};
}

std::uint64_t truncation_mask(TruncationSpec spec) {
  if (spec.p < 0 || spec.q < 0 || spec.r < 0) throw PreconditionError("negative truncation index");
  std::uint64_t mask = 0;
  for (int i = 0; i < std::min(spec.p, kMaxJetIndex + 1); ++i) mask |= std::uint64_t{1} << slot_of(X(i));
  for (int i = 0; i < std::min(spec.q, kMaxJetIndex + 1); ++i) mask |= std::uint64_t{1} << slot_of(Y(i));
  for (int i = 0; i < std::min(spec.r, kMaxJetIndex + 1); ++i) mask |= std::uint64_t{1} << slot_of(Z(i));
  return mask;
}

Polynomial reduce_mod_L(const Polynomial& p, TruncationSpec spec) {
  return kill_variables(p, truncation_mask(spec));
}

Polynomial closed_form_G(TruncationSpec spec, int l, Surface s) {
  if (l < 0) throw PreconditionError("l must be nonnegative");
  std::vector<Monomial> terms;
  auto mono = [](std::initializer_list<std::pair<VarId, int>> factors) {
    Monomial m;
    for (const auto& [v, e] : factors) {
      check_index(v.index);
      const int slot = slot_of(v);
      m.set(slot, m.exponent(slot) + e);
    }
    return m;
  };
  // sum_{u >= p, 2u = l} x_u^2
  if (l % 2 == 0 && l / 2 >= spec.p) terms.push_back(mono({{X(l / 2), 2}}));
  // sum_{v >= q, w >= r, 2v + w = l} y_v^2 z_w
  for (int v = spec.q; 2 * v + spec.r <= l; ++v) terms.push_back(mono({{Y(v), 2}, {Z(l - 2 * v), 1}}));
  // sum_{v >= q, w >= r, v + 2w = l} y_v z_w^2
  for (int w = spec.r; spec.q + 2 * w <= l; ++w) terms.push_back(mono({{Y(l - 2 * w), 1}, {Z(w), 2}}));
  // sum_{u >= p, v >= q, w >= r, u + v + w = l} x_u y_v z_w
  if (s == Surface::D41) {
    for (int u = spec.p; u + spec.q + spec.r <= l; ++u)
      for (int v = spec.q; u + v + spec.r <= l; ++v)
        terms.push_back(mono({{X(u), 1}, {Y(v), 1}, {Z(l - u - v), 1}}));
  }
  return Polynomial::from_terms(std::move(terms));
}

CaseReport verify_G_lemma(TruncationSpec spec, int l) {
  const auto [p, q, r] = spec;
  CaseReport rep;
  rep.spec = spec;
  rep.l = l;
  rep.closed_form = closed_form_G(spec, l);
  const Polynomial& G = rep.closed_form;

  auto add = [&](int id, CheckKind kind, Polynomial predicted) {
    CaseCheck c;
    c.case_id = id;
    c.kind = kind;
    c.actual = kind == CheckKind::Value ? G : top_term(G, kind == CheckKind::TopY ? Family::Y : Family::Z);
    c.predicted = std::move(predicted);
    c.match = c.actual == c.predicted;
    rep.checks.push_back(std::move(c));
  };

  const bool below_yz = l < 2 * q + r && l < q + 2 * r;
  if (l < 2 * p && below_yz) add(1, CheckKind::Value, Polynomial{});
  if (l == 2 * p && below_yz) add(2, CheckKind::Value, x(p) * x(p));
  if (p > q && q == r && l == 2 * p && l == 3 * q)
    add(3, CheckKind::Value, x(p) * x(p) + y(q) * y(q) * z(q) + y(q) * z(q) * z(q));
  if (p >= q && q > r && 2 * p == q + 2 * r && l >= 2 * p)
    add(4, CheckKind::TopY, y(l - 2 * r) * z(r) * z(r));
  if (p >= r && r > q && 2 * p == 2 * q + r && l >= 2 * p)
    add(5, CheckKind::TopZ, y(q) * y(q) * z(l - 2 * q));
  if (p > q && q == r && l > 3 * q) {
    add(6, CheckKind::TopY, y(l - 2 * q) * z(q) * z(q));
    add(7, CheckKind::TopZ, y(q) * y(q) * z(l - 2 * q));
  }
  return rep;
}

Bindings swap_yz(int m) {
  check_order(m);
  Bindings b;
  for (int i = 0; i <= m; ++i) {
    b[Y(i)] = z(i);
    b[Z(i)] = y(i);
  }
  return b;
}

Bindings shear_z(Surface s, int m) {
  check_order(m);
  Bindings b;
  for (int i = 0; i <= m; ++i) b[Z(i)] = s == Surface::D40 ? y(i) + z(i) : x(i) + y(i) + z(i);
  return b;
}

Bindings index_shift(int dx, int dy, int dz, int m) {
  check_order(m);
  Bindings b;
  for (int i = 0; i <= m; ++i) {
    check_index(i + std::max({dx, dy, dz}));
    b[X(i)] = x(i + dx);
    b[Y(i)] = y(i + dy);
    b[Z(i)] = z(i + dz);
  }
  return b;
}

}  // namespace jetfiber
