#include "jetfiber/ideal.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "basis_data.hpp"
#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace {

void check_generator(const Polynomial& p, int m) {
  for (const auto& v : p.variables()) {
    if (v.family == Family::AUX)
      throw PreconditionError("auxiliary variable " + to_string(v) + " in an ideal generator");
    if (v.index > m)
      throw PreconditionError("variable " + to_string(v) + " exceeds jet order " + std::to_string(m));
  }
}

// Canonical-slot mask of the 3(m+1) jet variables of R_m.
std::uint64_t ambient_mask(int m) {
  std::uint64_t mask = 0;
  for (int i = 0; i <= m; ++i)
    mask |= (std::uint64_t{1} << slot_of(X(i))) | (std::uint64_t{1} << slot_of(Y(i))) |
            (std::uint64_t{1} << slot_of(Z(i)));
  return mask;
}

const GroebnerBasis& basis_of(const Ideal& I, std::optional<Ideal>& holder, std::uint64_t budget) {
  if (I.basis() != nullptr) return *I.basis();
  holder = groebner(I, budget);
  return *holder->basis();
}

// Minimum number of variables meeting every set, by branch and bound.
class HittingSet {
public:
  explicit HittingSet(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    for (auto s : sets) {
      bool redundant = false;
      for (auto t : sets_)
        if ((t & ~s) == 0) {
          redundant = true;
          break;
        }
      if (!redundant) sets_.push_back(s);
    }
  }

  int solve() {
    std::uint64_t all = 0;
    for (auto s : sets_) all |= s;
    best_ = std::popcount(all);
    search(0, 0, 0);
    return best_;
  }

private:
  // Greedy count of pairwise disjoint sets missed by `chosen`: a lower bound on extra picks.
  int lower_bound(std::uint64_t chosen, std::uint64_t forbidden) const {
    std::uint64_t used = 0;
    int n = 0;
    for (auto s : sets_) {
      if (s & chosen) continue;
      const std::uint64_t avail = s & ~forbidden;
      if (avail & used) continue;
      used |= avail;
      ++n;
    }
    return n;
  }

  void search(std::uint64_t chosen, std::uint64_t forbidden, int count) {
    const std::uint64_t* pick = nullptr;
    int pick_size = 65;
    for (const auto& s : sets_) {
      if (s & chosen) continue;
      const int n = std::popcount(s & ~forbidden);
      if (n == 0) return;  // cannot be hit under the current branch
      if (n < pick_size) {
        pick_size = n;
        pick = &s;
      }
    }
    if (pick == nullptr) {
      best_ = std::min(best_, count);
      return;
    }
    if (count + lower_bound(chosen, forbidden) >= best_) return;
    std::uint64_t avail = *pick & ~forbidden;
    while (avail != 0) {
      const std::uint64_t bit = avail & (~avail + 1);
      search(chosen | bit, forbidden, count + 1);
      forbidden |= bit;
      avail &= avail - 1;
    }
  }

  std::vector<std::uint64_t> sets_;
  int best_ = 0;
};

}  // namespace

Ideal::Ideal(std::vector<Polynomial> gens, int m, MonomialOrder order)
    : gens_(std::move(gens)), m_(m), order_(std::move(order)) {
  if (m < 0 || m > kMaxJetIndex) throw PreconditionError("jet order " + std::to_string(m) + " out of range");
  for (const auto& g : gens_) check_generator(g, m);
}

Ideal::Ideal(std::vector<Polynomial> gens, int m, MonomialOrder order, GroebnerBasis gb)
    : Ideal(std::move(gens), m, std::move(order)) {
  gb_ = std::move(gb);
}

Ideal Ideal::with(std::vector<Polynomial> extra) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  return {std::move(g), m_, order_};
}

Ideal Ideal::mapped(const Bindings& bindings) const {
  std::vector<Polynomial> g;
  g.reserve(gens_.size());
  for (const auto& p : gens_) g.push_back(substitute(p, bindings));
  return {std::move(g), m_, order_};
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (a.m_ != b.m_) throw PreconditionError("adding ideals of different jet orders");
  std::vector<Polynomial> g = a.gens_;
  g.insert(g.end(), b.gens_.begin(), b.gens_.end());
  return {std::move(g), a.m_, a.order_};
}

Ideal build_L(TruncationSpec spec, int m) {
  const auto [p, q, r] = spec;
  if (p < 1 || q < 1 || r < 1 || p > m + 1 || q > m + 1 || r > m + 1)
    throw PreconditionError("truncation indices must lie in 1..m+1");
  std::vector<Polynomial> gens;
  for (int i = 0; i < p; ++i) gens.push_back(Polynomial::var(X(i)));
  for (int i = 0; i < q; ++i) gens.push_back(Polynomial::var(Y(i)));
  for (int i = 0; i < r; ++i) gens.push_back(Polynomial::var(Z(i)));
  return {std::move(gens), m};
}

Ideal build_J(Surface s, int i, int m) {
  if (m < 3) throw PreconditionError("J ideals need m >= 3");
  TruncationSpec spec;
  switch (i) {
    case 1:
      spec = {2, 2, 1};
      break;
    case 2:
      spec = {2, 1, 2};
      break;
    case 3:
      spec = {2, 1, 1};
      break;
    default:
      throw PreconditionError("J index must be 1, 2 or 3");
  }
  const Ideal L = build_L(spec, m);
  std::vector<Polynomial> gens(L.generators().begin(), L.generators().end());
  if (i == 3) gens.push_back(Polynomial::var(Y(1)) + Polynomial::var(Z(1)));
  for (auto& c : jet_coeffs(s, m).coeffs) gens.push_back(std::move(c));
  return {std::move(gens), m};
}

Ideal groebner(const Ideal& I, std::uint64_t budget) {
  if (I.basis() != nullptr) return I;
  auto gb = groebner_basis(I.generators(), I.order(), budget);
  return {std::vector<Polynomial>(I.generators().begin(), I.generators().end()), I.m(), I.order(), std::move(gb)};
}

Polynomial normal_form(const Polynomial& p, const Ideal& I, std::uint64_t budget) {
  std::optional<Ideal> holder;
  return basis_of(I, holder, budget).normal_form(p);
}

int dimension(const Ideal& I, std::uint64_t budget) {
  std::optional<Ideal> holder;
  const GroebnerBasis& gb = basis_of(I, holder, budget);
  if (gb.is_unit()) return -1;
  const std::uint64_t ambient = ambient_mask(I.m());
  std::vector<std::uint64_t> sets;
  for (const auto& lm : gb.leading_monomials()) sets.push_back(lm.support() & ambient);
  return std::popcount(ambient) - HittingSet(std::move(sets)).solve();
}

Ideal saturate(const Ideal& I, VarId v, std::uint64_t budget) {
  if (v.family == Family::AUX) throw PreconditionError("cannot saturate at an auxiliary variable");
  if (v.index > I.m()) throw PreconditionError("saturation variable exceeds the jet order");
  // Keep the caller's grevlex order for the result; block orders fall back to the default.
  const MonomialOrder inner = I.order().kind() == OrderKind::Grevlex ? I.order() : MonomialOrder{};
  std::vector<VarId> rest;
  for (const auto& u : inner.precedence())
    if (u != W(0)) rest.push_back(u);
  const MonomialOrder elim = MonomialOrder::block({W(0)}, rest);
  std::vector<Polynomial> input(I.generators().begin(), I.generators().end());
  input.push_back(Polynomial::var(W(0)) * Polynomial::var(v) + Polynomial::one());
  const auto full = groebner_basis(input, elim, budget);

  const std::uint64_t w_bit = std::uint64_t{1} << slot_of(W(0));
  std::vector<detail::Terms> kept;
  std::vector<Polynomial> gens;
  for (const auto& p : full.elements()) {
    if (p.support() & w_bit) continue;
    gens.push_back(p);
    kept.push_back(detail::to_engine(p, inner));
  }
  // The w-free part of a reduced block basis is the reduced basis of the elimination ideal
  // in the inner order.
  auto sat_gb = detail::BasisData::wrap(detail::make_basis(inner, std::move(kept), full.steps()));
  Ideal out(gens, I.m(), inner, std::move(sat_gb));
  if (I.order() == inner) return out;
  return groebner(Ideal(std::move(gens), I.m(), I.order()), budget);
}

bool radical_member(const Polynomial& h, const Ideal& I, std::uint64_t budget) {
  std::optional<Ideal> holder;
  const GroebnerBasis& gb = basis_of(I, holder, budget);
  if (gb.is_unit() || gb.reduces_to_zero(h)) return true;
  const Polynomial helper = Polynomial::var(W(0)) * gb.normal_form(h) + Polynomial::one();
  return groebner_basis(std::span(&helper, 1), gb.order(), budget, &gb).is_unit();
}

bool ideal_contains(const Ideal& I, const Ideal& J, std::uint64_t budget) {
  std::optional<Ideal> holder;
  const GroebnerBasis& gb = basis_of(I, holder, budget);
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& p) { return gb.reduces_to_zero(p); });
}

bool same_ideal(const Ideal& a, const Ideal& b, std::uint64_t budget) {
  return ideal_contains(a, b, budget) && ideal_contains(b, a, budget);
}

bool variety_subset(const Ideal& a, const Ideal& b, std::uint64_t budget) {
  std::optional<Ideal> holder;
  const Ideal& ga = a.basis() != nullptr ? a : holder.emplace(groebner(a, budget));
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& p) { return radical_member(p, ga, budget); });
}

bool same_variety(const Ideal& a, const Ideal& b, std::uint64_t budget) {
  if (same_ideal(a, b, budget)) return true;
  return variety_subset(a, b, budget) && variety_subset(b, a, budget);
}

namespace {

// Preference for the variable solved next: highest index, then y, z, x.
bool better_candidate(VarId a, VarId b) {
  if (a.index != b.index) return a.index > b.index;
  auto rank = [](Family f) { return f == Family::Y ? 0 : f == Family::Z ? 1 : 2; };
  return rank(a.family) < rank(b.family);
}

// If v occurs in `g` exactly once, as unit^e * v, returns e.
std::optional<int> solvable_power(const Polynomial& g, VarId v, VarId unit) {
  const int vs = slot_of(v);
  const int us = slot_of(unit);
  std::optional<int> power;
  for (const auto& t : g.terms()) {
    if (t.exponent(vs) == 0) continue;
    if (power || t.exponent(vs) != 1) return std::nullopt;
    const int e = t.exponent(us);
    if (t.degree() != e + 1) return std::nullopt;
    power = e;
  }
  return power;
}

// Largest power of `unit` dividing every term of p.
int unit_content(const Polynomial& p, VarId unit) {
  if (p.is_zero()) return 0;
  const int us = slot_of(unit);
  int c = kMaxExponent;
  for (const auto& t : p.terms()) c = std::min(c, t.exponent(us));
  return c;
}

Polynomial divide_unit_power(const Polynomial& p, VarId unit, int e) {
  if (e == 0) return p;
  const Monomial d = Monomial::var(slot_of(unit), e);
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(quotient(t, d));
  return Polynomial::from_terms(std::move(terms));
}

// Replaces v by h / unit^e in p and clears the denominator: sum_k c_k h^k unit^(e(d-k)).
Polynomial eliminate(const Polynomial& p, VarId v, const Polynomial& h, VarId unit, int e) {
  const int d = p.degree_in(v);
  if (d == 0) return p;
  const int vs = slot_of(v);
  std::vector<std::vector<Monomial>> coeff(static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) {
    Monomial rest = t;
    rest.set(vs, 0);
    coeff[static_cast<std::size_t>(t.exponent(vs))].push_back(rest);
  }
  const Polynomial u = Polynomial::var(unit);
  Polynomial out;
  Polynomial hk = Polynomial::one();
  for (int k = 0; k <= d; ++k) {
    if (!coeff[static_cast<std::size_t>(k)].empty())
      out += Polynomial::from_terms(coeff[static_cast<std::size_t>(k)]) * hk * u.pow(e * (d - k));
    hk = hk * h;
  }
  return divide_unit_power(out, unit, unit_content(out, unit));
}

}  // namespace

bool is_base_form(const Polynomial& p) {
  if (p.size() != 3 || p.degree() != 3) return false;
  std::optional<int> square;
  std::vector<Monomial> cubic;
  for (const auto& t : p.terms()) {
    if (t.degree() == 2) {
      if (square) return false;
      bool pure = false;
      t.for_each([&](int s, int e) {
        pure = e == 2;
        square = s;
      });
      if (!pure) return false;
    } else if (t.degree() == 3) {
      cubic.push_back(t);
    } else {
      return false;
    }
  }
  if (!square || cubic.size() != 2) return false;
  // The cubic terms must be b^2 c and b c^2 for distinct b, c, both different from a.
  std::vector<std::pair<int, int>> f0, f1;
  cubic[0].for_each([&](int s, int e) { f0.emplace_back(s, e); });
  cubic[1].for_each([&](int s, int e) { f1.emplace_back(s, e); });
  if (f0.size() != 2 || f1.size() != 2) return false;
  if (f0[0].first != f1[0].first || f0[1].first != f1[1].first) return false;
  if (f0[0].second + f1[0].second != 3 || f0[0].second == f1[0].second) return false;
  return f0[0].first != *square && f0[1].first != *square;
}

TriangularOutcome triangular_certify(const Ideal& I, VarId unit, bool allow_base) {
  TriangularOutcome out;
  TriangularCertificate cert;
  cert.unit = unit;
  std::vector<Polynomial> rest;
  for (const auto& g : I.generators())
    if (!g.is_zero()) rest.push_back(g);

  // Coordinate generators, repeated until no new single-variable generator appears.
  std::uint64_t coord_mask = 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Polynomial> next;
    for (const auto& g : rest) {
      const auto v = g.as_variable();
      if (v && *v != unit) {
        const std::uint64_t bit = std::uint64_t{1} << slot_of(*v);
        if (!(coord_mask & bit)) {
          coord_mask |= bit;
          cert.coordinates.push_back(*v);
          changed = true;
        }
        continue;
      }
      next.push_back(g);
    }
    rest.clear();
    for (const auto& g : next)
      if (Polynomial k = kill_variables(g, coord_mask); !k.is_zero()) rest.push_back(std::move(k));
  }

  auto fail = [&] {
    out.leftover = rest;
    return out;
  };
  if (std::any_of(rest.begin(), rest.end(), [&](const Polynomial& g) { return g.as_variable() == unit; }))
    return fail();

  std::vector<SolvedStep> steps;
  while (!rest.empty()) {
    for (auto& g : rest) g = divide_unit_power(g, unit, unit_content(g, unit));
    if (std::any_of(rest.begin(), rest.end(), [](const Polynomial& g) { return g.is_one(); })) return fail();

    std::optional<std::size_t> best_gen;
    VarId best_var{};
    int best_power = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (const auto& v : rest[i].variables()) {
        if (v == unit || (best_gen && !better_candidate(v, best_var))) continue;
        if (auto e = solvable_power(rest[i], v, unit)) {
          best_gen = i;
          best_var = v;
          best_power = *e;
        }
      }
    }
    if (!best_gen) break;

    const Polynomial g = rest[*best_gen];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*best_gen));
    const Polynomial h = g + Polynomial::var(best_var) * Polynomial::var(unit).pow(best_power);
    std::vector<Polynomial> next;
    for (const auto& p : rest)
      if (Polynomial q = eliminate(p, best_var, h, unit, best_power); !q.is_zero()) next.push_back(std::move(q));
    rest = std::move(next);
    steps.push_back(SolvedStep{best_var, best_power, g});
  }

  if (!rest.empty()) {
    if (!allow_base || rest.size() != 1 || !is_base_form(rest[0])) return fail();
    cert.base = rest[0];
  }
  // Reversed back-substitution order: each recorded generator then involves only earlier solved variables.
  std::reverse(steps.begin(), steps.end());
  cert.solved = std::move(steps);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace jetfiber
