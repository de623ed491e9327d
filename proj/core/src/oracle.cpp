#include "jetfiber/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>

#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace {

// An element of GF(2^k) for 64 points at once: bit j of slice c is coefficient c at lane j.
using Slices = std::array<std::uint64_t, kMaxEnumerationDegree>;

class SlicedField {
public:
  explicit SlicedField(int k) : k_(k), mod_(field_modulus(k)) {}

  Slices mul(const Slices& a, const Slices& b) const {
    std::array<std::uint64_t, 2 * kMaxEnumerationDegree> c{};
    for (int i = 0; i < k_; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < k_; ++j) c[static_cast<std::size_t>(i + j)] ^= a[static_cast<std::size_t>(i)] & b[static_cast<std::size_t>(j)];
    }
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      const std::uint64_t top = c[static_cast<std::size_t>(d)];
      if (top == 0) continue;
      for (int bit = 0; bit < k_; ++bit)
        if ((mod_ >> bit) & 1u) c[static_cast<std::size_t>(d - k_ + bit)] ^= top;
    }
    Slices out{};
    std::copy_n(c.begin(), k_, out.begin());
    return out;
  }

private:
  int k_;
  std::uint32_t mod_;
};

// Lane pattern of index bit t within a batch of 64 consecutive indices.
constexpr std::array<std::uint64_t, 6> kLanePattern = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                                       0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                                       0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

class Enumerator {
public:
  Enumerator(const Ideal& I, int k, std::vector<VarId> ambient) : k_(k), field_(k), ambient_(std::move(ambient)) {
    if (k < 1 || k > kMaxEnumerationDegree) throw PreconditionError("enumeration supports GF(2^k) with k <= 8");
    if (ambient_.size() * static_cast<std::size_t>(k) > 64)
      throw PreconditionError("ambient space too large for packed points");
    std::map<VarId, int> position;
    for (std::size_t i = 0; i < ambient_.size(); ++i) position[ambient_[i]] = static_cast<int>(i);

    std::vector<bool> pinned(ambient_.size(), false);
    for (const auto& g : I.generators()) {
      for (const auto& v : g.variables())
        if (!position.contains(v)) throw PreconditionError("generator uses " + to_string(v) + " outside the ambient space");
      if (const auto v = g.as_variable()) {
        pinned[static_cast<std::size_t>(position[*v])] = true;
        continue;
      }
      if (g.is_one()) empty_ = true;
      if (!g.is_zero()) gens_.push_back(g);
    }
    for (std::size_t i = 0; i < ambient_.size(); ++i)
      if (!pinned[i]) free_.push_back(static_cast<int>(i));
    bits_ = static_cast<int>(free_.size()) * k;
    if (bits_ > kEnumerationBits)
      throw BudgetExceeded("point enumeration needs 2^" + std::to_string(bits_) + " points, budget is 2^" +
                           std::to_string(kEnumerationBits));
    for (std::size_t f = 0; f < free_.size(); ++f)
      slot_to_free_[static_cast<std::size_t>(slot_of(ambient_[static_cast<std::size_t>(free_[f])]))] = static_cast<int>(f);
    for (const auto& g : gens_) compiled_.push_back(compile(g));
    // Sparse generators first: they are cheap and usually kill most lanes.
    std::stable_sort(compiled_.begin(), compiled_.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }

  PointSet run() {
    PointSet out{k_, ambient_, {}};
    if (empty_) return out;
    const std::uint64_t total = std::uint64_t{1} << bits_;
    const std::uint64_t lanes = bits_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
    std::vector<Slices> values(free_.size());
    for (std::uint64_t base = 0; base < total; base += 64) {
      for (std::size_t i = 0; i < free_.size(); ++i)
        for (int c = 0; c < k_; ++c) values[i][static_cast<std::size_t>(c)] = index_bit(base, static_cast<int>(i) * k_ + c);
      std::uint64_t alive = lanes;
      for (const auto& g : compiled_) {
        alive &= ~nonzero(eval(g, values));
        if (alive == 0) break;
      }
      for (std::uint64_t a = alive; a != 0; a &= a - 1) out.keys.push_back(pack(base + static_cast<std::uint64_t>(std::countr_zero(a))));
    }
    std::sort(out.keys.begin(), out.keys.end());
    return out;
  }

private:
  static std::uint64_t index_bit(std::uint64_t base, int t) {
    if (t < 6) return kLanePattern[static_cast<std::size_t>(t)];
    return ((base >> t) & 1u) ? ~std::uint64_t{0} : 0;
  }

  std::uint64_t nonzero(const Slices& s) const {
    std::uint64_t any = 0;
    for (int c = 0; c < k_; ++c) any |= s[static_cast<std::size_t>(c)];
    return any;
  }

  struct Factor {
    int free;
    int exponent;
  };
  // Terms with a pinned variable vanish and are dropped.
  using Compiled = std::vector<std::vector<Factor>>;

  Compiled compile(const Polynomial& g) const {
    Compiled out;
    for (const auto& t : g.terms()) {
      std::vector<Factor> factors;
      bool zero = false;
      t.for_each([&](int slot, int e) {
        const int f = slot_to_free_[static_cast<std::size_t>(slot)];
        if (f < 0) zero = true;
        factors.push_back({f, e});
      });
      if (!zero) out.push_back(std::move(factors));
    }
    return out;
  }

  Slices eval(const Compiled& g, const std::vector<Slices>& values) const {
    Slices acc{};
    if (k_ == 1) {
      for (const auto& t : g) {
        std::uint64_t term = ~std::uint64_t{0};
        for (const auto& [f, e] : t) term &= values[static_cast<std::size_t>(f)][0];
        acc[0] ^= term;
      }
      return acc;
    }
    for (const auto& t : g) {
      Slices term{};
      term[0] = ~std::uint64_t{0};
      for (const auto& [f, e] : t)
        for (int i = 0; i < e; ++i) term = field_.mul(term, values[static_cast<std::size_t>(f)]);
      for (int c = 0; c < k_; ++c) acc[static_cast<std::size_t>(c)] ^= term[static_cast<std::size_t>(c)];
    }
    return acc;
  }

  std::uint64_t pack(std::uint64_t index) const {
    const std::uint64_t mask = (std::uint64_t{1} << k_) - 1;
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < free_.size(); ++i) {
      const std::uint64_t v = (index >> (static_cast<int>(i) * k_)) & mask;
      key |= v << (free_[i] * k_);
    }
    return key;
  }

  int k_;
  SlicedField field_;
  std::vector<VarId> ambient_;
  std::vector<Polynomial> gens_;
  std::vector<Compiled> compiled_;
  std::vector<int> free_;
  std::array<int, kNumSlots> slot_to_free_ = filled(-1);
  int bits_ = 0;
  bool empty_ = false;

  static std::array<int, kNumSlots> filled(int v) {
    std::array<int, kNumSlots> a{};
    a.fill(v);
    return a;
  }
};

// Dense polynomial over GF(2^k) in n variables, keyed by exponent vectors.
using Dense = std::map<std::vector<int>, FieldElem>;

void add_term(Dense& p, const std::vector<int>& e, FieldElem c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  return out;
}

// p with variable `v` replaced by the linear form `lin`.
Dense substitute_linear(const Dense& p, std::size_t v, const Dense& lin) {
  Dense out;
  for (const auto& [e, c] : p) {
    std::vector<int> rest = e;
    rest[v] = 0;
    Dense term{{rest, c}};
    for (int i = 0; i < e[v]; ++i) term = mul(term, lin);
    for (const auto& [te, tc] : term) add_term(out, te, tc);
  }
  return out;
}

}  // namespace

bool PointSet::contains(std::uint64_t key) const { return std::binary_search(keys.begin(), keys.end(), key); }

PointSet set_union(const PointSet& a, const PointSet& b) {
  if (a.k != b.k || a.ambient != b.ambient) throw PreconditionError("union of point sets over different spaces");
  PointSet out{a.k, a.ambient, {}};
  std::set_union(a.keys.begin(), a.keys.end(), b.keys.begin(), b.keys.end(), std::back_inserter(out.keys));
  return out;
}

std::vector<VarId> jet_ambient(int m) {
  std::vector<VarId> out;
  for (auto f : {Family::X, Family::Y, Family::Z})
    for (int i = 0; i <= m; ++i) out.push_back(VarId{f, static_cast<std::uint8_t>(i)});
  return out;
}

PointSet point_set(const Ideal& I, int k, std::optional<std::vector<VarId>> ambient) {
  return Enumerator(I, k, ambient ? std::move(*ambient) : jet_ambient(I.m())).run();
}

Jet decode_point(const PointSet& points, std::uint64_t key, int m) {
  Jet jet(m, points.k);
  const std::uint64_t mask = (std::uint64_t{1} << points.k) - 1;
  for (std::size_t i = 0; i < points.ambient.size(); ++i) {
    const auto v = static_cast<std::uint32_t>((key >> (static_cast<int>(i) * points.k)) & mask);
    if (v != 0) jet.set(points.ambient[i], ParamPoly(FieldElem(points.k, v)));
  }
  return jet;
}

PointCountReport point_count(const Ideal& I, int k, std::size_t max_samples) {
  const PointSet points = point_set(I, k);
  PointCountReport r;
  r.description = std::to_string(I.generators().size()) + " generators in R_" + std::to_string(I.m());
  r.k = k;
  r.m = I.m();
  r.count = points.size();
  for (std::size_t i = 0; i < points.keys.size() && i < max_samples; ++i)
    r.samples.push_back(decode_point(points, points.keys[i], I.m()));
  return r;
}

DimensionProbe dimension_probe(const Ideal& I, std::optional<std::vector<VarId>> ambient) {
  DimensionProbe d;
  d.count_k1 = point_set(I, 1, ambient).size();
  d.count_k2 = point_set(I, 2, ambient).size();
  if (d.count_k1 > 0 && d.count_k2 > 0)
    d.slope = std::log2(static_cast<double>(d.count_k2)) - std::log2(static_cast<double>(d.count_k1));
  else if (d.count_k2 > 0)
    d.slope = std::log2(static_cast<double>(d.count_k2)) / 2;
  else
    return d;
  d.estimate = static_cast<int>(std::lround(d.slope));
  return d;
}

bool irreducible_over(const Polynomial& p, int k) {
  if (p.is_zero()) throw PreconditionError("zero polynomial");
  if (p.degree() > 3) throw PreconditionError("irreducibility search supports total degree <= 3");
  if (p.degree() == 0) return false;  // units are not irreducible
  if (p.degree() == 1) return true;
  const auto vars = p.variables();
  const std::size_t n = vars.size();
  Dense dp;
  for (const auto& t : p.terms()) {
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.exponent(slot_of(vars[i]));
    add_term(dp, e, FieldElem::one(k));
  }
  // Monic linear forms v_lead + sum_{j > lead} c_j v_j + c_0; p has that factor iff it
  // vanishes after v_lead := the rest (characteristic 2).
  const auto elems = field_elements(k);
  const std::uint64_t q = elems.size();
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i <= tail; ++i) combos *= q;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Dense lin;
      std::uint64_t c = code;
      add_term(lin, std::vector<int>(n, 0), elems[c % q]);
      c /= q;
      for (std::size_t j = lead + 1; j < n; ++j, c /= q) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        add_term(lin, e, elems[c % q]);
      }
      if (substitute_linear(dp, lead, lin).empty()) return false;
    }
  }
  return true;
}

bool irreducible_check_d40_form() {
  const Polynomial f = base_equation(Surface::D40);
  return irreducible_over(f, 1) && irreducible_over(f, 2);
}

}  // namespace jetfiber
