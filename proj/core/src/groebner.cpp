#include <algorithm>
#include <string>

#include "basis_data.hpp"
#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace detail {

const BasisData& BasisData::of(const GroebnerBasis& gb) { return *gb.data_; }

Terms to_engine(const Polynomial& p, const MonomialOrder& order) {
  Terms t;
  t.reserve(p.size());
  for (const auto& m : p.terms()) t.push_back(order.to_engine(m));
  std::sort(t.begin(), t.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return t;
}

Polynomial to_canonical(const Terms& t, const MonomialOrder& order) {
  std::vector<Monomial> out;
  out.reserve(t.size());
  for (const auto& m : t) out.push_back(order.to_canonical(m));
  return Polynomial::from_terms(std::move(out));
}

BasisData make_basis(const MonomialOrder& order, std::vector<Terms> polys, std::uint64_t steps) {
  std::sort(polys.begin(), polys.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front(), b.front()) > 0; });
  BasisData d{order, {}, {}, {}, {}, steps};
  for (auto& p : polys) {
    d.divmasks.push_back(p.front().support());
    d.canonical.push_back(to_canonical(p, order));
    d.canonical_lms.push_back(order.to_canonical(p.front()));
    d.polys.push_back(std::move(p));
  }
  return d;
}

namespace {

class Engine {
public:
  Engine(const MonomialOrder& order, std::uint64_t budget) : order_(order), budget_(budget) {}

  void seed(const BasisData& seed) {
    const bool same = seed.order == order_;
    for (std::size_t i = 0; i < seed.polys.size(); ++i) {
      Terms t = same ? seed.polys[i] : to_engine(seed.canonical[i], order_);
      if (!same && order_.to_canonical(t.front()) != seed.canonical_lms[i])
        throw PreconditionError("seed basis has different leading terms in the target order");
      add_entry(std::move(t), 0);
    }
  }

  void add_input(Terms t) {
    if (t.empty()) return;
    const int sugar = t.front().degree();
    int max_deg = 0;
    for (const auto& m : t) max_deg = std::max(max_deg, m.degree());
    inputs_.push_back(std::move(t));
    pairs_.push_back(Pair{-1, static_cast<int>(inputs_.size()) - 1, Monomial{}, std::max(sugar, max_deg)});
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      const std::size_t k = select();
      const Pair pair = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();

      Terms s;
      int sugar = pair.sugar;
      if (pair.i < 0) {
        s = std::move(inputs_[static_cast<std::size_t>(pair.j)]);
      } else {
        const Entry& a = entries_[static_cast<std::size_t>(pair.i)];
        const Entry& b = entries_[static_cast<std::size_t>(pair.j)];
        s = spoly(a, b, pair.lcm);
      }
      Terms h = reduce(std::move(s), sugar);
      if (h.empty()) continue;
      if (h.front().is_one()) {
        unit_ = true;
        break;
      }
      update(std::move(h), sugar);
    }
  }

  BasisData finish() {
    if (unit_) return make_basis(order_, {Terms{Monomial{}}}, steps_);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].active) active.push_back(i);
    std::vector<Terms> out;
    out.reserve(active.size());
    for (auto i : active) {
      const Terms& g = entries_[i].poly;
      Terms tail(g.begin() + 1, g.end());
      int sugar = 0;
      Terms r = reduce(std::move(tail), sugar);
      Terms full;
      full.reserve(r.size() + 1);
      full.push_back(g.front());
      full.insert(full.end(), r.begin(), r.end());
      out.push_back(std::move(full));
    }
    return make_basis(order_, std::move(out), steps_);
  }

private:
  struct Entry {
    Terms poly;
    Monomial lm;
    std::uint64_t divmask = 0;
    int sugar = 0;
    bool active = true;
  };
  struct Pair {
    int i;  // -1 marks an input polynomial, j then indexes inputs_
    int j;
    Monomial lcm;
    int sugar;
  };

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (a.i < 0 || b.i < 0) {
        if (a.i < 0 && (b.i >= 0 || a.j < b.j)) best = k;
        continue;
      }
      if (order_.compare(a.lcm, b.lcm) < 0) best = k;
    }
    return best;
  }

  Terms spoly(const Entry& a, const Entry& b, const Monomial& l) {
    Terms s = shifted_tail(a.poly, quotient(l, a.lm));
    return add_multiple(s, 0, b.poly, quotient(l, b.lm), 1);
  }

  static Terms shifted_tail(const Terms& g, const Monomial& t) {
    Terms out;
    out.reserve(g.size() - 1);
    for (std::size_t i = 1; i < g.size(); ++i) out.push_back(g[i] * t);
    return out;
  }

  // p[from..] + t * g[skip..], merged in decreasing order.
  Terms add_multiple(const Terms& p, std::size_t from, const Terms& g, const Monomial& t, std::size_t skip) const {
    Terms out;
    out.reserve(p.size() - from + g.size() - skip);
    std::size_t i = from, j = skip;
    while (i < p.size() && j < g.size()) {
      const Monomial m = g[j] * t;
      const int c = order_.compare(p[i], m);
      if (c > 0) {
        out.push_back(p[i++]);
      } else if (c < 0) {
        out.push_back(m);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
    for (; j < g.size(); ++j) out.push_back(g[j] * t);
    return out;
  }

  int find_reducer(const Monomial& t) const {
    const std::uint64_t mask = t.support();
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      const Entry& e = entries_[k];
      if (!e.active || (e.divmask & ~mask) != 0) continue;
      if (divides(e.lm, t)) return static_cast<int>(k);
    }
    return -1;
  }

  void charge() {
    if (++steps_ > budget_)
      throw BudgetExceeded("Groebner computation exceeded its budget of " + std::to_string(budget_) +
                           " reduction steps");
  }

  // Full reduction against the active entries.
  Terms reduce(Terms p, int& sugar) {
    Terms done;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const int k = find_reducer(p[pos]);
      if (k < 0) {
        done.push_back(p[pos++]);
        continue;
      }
      charge();
      const Entry& e = entries_[static_cast<std::size_t>(k)];
      const Monomial t = quotient(p[pos], e.lm);
      sugar = std::max(sugar, e.sugar + t.degree());
      p = add_multiple(p, pos + 1, e.poly, t, 1);
      pos = 0;
    }
    return done;
  }

  void add_entry(Terms h, int sugar) {
    Entry e;
    e.lm = h.front();
    e.divmask = e.lm.support();
    e.sugar = std::max(sugar, e.lm.degree());
    e.poly = std::move(h);
    entries_.push_back(std::move(e));
  }

  // Gebauer-Moeller update for a new element h.
  void update(Terms h, int sugar) {
    const Monomial lh = h.front();
    const int hi = static_cast<int>(entries_.size());
    add_entry(std::move(h), sugar);
    const Entry& eh = entries_.back();

    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < hi; ++g) {
      const Entry& e = entries_[static_cast<std::size_t>(g)];
      if (!e.active) continue;
      cands.push_back(Cand{g, lcm(e.lm, lh), coprime(e.lm, lh)});
    }
    // Chain criterion among the new pairs: drop (h, g1) when some other (h, g2) has a
    // strictly dividing lcm, or an equal lcm and an earlier position.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (!divides(cands[b].lcm, cands[a].lcm)) continue;
        if (cands[b].lcm == cands[a].lcm && !cands[b].coprime && b > a) continue;
        cands[a].keep = false;
        break;
      }
    }
    // Old pairs whose lcm is divisible by lm(h) without sharing either new lcm are redundant.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.i < 0 || !divides(lh, p.lcm)) return false;
      const Monomial li = lcm(entries_[static_cast<std::size_t>(p.i)].lm, lh);
      const Monomial lj = lcm(entries_[static_cast<std::size_t>(p.j)].lm, lh);
      return li != p.lcm && lj != p.lcm;
    });
    // Product criterion.
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      const Entry& eg = entries_[static_cast<std::size_t>(c.g)];
      const int s = std::max(eg.sugar + c.lcm.degree() - eg.lm.degree(), eh.sugar + c.lcm.degree() - lh.degree());
      pairs_.push_back(Pair{c.g, hi, c.lcm, s});
    }
    for (int g = 0; g < hi; ++g) {
      Entry& e = entries_[static_cast<std::size_t>(g)];
      if (e.active && divides(lh, e.lm)) e.active = false;
    }
  }

  MonomialOrder order_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool unit_ = false;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
  std::vector<Terms> inputs_;
};

}  // namespace
}  // namespace detail

const MonomialOrder& GroebnerBasis::order() const { return data_->order; }
std::span<const Polynomial> GroebnerBasis::elements() const { return data_->canonical; }
std::span<const Monomial> GroebnerBasis::leading_monomials() const { return data_->canonical_lms; }
bool GroebnerBasis::is_unit() const { return data_->polys.size() == 1 && data_->polys[0].front().is_one(); }
std::uint64_t GroebnerBasis::steps() const { return data_->steps; }

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.is_zero()) return p;
  if (is_unit()) return Polynomial{};
  const auto& d = *data_;
  detail::Terms cur = detail::to_engine(p, d.order);
  detail::Terms done;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Monomial& t = cur[pos];
    const std::uint64_t mask = t.support();
    std::size_t k = 0;
    for (; k < d.polys.size(); ++k)
      if ((d.divmasks[k] & ~mask) == 0 && divides(d.polys[k].front(), t)) break;
    if (k == d.polys.size()) {
      done.push_back(cur[pos++]);
      continue;
    }
    const detail::Terms& g = d.polys[k];
    const Monomial q = quotient(t, g.front());
    detail::Terms next;
    next.reserve(cur.size() - pos + g.size());
    std::size_t i = pos + 1, j = 1;
    while (i < cur.size() && j < g.size()) {
      const Monomial m = g[j] * q;
      const int c = d.order.compare(cur[i], m);
      if (c > 0) {
        next.push_back(cur[i++]);
      } else if (c < 0) {
        next.push_back(m);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end());
    for (; j < g.size(); ++j) next.push_back(g[j] * q);
    cur = std::move(next);
    pos = 0;
  }
  return detail::to_canonical(done, d.order);
}

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order, std::uint64_t budget,
                             const GroebnerBasis* seed) {
  detail::Engine engine(order, budget);
  if (seed != nullptr) engine.seed(detail::BasisData::of(*seed));
  for (const auto& g : gens) engine.add_input(detail::to_engine(g, order));
  engine.run();
  return detail::BasisData::wrap(engine.finish());
}

}  // namespace jetfiber
