#include "jetfiber/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace {

bool canonical_greater(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; }

// Symmetric difference of two descending term lists.
std::vector<Monomial> xor_merge(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grevlex_cmp(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), canonical_greater);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) p.terms_.push_back(terms[i]);
    i = j;
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

std::optional<VarId> Polynomial::as_variable() const {
  if (terms_.size() != 1 || terms_[0].degree() != 1) return std::nullopt;
  std::optional<VarId> v;
  terms_[0].for_each([&](int slot, int) { v = var_of_slot(slot); });
  return v;
}

bool Polynomial::contains(VarId v) const {
  const int s = slot_of(v);
  return std::any_of(terms_.begin(), terms_.end(), [s](const Monomial& m) { return m.exponent(s) > 0; });
}

std::uint64_t Polynomial::support() const {
  std::uint64_t mask = 0;
  for (const auto& t : terms_) mask |= t.support();
  return mask;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  const std::uint64_t mask = support();
  for (int s = 0; s < kNumSlots; ++s)
    if ((mask >> s) & 1u) out.push_back(var_of_slot(s));
  return out;
}

int Polynomial::degree_in(VarId v) const {
  const int s = slot_of(v);
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent(s));
  return d;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.terms_ = xor_merge(a.terms_, b.terms_);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  terms_ = xor_merge(terms_, b.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  Polynomial r;
  r.terms_.reserve(a.terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : a.terms_) r.terms_.push_back(t * m);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b * a.terms_[0];
  if (b.size() == 1) return a * b.terms_[0];
  std::vector<Monomial> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back(s * t);
  return Polynomial::from_terms(std::move(prods));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw PreconditionError("negative power");
  Polynomial result = one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    const Monomial& m = terms_[i];
    if (m.is_one()) {
      out += "1";
      continue;
    }
    bool first = true;
    m.for_each([&](int slot, int e) {
      if (!first) out += "*";
      first = false;
      out += jetfiber::to_string(var_of_slot(slot));
      if (e > 1) out += "^" + std::to_string(e);
    });
  }
  return out;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, std::optional<int> max_index) : text_(text), max_index_(max_index) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    std::vector<Monomial> terms;
    parse_term(terms);
    skip_ws();
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      parse_term(terms);
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  void parse_term(std::vector<Monomial>& terms) {
    Monomial m;
    bool coefficient = true;
    parse_factor(m, coefficient);
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      parse_factor(m, coefficient);
      skip_ws();
    }
    if (coefficient) terms.push_back(m);
  }

  void parse_factor(Monomial& m, bool& coefficient) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected factor", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = parse_int();
      if (v % 2 == 0) coefficient = false;
      return;
    }
    Family fam;
    switch (c) {
      case 'x': fam = Family::X; break;
      case 'y': fam = Family::Y; break;
      case 'z': fam = Family::Z; break;
      default: throw ParseError(std::string("unexpected '") + c + "'", start);
    }
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected variable index", pos_);
    const long idx = parse_int();
    if (idx > kMaxJetIndex) throw ParseError("jet index exceeds supported maximum", start);
    if (max_index_ && idx > *max_index_)
      throw ParseError("jet index " + std::to_string(idx) + " exceeds order bound " + std::to_string(*max_index_), start);
    long e = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      e = parse_int();
    }
    const int slot = slot_of({fam, static_cast<std::uint8_t>(idx)});
    const long total = m.exponent(slot) + e;
    if (total > kMaxExponent) throw ParseError("exponent exceeds 64", start);
    m.set(slot, static_cast<int>(total));
  }

  std::string_view text_;
  std::optional<int> max_index_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<int> max_index) {
  return Parser(text, max_index).parse();
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  // Pre-index images by slot; powers are cached lazily per (slot, exponent).
  std::array<const Polynomial*, kNumSlots> image{};
  for (const auto& [v, q] : bindings) image[slot_of(v)] = &q;
  std::map<std::pair<int, int>, Polynomial> powers;
  auto power = [&](int slot, int e) -> const Polynomial& {
    auto [it, fresh] = powers.try_emplace({slot, e});
    if (fresh) it->second = image[slot]->pow(e);
    return it->second;
  };

  std::vector<Monomial> collected;
  for (const auto& t : p.terms()) {
    Monomial fixed;
    std::vector<std::pair<int, int>> bound;
    t.for_each([&](int slot, int e) {
      if (image[slot] != nullptr)
        bound.emplace_back(slot, e);
      else
        fixed.set(slot, e);
    });
    if (bound.empty()) {
      collected.push_back(fixed);
      continue;
    }
    Polynomial term(fixed);
    for (const auto& [slot, e] : bound) {
      term = term * power(slot, e);
      if (term.is_zero()) break;
    }
    for (const auto& m : term.terms()) collected.push_back(m);
  }
  return Polynomial::from_terms(std::move(collected));
}

Polynomial kill_variables(const Polynomial& p, std::uint64_t slot_mask) {
  std::vector<Monomial> kept;
  for (const auto& t : p.terms())
    if ((t.support() & slot_mask) == 0) kept.push_back(t);
  // Already sorted and duplicate-free.
  return Polynomial::from_terms(std::move(kept));
}

Polynomial top_term(const Polynomial& p, Family family) {
  int best = -1;
  for (const auto& v : p.variables())
    if (v.family == family) best = std::max(best, static_cast<int>(v.index));
  if (best < 0) return {};
  const int s = slot_of({family, static_cast<std::uint8_t>(best)});
  std::vector<Monomial> kept;
  for (const auto& t : p.terms())
    if (t.exponent(s) > 0) kept.push_back(t);
  return Polynomial::from_terms(std::move(kept));
}

}  // namespace jetfiber
