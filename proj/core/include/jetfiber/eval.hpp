#ifndef JETFIBER_EVAL_HPP
#define JETFIBER_EVAL_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetfiber/errors.hpp"
#include "jetfiber/field.hpp"
#include "jetfiber/polynomial.hpp"

namespace jetfiber {

/// Polynomial in one symbolic parameter s over GF(2^k); coefficient i multiplies s^i.
class ParamPoly {
public:
  explicit ParamPoly(int k = 1) : k_(k) {}
  ParamPoly(FieldElem c) : k_(c.degree()) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  /// c0 + c1 * s.
  static ParamPoly affine(FieldElem c0, FieldElem c1) {
    ParamPoly p(c0.degree());
    p.coeffs_ = {c0, c1};
    p.trim();
    return p;
  }

  int field_degree() const { return k_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  FieldElem coeff(int i) const {
    return i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : FieldElem::zero(k_);
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r(a.k_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.assign(n, FieldElem::zero(a.k_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
  }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r(a.k_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem::zero(a.k_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[i].to_string();
      if (i > 0) s += i == 1 ? "*s" : "*s^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  int k_;
  std::vector<FieldElem> coeffs_;
};

/// Evaluates `p` in any commutative ring `R` of characteristic 2. `lookup(VarId)` returns the
/// value of a variable (or nullopt when unbound, which raises PreconditionError).
template <typename R, typename Lookup>
R evaluate_with(const Polynomial& p, Lookup&& lookup, const R& zero, const R& one) {
  std::array<std::optional<R>, kNumSlots> cache;
  R acc = zero;
  for (const auto& t : p.terms()) {
    R term = one;
    t.for_each([&](int slot, int e) {
      auto& v = cache[static_cast<std::size_t>(slot)];
      if (!v) {
        v = lookup(var_of_slot(slot));
        if (!v) throw PreconditionError("no value bound for " + to_string(var_of_slot(slot)));
      }
      for (int i = 0; i < e; ++i) term = term * *v;
    });
    acc = acc + term;
  }
  return acc;
}

/// Exact evaluation over GF(2^k). Every variable of `p` must be bound.
inline FieldElem evaluate(const Polynomial& p, const std::map<VarId, FieldElem>& point, int k) {
  return evaluate_with<FieldElem>(
      p,
      [&](VarId v) -> std::optional<FieldElem> {
        auto it = point.find(v);
        if (it == point.end()) return std::nullopt;
        return it->second;
      },
      FieldElem::zero(k), FieldElem::one(k));
}

}  // namespace jetfiber

#endif  // JETFIBER_EVAL_HPP
