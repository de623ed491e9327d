#ifndef JETFIBER_POLYNOMIAL_HPP
#define JETFIBER_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetfiber/monomial.hpp"
#include "jetfiber/var.hpp"

namespace jetfiber {

/// Sparse polynomial over GF(2). A term is present iff its coefficient is 1.
///
/// Terms are kept sorted in decreasing canonical grevlex order
/// (x_m > ... > x_0 > y_m > ... > y_0 > z_m > ... > z_0 > w), which makes the
/// representation canonical: equal polynomials have identical term vectors.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial(Monomial{}); }
  static Polynomial var(VarId v) { return Polynomial(Monomial::var(slot_of(v))); }

  explicit Polynomial(const Monomial& m) : terms_{m} {}

  /// Builds the sum of `terms`; repeated monomials cancel pairwise.
  static Polynomial from_terms(std::vector<Monomial> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Monomial> terms() const { return terms_; }
  int degree() const;

  /// True if the single term is a variable of exponent 1.
  std::optional<VarId> as_variable() const;

  bool contains(VarId v) const;
  /// Variables occurring in any term, in canonical order.
  std::vector<VarId> variables() const;
  /// Bitmask of canonical slots occurring in any term.
  std::uint64_t support() const;
  /// Largest exponent of `v` over all terms.
  int degree_in(VarId v) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);

  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text form, e.g. "y2*z1^2 + x2^2". Zero prints as "0".
  std::string to_string() const;

private:
  std::vector<Monomial> terms_;
};

/// Parses the textual grammar: a '+'/'-' separated sum of '*' separated factors, each factor
/// `x{i}`, `y{i}`, `z{i}` with optional `^e`, or an integer constant (taken mod 2).
/// When `max_index` is set, any jet index above it is rejected.
Polynomial parse_polynomial(std::string_view text, std::optional<int> max_index = std::nullopt);

using Bindings = std::map<VarId, Polynomial>;

/// Ring homomorphism sending each bound variable to its image; unbound variables are fixed.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

/// Drops every term containing one of `vars` (the image under v -> 0).
Polynomial kill_variables(const Polynomial& p, std::uint64_t slot_mask);

/// Sum of the terms that contain the variable of `family` with the largest index in `p`.
/// Zero when no variable of that family occurs.
Polynomial top_term(const Polynomial& p, Family family);

}  // namespace jetfiber

#endif  // JETFIBER_POLYNOMIAL_HPP
