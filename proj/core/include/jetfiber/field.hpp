#ifndef JETFIBER_FIELD_HPP
#define JETFIBER_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jetfiber/errors.hpp"

namespace jetfiber {

/// Largest supported extension degree k of GF(2^k).
inline constexpr int kMaxFieldDegree = 16;

/// Reduction polynomial used for GF(2^k), bit i = coefficient of X^i.
std::uint32_t field_modulus(int k);

/// Element of GF(2^k) in the polynomial basis 1, X, ..., X^(k-1) modulo `field_modulus(k)`.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(int k, std::uint32_t value) : value_(value), k_(static_cast<std::uint8_t>(k)) {
    if (k < 1 || k > kMaxFieldDegree) throw PreconditionError("field degree out of range");
    if (value >> k != 0) throw PreconditionError("field element out of range");
  }

  static FieldElem zero(int k) { return {k, 0}; }
  static FieldElem one(int k) { return {k, 1}; }
  /// The class of X, a generator of GF(2^k)^* for the moduli used here.
  static FieldElem generator(int k) { return {k, k == 1 ? 1u : 2u}; }

  int degree() const { return k_; }
  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    check_same(a, b);
    return {a.k_, a.value_ ^ b.value_};
  }
  friend FieldElem operator*(FieldElem a, FieldElem b);
  FieldElem& operator+=(FieldElem b) { return *this = *this + b; }
  FieldElem& operator*=(FieldElem b) { return *this = *this * b; }

  FieldElem pow(std::uint64_t e) const;
  FieldElem inverse() const;
  FieldElem frobenius() const { return *this * *this; }

  friend bool operator==(FieldElem a, FieldElem b) = default;

  std::string to_string() const;

private:
  static void check_same(FieldElem a, FieldElem b) {
    if (a.k_ != b.k_) throw PreconditionError("mixing elements of different fields");
  }

  std::uint32_t value_ = 0;
  std::uint8_t k_ = 1;
};

/// All 2^k elements of GF(2^k) in value order.
std::vector<FieldElem> field_elements(int k);

}  // namespace jetfiber

#endif  // JETFIBER_FIELD_HPP
