#include "jetfiber/field.hpp"

#include <array>

namespace jetfiber {

std::uint32_t field_modulus(int k) {
  // Primitive trinomials/pentanomials; X generates the multiplicative group for each.
  static constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kModuli = {
      0,        0x3,      0x7,      0xB,      0x13,     0x25,     0x43,     0x83,   0x11D,
      0x211,    0x409,    0x805,    0x1053,   0x201B,   0x4443,   0x8003,   0x1002D};
  if (k < 1 || k > kMaxFieldDegree) throw PreconditionError("field degree out of range");
  return kModuli[static_cast<std::size_t>(k)];
}

FieldElem operator*(FieldElem a, FieldElem b) {
  FieldElem::check_same(a, b);
  const int k = a.k_;
  const std::uint32_t mod = field_modulus(k);
  std::uint32_t x = a.value_, y = b.value_, r = 0;
  while (y != 0) {
    if (y & 1u) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x >> k) x ^= mod;
  }
  return {k, r};
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = one(k_);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  // a^(2^k - 2) = a^-1 in GF(2^k).
  return pow((std::uint64_t{1} << k_) - 2);
}

std::string FieldElem::to_string() const {
  if (k_ == 1) return std::to_string(value_);
  std::string s = "0x";
  static constexpr char kHex[] = "0123456789abcdef";
  const int digits = (k_ + 3) / 4;
  for (int i = digits - 1; i >= 0; --i) s += kHex[(value_ >> (4 * i)) & 0xF];
  return s;
}

std::vector<FieldElem> field_elements(int k) {
  std::vector<FieldElem> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t v = 0; v < (1u << k); ++v) out.emplace_back(k, v);
  return out;
}

}  // namespace jetfiber
