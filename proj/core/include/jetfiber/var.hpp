#ifndef JETFIBER_VAR_HPP
#define JETFIBER_VAR_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace jetfiber {

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2, AUX = 3 };

/// Largest jet index representable in a monomial. Jet orders m above this are rejected.
inline constexpr int kMaxJetIndex = 19;
/// Number of auxiliary variables (saturation / Rabinowitsch helpers).
inline constexpr int kNumAux = 4;
/// Total number of exponent slots in a monomial.
inline constexpr int kNumSlots = 3 * (kMaxJetIndex + 1) + kNumAux;
static_assert(kNumSlots == 64, "monomial layout assumes 64 byte-sized slots");

/// A jet variable x_i, y_i, z_i or an auxiliary variable w_i.
struct VarId {
  Family family = Family::X;
  std::uint8_t index = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

constexpr VarId X(int i) { return {Family::X, static_cast<std::uint8_t>(i)}; }
constexpr VarId Y(int i) { return {Family::Y, static_cast<std::uint8_t>(i)}; }
constexpr VarId Z(int i) { return {Family::Z, static_cast<std::uint8_t>(i)}; }
constexpr VarId W(int i) { return {Family::AUX, static_cast<std::uint8_t>(i)}; }

// Canonical slot layout: x_19 .. x_0, y_19 .. y_0, z_19 .. z_0, w_0 .. w_3.
// Slot order is the canonical printing precedence (slot 0 is the largest variable).
constexpr int slot_of(VarId v) {
  switch (v.family) {
    case Family::X:
      return kMaxJetIndex - v.index;
    case Family::Y:
      return (kMaxJetIndex + 1) + kMaxJetIndex - v.index;
    case Family::Z:
      return 2 * (kMaxJetIndex + 1) + kMaxJetIndex - v.index;
    case Family::AUX:
      return 3 * (kMaxJetIndex + 1) + v.index;
  }
  return -1;
}

constexpr VarId var_of_slot(int slot) {
  constexpr int n = kMaxJetIndex + 1;
  if (slot < n) return X(kMaxJetIndex - slot);
  if (slot < 2 * n) return Y(kMaxJetIndex - (slot - n));
  if (slot < 3 * n) return Z(kMaxJetIndex - (slot - 2 * n));
  return W(slot - 3 * n);
}

constexpr bool valid_var(VarId v) {
  return v.family == Family::AUX ? v.index < kNumAux : v.index <= kMaxJetIndex;
}

inline std::string to_string(VarId v) {
  static constexpr char kNames[] = {'x', 'y', 'z', 'w'};
  return kNames[static_cast<int>(v.family)] + std::to_string(v.index);
}

}  // namespace jetfiber

#endif  // JETFIBER_VAR_HPP
