#ifndef JETFIBER_MONOMIAL_HPP
#define JETFIBER_MONOMIAL_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "jetfiber/errors.hpp"
#include "jetfiber/var.hpp"

namespace jetfiber {

/// Largest exponent any single variable may carry.
inline constexpr int kMaxExponent = 64;

/// Power product over the 64 slots, one byte per slot, packed into eight words.
///
/// The slot meaning is fixed by the caller: public polynomials use the canonical layout of
/// `slot_of`, the Groebner engine uses a permuted layout in which slot order equals the
/// variable precedence of the active monomial order. Word arithmetic is SWAR; it is valid
/// because every exponent stays below 128.
class Monomial {
public:
  static constexpr int kWords = kNumSlots / 8;

  Monomial() = default;

  static Monomial var(int slot, int exponent = 1) {
    Monomial m;
    m.set(slot, exponent);
    return m;
  }

  /// Builds a monomial from packed exponent bytes. Every byte must be at most kMaxExponent.
  static Monomial from_words(const std::array<std::uint64_t, kWords>& words) {
    Monomial m;
    m.words_ = words;
    int deg = 0;
    for (auto w : words)
      if (w != 0) deg += byte_sum(w);
    m.degree_ = static_cast<std::uint16_t>(deg);
    return m;
  }

  int exponent(int slot) const {
    return static_cast<int>((words_[slot >> 3] >> ((slot & 7) * 8)) & 0xFF);
  }

  void set(int slot, int exponent) {
    if (exponent < 0 || exponent > kMaxExponent)
      throw DegreeOverflow("exponent " + std::to_string(exponent) + " out of range");
    const int shift = (slot & 7) * 8;
    std::uint64_t& w = words_[slot >> 3];
    degree_ = static_cast<std::uint16_t>(degree_ - ((w >> shift) & 0xFF) + exponent);
    w = (w & ~(std::uint64_t{0xFF} << shift)) | (std::uint64_t(exponent) << shift);
  }

  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  std::uint64_t word(int i) const { return words_[i]; }

  /// Bitmask of occupied slots.
  std::uint64_t support() const {
    std::uint64_t mask = 0;
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        const int byte = bit >> 3;
        mask |= std::uint64_t{1} << (i * 8 + byte);
        w &= ~(std::uint64_t{0xFF} << (byte * 8));
      }
    }
    return mask;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int byte = std::countr_zero(w) >> 3;
        f(i * 8 + byte, static_cast<int>((w >> (byte * 8)) & 0xFF));
        w &= ~(std::uint64_t{0xFF} << (byte * 8));
      }
    }
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint64_t over = 0;
    for (int i = 0; i < kWords; ++i) {
      r.words_[i] = a.words_[i] + b.words_[i];
      over |= (r.words_[i] + kOverflowBias) & kHigh;
    }
    if (over != 0) throw DegreeOverflow("exponent exceeds 64");
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
  }

  /// True when `a` divides `b`.
  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree_ > b.degree_) return false;
    for (int i = 0; i < kWords; ++i)
      if ((((b.words_[i] | kHigh) - a.words_[i]) & kHigh) != kHigh) return false;
    return true;
  }

  /// b / a; requires divides(a, b).
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = b.words_[i] - a.words_[i];
    r.degree_ = static_cast<std::uint16_t>(b.degree_ - a.degree_);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int i = 0; i < kWords; ++i) {
      const std::uint64_t ge = ((a.words_[i] | kHigh) - b.words_[i]) & kHigh;
      const std::uint64_t mask = (ge >> 7) * 0xFF;
      r.words_[i] = (a.words_[i] & mask) | (b.words_[i] & ~mask);
      if (r.words_[i] != 0) deg += byte_sum(r.words_[i]);
    }
    r.degree_ = static_cast<std::uint16_t>(deg);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kWords; ++i) {
      const std::uint64_t x = nonzero_bytes(a.words_[i]) & nonzero_bytes(b.words_[i]);
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }

  /// Degree-reverse-lexicographic comparison in slot order (slot 0 largest). Returns <0, 0, >0.
  friend int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
    return revlex_tail(a, b);
  }

  /// Reverse-lex tie-break: the monomial with the smaller exponent in the last differing
  /// slot is larger.
  friend int revlex_tail(const Monomial& a, const Monomial& b) {
    for (int i = kWords - 1; i >= 0; --i) {
      const std::uint64_t x = a.words_[i] ^ b.words_[i];
      if (x == 0) continue;
      const int shift = ((63 - std::countl_zero(x)) >> 3) * 8;
      const auto ea = (a.words_[i] >> shift) & 0xFF;
      const auto eb = (b.words_[i] >> shift) & 0xFF;
      return ea < eb ? 1 : -1;
    }
    return 0;
  }

  /// Pure lexicographic comparison in slot order.
  friend int lex_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kWords; ++i) {
      const std::uint64_t x = a.words_[i] ^ b.words_[i];
      if (x == 0) continue;
      const int shift = (std::countr_zero(x) >> 3) * 8;
      const auto ea = (a.words_[i] >> shift) & 0xFF;
      const auto eb = (b.words_[i] >> shift) & 0xFF;
      return ea > eb ? 1 : -1;
    }
    return 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001B3ull;
    return static_cast<std::size_t>(h);
  }

private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  static constexpr std::uint64_t kOverflowBias = 0x3F3F3F3F3F3F3F3Full;

  static std::uint64_t nonzero_bytes(std::uint64_t w) {
    // High bit of each byte set iff that byte is nonzero (bytes are < 128).
    return ((w & ~kHigh) + ~kHigh) & kHigh;
  }

  static int byte_sum(std::uint64_t w) {
    int s = 0;
    for (; w != 0; w >>= 8) s += static_cast<int>(w & 0xFF);
    return s;
  }

  std::array<std::uint64_t, kWords> words_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace jetfiber

#endif  // JETFIBER_MONOMIAL_HPP
