#ifndef JETFIBER_ORDER_HPP
#define JETFIBER_ORDER_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "jetfiber/monomial.hpp"
#include "jetfiber/var.hpp"

namespace jetfiber {

enum class OrderKind { Grevlex, Lex, Block };

/// A monomial order on all 64 variables.
///
/// The order is given by a variable precedence (largest first) and a kind. Internally each
/// order owns a slot permutation so that, after `to_engine`, slot order equals precedence and
/// the comparison reduces to word-parallel scans. For `Block`, the first `block_size`
/// variables of the precedence form the eliminated block; both blocks use grevlex.
class MonomialOrder {
public:
  /// The jet default: y_19..y_2 > z_19..z_2 > x_19..x_2 > y1 > z1 > x1 > y0 > z0 > x0 > w0..w3.
  MonomialOrder();

  /// Variables missing from `precedence` are appended in canonical order.
  static MonomialOrder grevlex(const std::vector<VarId>& precedence);
  /// Grevlex ranking variables by jet index first, then z > x > y. Much faster than the default
  /// on the center ideals L_pqr + <G^(l)>.
  static MonomialOrder by_index();
  static MonomialOrder lex(const std::vector<VarId>& precedence);
  /// Block order eliminating `elim` (in the given precedence) ahead of the default precedence
  /// of all remaining variables.
  static MonomialOrder block(const std::vector<VarId>& elim);
  static MonomialOrder block(const std::vector<VarId>& elim, const std::vector<VarId>& inner);

  OrderKind kind() const { return kind_; }
  int block_size() const { return block_size_; }
  /// Full precedence, largest variable first.
  std::vector<VarId> precedence() const;
  std::string describe() const;

  /// Canonical layout <-> engine layout.
  Monomial to_engine(const Monomial& canonical) const { return permute(canonical, to_engine_); }
  Monomial to_canonical(const Monomial& engine) const { return permute(engine, to_canonical_); }
  int engine_slot(VarId v) const { return to_engine_[static_cast<std::size_t>(slot_of(v))]; }

  /// Compares two monomials in engine layout. Returns <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Grevlex:
        return grevlex_cmp(a, b);
      case OrderKind::Lex:
        return lex_cmp(a, b);
      case OrderKind::Block:
        return block_cmp(a, b);
    }
    return 0;
  }
  /// Compares two monomials in canonical layout.
  int compare_canonical(const Monomial& a, const Monomial& b) const {
    return compare(to_engine(a), to_engine(b));
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_size_ == b.block_size_ && a.to_engine_ == b.to_engine_;
  }

private:
  using Perm = std::array<std::uint8_t, kNumSlots>;

  MonomialOrder(OrderKind kind, const std::vector<VarId>& precedence, int block_size);

  static Monomial permute(const Monomial& m, const Perm& perm) {
    std::array<std::uint64_t, Monomial::kWords> w{};
    m.for_each([&](int slot, int e) {
      const int t = perm[static_cast<std::size_t>(slot)];
      w[static_cast<std::size_t>(t >> 3)] |= std::uint64_t(e) << ((t & 7) * 8);
    });
    return Monomial::from_words(w);
  }

  // The eliminated block occupies engine slots 0..block_size-1, all inside word 0.
  int block_cmp(const Monomial& a, const Monomial& b) const {
    const std::uint64_t a1 = a.word(0) & block_mask_, b1 = b.word(0) & block_mask_;
    if (a1 != b1) {
      const int da = byte_sum(a1), db = byte_sum(b1);
      if (da != db) return da > db ? 1 : -1;
      const int shift = ((63 - std::countl_zero(a1 ^ b1)) >> 3) * 8;
      return ((a1 >> shift) & 0xFF) < ((b1 >> shift) & 0xFF) ? 1 : -1;
    }
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return revlex_tail(a, b);
  }

  static int byte_sum(std::uint64_t w) {
    int s = 0;
    for (; w != 0; w >>= 8) s += static_cast<int>(w & 0xFF);
    return s;
  }

  OrderKind kind_ = OrderKind::Grevlex;
  int block_size_ = 0;
  std::uint64_t block_mask_ = 0;
  Perm to_engine_{};
  Perm to_canonical_{};
};

}  // namespace jetfiber

#endif  // JETFIBER_ORDER_HPP
