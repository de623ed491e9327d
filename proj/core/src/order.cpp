#include "jetfiber/order.hpp"

#include <algorithm>

#include "jetfiber/errors.hpp"

namespace jetfiber {
namespace {

std::vector<VarId> default_precedence() {
  std::vector<VarId> out;
  for (int i = kMaxJetIndex; i >= 2; --i) out.push_back(Y(i));
  for (int i = kMaxJetIndex; i >= 2; --i) out.push_back(Z(i));
  for (int i = kMaxJetIndex; i >= 2; --i) out.push_back(X(i));
  for (int i = 1; i >= 0; --i) {
    out.push_back(Y(i));
    out.push_back(Z(i));
    out.push_back(X(i));
  }
  for (int i = 0; i < kNumAux; ++i) out.push_back(W(i));
  return out;
}

// `precedence` followed by every other variable in canonical slot order.
std::vector<VarId> complete(const std::vector<VarId>& precedence) {
  std::array<bool, kNumSlots> seen{};
  std::vector<VarId> out;
  for (const auto& v : precedence) {
    if (!valid_var(v)) throw PreconditionError("invalid variable " + to_string(v) + " in order");
    auto& s = seen[static_cast<std::size_t>(slot_of(v))];
    if (s) throw PreconditionError("variable " + to_string(v) + " repeated in order");
    s = true;
    out.push_back(v);
  }
  for (int slot = 0; slot < kNumSlots; ++slot)
    if (!seen[static_cast<std::size_t>(slot)]) out.push_back(var_of_slot(slot));
  return out;
}

}  // namespace

MonomialOrder::MonomialOrder() : MonomialOrder(OrderKind::Grevlex, default_precedence(), 0) {}

MonomialOrder::MonomialOrder(OrderKind kind, const std::vector<VarId>& precedence, int block_size)
    : kind_(kind), block_size_(block_size) {
  if (block_size < 0 || block_size > 8) throw PreconditionError("block order supports 1..8 eliminated variables");
  const auto full = complete(precedence);
  for (std::size_t i = 0; i < full.size(); ++i) {
    const auto slot = static_cast<std::size_t>(slot_of(full[i]));
    to_engine_[slot] = static_cast<std::uint8_t>(i);
    to_canonical_[i] = static_cast<std::uint8_t>(slot);
  }
  for (int i = 0; i < block_size; ++i) block_mask_ |= std::uint64_t{0xFF} << (8 * i);
}

MonomialOrder MonomialOrder::grevlex(const std::vector<VarId>& precedence) {
  return {OrderKind::Grevlex, precedence, 0};
}

MonomialOrder MonomialOrder::by_index() {
  std::vector<VarId> prec;
  for (int i = kMaxJetIndex; i >= 0; --i) {
    prec.push_back(Z(i));
    prec.push_back(X(i));
    prec.push_back(Y(i));
  }
  return grevlex(prec);
}

MonomialOrder MonomialOrder::lex(const std::vector<VarId>& precedence) { return {OrderKind::Lex, precedence, 0}; }

MonomialOrder MonomialOrder::block(const std::vector<VarId>& elim) {
  std::vector<VarId> inner;
  for (const auto& v : default_precedence())
    if (std::find(elim.begin(), elim.end(), v) == elim.end()) inner.push_back(v);
  return block(elim, inner);
}

MonomialOrder MonomialOrder::block(const std::vector<VarId>& elim, const std::vector<VarId>& inner) {
  if (elim.empty()) throw PreconditionError("block order needs at least one eliminated variable");
  std::vector<VarId> all = elim;
  all.insert(all.end(), inner.begin(), inner.end());
  return {OrderKind::Block, all, static_cast<int>(elim.size())};
}

std::vector<VarId> MonomialOrder::precedence() const {
  std::vector<VarId> out;
  out.reserve(kNumSlots);
  for (auto slot : to_canonical_) out.push_back(var_of_slot(slot));
  return out;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block: {
      std::string s = "block(";
      for (int i = 0; i < block_size_; ++i) {
        if (i > 0) s += ",";
        s += to_string(var_of_slot(to_canonical_[static_cast<std::size_t>(i)]));
      }
      return s + ";grevlex)";
    }
  }
  return "?";
}

}  // namespace jetfiber
