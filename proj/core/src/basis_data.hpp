#ifndef JETFIBER_SRC_BASIS_DATA_HPP
#define JETFIBER_SRC_BASIS_DATA_HPP

#include <cstdint>
#include <vector>

#include "jetfiber/ideal.hpp"

namespace jetfiber::detail {

/// Polynomial in engine layout, terms in decreasing order.
using Terms = std::vector<Monomial>;

struct BasisData {
  MonomialOrder order;
  std::vector<Terms> polys;
  std::vector<std::uint64_t> divmasks;
  std::vector<Polynomial> canonical;
  std::vector<Monomial> canonical_lms;
  std::uint64_t steps = 0;

  static GroebnerBasis wrap(BasisData d) {
    return GroebnerBasis(std::make_shared<const BasisData>(std::move(d)));
  }
  static const BasisData& of(const GroebnerBasis& gb);
};

/// Engine-layout conversion helpers.
Terms to_engine(const Polynomial& p, const MonomialOrder& order);
Polynomial to_canonical(const Terms& t, const MonomialOrder& order);

/// Packages an already reduced basis (engine layout) with its canonical mirror.
BasisData make_basis(const MonomialOrder& order, std::vector<Terms> polys, std::uint64_t steps);

}  // namespace jetfiber::detail

#endif  // JETFIBER_SRC_BASIS_DATA_HPP
