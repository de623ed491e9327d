#include <gtest/gtest.h>

#include <map>
#include <random>

#include "jetfiber/errors.hpp"
#include "jetfiber/eval.hpp"
#include "jetfiber/field.hpp"
#include "jetfiber/jet.hpp"
#include "jetfiber/polynomial.hpp"
#include "support.hpp"

namespace jetfiber {
namespace {

using testing::kPropertyCases;
using testing::P;

TEST(Parse, BaseEquationInOrderZeroVariables) {
  const Polynomial f = P("x0^2 + y0^2*z0 + y0*z0^2");
  EXPECT_EQ(f, base_equation(Surface::D40));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.degree(), 3);
}

TEST(Parse, CharacteristicTwoCollapse) {
  EXPECT_TRUE(P("x1 + x1").is_zero());
  EXPECT_TRUE(P("x1 - x1").is_zero());
  EXPECT_EQ(P("3*y2 + 2*z1"), P("y2"));
}

TEST(Parse, TwoTermCubic) {
  const Polynomial p = P("y2*z1^2 + x2^2");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "y2*z1^2 + x2^2");
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("x1 +"), ParseError);
  EXPECT_THROW(P("x1 * * y2"), ParseError);
  EXPECT_THROW(P("q3"), ParseError);
  EXPECT_THROW(parse_polynomial("x5 + y1", 3), ParseError);
  EXPECT_NO_THROW(parse_polynomial("x3 + y1", 3));
}

TEST(Parse, ZeroAndOnePrint) {
  EXPECT_EQ(Polynomial::zero().to_string(), "0");
  EXPECT_EQ(Polynomial::one().to_string(), "1");
  EXPECT_EQ(P("0"), Polynomial::zero());
  EXPECT_EQ(P("1 + x0 + 1"), P("x0"));
}

TEST(Multiply, Examples) {
  EXPECT_EQ(P("y1 + z1") * P("y1 + z1"), P("y1^2 + z1^2"));
  EXPECT_EQ(P("y1") * P("z1") * P("y1 + z1"), P("y1^2*z1 + y1*z1^2"));
  EXPECT_TRUE((P("x3*y2 + z7") * Polynomial::zero()).is_zero());
}

TEST(Multiply, ExponentBoundIsEnforced) {
  const Polynomial p = Polynomial::var(X(1)).pow(40);
  EXPECT_THROW(p * p, DegreeOverflow);
}

TEST(Substitute, Examples) {
  const Polynomial sym = P("y1^2*z1 + y1*z1^2");
  EXPECT_EQ(substitute(sym, swap_yz(1)), sym);
  const Polynomial g0 = base_equation(Surface::D41);
  EXPECT_EQ(g0, P("x0^2 + y0^2*z0 + y0*z0^2 + x0*y0*z0"));
  EXPECT_EQ(substitute(g0, shear_z(Surface::D41, 0)), g0);
  EXPECT_EQ(substitute(P("x1^2 + y1"), {{X(1), Polynomial::zero()}}), P("y1"));
}

TEST(Evaluate, Examples) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& a : field_elements(k)) EXPECT_EQ(evaluate(P("x1^2"), {{X(1), a}}, k), a * a);
  EXPECT_TRUE(evaluate(P("y1^2*z1 + y1*z1^2"), {{Y(1), FieldElem::one(1)}, {Z(1), FieldElem::one(1)}}, 1).is_zero());
}

TEST(Evaluate, GF4PointMatchesOracle) {
  const FieldElem w = FieldElem::generator(2);
  const std::map<VarId, FieldElem> point{{X(0), FieldElem::zero(2)}, {Y(0), w}, {Z(0), w * w}};
  const FieldElem v = evaluate(base_equation(Surface::D41), point, 2);
  EXPECT_EQ(v.value(), testing::fixtures()["gf4_g0_at_0_w_w2"].get<std::uint32_t>());
}

TEST(Evaluate, MissingBindingThrows) {
  EXPECT_THROW(evaluate(P("x1 + y1"), {{X(1), FieldElem::one(1)}}, 1), PreconditionError);
}

TEST(Field, AdditiveOrderTwoAndFrobenius) {
  for (int k = 1; k <= 8; ++k) {
    const auto all = field_elements(k);
    ASSERT_EQ(all.size(), std::size_t{1} << k);
    for (const auto& a : all) {
      EXPECT_TRUE((a + a).is_zero());
      for (const auto& b : all) {
        EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
        EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
      }
    }
  }
}

TEST(Field, FrobeniusIsBijective) {
  for (int k = 1; k <= 10; ++k) {
    std::vector<bool> hit(std::size_t{1} << k, false);
    for (const auto& a : field_elements(k)) hit[a.frobenius().value()] = true;
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) << "k = " << k;
  }
}

TEST(Field, GeneratorIsPrimitive) {
  for (int k = 1; k <= kMaxFieldDegree; ++k) {
    const FieldElem g = FieldElem::generator(k);
    const std::uint64_t order = (std::uint64_t{1} << k) - 1;
    FieldElem x = g;
    std::uint64_t n = 1;
    while (x != FieldElem::one(k)) {
      x *= g;
      ++n;
      ASSERT_LE(n, order);
    }
    EXPECT_EQ(n, order) << "k = " << k;
  }
}

TEST(Field, Inverse) {
  for (int k = 1; k <= 6; ++k)
    for (const auto& a : field_elements(k)) {
      if (a.is_zero()) {
        EXPECT_THROW((void)a.inverse(), PreconditionError);
        continue;
      }
      EXPECT_EQ(a * a.inverse(), FieldElem::one(k));
    }
}

TEST(Field, MixingDegreesThrows) {
  EXPECT_THROW((void)(FieldElem::one(1) + FieldElem::one(2)), PreconditionError);
  EXPECT_THROW(FieldElem(2, 4), PreconditionError);
}

class PolyProperties : public ::testing::Test {
protected:
  std::mt19937 rng{testing::kSeed};
  std::vector<VarId> vars = testing::jet_vars(4);
  Polynomial any() { return testing::random_poly(rng, vars, 6, 3); }
};

TEST_F(PolyProperties, CharacteristicTwo) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Polynomial p = any(), q = any();
    ASSERT_TRUE((p + p).is_zero());
    ASSERT_EQ((p + q) * (p + q), p * p + q * q);
  }
}

TEST_F(PolyProperties, RingAxioms) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Polynomial a = any(), b = any(), c = any();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * Polynomial::one(), a);
  }
}

TEST_F(PolyProperties, PrintParseRoundTrip) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Polynomial p = any();
    ASSERT_EQ(P(p.to_string()), p) << p.to_string();
    ASSERT_EQ(P(p.to_string()).to_string(), p.to_string());
  }
}

TEST_F(PolyProperties, SubstituteIsHomomorphic) {
  for (int i = 0; i < kPropertyCases; ++i) {
    Bindings b;
    for (int j = 0; j < 3; ++j) b[vars[rng() % vars.size()]] = testing::random_poly(rng, vars, 3, 2);
    const Polynomial p = testing::random_poly(rng, vars, 4, 2), q = testing::random_poly(rng, vars, 4, 2);
    ASSERT_EQ(substitute(p * q, b), substitute(p, b) * substitute(q, b));
    ASSERT_EQ(substitute(p + q, b), substitute(p, b) + substitute(q, b));
  }
}

TEST_F(PolyProperties, SwapIsAnInvolution) {
  const Bindings phi = swap_yz(4);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Polynomial p = any();
    ASSERT_EQ(substitute(substitute(p, phi), phi), p);
  }
}

TEST_F(PolyProperties, EvaluateCommutesWithRenaming) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto elems = field_elements(k);
    std::map<VarId, FieldElem> pt;
    for (const auto& v : vars) pt[v] = elems[rng() % elems.size()];
    Bindings b;
    std::map<VarId, FieldElem> pulled = pt;
    for (const auto& v : vars) {
      const VarId target = vars[rng() % vars.size()];
      b[v] = Polynomial::var(target);
      pulled[v] = pt.at(target);
    }
    const Polynomial p = any();
    ASSERT_EQ(evaluate(substitute(p, b), pt, k), evaluate(p, pulled, k));
  }
}

TEST_F(PolyProperties, EvaluateIsARingMap) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto elems = field_elements(3);
    std::map<VarId, FieldElem> pt;
    for (const auto& v : vars) pt[v] = elems[rng() % elems.size()];
    const Polynomial p = any(), q = any();
    ASSERT_EQ(evaluate(p * q, pt, 3), evaluate(p, pt, 3) * evaluate(q, pt, 3));
    ASSERT_EQ(evaluate(p + q, pt, 3), evaluate(p, pt, 3) + evaluate(q, pt, 3));
  }
}

}  // namespace
}  // namespace jetfiber
