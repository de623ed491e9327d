#include <gtest/gtest.h>

#include <random>

#include "jetfiber/errors.hpp"
#include "jetfiber/eval.hpp"
#include "jetfiber/jet.hpp"
#include "support.hpp"

namespace jetfiber {
namespace {

using testing::P;

Polynomial var(VarId v) { return Polynomial::var(v); }

TEST(JetCoeffs, MatchIndependentExpansion) {
  const auto& want = testing::fixtures()["jets"];
  for (const auto s : {Surface::D40, Surface::D41}) {
    const JetSystem js = jet_coeffs(s, 12);
    ASSERT_EQ(js.coeffs.size(), 13u);
    const auto& ref = want[s == Surface::D40 ? "D40" : "D41"];
    for (int l = 0; l <= 12; ++l) EXPECT_EQ(js.coeffs[l], P(ref[l].get<std::string>())) << to_string(s) << " l = " << l;
  }
}

TEST(JetCoeffs, Examples) {
  const auto f = jet_coeffs(Surface::D40, 3).coeffs;
  EXPECT_EQ(reduce_mod_L(f[2], {1, 1, 1}), P("x1^2"));
  EXPECT_EQ(reduce_mod_L(f[3], {1, 1, 1}), P("y1^2*z1 + y1*z1^2"));
  EXPECT_EQ(jet_coeffs(Surface::D40, 0).coeffs.front(), P("x0^2 + y0^2*z0 + y0*z0^2"));
  const auto g = jet_coeffs(Surface::D41, 5).coeffs;
  EXPECT_EQ(reduce_mod_L(g[5], {2, 2, 1}), P("z1") * P("y2^2 + y3*z1 + x2*y2"));
}

TEST(JetCoeffs, IndexBoundAndOrderZero) {
  for (const auto s : {Surface::D40, Surface::D41}) {
    const JetSystem js = jet_coeffs(s, 10);
    EXPECT_EQ(js.coeffs[0], base_equation(s));
    for (int l = 0; l <= 10; ++l)
      for (const auto& t : js.coeffs[l].terms())
        for (int slot = 0; slot < kNumSlots; ++slot)
          if (t.exponent(slot) > 0) EXPECT_LE(static_cast<int>(var_of_slot(slot).index), l);
  }
}

TEST(JetCoeffs, UniquePureXTerm) {
  const auto f = jet_coeffs(Surface::D41, 10).coeffs;
  for (int i = 0; 2 * i <= 10; ++i) {
    int pure_x = 0;
    for (const auto& t : f[2 * i].terms()) {
      bool only_x = true;
      for (int slot = 0; slot < kNumSlots; ++slot)
        if (t.exponent(slot) > 0 && var_of_slot(slot).family != Family::X) only_x = false;
      if (only_x) {
        ++pure_x;
        EXPECT_EQ(Polynomial(t), var(X(i)).pow(2));
      }
    }
    EXPECT_EQ(pure_x, 1) << "l = " << 2 * i;
  }
}

// Evaluate the base equation on random truncated series over GF(2^k) and compare coefficientwise.
TEST(JetCoeffs, ExpansionAgreesWithSeriesArithmetic) {
  std::mt19937 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 9);
    const Surface s = rng() % 2 ? Surface::D41 : Surface::D40;
    const auto elems = field_elements(k);
    using Series = std::vector<FieldElem>;
    auto mul = [&](const Series& a, const Series& b) {
      Series out(m + 1, FieldElem::zero(k));
      for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
      return out;
    };
    auto add = [&](Series a, const Series& b) {
      for (int i = 0; i <= m; ++i) a[i] += b[i];
      return a;
    };
    Series x(m + 1, FieldElem::zero(k)), y = x, z = x;
    std::map<VarId, FieldElem> pt;
    for (int i = 0; i <= m; ++i) {
      x[i] = pt[X(i)] = elems[rng() % elems.size()];
      y[i] = pt[Y(i)] = elems[rng() % elems.size()];
      z[i] = pt[Z(i)] = elems[rng() % elems.size()];
    }
    Series f = add(add(mul(x, x), mul(mul(y, y), z)), mul(y, mul(z, z)));
    if (s == Surface::D41) f = add(f, mul(x, mul(y, z)));
    const auto coeffs = jet_coeffs(s, m).coeffs;
    for (int l = 0; l <= m; ++l) ASSERT_EQ(evaluate(coeffs[l], pt, k), f[l]) << "m = " << m << " l = " << l;
  }
}

TEST(JetCoeffs, Leibniz) {
  const std::vector<Polynomial> factors = {P("x0"), P("y0"), P("x0 + z0"), P("y0^2 + x0*z0"), P("1 + y0")};
  const int m = 6;
  for (const auto& a : factors)
    for (const auto& b : factors) {
      const auto ab = expand_jets(a * b, m), ea = expand_jets(a, m), eb = expand_jets(b, m);
      for (int l = 0; l <= m; ++l) {
        Polynomial conv;
        for (int i = 0; i <= l; ++i) conv += ea[i] * eb[l - i];
        ASSERT_EQ(ab[l], conv) << a.to_string() << " * " << b.to_string() << " at l = " << l;
      }
    }
}

TEST(JetCoeffs, SymmetricMorphismsFixEveryCoefficient) {
  const int m = 9;
  for (const auto s : {Surface::D40, Surface::D41}) {
    const auto coeffs = jet_coeffs(s, m).coeffs;
    for (int l = 0; l <= m; ++l) {
      EXPECT_EQ(substitute(coeffs[l], swap_yz(m)), coeffs[l]);
      EXPECT_EQ(substitute(coeffs[l], shear_z(s, m)), coeffs[l]);
    }
  }
  const Polynomial g0 = base_equation(Surface::D41);
  EXPECT_EQ(substitute(g0, shear_z(Surface::D41, 0)), g0);
}

TEST(ReduceModL, Examples) {
  const auto f = jet_coeffs(Surface::D40, 6).coeffs;
  EXPECT_EQ(reduce_mod_L(f[4], {2, 2, 1}), P("x2^2 + y2*z1^2"));
  EXPECT_EQ(reduce_mod_L(P("x0 + y1"), {1, 1, 1}), P("y1"));
  const auto g = jet_coeffs(Surface::D41, 6).coeffs;
  EXPECT_EQ(reduce_mod_L(g[6], {3, 2, 2}), P("x3^2 + y2^2*z2 + y2*z2^2"));
}

TEST(ReduceModL, MaskCoversExactlyTheKilledVariables) {
  const TruncationSpec spec{3, 1, 2};
  const std::uint64_t mask = truncation_mask(spec);
  for (int slot = 0; slot < kNumSlots; ++slot) {
    const VarId v = var_of_slot(slot);
    const int bound = v.family == Family::X ? 3 : v.family == Family::Y ? 1 : v.family == Family::Z ? 2 : 0;
    EXPECT_EQ(((mask >> slot) & 1) != 0, static_cast<int>(v.index) < bound) << to_string(v);
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_G({2, 2, 1}, 4), P("x2^2 + y2*z1^2"));
  EXPECT_TRUE(closed_form_G({3, 2, 2}, 5).is_zero());
  EXPECT_EQ(closed_form_G({3, 2, 2}, 6), P("x3^2 + y2^2*z2 + y2*z2^2"));
  EXPECT_EQ(closed_form_G({3, 3, 1}, 7), P("y3^2*z1 + y5*z1^2 + y3*z2^2 + x3*y3*z1"));
  EXPECT_EQ(closed_form_G({3, 3, 1}, 7, Surface::D40), P("y3^2*z1 + y5*z1^2 + y3*z2^2"));
}

TEST(ClosedForm, AgreesWithIndependentGrid) {
  const auto g = jet_coeffs(Surface::D41, 12).coeffs;
  for (const auto& e : testing::fixtures()["lemma_grid_d41"]) {
    const TruncationSpec spec{e["p"].get<int>(), e["q"].get<int>(), e["r"].get<int>()};
    const int l = e["l"].get<int>();
    const Polynomial want = P(e["G"].get<std::string>());
    ASSERT_EQ(closed_form_G(spec, l), want) << spec.p << spec.q << spec.r << " l = " << l;
    ASSERT_EQ(reduce_mod_L(g[l], spec), want);
  }
}

TEST(ClosedForm, D40DropsTheTripleProduct) {
  const auto f = jet_coeffs(Surface::D40, 12).coeffs;
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q)
      for (int r = 1; r <= 5; ++r)
        for (int l = 0; l <= 12; ++l) {
          const TruncationSpec spec{p, q, r};
          Polynomial triple;
          for (int u = p; u <= l; ++u)
            for (int v = q; u + v <= l; ++v)
              if (l - u - v >= r) triple += var(X(u)) * var(Y(v)) * var(Z(l - u - v));
          ASSERT_EQ(reduce_mod_L(f[l], spec), closed_form_G(spec, l, Surface::D40));
          ASSERT_EQ(closed_form_G(spec, l, Surface::D40) + triple, closed_form_G(spec, l));
        }
}

TEST(TopTerm, Examples) {
  for (int l = 4; l <= 12; ++l)
    EXPECT_EQ(top_term(closed_form_G({2, 2, 1}, l), Family::Y), var(Y(l - 2)) * P("z1^2")) << "l = " << l;
  EXPECT_TRUE(top_term(P("x1^2"), Family::Y).is_zero());
  EXPECT_EQ(top_term(closed_form_G({4, 2, 2}, 7), Family::Z), P("y2^2*z3"));
}

TEST(TopTerm, KeepsEveryTermWithTheLargestIndex) {
  EXPECT_EQ(top_term(P("y3*z1 + y3^2 + y2*z5 + x1"), Family::Y), P("y3*z1 + y3^2"));
  EXPECT_EQ(top_term(P("y3*z1 + y3^2 + y2*z5 + x1"), Family::Z), P("y2*z5"));
}

TEST(VerifyLemma, Examples) {
  const auto has = [](const CaseReport& r, int id) {
    return std::any_of(r.checks.begin(), r.checks.end(), [&](const CaseCheck& c) { return c.case_id == id; });
  };
  const CaseReport one = verify_G_lemma({3, 2, 2}, 5);
  EXPECT_TRUE(has(one, 1));
  EXPECT_TRUE(one.all_match());
  EXPECT_TRUE(one.closed_form.is_zero());

  const CaseReport two = verify_G_lemma({2, 2, 2}, 4);
  EXPECT_TRUE(has(two, 2));
  EXPECT_TRUE(two.all_match());
  for (const auto& c : two.checks)
    if (c.case_id == 2) EXPECT_EQ(c.predicted, P("x2^2"));

  const CaseReport odd = verify_G_lemma({3, 3, 1}, 7);
  EXPECT_TRUE(odd.all_match());
  EXPECT_EQ(top_term(odd.closed_form, Family::Y), P("y5*z1^2"));
}

TEST(VerifyLemma, WholeGridMatches) {
  int applicable = 0;
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q)
      for (int r = 1; r <= 5; ++r)
        for (int l = 0; l <= 12; ++l) {
          const CaseReport rep = verify_G_lemma({p, q, r}, l);
          applicable += static_cast<int>(rep.checks.size());
          for (const auto& c : rep.checks)
            ASSERT_TRUE(c.match) << "(" << p << q << r << ") l = " << l << " case " << c.case_id << ": predicted "
                                 << c.predicted.to_string() << ", actual " << c.actual.to_string();
        }
  EXPECT_GT(applicable, 0);
}

TEST(Morphisms, IndexShiftAndSwap) {
  EXPECT_EQ(substitute(P("x0*y1 + z2"), index_shift(3, 2, 2, 2)), P("x3*y3 + z4"));
  EXPECT_EQ(substitute(P("y1 + z0"), swap_yz(1)), P("z1 + y0"));
  EXPECT_EQ(substitute(P("z1"), shear_z(Surface::D40, 1)), P("y1 + z1"));
  EXPECT_EQ(substitute(P("z1"), shear_z(Surface::D41, 1)), P("x1 + y1 + z1"));
}

TEST(Surfaces, ParseAndPrint) {
  EXPECT_EQ(parse_surface("d40"), Surface::D40);
  EXPECT_EQ(parse_surface("D41"), Surface::D41);
  EXPECT_EQ(to_string(Surface::D41), "d41");
  EXPECT_THROW(parse_surface("e6"), PreconditionError);
}

}  // namespace
}  // namespace jetfiber
