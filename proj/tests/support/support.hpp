#ifndef JETFIBER_TESTS_SUPPORT_HPP
#define JETFIBER_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jetfiber/polynomial.hpp"

namespace jetfiber::testing {

// Seed shared by every randomized property test, so failures reproduce.
inline constexpr std::uint32_t kSeed = 0x5eed2;
inline constexpr int kPropertyCases = 1000;

inline const nlohmann::json& fixtures() {
  static const nlohmann::json data = [] {
    std::ifstream in(JETFIBER_FIXTURES);
    if (!in) throw std::runtime_error("cannot open " + std::string(JETFIBER_FIXTURES));
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline Polynomial P(const std::string& text) { return parse_polynomial(text); }

inline std::vector<VarId> jet_vars(int m) {
  std::vector<VarId> out;
  for (int i = 0; i <= m; ++i) {
    out.push_back(X(i));
    out.push_back(Y(i));
    out.push_back(Z(i));
  }
  return out;
}

inline Polynomial random_poly(std::mt19937& rng, const std::vector<VarId>& vars, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms), nfactors(0, 3), exp(1, max_exp);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial p;
  for (int t = nterms(rng); t > 0; --t) {
    Polynomial term = Polynomial::one();
    for (int f = nfactors(rng); f > 0; --f) term *= Polynomial::var(vars[pick(rng)]).pow(exp(rng));
    p += term;
  }
  return p;
}

}  // namespace jetfiber::testing

#endif  // JETFIBER_TESTS_SUPPORT_HPP
