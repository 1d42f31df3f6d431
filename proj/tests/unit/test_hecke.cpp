#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace vlab;

namespace {

std::vector<BigInt> oracle_un(const HVector& h, unsigned n) {
  auto r = oracle::un_by_series(h.coeffs(), h.d(), n);
  EXPECT_EQ(r.back(), 0) << "series oracle produced a t^{d+1} term";
  r.pop_back();
  return r;
}

}  // namespace

TEST(Un, TriangleAtTwo) {
  const HVector h(2, {1, 1, 1});
  for (UnMethod m : {UnMethod::Definition, UnMethod::Convolution, UnMethod::Eulerian})
    EXPECT_EQ(apply_un(h, 2, m).coeffs, oracle::big({1, 7, 4})) << to_string(m);
}

TEST(Un, SmallExamples) {
  EXPECT_EQ(un_definition(HVector(1, {1}), 3).coeffs, oracle::big({1, 2}));
  EXPECT_EQ(un_definition(HVector(2, {1}), 2).coeffs, oracle::big({1, 3, 0}));
  EXPECT_EQ(un_definition(HVector(2, {1, 1}), 2).coeffs, oracle::big({1, 6, 1}));
  EXPECT_EQ(un_definition(HVector(3, {1, 4, 1}), 2).coeffs, oracle::big({1, 23, 23, 1}));
}

TEST(Un, EnginesAgreeWithSeriesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned d = 1 + trial % 8;
    const unsigned n = 1 + (trial / 8) % 9;
    const HVector h = oracle::random_h(rng, d, -4, 7, false, true);
    const auto expected = oracle_un(h, n);
    EXPECT_EQ(un_definition(h, n).coeffs, expected);
    EXPECT_EQ(un_convolution(h, n).coeffs, expected);
    EXPECT_EQ(un_eulerian(h, n).coeffs, expected);
  }
}

TEST(Un, IdentityAtOne) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const HVector h = oracle::random_h(rng, 1 + trial % 6, 0, 5);
    auto expected = h.coeffs();
    expected.pop_back();
    EXPECT_EQ(un_definition(h, 1).coeffs, expected);
  }
}

TEST(Un, ComposesMultiplicatively) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    const HVector h = oracle::random_h(rng, 1 + trial % 5, 0, 4);
    const unsigned n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    EXPECT_TRUE(un_compose_check(h, n, m));
    EXPECT_EQ(un_definition(un_definition(h, n).as_hvector(), m).coeffs, un_definition(h, m * n).coeffs);
  }
}

TEST(Un, PreservesNonnegativityAndSum) {
  // Sum of coefficients scales by n^d (normalized volume of nP).
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned d = 1 + trial % 6;
    const unsigned n = 1 + trial % 7;
    const HVector h = oracle::random_h(rng, d, 0, 4);
    const auto c = un_convolution(h, n).coeffs;
    BigInt sum = 0;
    for (const auto& x : c) {
      EXPECT_GE(x, 0);
      sum += x;
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), n, d);
    EXPECT_EQ(sum, h.sum() * scale);
  }
}

TEST(Un, EulerianPolynomialIsEigenvector) {
  for (unsigned d = 1; d <= 8; ++d) {
    const HVector a(d, eulerian_poly(d));
    for (unsigned n = 1; n <= 10; ++n) {
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), n, d);
      const IntPoly expected = eulerian_poly(d) * scale;
      EXPECT_EQ(un_definition(a, n).poly(), expected) << "d=" << d << " n=" << n;
    }
  }
}

TEST(Un, FirstCoefficientFormula) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const HVector h = oracle::random_h(rng, 1 + trial % 6, 0, 5);
    EXPECT_TRUE(h1_formula_check(h, 1 + trial % 9));
  }
  EXPECT_THROW(h1_formula_check(HVector(2, {2, 1}), 2), PreconditionFailed);
}

TEST(Un, Preconditions) {
  EXPECT_THROW(un_definition(HVector(2, {1, 1, 1}), 0), PreconditionFailed);
  EXPECT_THROW(un_convolution(HVector(2, {1, 0, 0, 1}), 2), PreconditionFailed);
  EXPECT_THROW(un_eulerian(HVector(2, {1, 0, 0, 1}), 2), PreconditionFailed);
}

TEST(Un, LargeDilationStaysExact) {
  const HVector h(4, {1, 1, 1, 1, 1});
  const auto expected = oracle_un(h, 97);
  EXPECT_EQ(un_definition(h, 97).coeffs, expected);
  EXPECT_EQ(un_eulerian(h, 97).coeffs, expected);
}
