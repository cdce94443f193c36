// Copyright 2026 The bsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsk/polyring.hpp"

#include <random>

#include "bsk/error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace bsk {
namespace {

using testing::RandomLaurent;
using testing::RandomZPoly;
using testing::CodeOf;
using testing::TestSeed;

const LaurentPoly kZ{{-1, 1}, {1, -1}};  // 1/s - s

TEST(LaurentPolyTest, AddCancelsToCanonicalForm) {
  const LaurentPoly a{{2, 1}, {0, 1}};
  EXPECT_EQ(a + LaurentPoly({{2, -1}}), LaurentPoly(1));
  EXPECT_EQ((a + LaurentPoly{{2, -1}}).size(), 1u);
  EXPECT_EQ(a + LaurentPoly(), a);
  EXPECT_EQ(LaurentPoly({{-1, 1}}) + LaurentPoly({{1, 1}}), (LaurentPoly{{-1, 1}, {1, 1}}));
  EXPECT_TRUE((a - a).IsZero());
  EXPECT_TRUE((a - a).terms().empty());
}

TEST(LaurentPolyTest, MultiplyExamples) {
  EXPECT_EQ(kZ * LaurentPoly({{-1, 1}, {1, 1}}), (LaurentPoly{{-2, 1}, {2, -1}}));
  const LaurentPoly p{{-3, 4}, {5, -2}};
  EXPECT_EQ(p * LaurentPoly(1), p);
  // Hand expansion: (1/s - s)(s^-2 + 1 + s^2) = s^-3 - s^3.
  EXPECT_EQ(kZ * LaurentPoly({{-2, 1}, {0, 1}, {2, 1}}), (LaurentPoly{{-3, 1}, {3, -1}}));
  EXPECT_TRUE((p * LaurentPoly()).IsZero());
}

TEST(LaurentPolyTest, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(TestSeed());
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = RandomLaurent(rng);
    const LaurentPoly b = RandomLaurent(rng);
    const LaurentPoly c = RandomLaurent(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly());
    const LaurentPoly ab = a * b;
    for (const auto& [e, coef] : ab.terms()) EXPECT_NE(coef, 0) << "stored zero at s^" << e;
  }
}

TEST(LaurentPolyTest, ShiftAndCoefficient) {
  const LaurentPoly p{{-1, 3}, {2, -5}};
  EXPECT_EQ(p.Shifted(4), (LaurentPoly{{3, 3}, {6, -5}}));
  EXPECT_EQ(p.Coefficient(2), -5);
  EXPECT_EQ(p.Coefficient(0), 0);
  EXPECT_EQ(p.MinExponent(), -1);
  EXPECT_EQ(p.MaxExponent(), 2);
  EXPECT_EQ(p.ToString(), "3s^-1 - 5s^2");
  EXPECT_EQ((LaurentPoly{{-2, 1}, {0, 1}, {2, 1}}).ToString(), "s^-2 + 1 + s^2");
}

TEST(DivExactTest, Examples) {
  EXPECT_EQ(DivExact(LaurentPoly{{-3, 1}, {3, -1}}, kZ), (LaurentPoly{{-2, 1}, {0, 1}, {2, 1}}));
  const LaurentPoly p{{-4, 2}, {1, 7}};
  EXPECT_EQ(DivExact(p, LaurentPoly(1)), p);
  EXPECT_EQ(CodeOf([&] { DivExact(LaurentPoly{{-1, 1}, {1, 1}}, kZ); }), ErrorCode::kNotDivisible);
  EXPECT_EQ(CodeOf([&] { DivExact(p, LaurentPoly()); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { DivExact(LaurentPoly(3), LaurentPoly(2)); }), ErrorCode::kNotDivisible);
  EXPECT_TRUE(DivExact(LaurentPoly(), kZ).IsZero());
}

TEST(DivExactTest, RecoversFactorFromRandomProducts) {
  std::mt19937_64 rng(TestSeed() + 1);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = RandomLaurent(rng);
    LaurentPoly b = RandomLaurent(rng);
    if (b.IsZero()) b = LaurentPoly{{-2, 3}};
    EXPECT_EQ(DivExact(a * b, b), a);
  }
}

TEST(QuantumBracketTest, Examples) {
  EXPECT_EQ(QuantumBracket(1), LaurentPoly(1));
  EXPECT_EQ(QuantumBracket(2), (LaurentPoly{{-1, 1}, {1, 1}}));
  EXPECT_EQ(QuantumBracket(3), (LaurentPoly{{-2, 1}, {0, 1}, {2, 1}}));
  EXPECT_EQ(CodeOf([] { QuantumBracket(0); }), ErrorCode::kInvalidArgument);
}

TEST(QuantumBracketTest, TimesZIsDifferenceOfPowers) {
  for (int n = 1; n <= 25; ++n) {
    EXPECT_EQ(QuantumBracket(n) * kZ, (LaurentPoly{{-n, 1}, {n, -1}})) << "n = " << n;
  }
}

TEST(ZPolyTest, TrimsAndRenders) {
  const ZPoly p{1, 0, -1, 2, 0, 0};
  EXPECT_EQ(p.Degree(), 3);
  EXPECT_EQ(p.ToHuman(), "1 - z^2 + 2z^3");
  EXPECT_EQ(p.ToJson(), "[1,0,-1,2]");
  EXPECT_EQ(ZPoly().ToHuman(), "0");
  EXPECT_EQ(ZPoly().ToJson(), "[]");
  EXPECT_EQ(ZPoly().Degree(), -1);
  EXPECT_EQ((ZPoly{1, 0, 1}).ToHuman(), "1 + z^2");
  EXPECT_EQ((ZPoly{0, -1}).ToHuman(), "-z");
  EXPECT_EQ((ZPoly{0, 0, 7}).ToHuman(), "7z^2");
  EXPECT_EQ((ZPoly{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -3}).ToHuman(), "z - 3z^10");
}

TEST(ZPolyTest, Arithmetic) {
  const ZPoly a{1, 1};
  EXPECT_EQ(a * a, (ZPoly{1, 2, 1}));
  EXPECT_EQ(a - a, ZPoly());
  EXPECT_EQ(a.ShiftedUp(2), (ZPoly{0, 0, 1, 1}));
  EXPECT_EQ(-a, (ZPoly{-1, -1}));
  EXPECT_EQ(ZPoly({1, 0, 1}) - ZPoly({0, 0, 1}), ZPoly(1));
}

// Closed form F_n = sum_k C(n-1-k, k) z^(n-1-2k), n >= 1.
ZPoly FibonacciClosedForm(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n));
  for (int k = 0; 2 * k <= n - 1; ++k) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - 1 - k), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(n - 1 - 2 * k)] = binom;
  }
  return ZPoly(std::move(c));
}

TEST(FibonacciTest, Examples) {
  EXPECT_EQ(Fibonacci(0), ZPoly());
  EXPECT_EQ(Fibonacci(1), ZPoly(1));
  EXPECT_EQ(Fibonacci(2), (ZPoly{0, 1}));
  EXPECT_EQ(Fibonacci(3), (ZPoly{1, 0, 1}));
  EXPECT_EQ(Fibonacci(-3), (ZPoly{1, 0, 1}));
  EXPECT_EQ(Fibonacci(-2), (ZPoly{0, -1}));
  EXPECT_EQ(Fibonacci(4), (ZPoly{0, 2, 0, 1}));
}

TEST(FibonacciTest, MatchesBinomialClosedForm) {
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(Fibonacci(n), FibonacciClosedForm(n)) << "n = " << n;
}

TEST(FibonacciTest, NegativeIndexSignRule) {
  for (int n = 1; n <= 30; ++n) {
    const ZPoly want = n % 2 == 1 ? Fibonacci(n) : -Fibonacci(n);
    EXPECT_EQ(Fibonacci(-n), want) << "n = " << n;
  }
}

TEST(FibonacciTest, CatalanIdentity) {
  for (int n = -15; n <= 15; ++n) {
    const ZPoly lhs = Fibonacci(n + 1) * Fibonacci(n - 1) - Fibonacci(n) * Fibonacci(n);
    EXPECT_EQ(lhs, ZPoly(n % 2 == 0 ? 1 : -1)) << "n = " << n;
  }
}

TEST(FibonacciTest, LargeIndexExceedsMachineWords) {
  // The middle coefficients of F_200 are far beyond 64 bits.
  const ZPoly f = Fibonacci(200);
  EXPECT_EQ(f, FibonacciClosedForm(200));
  EXPECT_GT(f.Coefficient(67), Integer("18446744073709551616"));
}

TEST(LaurentToZTest, Examples) {
  EXPECT_EQ(LaurentToZ(LaurentPoly{{-2, 1}, {0, -2}, {2, 1}}), (ZPoly{0, 0, 1}));
  EXPECT_EQ(LaurentToZ(LaurentPoly(1)), ZPoly(1));
  EXPECT_EQ(LaurentToZ(LaurentPoly()), ZPoly());
  EXPECT_EQ(CodeOf([] { LaurentToZ(LaurentPoly{{-1, 1}, {1, 1}}); }), ErrorCode::kNotInImage);
  EXPECT_EQ(CodeOf([] { LaurentToZ(LaurentPoly{{3, 1}}); }), ErrorCode::kNotInImage);
}

TEST(LaurentToZTest, FibonacciSubstitutionIdentity) {
  for (int n = -20; n <= 20; ++n) {
    const LaurentPoly lhs = LaurentPoly::Monomial(-n) + LaurentPoly::Monomial(n, n % 2 == 0 ? 1 : -1);
    EXPECT_EQ(LaurentToZ(lhs), Fibonacci(n + 1) + Fibonacci(n - 1)) << "n = " << n;
  }
}

TEST(LaurentToZTest, RoundTripsRandomPolynomials) {
  std::mt19937_64 rng(TestSeed() + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const ZPoly q = RandomZPoly(rng, 15);
    // Horner expansion at z = 1/s - s, independent of ZToLaurent.
    LaurentPoly expanded;
    for (int d = q.Degree(); d >= 0; --d) {
      expanded = expanded * kZ + LaurentPoly::Monomial(0, q.Coefficient(d));
    }
    EXPECT_EQ(ZToLaurent(q), expanded);
    EXPECT_EQ(LaurentToZ(expanded), q);
  }
}

TEST(NonNegativeTest, Examples) {
  EXPECT_TRUE(IsNonNegative(ZPoly{1, 0, 1}));
  EXPECT_FALSE(IsNonNegative(ZPoly{1, 0, -1}));
  EXPECT_TRUE(IsNonNegative(ZPoly()));
}

}  // namespace
}  // namespace bsk
