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

#include "bsk/burau.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace bsk {
namespace {

using testing::CodeOf;
using testing::RandomArtin;
using testing::RandomBand;
using testing::RandomLaurent;
using testing::TestSeed;

const LaurentPoly kS2{{2, 1}};
const LaurentPoly kMinusS2{{2, -1}};

LaurentMatrix Mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  LaurentMatrix m(2);
  m(0, 0) = std::move(a);
  m(0, 1) = std::move(b);
  m(1, 0) = std::move(c);
  m(1, 1) = std::move(d);
  return m;
}

// The two 3-strand generator images, written out by hand.
const LaurentMatrix kB1 = Mat2(kMinusS2, 0, 1, 1);
const LaurentMatrix kB2 = Mat2(1, kS2, 0, kMinusS2);
const LaurentMatrix kB1Inv = Mat2(LaurentPoly{{-2, -1}}, 0, LaurentPoly{{-2, 1}}, 1);

// Leibniz formula: sum over permutations, independent of cofactor expansion.
LaurentPoly LeibnizDeterminant(const LaurentMatrix& m) {
  std::vector<std::size_t> perm(m.dim());
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    LaurentPoly term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    if (inversions % 2) {
      det -= term;
    } else {
      det += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

TEST(DeterminantTest, MatchesLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(TestSeed());
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      LaurentMatrix m(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = RandomLaurent(rng, 3, 3);
      }
      EXPECT_EQ(Determinant(m), LeibnizDeterminant(m)) << m.ToString();
    }
  }
}

TEST(BurauGeneratorTest, ThreeStrandMatricesAsPrinted) {
  EXPECT_EQ(BurauGenerator(1, 3, Sign::kPositive).matrix, kB1);
  EXPECT_EQ(BurauGenerator(2, 3, Sign::kPositive).matrix, kB2);
  EXPECT_EQ(BurauGenerator(1, 3, Sign::kNegative).matrix, kB1Inv);
  EXPECT_EQ(BurauGenerator(1, 3, Sign::kNegative).matrix * BurauGenerator(1, 3, Sign::kPositive).matrix,
            LaurentMatrix::Identity(2));
}

TEST(BurauGeneratorTest, TwoStrandsIsMinusSSquared) {
  const LaurentMatrix& m = BurauGenerator(1, 2, Sign::kPositive).matrix;
  ASSERT_EQ(m.dim(), 1u);
  EXPECT_EQ(m(0, 0), kMinusS2);
  EXPECT_EQ(BurauGenerator(1, 2, Sign::kNegative).matrix(0, 0), (LaurentPoly{{-2, -1}}));
}

TEST(BurauGeneratorTest, InteriorBlockLayout) {
  // On 6 strands, s_3 differs from the identity in column 3 only.
  const LaurentMatrix& m = BurauGenerator(3, 6, Sign::kPositive).matrix;
  ASSERT_EQ(m.dim(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      LaurentPoly want = i == j ? LaurentPoly(1) : LaurentPoly();
      if (j == 2) {
        if (i == 1) want = kS2;
        if (i == 2) want = kMinusS2;
        if (i == 3) want = 1;
      }
      EXPECT_EQ(m(i, j), want) << "entry " << i << "," << j;
    }
  }
}

TEST(BurauGeneratorTest, InversesComposeToIdentity) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto& pos = BurauGenerator(i, n, Sign::kPositive).matrix;
      const auto& neg = BurauGenerator(i, n, Sign::kNegative).matrix;
      EXPECT_EQ(pos * neg, LaurentMatrix::Identity(static_cast<std::size_t>(n - 1)));
      EXPECT_EQ(neg * pos, LaurentMatrix::Identity(static_cast<std::size_t>(n - 1)));
    }
  }
}

TEST(BurauGeneratorTest, Errors) {
  EXPECT_EQ(CodeOf([] { BurauGenerator(3, 3, Sign::kPositive); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([] { BurauGenerator(0, 3, Sign::kPositive); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([] { BurauGenerator(1, 1, Sign::kPositive); }), ErrorCode::kInvalidArgument);
}

TEST(BurauGeneratorTest, ConcurrentFirstUseIsConsistent) {
  std::vector<std::thread> threads;
  std::vector<const BurauMatrix*> seen(8, nullptr);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = &BurauGenerator(4, 11, Sign::kNegative); });
  }
  for (auto& th : threads) th.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
}

TEST(BurauRepTest, Examples) {
  EXPECT_EQ(BurauRep(ArtinWord(3)).matrix, LaurentMatrix::Identity(2));
  EXPECT_EQ(BurauRep(Power(Delta(3), 2)).matrix,
            LaurentMatrix::Identity(2).Scaled(LaurentPoly{{6, 1}}));
  // s2 s1 = a13 s2 = s1 a13, products written out by hand.
  const LaurentMatrix s2s1 = kB2 * kB1;
  EXPECT_EQ(BurauRep(ParseArtin("2 1", 3)).matrix, s2s1);
  EXPECT_EQ(BurauRep(ParseBand("1:2 1:3", 3)).matrix, s2s1);
  EXPECT_EQ(BurauRep(ParseBand("1:3 2:3", 3)).matrix, s2s1);
  EXPECT_EQ(kB1Inv * kB2 * kB1 * kB2, s2s1);
}

TEST(BurauRepTest, BraidRelationsHold) {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (i == j) continue;
        const ArtinWord si(n, {{i, Sign::kPositive}});
        const ArtinWord sj(n, {{j, Sign::kPositive}});
        if (std::abs(i - j) == 1) {
          EXPECT_EQ(BurauRep(Concat(Concat(si, sj), si)), BurauRep(Concat(Concat(sj, si), sj)))
              << "n=" << n << " i=" << i << " j=" << j;
        } else {
          EXPECT_EQ(BurauRep(Concat(si, sj)), BurauRep(Concat(sj, si)))
              << "n=" << n << " i=" << i << " j=" << j;
        }
      }
    }
  }
}

TEST(BurauRepTest, BandRelationsHold) {
  // a_st a_rs = a_rt a_st = a_rs a_rt for r < s < t.
  for (int n = 3; n <= 6; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int s = r + 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
          const BandWord st(n, {{s, t, Sign::kPositive}});
          const BandWord rs(n, {{r, s, Sign::kPositive}});
          const BandWord rt(n, {{r, t, Sign::kPositive}});
          const BurauMatrix a = BurauRep(Concat(st, rs));
          EXPECT_EQ(a, BurauRep(Concat(rt, st)));
          EXPECT_EQ(a, BurauRep(Concat(rs, rt)));
        }
      }
    }
  }
}

TEST(BurauRepTest, DeterminantIsPowerOfMinusSSquared) {
  std::mt19937_64 rng(TestSeed() + 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const ArtinWord w = RandomArtin(rng, n, 10);
    const int e = ExponentSum(w);
    const LaurentPoly want = LaurentPoly::Monomial(2 * e, e % 2 == 0 ? 1 : -1);
    EXPECT_EQ(Determinant(BurauRep(w).matrix), want) << ToString(w);
  }
}

TEST(ConwayViaBurauTest, KnownClosures) {
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1", 2)), ZPoly(1));
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 1 1", 2)), (ZPoly{1, 0, 1}));
  EXPECT_EQ(ConwayViaBurau(ParseArtin("", 2)), ZPoly());       // two-component unlink
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 1", 2)), (ZPoly{0, 1}));  // Hopf link
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 2 1 2", 3)), (ZPoly{1, 0, 1}));
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 -2 1 -2", 3)), (ZPoly{1, 0, -1}));  // figure eight
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 1 1 1 1", 2)), (ZPoly{1, 0, 3, 0, 1}));  // 5_1
  EXPECT_EQ(ConwayViaBurau(ParseArtin("-2 -2 -2 -1 2 -1", 3)), (ZPoly{1, 0, 2}));  // 5_2
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 2 3", 4)), ZPoly(1));
}

TEST(ConwayViaBurauTest, PublishedBandBraids) {
  EXPECT_EQ(ConwayViaBurau(ParseBand("1:6 1:6 4:6 3:5 2:4 1:3 2:5", 6)), (ZPoly{1, 0, -1}));
  EXPECT_EQ(ConwayViaBurau(ParseBand("1:6 1:6 2:5 1:3 2:4 3:5 4:6", 6)), (ZPoly{1, 0, 7}));
  EXPECT_EQ(ConwayViaBurau(ParseArtin("1 1 -1", 2)), ZPoly(1));
}

// Skein relation on Artin words: C(P s Q) - C(P s^-1 Q) = z C(P Q).
TEST(ConwayViaBurauTest, SatisfiesSkeinRelation) {
  std::mt19937_64 rng(TestSeed() + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const ArtinWord p = RandomArtin(rng, n, 6);
    const ArtinWord q = RandomArtin(rng, n, 6);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const ArtinWord plus = Concat(Concat(p, ArtinWord(n, {{i, Sign::kPositive}})), q);
    const ArtinWord minus = Concat(Concat(p, ArtinWord(n, {{i, Sign::kNegative}})), q);
    EXPECT_EQ(ConwayViaBurau(plus) - ConwayViaBurau(minus), ConwayViaBurau(Concat(p, q)).ShiftedUp(1))
        << ToString(plus);
  }
}

TEST(ConwayViaBurauTest, InvariantUnderConjugationAndStabilization) {
  std::mt19937_64 rng(TestSeed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const ArtinWord w = RandomArtin(rng, n, 8);
    const ZPoly c = ConwayViaBurau(w);
    EXPECT_EQ(ConwayViaBurau(CyclicRotate(w, static_cast<long>(rng() % 9))), c);
    std::vector<ArtinLetter> letters = w.letters();
    letters.push_back({n, rng() % 2 ? Sign::kPositive : Sign::kNegative});
    EXPECT_EQ(ConwayViaBurau(ArtinWord(n + 1, letters)), c) << ToString(w);
  }
}

TEST(ConwayViaBurauTest, BandWordsMatchTheirArtinExpansion) {
  std::mt19937_64 rng(TestSeed() + 4);
  for (int trial = 0; trial < 50; ++trial) {
    const BandWord w = RandomBand(rng, 5, 6);
    EXPECT_EQ(ConwayViaBurau(w), ConwayViaBurau(BandToArtin(w)));
  }
}

TEST(DeltaDifferenceTest, Examples) {
  // F4 = z^3 + 2z, F2 = z.
  EXPECT_EQ(DeltaDifference(0, 1), (ZPoly{0, 0, 3, 0, 1}));
  EXPECT_EQ(DeltaDifference(-3, 1), (ZPoly{0, 2}));
  EXPECT_EQ(DeltaDifference(-6, 2), ZPoly());
  EXPECT_EQ(CodeOf([] { DeltaDifference(0, 0); }), ErrorCode::kInvalidArgument);
}

TEST(DeltaDifferenceTest, MatchesBurauOnRandomThreeBraids) {
  std::mt19937_64 rng(TestSeed() + 5);
  for (int trial = 0; trial < 100; ++trial) {
    const ArtinWord alpha = RandomArtin(rng, 3, 12);
    const ZPoly base = ConwayViaBurau(alpha);
    for (int k = 1; k <= 4; ++k) {
      const ZPoly twisted = ConwayViaBurau(Concat(Power(Delta(3), 2 * k), alpha));
      EXPECT_EQ(twisted - base, DeltaDifference(ExponentSum(alpha), k))
          << ToString(alpha) << " k=" << k;
    }
  }
}

TEST(DeltaDifferenceTest, BalancedExponentParityCases) {
  std::mt19937_64 rng(TestSeed() + 6);
  for (int r = 1; r <= 4; ++r) {
    ZPoly sum;
    for (int i = 0; i < r; ++i) sum += Fibonacci(-3 * r + 6 * i + 4);
    const ZPoly odd_case = (ZPoly(2) * sum).ShiftedUp(1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ArtinLetter> letters = RandomArtin(rng, 3, 12).letters();
      int e = 0;
      for (const auto& l : letters) e += ToInt(l.sign);
      for (; e > -3 * r; --e) letters.push_back({2, Sign::kNegative});
      for (; e < -3 * r; ++e) letters.push_back({2, Sign::kPositive});
      const ArtinWord alpha(3, letters);
      const ZPoly diff = ConwayViaBurau(Concat(Power(Delta(3), 2 * r), alpha)) - ConwayViaBurau(alpha);
      EXPECT_EQ(diff, r % 2 == 0 ? ZPoly() : odd_case) << "r=" << r << " " << ToString(alpha);
      EXPECT_EQ(diff, DeltaDifference(-3 * r, r));
    }
  }
}

}  // namespace
}  // namespace bsk
