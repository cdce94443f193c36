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

#include "bsk/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <optional>
#include <random>

#include "bsk/braid.hpp"
#include "bsk/burau.hpp"
#include "bsk/scan.hpp"
#include "bsk/skein3.hpp"

namespace bsk {

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("BSK_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSeed;
}

namespace {

// A failed check returns a message; success returns nothing.
using Check = std::optional<std::string>;

Check ExpectConway(const std::string& label, const ZPoly& got, const ZPoly& want) {
  if (got == want) return std::nullopt;
  return label + ": got " + got.ToHuman() + ", expected " + want.ToHuman();
}

ArtinWord RandomArtin3(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen(0, 3);
  std::vector<ArtinLetter> letters(static_cast<std::size_t>(len_dist(rng)));
  for (auto& l : letters) {
    const int g = gen(rng);
    l = ArtinLetter{1 + g % 2, g < 2 ? Sign::kPositive : Sign::kNegative};
  }
  return ArtinWord(3, std::move(letters));
}

// Random 3-strand word padded with s_2^{+-1} until its exponent sum is
// `target`.
ArtinWord RandomArtin3WithExponent(std::mt19937_64& rng, int max_len, int target) {
  ArtinWord w = RandomArtin3(rng, max_len);
  std::vector<ArtinLetter> letters = w.letters();
  int e = ExponentSum(w);
  while (e != target) {
    const Sign s = e > target ? Sign::kNegative : Sign::kPositive;
    letters.push_back({2, s});
    e += ToInt(s);
  }
  return ArtinWord(3, std::move(letters));
}

Check TrefoilOnTwoStrands() {
  return ExpectConway("s1^3 on 2 strands", ConwayViaBurau(ParseArtin("1 1 1", 2)),
                      ZPoly{1, 0, 1});
}

Check SixStrandCounterexample() {
  const BandWord w = ParseBand("1:6 1:6 4:6 3:5 2:4 1:3 2:5", 6);
  if (!IsBklPositive(w)) return "word is not band-positive";
  const ZPoly c = ConwayViaBurau(w);
  if (IsNonNegative(c)) return "expected a negative coefficient, got " + c.ToHuman();
  return ExpectConway("1:6 1:6 4:6 3:5 2:4 1:3 2:5", c, ZPoly{1, 0, -1});
}

Check DoubledDeltaPair() {
  if (auto f = ExpectConway("s1 s1 s1^-1 on 2 strands",
                            ConwayViaBurau(ParseArtin("1 1 -1", 2)), ZPoly{1})) {
    return f;
  }
  return ExpectConway("1:6 1:6 2:5 1:3 2:4 3:5 4:6",
                      ConwayViaBurau(ParseBand("1:6 1:6 2:5 1:3 2:4 3:5 4:6", 6)),
                      ZPoly{1, 0, 7});
}

Check FullTwistIsScalar() {
  const BurauMatrix m = BurauRep(Power(Delta(3), 2));
  if (m.matrix == LaurentMatrix::Identity(2).Scaled(LaurentPoly::Monomial(6))) return std::nullopt;
  return "psi(Delta^2) = " + m.matrix.ToString();
}

Check FibonacciChangeOfVariable() {
  for (int n = -20; n <= 20; ++n) {
    const LaurentPoly lhs = LaurentPoly::Monomial(-n) + LaurentPoly::Monomial(n, n % 2 == 0 ? 1 : -1);
    const ZPoly got = LaurentToZ(lhs);
    const ZPoly want = Fibonacci(n + 1) + Fibonacci(n - 1);
    if (got != want) {
      return "n = " + std::to_string(n) + ": " + got.ToHuman() + " vs " + want.ToHuman();
    }
  }
  return std::nullopt;
}

Check FullTwistDifference(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const ArtinWord alpha = RandomArtin3(rng, 12);
    const ZPoly base = ConwayViaBurau(alpha);
    for (int k = 1; k <= 4; ++k) {
      const ZPoly shifted = ConwayViaBurau(Concat(Power(Delta(3), 2 * k), alpha));
      const ZPoly want = DeltaDifference(ExponentSum(alpha), k);
      if (shifted - base != want) {
        return "alpha = '" + ToString(alpha) + "', k = " + std::to_string(k) + ": difference " +
               (shifted - base).ToHuman() + ", formula " + want.ToHuman();
      }
    }
  }
  return std::nullopt;
}

Check FullTwistBalancedCase(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int r = 1; r <= 4; ++r) {
    ZPoly odd_sum;
    for (int i = 0; i < r; ++i) odd_sum += Fibonacci(-3 * r + 6 * i + 4);
    const ZPoly want = r % 2 == 0 ? ZPoly{} : (ZPoly(2) * odd_sum).ShiftedUp(1);
    for (int trial = 0; trial < 50; ++trial) {
      const ArtinWord alpha = RandomArtin3WithExponent(rng, 12, -3 * r);
      const ZPoly diff =
          ConwayViaBurau(Concat(Power(Delta(3), 2 * r), alpha)) - ConwayViaBurau(alpha);
      if (diff != want) {
        return "r = " + std::to_string(r) + ", alpha = '" + ToString(alpha) + "': difference " +
               diff.ToHuman() + ", expected " + want.ToHuman();
      }
    }
  }
  return std::nullopt;
}

Check TriplePowerLeaves() {
  const Word3 unit = {Letter3::kG12, Letter3::kG23, Letter3::kG13};
  for (int k = 1; k <= 6; ++k) {
    Word3 w;
    for (int r = 0; r < k; ++r) w.insert(w.end(), unit.begin(), unit.end());
    const ZPoly leaf = LeafConway({LeafKind::Type::kTriplePower, k});
    if (k % 2 == 0 && !leaf.IsZero()) return "k = " + std::to_string(k) + ": leaf value not zero";
    if (auto f = ExpectConway("(1 2 13)^" + std::to_string(k), ConwayViaBurau(ToBandWord(w)), leaf)) {
      return f;
    }
    // Same braid as Delta^2k s_2^-3k.
    const ArtinWord twisted =
        Concat(Power(Delta(3), 2 * k), Power(ParseArtin("-2", 3), 3 * k));
    if (BurauRep(ToBandWord(w)) != BurauRep(twisted)) {
      return "k = " + std::to_string(k) + ": (1 2 13)^k and Delta^2k s2^-3k differ under Burau";
    }
  }
  return std::nullopt;
}

Check ExhaustiveScan() {
  const ScanSummary s = RunScan({9, 1}, nullptr);
  if (s.words != 29524) return "enumerated " + std::to_string(s.words) + " words, expected 29524";
  return std::nullopt;
}

struct Claim {
  const char* name;
  std::function<Check()> run;
};

}  // namespace

std::vector<ClaimResult> RunVerification(std::uint64_t seed, const ClaimCallback& on_claim) {
  const std::vector<Claim> claims = {
      {"trefoil: closure of s1^3 on 2 strands is 1 + z^2", TrefoilOnTwoStrands},
      {"six-strand counterexample: 1:6 1:6 4:6 3:5 2:4 1:3 2:5 gives 1 - z^2",
       SixStrandCounterexample},
      {"doubled-delta pair: s1 s1 s1^-1 gives 1, its image gives 1 + 7z^2", DoubledDeltaPair},
      {"full twist: psi(Delta^2) = s^6 Id on 3 strands", FullTwistIsScalar},
      {"Fibonacci substitution: s^-n + (-s)^n = F(n+1) + F(n-1), |n| <= 20",
       FibonacciChangeOfVariable},
      {"full-twist difference: 200 random 3-braids, k = 1..4",
       [seed] { return FullTwistDifference(seed); }},
      {"full-twist balanced case: e = -3r, r = 1..4, 50 words each",
       [seed] { return FullTwistBalancedCase(seed); }},
      {"(1 2 13)^k leaves: k = 1..6 against Burau", TriplePowerLeaves},
      {"positivity scan: all 29524 positive 3-band words up to length 9", ExhaustiveScan},
  };

  std::vector<ClaimResult> results;
  for (const auto& claim : claims) {
    ClaimResult r;
    r.name = claim.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Check failure = claim.run();
      r.passed = !failure.has_value();
      if (failure) r.detail = *failure;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_claim) on_claim(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace bsk
