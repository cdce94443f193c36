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

// Braid words in Artin generators s_i and band (Birman-Ko-Lee) generators
// a_ij. Words are kept exactly as written; nothing here reduces or
// normalizes them.

#ifndef BSK_BRAID_HPP
#define BSK_BRAID_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsk/error.hpp"

namespace bsk {

enum class Sign : int { kPositive = 1, kNegative = -1 };

constexpr int ToInt(Sign s) { return static_cast<int>(s); }
constexpr Sign Flip(Sign s) { return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive; }

struct ArtinLetter {
  int index = 1;  // 1 <= index <= n - 1
  Sign sign = Sign::kPositive;

  friend auto operator<=>(const ArtinLetter&, const ArtinLetter&) = default;
};

struct BandLetter {
  int i = 1;  // 1 <= i < j <= n
  int j = 2;
  Sign sign = Sign::kPositive;

  friend auto operator<=>(const BandLetter&, const BandLetter&) = default;
};

void ValidateLetter(int strands, const ArtinLetter& letter);
void ValidateLetter(int strands, const BandLetter& letter);

// A word on a fixed number of strands. The constructor checks every letter
// against the strand count, so a Word is always in range.
template <class Letter>
class Word {
 public:
  using letter_type = Letter;

  explicit Word(int strands, std::vector<Letter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "strand count must be >= 2, got " + std::to_string(strands_));
    }
    for (const auto& l : letters_) ValidateLetter(strands_, l);
  }

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

using ArtinWord = Word<ArtinLetter>;
using BandWord = Word<BandLetter>;

// "1 -2 1" -> s_1 s_2^-1 s_1. Throws kParseError or kIndexOutOfRange.
ArtinWord ParseArtin(std::string_view text, int strands);
// "1:3 -2:5" -> a_13 a_25^-1. Throws kParseError, kIndexOutOfRange or
// kNotOrdered.
BandWord ParseBand(std::string_view text, int strands);

std::string ToString(const ArtinWord& w);
std::string ToString(const BandWord& w);

// a_ij = (s_{j-2} ... s_i)^-1 s_{j-1} (s_{j-2} ... s_i); the sign of a band
// letter lands on the middle letter only.
ArtinWord BandToArtin(const BandWord& w);

bool IsBklPositive(const BandWord& w);

template <class Letter>
int ExponentSum(const Word<Letter>& w) {
  int e = 0;
  for (const auto& l : w.letters()) e += ToInt(l.sign);
  return e;
}

// Rotates letters left by k (mod length); k may be negative.
template <class Letter>
Word<Letter> CyclicRotate(const Word<Letter>& w, long k) {
  const long n = static_cast<long>(w.size());
  if (n == 0) return w;
  const long shift = ((k % n) + n) % n;
  std::vector<Letter> out(w.letters().begin() + shift, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + shift);
  return Word<Letter>(w.strands(), std::move(out));
}

template <class Letter>
Word<Letter> Concat(const Word<Letter>& a, const Word<Letter>& b) {
  if (a.strands() != b.strands()) {
    throw Error(ErrorCode::kStrandMismatch, "cannot concatenate words on " +
                                                std::to_string(a.strands()) + " and " +
                                                std::to_string(b.strands()) + " strands");
  }
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word<Letter>(a.strands(), std::move(out));
}

template <class Letter>
Word<Letter> Invert(const Word<Letter>& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.sign = Flip(l.sign);
  return Word<Letter>(w.strands(), std::move(out));
}

// w repeated k >= 0 times.
template <class Letter>
Word<Letter> Power(const Word<Letter>& w, int k) {
  std::vector<Letter> out;
  out.reserve(w.size() * static_cast<std::size_t>(k > 0 ? k : 0));
  for (int r = 0; r < k; ++r) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return Word<Letter>(w.strands(), std::move(out));
}

// Half twist (s_1)(s_2 s_1)...(s_{n-1} ... s_1).
ArtinWord Delta(int strands);

}  // namespace bsk

#endif  // BSK_BRAID_HPP
