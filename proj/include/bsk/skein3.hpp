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

// Skein resolution trees for positive band words on three strands.
//
// The alphabet is {a12, a23, a13} (a12 = s_1, a23 = s_2, a13 = s_1^-1 s_2 s_1)
// written "1", "2", "13". A word with a cyclic square P x x Q splits into
// the children PQ (edge label 1) and PxQ (edge label z). A square-free word
// either is a leaf or contains a descending pair, which the relation
//
//   a23 a12 = a13 a23 = a12 a13
//
// rewrites into a square with the following letter. Every leaf is empty, a
// single letter, two distinct letters, or a rotation of (a12 a23 a13)^k, and
// every leaf has a Conway polynomial with non-negative coefficients, so the
// whole tree sums to a non-negative polynomial.

#ifndef BSK_SKEIN3_HPP
#define BSK_SKEIN3_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsk/braid.hpp"
#include "bsk/polyring.hpp"

namespace bsk {

enum class Letter3 : std::uint8_t { kG12 = 0, kG23 = 1, kG13 = 2 };

using Word3 = std::vector<Letter3>;

// The 3-cycle a12 -> a23 -> a13 -> a12.
constexpr Letter3 Successor(Letter3 l) {
  return static_cast<Letter3>((static_cast<int>(l) + 1) % 3);
}
// (a, b) is descending iff a == Successor(b): (23,12), (13,23), (12,13).
constexpr bool IsDescending(Letter3 a, Letter3 b) { return a == Successor(b); }

std::string_view LetterName(Letter3 l);
// Whitespace-separated tokens from {"1", "2", "13"}. Throws kParseError.
Word3 ParseWord3(std::string_view text);
std::string ToString(const Word3& w);
BandWord ToBandWord(const Word3& w);

struct LeafKind {
  enum class Type { kEmpty, kSingleLetter, kTwoDistinct, kTriplePower };

  Type type = Type::kEmpty;
  int power = 0;  // k for kTriplePower, else 0

  friend bool operator==(const LeafKind&, const LeafKind&) = default;
};

std::string_view LeafTypeName(LeafKind::Type t);

std::optional<LeafKind> ClassifyLeaf(const Word3& w);

// Smallest t with w[t] == w[(t+1) % len], scanning the wrap pair last.
// Words shorter than two letters have no square.
std::optional<std::size_t> FindSquare(const Word3& w);

// Smallest t whose cyclic pair (w[t], w[(t+1) % len]) is descending.
std::optional<std::size_t> FindDescending(const Word3& w);

// Replaces the descending pair at pos by the equivalent pair whose second
// letter equals w[(pos+2) % len]. Requires len >= 3; throws kNotDescending
// if the pair at pos is not descending.
Word3 RewriteDescending(const Word3& w, std::size_t pos);

// Square at pos (rotated to be non-wrapping first) -> (PQ, PxQ). Throws
// kNoSquare.
std::pair<Word3, Word3> SplitSquare(const Word3& w, std::size_t pos);

ZPoly LeafConway(const LeafKind& leaf);

enum class EdgeLabel { kRoot, kOne, kZ };

struct ResolutionNode {
  Word3 word;
  EdgeLabel label = EdgeLabel::kRoot;
  int depth = 0;
  int z_power = 0;  // degree of the path monomial from the root
  std::optional<LeafKind> leaf;
  // Internal nodes: the equivalent word that was split and its square.
  Word3 split_form;
  std::size_t square_at = 0;
  int left = -1;
  int right = -1;
};

class ResolutionTree {
 public:
  const std::vector<ResolutionNode>& nodes() const { return nodes_; }
  const ResolutionNode& root() const { return nodes_.front(); }

  // Sum over leaves of z^(path length in z) * LeafConway(leaf).
  ZPoly Value() const;
  std::size_t LeafCount() const;
  int Depth() const;

  std::string ToJson() const;
  std::string ToDot() const;

 private:
  friend ResolutionTree Resolve(const Word3& w);

  std::vector<ResolutionNode> nodes_;
};

// Deterministic: squares first, leftmost first; otherwise the leftmost
// descending pair. Throws kUnresolvable if neither applies to a non-leaf,
// which would mean the construction is incomplete.
ResolutionTree Resolve(const Word3& w);

ZPoly ConwayViaSkein(const Word3& w);

}  // namespace bsk

#endif  // BSK_SKEIN3_HPP
