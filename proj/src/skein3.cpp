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

#include "bsk/skein3.hpp"

#include <algorithm>
#include <sstream>

#include "bsk/error.hpp"

namespace bsk {

std::string_view LetterName(Letter3 l) {
  switch (l) {
    case Letter3::kG12: return "1";
    case Letter3::kG23: return "2";
    case Letter3::kG13: return "13";
  }
  return "?";
}

Word3 ParseWord3(std::string_view text) {
  Word3 out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") {
      out.push_back(Letter3::kG12);
    } else if (token == "2") {
      out.push_back(Letter3::kG23);
    } else if (token == "13") {
      out.push_back(Letter3::kG13);
    } else {
      throw Error(ErrorCode::kParseError,
                  "bad token '" + token + "': expected one of 1, 2, 13");
    }
  }
  return out;
}

std::string ToString(const Word3& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += LetterName(w[i]);
  }
  return out;
}

BandWord ToBandWord(const Word3& w) {
  std::vector<BandLetter> letters;
  letters.reserve(w.size());
  for (Letter3 l : w) {
    switch (l) {
      case Letter3::kG12: letters.push_back({1, 2, Sign::kPositive}); break;
      case Letter3::kG23: letters.push_back({2, 3, Sign::kPositive}); break;
      case Letter3::kG13: letters.push_back({1, 3, Sign::kPositive}); break;
    }
  }
  return BandWord(3, std::move(letters));
}

std::string_view LeafTypeName(LeafKind::Type t) {
  switch (t) {
    case LeafKind::Type::kEmpty: return "Empty";
    case LeafKind::Type::kSingleLetter: return "SingleLetter";
    case LeafKind::Type::kTwoDistinct: return "TwoDistinct";
    case LeafKind::Type::kTriplePower: return "TriplePower";
  }
  return "?";
}

std::optional<LeafKind> ClassifyLeaf(const Word3& w) {
  const std::size_t n = w.size();
  if (n == 0) return LeafKind{LeafKind::Type::kEmpty, 0};
  if (n == 1) return LeafKind{LeafKind::Type::kSingleLetter, 0};
  if (n == 2) {
    if (w[0] != w[1]) return LeafKind{LeafKind::Type::kTwoDistinct, 0};
    return std::nullopt;
  }
  if (n % 3 != 0) return std::nullopt;
  // The pattern has period 3, so three rotations cover every case.
  for (std::size_t r = 0; r < 3; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = w[(i + r) % n] == static_cast<Letter3>(i % 3);
    }
    if (match) return LeafKind{LeafKind::Type::kTriplePower, static_cast<int>(n / 3)};
  }
  return std::nullopt;
}

std::optional<std::size_t> FindSquare(const Word3& w) {
  const std::size_t n = w.size();
  if (n < 2) return std::nullopt;
  for (std::size_t t = 0; t < n; ++t) {
    if (w[t] == w[(t + 1) % n]) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> FindDescending(const Word3& w) {
  const std::size_t n = w.size();
  if (n < 2) return std::nullopt;
  for (std::size_t t = 0; t < n; ++t) {
    if (IsDescending(w[t], w[(t + 1) % n])) return t;
  }
  return std::nullopt;
}

Word3 RewriteDescending(const Word3& w, std::size_t pos) {
  const std::size_t n = w.size();
  if (n < 3 || pos >= n) {
    throw Error(ErrorCode::kInvalidArgument, "rewrite needs a word of length >= 3 and pos < length");
  }
  const std::size_t second = (pos + 1) % n;
  if (!IsDescending(w[pos], w[second])) {
    throw Error(ErrorCode::kNotDescending,
                "pair at " + std::to_string(pos) + " of '" + ToString(w) + "' is not descending");
  }
  const Letter3 next = w[(pos + 2) % n];
  Word3 out = w;
  out[pos] = Successor(next);
  out[second] = next;
  return out;
}

namespace {

// Rotates a wrapping square to the front; returns the word and the square's
// new position.
std::pair<Word3, std::size_t> Unwrap(const Word3& w, std::size_t pos) {
  const std::size_t n = w.size();
  if (n < 2 || pos >= n || w[pos] != w[(pos + 1) % n]) {
    throw Error(ErrorCode::kNoSquare, "no square at " + std::to_string(pos) + " of '" + ToString(w) + "'");
  }
  if (pos + 1 < n) return {w, pos};
  Word3 rotated;
  rotated.reserve(n);
  rotated.push_back(w[pos]);
  rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  return {std::move(rotated), 0};
}

ResolutionNode MakeNode(Word3 word, EdgeLabel label, int depth, int z_power) {
  ResolutionNode n;
  n.word = std::move(word);
  n.label = label;
  n.depth = depth;
  n.z_power = z_power;
  return n;
}

}  // namespace

std::pair<Word3, Word3> SplitSquare(const Word3& w, std::size_t pos) {
  auto [word, at] = Unwrap(w, pos);
  const auto p_end = word.begin() + static_cast<std::ptrdiff_t>(at);
  Word3 deleted(word.begin(), p_end);
  deleted.insert(deleted.end(), p_end + 2, word.end());
  Word3 smoothed(word.begin(), p_end + 1);
  smoothed.insert(smoothed.end(), p_end + 2, word.end());
  return {std::move(deleted), std::move(smoothed)};
}

ZPoly LeafConway(const LeafKind& leaf) {
  switch (leaf.type) {
    case LeafKind::Type::kEmpty:
    case LeafKind::Type::kSingleLetter:
      return {};
    case LeafKind::Type::kTwoDistinct:
      return ZPoly(1);
    case LeafKind::Type::kTriplePower: {
      const int k = leaf.power;
      if (k % 2 == 0) return {};
      ZPoly sum;
      for (int i = 0; i < k; ++i) sum += Fibonacci(-3 * k + 6 * i + 4);
      return (ZPoly(2) * sum).ShiftedUp(1);
    }
  }
  return {};
}

ResolutionTree Resolve(const Word3& w) {
  ResolutionTree tree;
  auto& nodes = tree.nodes_;
  nodes.push_back(MakeNode(w, EdgeLabel::kRoot, 0, 0));
  std::vector<int> pending{0};
  while (!pending.empty()) {
    const int idx = pending.back();
    pending.pop_back();
    const Word3 word = nodes[static_cast<std::size_t>(idx)].word;

    if (auto leaf = ClassifyLeaf(word)) {
      nodes[static_cast<std::size_t>(idx)].leaf = *leaf;
      continue;
    }

    Word3 form = word;
    std::size_t square;
    if (auto sq = FindSquare(word)) {
      square = *sq;
    } else if (auto desc = FindDescending(word)) {
      form = RewriteDescending(word, *desc);
      square = (*desc + 1) % word.size();
    } else {
      throw Error(ErrorCode::kUnresolvable, "no split applies to '" + ToString(word) + "'");
    }
    auto [unwrapped, at] = Unwrap(form, square);
    auto [deleted, smoothed] = SplitSquare(unwrapped, at);

    const ResolutionNode& parent = nodes[static_cast<std::size_t>(idx)];
    ResolutionNode left = MakeNode(std::move(deleted), EdgeLabel::kOne, parent.depth + 1, parent.z_power);
    ResolutionNode right =
        MakeNode(std::move(smoothed), EdgeLabel::kZ, parent.depth + 1, parent.z_power + 1);
    const int left_idx = static_cast<int>(nodes.size());
    nodes[static_cast<std::size_t>(idx)].split_form = std::move(unwrapped);
    nodes[static_cast<std::size_t>(idx)].square_at = at;
    nodes[static_cast<std::size_t>(idx)].left = left_idx;
    nodes[static_cast<std::size_t>(idx)].right = left_idx + 1;
    nodes.push_back(std::move(left));
    nodes.push_back(std::move(right));
    pending.push_back(left_idx + 1);
    pending.push_back(left_idx);
  }
  return tree;
}

ZPoly ResolutionTree::Value() const {
  ZPoly total;
  for (const auto& node : nodes_) {
    if (node.leaf) total += LeafConway(*node.leaf).ShiftedUp(node.z_power);
  }
  return total;
}

std::size_t ResolutionTree::LeafCount() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const ResolutionNode& n) { return n.leaf.has_value(); }));
}

int ResolutionTree::Depth() const {
  int depth = 0;
  for (const auto& node : nodes_) depth = std::max(depth, node.depth);
  return depth;
}

namespace {

std::string_view LabelName(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::kRoot: return "root";
    case EdgeLabel::kOne: return "1";
    case EdgeLabel::kZ: return "z";
  }
  return "?";
}

std::string LettersJson(const Word3& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += LetterName(w[i]);
    out += '"';
  }
  out += ']';
  return out;
}

void NodeJson(const std::vector<ResolutionNode>& nodes, int idx, std::string& out) {
  const ResolutionNode& n = nodes[static_cast<std::size_t>(idx)];
  out += "{\"word\":";
  out += LettersJson(n.word);
  out += ",\"label\":\"";
  out += LabelName(n.label);
  out += "\",\"monomial\":" + std::to_string(n.z_power);
  if (n.leaf) {
    out += ",\"leaf\":{\"kind\":\"";
    out += LeafTypeName(n.leaf->type);
    out += '"';
    if (n.leaf->type == LeafKind::Type::kTriplePower) out += ",\"k\":" + std::to_string(n.leaf->power);
    out += ",\"value\":" + LeafConway(*n.leaf).ToJson() + "}";
  } else {
    out += ",\"split\":{\"form\":" + LettersJson(n.split_form) +
           ",\"square_at\":" + std::to_string(n.square_at) + "}";
    out += ",\"children\":[";
    NodeJson(nodes, n.left, out);
    out += ',';
    NodeJson(nodes, n.right, out);
    out += ']';
  }
  out += '}';
}

std::string DotWord(const Word3& w) { return w.empty() ? std::string("(empty)") : ToString(w); }

}  // namespace

std::string ResolutionTree::ToJson() const {
  std::string out = "{\"word\":\"" + ToString(root().word) + "\",\"tree\":";
  NodeJson(nodes_, 0, out);
  out += ",\"leaves\":" + std::to_string(LeafCount());
  out += ",\"value\":" + Value().ToJson() + "}";
  return out;
}

std::string ResolutionTree::ToDot() const {
  std::ostringstream out;
  out << "digraph resolution {\n";
  out << "  label=\"conway = " << Value().ToHuman() << "\";\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const ResolutionNode& n = nodes_[i];
    out << "  n" << i << " [label=\"" << DotWord(n.word);
    if (n.leaf) {
      out << "\\n" << LeafTypeName(n.leaf->type);
      if (n.leaf->type == LeafKind::Type::kTriplePower) out << "(" << n.leaf->power << ")";
      out << ": " << LeafConway(*n.leaf).ToHuman() << "\", shape=ellipse";
    } else if (n.split_form != n.word) {
      out << "\\n= " << DotWord(n.split_form) << "\"";
    } else {
      out << "\"";
    }
    out << "];\n";
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const ResolutionNode& n = nodes_[i];
    if (n.leaf) continue;
    out << "  n" << i << " -> n" << n.left << " [label=\"1\"];\n";
    out << "  n" << i << " -> n" << n.right << " [label=\"z\"];\n";
  }
  out << "}\n";
  return out.str();
}

ZPoly ConwayViaSkein(const Word3& w) { return Resolve(w).Value(); }

}  // namespace bsk
