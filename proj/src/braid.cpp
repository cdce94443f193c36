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

#include "bsk/braid.hpp"

#include <charconv>
#include <sstream>

namespace bsk {

namespace {

std::vector<std::string_view> Tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    if (end > pos) out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool ParseInt(std::string_view token, int& value) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void BadToken(std::string_view token, const std::string& why) {
  throw Error(ErrorCode::kParseError, "bad token '" + std::string(token) + "': " + why);
}

}  // namespace

void ValidateLetter(int strands, const ArtinLetter& letter) {
  if (letter.index < 1 || letter.index > strands - 1) {
    throw Error(ErrorCode::kIndexOutOfRange, "generator index " + std::to_string(letter.index) +
                                                 " out of range for " + std::to_string(strands) +
                                                 " strands");
  }
}

void ValidateLetter(int strands, const BandLetter& letter) {
  if (letter.i < 1 || letter.j < 1 || letter.i > strands || letter.j > strands) {
    throw Error(ErrorCode::kIndexOutOfRange, "band generator " + std::to_string(letter.i) + ":" +
                                                 std::to_string(letter.j) + " out of range for " +
                                                 std::to_string(strands) + " strands");
  }
  if (letter.i >= letter.j) {
    throw Error(ErrorCode::kNotOrdered, "band generator " + std::to_string(letter.i) + ":" +
                                            std::to_string(letter.j) + " needs i < j");
  }
}

ArtinWord ParseArtin(std::string_view text, int strands) {
  std::vector<ArtinLetter> letters;
  for (auto token : Tokens(text)) {
    int k = 0;
    if (!ParseInt(token, k)) BadToken(token, "expected a signed integer");
    if (k == 0) BadToken(token, "generator index 0 does not exist");
    const ArtinLetter letter{k > 0 ? k : -k, k > 0 ? Sign::kPositive : Sign::kNegative};
    if (strands >= 2) {
      try {
        ValidateLetter(strands, letter);
      } catch (const Error& e) {
        throw Error(e.code(), "token '" + std::string(token) + "': " + e.what());
      }
    }
    letters.push_back(letter);
  }
  return ArtinWord(strands, std::move(letters));
}

BandWord ParseBand(std::string_view text, int strands) {
  std::vector<BandLetter> letters;
  for (auto token : Tokens(text)) {
    std::string_view body = token;
    Sign sign = Sign::kPositive;
    if (!body.empty() && body.front() == '-') {
      sign = Sign::kNegative;
      body.remove_prefix(1);
    }
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) BadToken(token, "expected i:j");
    int i = 0;
    int j = 0;
    if (!ParseInt(body.substr(0, colon), i) || !ParseInt(body.substr(colon + 1), j) ||
        body.substr(0, colon).front() == '-' || body.substr(colon + 1).front() == '-') {
      BadToken(token, "expected i:j with positive integers");
    }
    const BandLetter letter{i, j, sign};
    if (strands >= 2) {
      try {
        ValidateLetter(strands, letter);
      } catch (const Error& e) {
        throw Error(e.code(), "token '" + std::string(token) + "': " + e.what());
      }
    }
    letters.push_back(letter);
  }
  return BandWord(strands, std::move(letters));
}

std::string ToString(const ArtinWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out << ' ';
    out << ToInt(l.sign) * l.index;
    first = false;
  }
  return out.str();
}

std::string ToString(const BandWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out << ' ';
    if (l.sign == Sign::kNegative) out << '-';
    out << l.i << ':' << l.j;
    first = false;
  }
  return out.str();
}

ArtinWord BandToArtin(const BandWord& w) {
  std::vector<ArtinLetter> out;
  for (const auto& l : w.letters()) {
    // Conjugator c = s_{j-2} s_{j-3} ... s_i; emit c^-1 s_{j-1}^{+-1} c.
    for (int k = l.i; k <= l.j - 2; ++k) out.push_back({k, Sign::kNegative});
    out.push_back({l.j - 1, l.sign});
    for (int k = l.j - 2; k >= l.i; --k) out.push_back({k, Sign::kPositive});
  }
  return ArtinWord(w.strands(), std::move(out));
}

bool IsBklPositive(const BandWord& w) {
  for (const auto& l : w.letters()) {
    if (l.sign != Sign::kPositive) return false;
  }
  return true;
}

ArtinWord Delta(int strands) {
  std::vector<ArtinLetter> out;
  for (int top = 1; top <= strands - 1; ++top) {
    for (int k = top; k >= 1; --k) out.push_back({k, Sign::kPositive});
  }
  return ArtinWord(strands, std::move(out));
}

}  // namespace bsk
