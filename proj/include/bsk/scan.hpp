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

// Exhaustive enumeration of positive band words on three strands, checking
// the skein value against the Burau value for every word.

#ifndef BSK_SCAN_HPP
#define BSK_SCAN_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "bsk/polyring.hpp"
#include "bsk/skein3.hpp"

namespace bsk {

struct ScanRecord {
  std::string word;
  int length = 0;
  ZPoly conway;
  bool nonneg = true;
  bool agree = true;

  // {"word": "1 2 13", "len": 3, "conway": [0,2], "nonneg": true, "agree": true}
  std::string ToJson() const;
};

struct ScanSummary {
  std::uint64_t words = 0;
  std::uint64_t distinct_polynomials = 0;
  int max_degree = -1;
};

struct ScanOptions {
  int max_len = 0;
  int jobs = 1;
};

// The word of the given length at a lexicographic position, letters ordered
// 1 < 2 < 13.
Word3 WordAt(int length, std::uint64_t index);

ScanRecord EvaluateWord(const Word3& w);

// Visits lengths 0..max_len in order and, within a length, words in
// lexicographic order; records go to `out` when it is non-null. Output is
// identical for every value of `jobs`. Throws kVerificationFailure naming the
// first offending word if the two routes disagree or a coefficient is
// negative.
ScanSummary RunScan(const ScanOptions& options, std::ostream* out);

}  // namespace bsk

#endif  // BSK_SCAN_HPP
