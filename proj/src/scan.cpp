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

#include "bsk/scan.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "bsk/burau.hpp"
#include "bsk/error.hpp"

namespace bsk {

std::string ScanRecord::ToJson() const {
  std::string out = "{\"word\": \"" + word + "\", \"len\": " + std::to_string(length) +
                    ", \"conway\": " + conway.ToJson() +
                    ", \"nonneg\": " + (nonneg ? "true" : "false") +
                    ", \"agree\": " + (agree ? "true" : "false") + "}";
  return out;
}

Word3 WordAt(int length, std::uint64_t index) {
  Word3 w(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Letter3>(index % 3);
    index /= 3;
  }
  return w;
}

ScanRecord EvaluateWord(const Word3& w) {
  ScanRecord r;
  r.word = ToString(w);
  r.length = static_cast<int>(w.size());
  r.conway = ConwayViaSkein(w);
  const ZPoly burau = ConwayViaBurau(ToBandWord(w));
  r.agree = r.conway == burau;
  r.nonneg = IsNonNegative(r.conway) && IsNonNegative(burau);
  return r;
}

namespace {

// One contiguous run of words sharing a prefix.
struct Block {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::string lines;
  std::set<std::string> polynomials;
  int max_degree = -1;
  std::optional<std::string> failure;
};

void EvaluateBlock(int length, Block& block, bool keep_lines) {
  for (std::uint64_t idx = block.begin; idx < block.end; ++idx) {
    const Word3 w = WordAt(length, idx);
    ScanRecord r;
    try {
      r = EvaluateWord(w);
    } catch (const Error& e) {
      block.failure = "word '" + ToString(w) + "': " + e.what();
      return;
    }
    if (!r.agree) {
      block.failure = "word '" + r.word + "': skein value " + r.conway.ToHuman() +
                      " differs from Burau value " +
                      ConwayViaBurau(ToBandWord(w)).ToHuman();
      return;
    }
    if (!r.nonneg) {
      block.failure = "word '" + r.word + "': negative coefficient in " + r.conway.ToHuman();
      return;
    }
    if (keep_lines) {
      block.lines += r.ToJson();
      block.lines += '\n';
    }
    block.max_degree = std::max(block.max_degree, r.conway.Degree());
    block.polynomials.insert(r.conway.ToJson());
  }
}

}  // namespace

ScanSummary RunScan(const ScanOptions& options, std::ostream* out) {
  if (options.max_len < 0 || options.max_len > 30) {
    throw Error(ErrorCode::kInvalidArgument,
                "max length must be in [0, 30], got " + std::to_string(options.max_len));
  }
  const int jobs = std::max(1, options.jobs);
  ScanSummary summary;
  std::set<std::string> polynomials;

  for (int length = 0; length <= options.max_len; ++length) {
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) total *= 3;

    // Partition by prefix: 3^p blocks, enough to keep every worker busy.
    int prefix = 0;
    std::uint64_t blocks_count = 1;
    while (prefix < length && blocks_count < static_cast<std::uint64_t>(jobs) * 8) {
      ++prefix;
      blocks_count *= 3;
    }
    const std::uint64_t block_size = total / blocks_count;
    std::vector<Block> blocks(blocks_count);
    for (std::uint64_t b = 0; b < blocks_count; ++b) {
      blocks[b].begin = b * block_size;
      blocks[b].end = (b + 1) * block_size;
    }

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (std::uint64_t b = next++; b < blocks_count; b = next++) {
        EvaluateBlock(length, blocks[b], out != nullptr);
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }

    for (auto& block : blocks) {
      if (block.failure) throw Error(ErrorCode::kVerificationFailure, *block.failure);
      if (out != nullptr) *out << block.lines;
      summary.max_degree = std::max(summary.max_degree, block.max_degree);
      polynomials.merge(block.polynomials);
    }
    summary.words += total;
  }
  if (out != nullptr) {
    out->flush();
    if (!*out) throw Error(ErrorCode::kIoError, "failed writing scan records");
  }
  summary.distinct_polynomials = polynomials.size();
  return summary;
}

}  // namespace bsk
