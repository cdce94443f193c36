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

// Fixed test vectors and seeded randomized property checks for the
// published claims this library reproduces.

#ifndef BSK_VERIFY_HPP
#define BSK_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bsk {

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed3b7a1dULL;

// kDefaultSeed, unless BSK_SEED holds an unsigned integer.
std::uint64_t DefaultSeed();

using ClaimCallback = std::function<void(const ClaimResult&)>;

// Runs every claim in a fixed order, calling `on_claim` after each one.
// Claims never throw; an exception inside a check is reported as a failure.
std::vector<ClaimResult> RunVerification(std::uint64_t seed, const ClaimCallback& on_claim = {});

}  // namespace bsk

#endif  // BSK_VERIFY_HPP
