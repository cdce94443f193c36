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

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace bsk {

LaurentMatrix LaurentMatrix::Identity(std::size_t dim) {
  LaurentMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.dim();
  LaurentMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.IsZero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const LaurentPoly& bkj = b(k, j);
        if (bkj.IsZero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

LaurentMatrix LaurentMatrix::Scaled(const LaurentPoly& p) const {
  LaurentMatrix out = *this;
  for (auto& e : out.entries_) e = e * p;
  return out;
}

std::string LaurentMatrix::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).ToString();
    }
  }
  out << ']';
  return out.str();
}

namespace {

LaurentMatrix Minor(const LaurentMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.dim();
  LaurentMatrix out(n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

}  // namespace

LaurentPoly Determinant(const LaurentMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).IsZero()) continue;
    LaurentPoly term = m(0, j) * Determinant(Minor(m, 0, j));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

namespace {

LaurentMatrix PositiveGenerator(int index, int strands) {
  const std::size_t dim = static_cast<std::size_t>(strands - 1);
  const std::size_t col = static_cast<std::size_t>(index - 1);
  LaurentMatrix m = LaurentMatrix::Identity(dim);
  m(col, col) = LaurentPoly{{2, -1}};
  if (col > 0) m(col - 1, col) = LaurentPoly{{2, 1}};
  if (col + 1 < dim) m(col + 1, col) = 1;
  return m;
}

LaurentMatrix ExactInverse(const LaurentMatrix& m) {
  const std::size_t n = m.dim();
  const LaurentPoly det = Determinant(m);
  LaurentMatrix inv(n);
  if (n == 1) {
    inv(0, 0) = DivExact(1, det);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        LaurentPoly cofactor = Determinant(Minor(m, j, i));
        if ((i + j) % 2 == 1) cofactor = -cofactor;
        inv(i, j) = DivExact(cofactor, det);
      }
    }
  }
  if (m * inv != LaurentMatrix::Identity(n)) {
    throw Error(ErrorCode::kInternalInconsistency, "generator inverse check failed");
  }
  return inv;
}

class GeneratorCache {
 public:
  const BurauMatrix& Get(int index, int strands, Sign sign) {
    const auto key = std::make_tuple(strands, index, ToInt(sign));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    LaurentMatrix positive = PositiveGenerator(index, strands);
    auto entry = std::make_unique<BurauMatrix>(BurauMatrix{
        strands, sign == Sign::kPositive ? std::move(positive) : ExactInverse(positive)});
    return *cache_.emplace(key, std::move(entry)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<const BurauMatrix>> cache_;
};

GeneratorCache& Cache() {
  static GeneratorCache cache;
  return cache;
}

}  // namespace

const BurauMatrix& BurauGenerator(int index, int strands, Sign sign) {
  if (strands < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "strand count must be >= 2, got " + std::to_string(strands));
  }
  ValidateLetter(strands, ArtinLetter{index, sign});
  return Cache().Get(index, strands, sign);
}

BurauMatrix BurauRep(const ArtinWord& w) {
  const int n = w.strands();
  // Per-call lookup table so the shared cache lock is taken once per
  // distinct letter rather than once per letter.
  std::vector<const LaurentMatrix*> table(static_cast<std::size_t>(2 * (n - 1)), nullptr);
  LaurentMatrix acc = LaurentMatrix::Identity(static_cast<std::size_t>(n - 1));
  for (const auto& l : w.letters()) {
    const std::size_t slot =
        static_cast<std::size_t>(2 * (l.index - 1) + (l.sign == Sign::kPositive ? 0 : 1));
    if (table[slot] == nullptr) table[slot] = &BurauGenerator(l.index, n, l.sign).matrix;
    acc = acc * *table[slot];
  }
  return BurauMatrix{n, std::move(acc)};
}

BurauMatrix BurauRep(const BandWord& w) { return BurauRep(BandToArtin(w)); }

ZPoly ConwayViaBurau(const ArtinWord& w) {
  const int n = w.strands();
  const BurauMatrix psi = BurauRep(w);
  LaurentPoly d = Determinant(psi.matrix - LaurentMatrix::Identity(psi.matrix.dim()));
  d = d.Shifted(-ExponentSum(w));
  if ((n + 1) % 2 != 0) d = -d;
  try {
    return LaurentToZ(DivExact(d, QuantumBracket(n)));
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternalInconsistency,
                "Burau evaluation failed for '" + ToString(w) + "': " + e.what());
  }
}

ZPoly ConwayViaBurau(const BandWord& w) { return ConwayViaBurau(BandToArtin(w)); }

ZPoly DeltaDifference(int exponent_sum, int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "twist count must be >= 1, got " + std::to_string(k));
  }
  ZPoly sum;
  for (int i = 0; i < k; ++i) {
    sum += Fibonacci(exponent_sum + 6 * i + 4);
    sum += Fibonacci(exponent_sum + 6 * i + 2);
  }
  return sum.ShiftedUp(1);
}

}  // namespace bsk
