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

// Reduced Burau representation over Z[s, 1/s] (t = s^2) and the Conway
// polynomial of a braid closure computed from it:
//
//   conway(closure w) = (-1)^(n+1) * s^(-e) / [n] * det(psi(w) - I)
//
// read in the variable z = 1/s - s. This is the reference route used to
// check every other computation in the library.

#ifndef BSK_BURAU_HPP
#define BSK_BURAU_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bsk/braid.hpp"
#include "bsk/polyring.hpp"

namespace bsk {

// Square matrix of Laurent polynomials, row-major.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(std::size_t dim = 0) : dim_(dim), entries_(dim * dim) {}

  static LaurentMatrix Identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  LaurentPoly& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const LaurentPoly& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  // Multiplies every entry by the scalar p.
  LaurentMatrix Scaled(const LaurentPoly& p) const;

  std::string ToString() const;

 private:
  std::size_t dim_;
  std::vector<LaurentPoly> entries_;
};

// Cofactor expansion along the first row.
LaurentPoly Determinant(const LaurentMatrix& m);

// Image of a braid on `strands` strands: a (strands-1) x (strands-1) matrix.
struct BurauMatrix {
  int strands = 2;
  LaurentMatrix matrix;

  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

// psi(s_i^{+-1}). The positive generator is the identity except in column i
// (1-based): -s^2 on the diagonal, s^2 just above it, 1 just below it. On two
// strands this is the 1x1 matrix (-s^2). Inverses are derived from the
// adjugate and checked against the identity the first time they are built.
// Throws kIndexOutOfRange.
const BurauMatrix& BurauGenerator(int index, int strands, Sign sign);

BurauMatrix BurauRep(const ArtinWord& w);
BurauMatrix BurauRep(const BandWord& w);

// Throws kInternalInconsistency if the exact division by [n] or the change
// of variable fails, which cannot happen for a correct representation.
ZPoly ConwayViaBurau(const ArtinWord& w);
ZPoly ConwayViaBurau(const BandWord& w);

// z * sum_{i<k} (F_{e+6i+4} + F_{e+6i+2}): the change in the Conway
// polynomial of a 3-braid closure with exponent sum e when the full twist
// (Delta^2, central in B_3) is multiplied in k >= 1 times.
ZPoly DeltaDifference(int exponent_sum, int k);

}  // namespace bsk

#endif  // BSK_BURAU_HPP
