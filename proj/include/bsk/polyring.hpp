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

// Exact integer polynomial arithmetic.
//
// LaurentPoly lives in Z[s, 1/s] and is stored sparsely; ZPoly lives in Z[z]
// and is stored densely by degree. The two rings are linked by the change of
// variable z = 1/s - s (see LaurentToZ and ZToLaurent).

#ifndef BSK_POLYRING_HPP
#define BSK_POLYRING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bsk {

using Integer = mpz_class;

class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  // The constant polynomial c.
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  // Pairs of (exponent, coefficient); repeated exponents accumulate.
  LaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  static LaurentPoly Monomial(int exponent, Integer coefficient = 1);

  bool IsZero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of s^exponent (zero when absent).
  Integer Coefficient(int exponent) const;
  // Precondition: !IsZero().
  int MinExponent() const { return terms_.begin()->first; }
  int MaxExponent() const { return terms_.rbegin()->first; }

  // Multiplies by s^k.
  LaurentPoly Shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Readable form, e.g. "s^-2 + 1 + s^2".
  std::string ToString() const;

 private:
  void AddTerm(int exponent, const Integer& coefficient);

  TermMap terms_;
};

// q with q * den == num exactly. Throws kNotDivisible when no such q exists
// in Z[s, 1/s], kInvalidArgument when den is zero.
LaurentPoly DivExact(const LaurentPoly& num, const LaurentPoly& den);

// [n] = (s^-n - s^n) / (s^-1 - s) = sum_{i<n} s^(2i - n + 1). Requires n >= 1.
LaurentPoly QuantumBracket(int n);

class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long c);  // NOLINT(google-explicit-constructor)
  // Coefficients indexed by degree; trailing zeros are trimmed.
  explicit ZPoly(std::vector<Integer> coefficients);
  ZPoly(std::initializer_list<long> coefficients);

  static ZPoly Monomial(int degree, Integer coefficient = 1);

  bool IsZero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int Degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer Coefficient(int degree) const;

  // Multiplies by z^k, k >= 0.
  ZPoly ShiftedUp(int k) const;

  ZPoly& operator+=(const ZPoly& other);
  ZPoly& operator-=(const ZPoly& other);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(ZPoly a);

  friend bool operator==(const ZPoly& a, const ZPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Ascending human form: "1 - z^2 + 2z^3"; the zero polynomial is "0".
  std::string ToHuman() const;
  // JSON array of coefficients by degree: "[1,0,-1]"; zero is "[]".
  std::string ToJson() const;

 private:
  void Trim();

  std::vector<Integer> coeffs_;
};

// F_0 = 0, F_1 = 1, F_n = z F_{n-1} + F_{n-2}; F_{-n} = (-1)^(n+1) F_n.
ZPoly Fibonacci(int n);

// The unique q with q(1/s - s) == p. Throws kNotInImage otherwise.
ZPoly LaurentToZ(const LaurentPoly& p);

// Substitutes z = 1/s - s.
LaurentPoly ZToLaurent(const ZPoly& q);

// True iff every coefficient is >= 0.
bool IsNonNegative(const ZPoly& p);

}  // namespace bsk

#endif  // BSK_POLYRING_HPP
