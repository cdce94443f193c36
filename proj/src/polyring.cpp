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

#include "bsk/polyring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "bsk/error.hpp"

namespace bsk {

namespace {

// Appends "c<var>^d"-style terms in the shared +/- layout.
void AppendTerm(std::ostringstream& out, bool first, const Integer& c,
                const std::string& monomial) {
  const bool negative = sgn(c) < 0;
  Integer magnitude = abs(c);
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude.get_str();
  } else {
    if (magnitude != 1) out << magnitude.get_str();
    out << monomial;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) AddTerm(e, Integer(c));
}

LaurentPoly LaurentPoly::Monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  p.AddTerm(exponent, coefficient);
  return p;
}

Integer LaurentPoly::Coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::AddTerm(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::Shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.IsZero() || b.IsZero()) return out;
  Integer product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.AddTerm(ea + eb, product);
    }
  }
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    if (e == 1) {
      mono = "s";
    } else if (e != 0) {
      mono = "s^" + std::to_string(e);
    }
    AppendTerm(out, first, c, mono);
    first = false;
  }
  return out.str();
}

LaurentPoly DivExact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  }
  LaurentPoly quotient;
  if (num.IsZero()) return quotient;

  const int den_low = den.MinExponent();
  const Integer& den_lead = den.terms().begin()->second;
  // Any quotient term has exponent <= this bound.
  const int max_quotient_exp = num.MaxExponent() - den.MaxExponent();

  LaurentPoly remainder = num;
  while (!remainder.IsZero()) {
    const int q_exp = remainder.MinExponent() - den_low;
    const Integer& r_lead = remainder.terms().begin()->second;
    if (q_exp > max_quotient_exp || !mpz_divisible_p(r_lead.get_mpz_t(), den_lead.get_mpz_t())) {
      throw Error(ErrorCode::kNotDivisible,
                  "(" + num.ToString() + ") is not divisible by (" + den.ToString() + ")");
    }
    Integer q_coef = r_lead / den_lead;
    LaurentPoly term = LaurentPoly::Monomial(q_exp, q_coef);
    remainder -= term * den;
    quotient += term;
  }
  return quotient;
}

LaurentPoly QuantumBracket(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "quantum bracket needs n >= 1, got " + std::to_string(n));
  }
  LaurentPoly out;
  for (int i = 0; i < n; ++i) out += LaurentPoly::Monomial(2 * i - (n - 1));
  return out;
}

// ---------------------------------------------------------------------------
// ZPoly

ZPoly::ZPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

ZPoly::ZPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { Trim(); }

ZPoly::ZPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  Trim();
}

ZPoly ZPoly::Monomial(int degree, Integer coefficient) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  c[static_cast<std::size_t>(degree)] = std::move(coefficient);
  return ZPoly(std::move(c));
}

void ZPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer ZPoly::Coefficient(int degree) const {
  if (degree < 0 || degree > Degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

ZPoly ZPoly::ShiftedUp(int k) const {
  if (IsZero()) return {};
  std::vector<Integer> c(static_cast<std::size_t>(k));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return ZPoly(std::move(c));
}

ZPoly& ZPoly::operator+=(const ZPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  Trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  Trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.IsZero() || b.IsZero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(c));
}

ZPoly operator-(ZPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string ZPoly::ToHuman() const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    std::string mono;
    if (d == 1) {
      mono = "z";
    } else if (d > 1) {
      mono = "z^" + std::to_string(d);
    }
    AppendTerm(out, first, coeffs_[d], mono);
    first = false;
  }
  return out.str();
}

std::string ZPoly::ToJson() const {
  std::string out = "[";
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) out += ',';
    out += coeffs_[d].get_str();
  }
  out += ']';
  return out;
}

ZPoly Fibonacci(int n) {
  const int m = std::abs(n);
  ZPoly prev;    // F_0
  ZPoly cur(1);  // F_1
  if (m == 0) return prev;
  for (int k = 2; k <= m; ++k) {
    ZPoly next = cur.ShiftedUp(1) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // F_{-m} = (-1)^(m+1) F_m
  if (n < 0 && m % 2 == 0) return -cur;
  return cur;
}

namespace {

// (1/s - s)^d for d = 0, 1, ..., grown on demand.
class ZPowers {
 public:
  const LaurentPoly& Get(int d) {
    if (powers_.empty()) powers_.emplace_back(1);
    static const LaurentPoly kZ{{-1, 1}, {1, -1}};
    while (static_cast<int>(powers_.size()) <= d) powers_.push_back(powers_.back() * kZ);
    return powers_[static_cast<std::size_t>(d)];
  }

 private:
  std::vector<LaurentPoly> powers_;
};

}  // namespace

ZPoly LaurentToZ(const LaurentPoly& p) {
  ZPowers powers;
  std::vector<Integer> out;
  LaurentPoly rest = p;
  while (!rest.IsZero()) {
    const int low = rest.MinExponent();
    if (low > 0) {
      throw Error(ErrorCode::kNotInImage,
                  "(" + p.ToString() + ") is not a polynomial in 1/s - s; remainder " + rest.ToString());
    }
    const int d = -low;
    const Integer c = rest.terms().begin()->second;
    if (static_cast<int>(out.size()) <= d) out.resize(static_cast<std::size_t>(d) + 1);
    out[static_cast<std::size_t>(d)] += c;
    rest -= powers.Get(d) * LaurentPoly::Monomial(0, c);
  }
  return ZPoly(std::move(out));
}

LaurentPoly ZToLaurent(const ZPoly& q) {
  ZPowers powers;
  LaurentPoly out;
  for (int d = 0; d <= q.Degree(); ++d) {
    const Integer& c = q.coefficients()[static_cast<std::size_t>(d)];
    if (c != 0) out += powers.Get(d) * LaurentPoly::Monomial(0, c);
  }
  return out;
}

bool IsNonNegative(const ZPoly& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Integer& c) { return sgn(c) >= 0; });
}

}  // namespace bsk
