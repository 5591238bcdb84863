// Copyright 2026 The Orbitale Authors
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

// Truncated arithmetic in k' = F_q((pi)) and k = k'(j), j^2 = eps.

#ifndef ORBITALE_FIELD_HPP_
#define ORBITALE_FIELD_HPP_

#include <climits>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "orbitale/error.hpp"

namespace orbitale {

// Residue digit u + j*v of F_q[j]/(j^2 - eps).
struct Digit {
  uint16_t u = 0;
  uint16_t v = 0;
  bool is_zero() const { return u == 0 && v == 0; }
  friend bool operator==(Digit, Digit) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // eps = 0 selects the smallest quadratic non-residue.
  static FieldPtr make(uint32_t q, int precision = 32, uint32_t eps = 0);

  uint32_t q() const { return q_; }
  uint32_t eps() const { return eps_; }
  int precision() const { return precision_; }
  // Exact elements longer than this many digits are truncated to
  // relative precision N.
  int exact_cap() const { return 4 * precision_; }

  FieldPtr with_precision(int precision) const;
  bool compatible(const Field& other) const {
    return q_ == other.q_ && eps_ == other.eps_;
  }

  uint32_t reduce(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(q_);
    return static_cast<uint32_t>(r < 0 ? r + q_ : r);
  }
  uint32_t inv_mod(uint32_t x) const { return inv_[x]; }
  bool is_square_mod(uint32_t x) const;

  Digit add(Digit a, Digit b) const {
    return {static_cast<uint16_t>((a.u + b.u) % q_),
            static_cast<uint16_t>((a.v + b.v) % q_)};
  }
  Digit sub(Digit a, Digit b) const {
    return {static_cast<uint16_t>((a.u + q_ - b.u) % q_),
            static_cast<uint16_t>((a.v + q_ - b.v) % q_)};
  }
  Digit neg(Digit a) const {
    return {static_cast<uint16_t>((q_ - a.u) % q_),
            static_cast<uint16_t>((q_ - a.v) % q_)};
  }
  Digit mul(Digit a, Digit b) const {
    uint64_t u = static_cast<uint64_t>(a.u) * b.u +
                 static_cast<uint64_t>(eps_) * a.v % q_ * b.v;
    uint64_t v = static_cast<uint64_t>(a.u) * b.v +
                 static_cast<uint64_t>(a.v) * b.u;
    return {static_cast<uint16_t>(u % q_), static_cast<uint16_t>(v % q_)};
  }
  Digit conj(Digit a) const {
    return {a.u, static_cast<uint16_t>((q_ - a.v) % q_)};
  }
  uint32_t digit_norm(Digit a) const {
    return reduce(static_cast<int64_t>(a.u) * a.u -
                  static_cast<int64_t>(eps_) * a.v % q_ * a.v);
  }
  Digit inv(Digit a) const;

 private:
  Field(uint32_t q, uint32_t eps, int precision);

  uint32_t q_;
  uint32_t eps_;
  int precision_;
  std::vector<uint32_t> inv_;
};

// An element x = sum_{k >= val} d_k pi^k, known modulo pi^prec.
// Exact elements (finite expansions) carry prec == kExact.  Three
// zero-like states are distinguished: exact zero, zero to precision
// O(pi^prec), and certified nonzero (leading digit nonzero).
class LocalElem {
 public:
  static constexpr int kExact = INT_MAX;

  LocalElem() = default;

  static LocalElem zero(FieldPtr f);
  static LocalElem one(FieldPtr f);
  static LocalElem from_int(FieldPtr f, int64_t c);
  static LocalElem from_digit(FieldPtr f, Digit d, int val = 0);
  static LocalElem j(FieldPtr f);
  static LocalElem pi_power(FieldPtr f, int k);
  static LocalElem zero_to(FieldPtr f, int abs_prec);
  // Digits of pi^start, pi^(start+1), ...; prec is absolute.
  static LocalElem from_digits(FieldPtr f, int start, std::vector<Digit> d,
                               int prec = kExact);

  const FieldPtr& field() const { return field_; }
  bool is_exact_zero() const { return digits_.empty() && prec_ == kExact; }
  bool is_exact() const { return prec_ == kExact; }
  bool is_certified_nonzero() const { return !digits_.empty(); }
  bool is_zero_within_precision() const { return digits_.empty(); }
  int precision() const { return prec_; }
  // kExact for exact elements; 0 for zero-like elements.
  int relative_precision() const;

  int valuation() const;
  // Certified lower bound on the valuation.
  int val_lower_bound() const;
  // Lies in k' (every v-component zero within known digits).
  bool in_base() const;
  bool is_integral() const;
  bool is_unit() const { return is_certified_nonzero() && val_ == 0; }

  // Coefficient of pi^k; requires k < precision().
  Digit digit_at(int k) const;
  int digit_start() const { return val_; }
  const std::vector<Digit>& digits() const { return digits_; }

  LocalElem operator-() const;
  LocalElem operator+(const LocalElem& o) const;
  LocalElem operator-(const LocalElem& o) const;
  LocalElem operator*(const LocalElem& o) const;
  LocalElem operator/(const LocalElem& o) const;
  LocalElem& operator+=(const LocalElem& o) { return *this = *this + o; }
  LocalElem& operator-=(const LocalElem& o) { return *this = *this - o; }
  LocalElem& operator*=(const LocalElem& o) { return *this = *this * o; }
  LocalElem inv() const;
  LocalElem shift(int k) const;  // multiplication by pi^k
  // Exact element keeping the digits of index < k.
  LocalElem truncate(int k) const;
  // Forget all digits of index >= k.
  LocalElem reduce_precision(int k) const;
  LocalElem with_field(FieldPtr f) const;

  LocalElem tau() const;
  LocalElem trace() const { return *this + tau(); }
  LocalElem norm() const { return *this * tau(); }
  int eta() const { return (valuation() % 2 == 0) ? 1 : -1; }

  // Equality of representations (digits, start and precision).
  bool operator==(const LocalElem& o) const;
  // Difference is zero within the smaller precision.
  bool agrees_with(const LocalElem& o) const;

  std::string render() const;
  static LocalElem parse(FieldPtr f, const std::string& text);

 private:
  LocalElem(FieldPtr f, int start, std::vector<Digit> d, int prec);
  void normalize();

  FieldPtr field_;
  int val_ = 0;
  std::vector<Digit> digits_;
  int prec_ = kExact;
};

LocalElem random_unit(const FieldPtr& f, std::mt19937_64& rng,
                      bool base_only = true);
LocalElem random_with_val(const FieldPtr& f, std::mt19937_64& rng, int v,
                          bool base_only = true);
LocalElem random_unit(const FieldPtr& f, uint64_t seed, bool base_only = true);
LocalElem random_with_val(const FieldPtr& f, uint64_t seed, int v,
                          bool base_only = true);
// Exact polynomial in pi with `len` random digits starting at pi^start.
LocalElem random_poly(const FieldPtr& f, std::mt19937_64& rng, int start,
                      int len, bool base_only = true);

}  // namespace orbitale

#endif  // ORBITALE_FIELD_HPP_
