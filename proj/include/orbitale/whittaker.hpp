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

// Unramified Whittaker values (Schur polynomials in the Satake
// parameters) and the r = 0 local zeta integral as a power series in
// X = q^{-s}.

#ifndef ORBITALE_WHITTAKER_HPP_
#define ORBITALE_WHITTAKER_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

namespace orbitale {

using Rational = boost::multiprecision::cpp_rational;

// c_0 + c_1 X + ... + c_K X^K, all products truncated at order K.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
  static TruncSeries one(int order);
  // 1 / (1 - a X).
  static TruncSeries geometric(const Rational& a, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  // Requires c_0 != 0.
  TruncSeries reciprocal() const;
  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

// Complete homogeneous symmetric polynomial h_k.
Rational complete_homogeneous(int k, const std::vector<Rational>& a);
// Schur polynomial s_lambda(a) via the Jacobi-Trudi determinant; zero when
// lambda has more nonzero parts than there are parameters.
Rational schur(const std::vector<int>& lambda, const std::vector<Rational>& a);

// Partitions with at most max_parts parts and weight at most max_weight,
// as weakly decreasing vectors without trailing zeros.
std::vector<std::vector<int>> partitions(int max_weight, int max_parts);

// sum over lambda with <= m parts, |lambda| <= K of
// s_lambda(A_pi) s_lambda(A_sigma) X^{|lambda|}; requires n >= m.
TruncSeries zeta0_series(const std::vector<Rational>& a_pi,
                         const std::vector<Rational>& a_sigma, int order);
// prod_{i,j} (1 - alpha_i beta_j X)^{-1}.
TruncSeries lfactor_series(const std::vector<Rational>& a_pi,
                           const std::vector<Rational>& a_sigma, int order);

// Nonzero rationals p/r with |p| <= 9, 1 <= r <= 9.
std::vector<Rational> random_satake(std::mt19937_64& rng, int n);

}  // namespace orbitale

#endif  // ORBITALE_WHITTAKER_HPP_
