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

#include "orbitale/whittaker.hpp"

#include "orbitale/error.hpp"

namespace orbitale {

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s[0] = 1;
  return s;
}

TruncSeries TruncSeries::geometric(const Rational& a, int order) {
  TruncSeries s(order);
  Rational p = 1;
  for (int k = 0; k <= order; ++k) {
    s[k] = p;
    p *= a;
  }
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = c_[k] + o[k];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = c_[k] - o[k];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) r[i + j] += c_[i] * o[j];
  }
  return r;
}

TruncSeries TruncSeries::reciprocal() const {
  if (c_[0] == 0) fail(ErrorCode::kInvalidArgument, "reciprocal of a non-unit series");
  TruncSeries r(order());
  Rational inv0 = 1 / c_[0];
  r[0] = inv0;
  for (int k = 1; k <= order(); ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += c_[i] * r[k - i];
    r[k] = -s * inv0;
  }
  return r;
}

Rational complete_homogeneous(int k, const std::vector<Rational>& a) {
  if (k < 0) return 0;
  TruncSeries s = TruncSeries::one(k);
  for (const auto& x : a) s = s * TruncSeries::geometric(x, k);
  return s[k];
}

namespace {

Rational det(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

void extend(std::vector<int>& cur, int remaining, int max_part, int max_parts,
            std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend(cur, remaining - p, p, max_parts, out);
    cur.pop_back();
  }
}

}  // namespace

Rational schur(const std::vector<int>& lambda, const std::vector<Rational>& a) {
  std::vector<int> lam;
  for (int x : lambda) {
    if (x < 0) fail(ErrorCode::kInvalidArgument, "partition with a negative part");
    if (x > 0) lam.push_back(x);
  }
  for (size_t i = 1; i < lam.size(); ++i) {
    if (lam[i] > lam[i - 1]) fail(ErrorCode::kInvalidArgument, "partition is not decreasing");
  }
  if (lam.size() > a.size()) return 0;
  int l = static_cast<int>(lam.size());
  int top = lam.empty() ? 0 : lam[0] + l;
  std::vector<Rational> h(static_cast<size_t>(top) + 1);
  TruncSeries gen = TruncSeries::one(top);
  for (const auto& x : a) gen = gen * TruncSeries::geometric(x, top);
  for (int k = 0; k <= top; ++k) h[k] = gen[k];
  auto hk = [&](int k) -> Rational { return k < 0 ? Rational(0) : h[k]; };
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = hk(lam[i] - i + j);
  }
  return det(std::move(m));
}

std::vector<std::vector<int>> partitions(int max_weight, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend(cur, max_weight, max_weight, max_parts, out);
  return out;
}

TruncSeries zeta0_series(const std::vector<Rational>& a_pi,
                         const std::vector<Rational>& a_sigma, int order) {
  if (a_pi.size() < a_sigma.size()) {
    fail(ErrorCode::kInvalidArgument, "zeta0_series needs n >= m");
  }
  TruncSeries s(order);
  for (const auto& lam : partitions(order, static_cast<int>(a_sigma.size()))) {
    int w = 0;
    for (int x : lam) w += x;
    s[w] += schur(lam, a_pi) * schur(lam, a_sigma);
  }
  return s;
}

TruncSeries lfactor_series(const std::vector<Rational>& a_pi,
                           const std::vector<Rational>& a_sigma, int order) {
  TruncSeries s = TruncSeries::one(order);
  for (const auto& x : a_pi) {
    for (const auto& y : a_sigma) s = s * TruncSeries::geometric(x * y, order);
  }
  return s;
}

std::vector<Rational> random_satake(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < n) {
    int p = num(rng);
    if (p == 0) continue;
    out.emplace_back(p, den(rng));
  }
  return out;
}

}  // namespace orbitale
