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

#include "orbitale/finmodule.hpp"

#include <deque>
#include <set>
#include <string>

#include "orbitale/error.hpp"

namespace orbitale {

namespace {

uint16_t inv_mod(uint32_t a, uint32_t q) {
  uint32_t r = 1, b = a % q, e = q - 2;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<uint16_t>(r);
}

// v -= c * w.
void axpy(FqVec& v, const FqVec& w, uint32_t c, uint32_t q) {
  if (c == 0) return;
  uint32_t neg = q - c;
  for (size_t i = 0; i < v.size(); ++i) {
    if (w[i]) v[i] = static_cast<uint16_t>((v[i] + neg * w[i]) % q);
  }
}

int leading(const FqVec& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i]) return static_cast<int>(i);
  }
  return -1;
}

// In-place Gauss-Jordan on the rows; returns pivot columns.
std::vector<int> rref_rows(std::vector<FqVec>& rows, uint32_t q, int cols) {
  std::vector<int> piv;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    uint32_t s = inv_mod(rows[r][c], q);
    for (auto& x : rows[r]) x = static_cast<uint16_t>(x * s % q);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r) axpy(rows[i], rows[r], rows[i][c], q);
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

}  // namespace

FqMat::FqMat(uint32_t q_, int rows_, int cols_)
    : q(q_), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_) * cols_, 0) {}

FqMat FqMat::identity(uint32_t q, int n) {
  FqMat m(q, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqVec FqMat::apply(const FqVec& v) const {
  FqVec out(rows, 0);
  for (int i = 0; i < rows; ++i) {
    uint64_t s = 0;
    for (int j = 0; j < cols; ++j) s += static_cast<uint64_t>((*this)(i, j)) * v[j];
    out[i] = static_cast<uint16_t>(s % q);
  }
  return out;
}

FqMat FqMat::operator*(const FqMat& o) const {
  FqMat out(q, rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < o.cols; ++j) {
      uint64_t s = 0;
      for (int k = 0; k < cols; ++k) s += static_cast<uint64_t>((*this)(i, k)) * o(k, j);
      out(i, j) = static_cast<uint16_t>(s % q);
    }
  }
  return out;
}

int fq_rank(FqMat m) {
  std::vector<FqVec> rows;
  for (int i = 0; i < m.rows; ++i) {
    rows.emplace_back(m.a.begin() + static_cast<long>(i) * m.cols,
                      m.a.begin() + static_cast<long>(i + 1) * m.cols);
  }
  return static_cast<int>(rref_rows(rows, m.q, m.cols).size());
}

std::vector<FqVec> fq_kernel(const FqMat& m) {
  std::vector<FqVec> rows;
  for (int i = 0; i < m.rows; ++i) {
    rows.emplace_back(m.a.begin() + static_cast<long>(i) * m.cols,
                      m.a.begin() + static_cast<long>(i + 1) * m.cols);
  }
  std::vector<int> piv = rref_rows(rows, m.q, m.cols);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<FqVec> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    FqVec v(m.cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) {
      v[piv[r]] = static_cast<uint16_t>((m.q - rows[r][f]) % m.q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Echelon::Echelon(uint32_t q, int dim) : q_(q), dim_(dim) {}

FqVec Echelon::reduce(FqVec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) axpy(v, rows_[r], v[pivots_[r]], q_);
  return v;
}

bool Echelon::contains(const FqVec& v) const { return leading(reduce(v)) < 0; }

bool Echelon::insert(const FqVec& v) {
  FqVec w = reduce(v);
  int p = leading(w);
  if (p < 0) return false;
  uint32_t s = inv_mod(w[p], q_);
  for (auto& x : w) x = static_cast<uint16_t>(x * s % q_);
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

std::vector<FqVec> Echelon::canonical() const {
  std::vector<FqVec> rows = rows_;
  rref_rows(rows, q_, dim_);
  return rows;
}

FinModule::FinModule(uint32_t q, int dim, FqMat pi, std::vector<FqMat> endos)
    : q_(q), dim_(dim), pi_(std::move(pi)), endos_(std::move(endos)) {
  auto check = [&](const FqMat& m) {
    if (m.q != q || m.rows != dim || m.cols != dim) {
      fail(ErrorCode::kInvalidArgument, "operator has the wrong shape for the module");
    }
  };
  check(pi_);
  for (const auto& e : endos_) check(e);
}

void FinModule::set_pairing(FqMat b) {
  if (b.q != q_ || b.rows != dim_ || b.cols != dim_ || fq_rank(b) != dim_) {
    fail(ErrorCode::kInvalidArgument, "pairing is not perfect");
  }
  pairing_ = std::move(b);
  has_pairing_ = true;
}

bool FinModule::operators_commute() const {
  std::vector<const FqMat*> ops{&pi_};
  for (const auto& e : endos_) ops.push_back(&e);
  for (size_t i = 0; i < ops.size(); ++i) {
    for (size_t k = i + 1; k < ops.size(); ++k) {
      if (!((*ops[i]) * (*ops[k]) == (*ops[k]) * (*ops[i]))) return false;
    }
  }
  return true;
}

bool FinModule::is_stable(const Submodule& s) const {
  Echelon e(q_, dim_);
  for (const auto& v : s.basis) e.insert(v);
  for (const auto& v : s.basis) {
    if (!e.contains(pi_.apply(v))) return false;
    for (const auto& op : endos_) {
      if (!e.contains(op.apply(v))) return false;
    }
  }
  return true;
}

Submodule FinModule::closure(const Submodule& s, const std::vector<FqVec>& extra) const {
  Echelon e(q_, dim_);
  for (const auto& v : s.basis) e.insert(v);
  std::deque<FqVec> work(extra.begin(), extra.end());
  while (!work.empty()) {
    FqVec v = e.reduce(std::move(work.front()));
    work.pop_front();
    if (leading(v) < 0) continue;
    e.insert(v);
    work.push_back(pi_.apply(v));
    for (const auto& op : endos_) work.push_back(op.apply(v));
  }
  return {e.canonical()};
}

Submodule FinModule::whole() const {
  Submodule s;
  for (int i = 0; i < dim_; ++i) {
    FqVec v(dim_, 0);
    v[i] = 1;
    s.basis.push_back(std::move(v));
  }
  return s;
}

std::vector<Submodule> enumerate_stable_submodules(const FinModule& m, uint64_t cap) {
  uint64_t size = 1;
  for (int i = 0; i < m.dim(); ++i) {
    if (size > cap / m.q() + 1) {
      size = cap + 1;
      break;
    }
    size *= m.q();
  }
  if (size > cap) {
    fail(ErrorCode::kCapExceeded, "quotient has q^" + std::to_string(m.dim()) +
                                      " elements, cap is " + std::to_string(cap));
  }
  const uint32_t q = m.q();
  const int dim = m.dim();
  std::set<Submodule> seen;
  std::deque<Submodule> work;
  seen.insert(m.zero());
  work.push_back(m.zero());
  while (!work.empty()) {
    Submodule s = std::move(work.front());
    work.pop_front();
    if (s.dim() == dim) continue;
    Echelon es(q, dim);
    for (const auto& v : s.basis) es.insert(v);
    // K = {v : pi v in s}; every minimal cover of s lies in K.
    FqMat lmap(q, dim, dim);
    for (int c = 0; c < dim; ++c) {
      FqVec e(dim, 0);
      e[c] = 1;
      FqVec img = es.reduce(m.pi().apply(e));
      for (int r = 0; r < dim; ++r) lmap(r, c) = img[r];
    }
    std::vector<FqVec> reps;
    Echelon ek = es;
    for (const auto& v : fq_kernel(lmap)) {
      if (ek.insert(v)) reps.push_back(es.reduce(v));
    }
    // Projective points of K/s: coefficient vectors with leading entry 1.
    const int k = static_cast<int>(reps.size());
    std::vector<uint32_t> coef(k, 0);
    for (int lead = 0; lead < k; ++lead) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = 1;
      while (true) {
        FqVec v(dim, 0);
        for (int i = lead; i < k; ++i) {
          if (coef[i]) axpy(v, reps[i], q - coef[i], q);
        }
        Submodule t = m.closure(s, {v});
        if (seen.insert(t).second) work.push_back(std::move(t));
        int i = k - 1;
        while (i > lead && coef[i] == q - 1) coef[i--] = 0;
        if (i == lead) break;
        ++coef[i];
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Submodule dual_submodule(const FinModule& m, const Submodule& s) {
  if (!m.has_pairing()) fail(ErrorCode::kInvalidArgument, "module has no pairing");
  FqMat rows(m.q(), s.dim(), m.dim());
  // (s_i^t B) v = 0 for every basis row s_i.
  for (int i = 0; i < s.dim(); ++i) {
    for (int c = 0; c < m.dim(); ++c) {
      uint64_t acc = 0;
      for (int k = 0; k < m.dim(); ++k) {
        acc += static_cast<uint64_t>(s.basis[i][k]) * m.pairing()(k, c);
      }
      rows(i, c) = static_cast<uint16_t>(acc % m.q());
    }
  }
  Echelon e(m.q(), m.dim());
  for (const auto& v : fq_kernel(rows)) e.insert(v);
  return {e.canonical()};
}

}  // namespace orbitale
