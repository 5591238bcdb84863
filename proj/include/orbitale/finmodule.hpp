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

// Finite modules over o'/pi^N presented as F_q-vector spaces with a list
// of commuting endomorphisms, and enumeration of their stable submodules.

#ifndef ORBITALE_FINMODULE_HPP_
#define ORBITALE_FINMODULE_HPP_

#include <cstdint>
#include <vector>

namespace orbitale {

using FqVec = std::vector<uint16_t>;

struct FqMat {
  uint32_t q = 0;
  int rows = 0, cols = 0;
  std::vector<uint16_t> a;

  FqMat() = default;
  FqMat(uint32_t q, int rows, int cols);
  static FqMat identity(uint32_t q, int n);

  uint16_t& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint16_t operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  FqVec apply(const FqVec& v) const;
  FqMat operator*(const FqMat& o) const;
  bool operator==(const FqMat& o) const = default;
};

int fq_rank(FqMat m);
// Basis of {v : m v = 0}.
std::vector<FqVec> fq_kernel(const FqMat& m);

// Row echelon form kept under insertion; rows have leading coefficient 1.
class Echelon {
 public:
  Echelon(uint32_t q, int dim);

  // v minus its projection on the span, zero on every pivot column.
  FqVec reduce(FqVec v) const;
  bool contains(const FqVec& v) const;
  // Adds v to the span; returns false when it was already there.
  bool insert(const FqVec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduced row echelon basis, rows sorted by pivot.
  std::vector<FqVec> canonical() const;

 private:
  uint32_t q_;
  int dim_;
  std::vector<FqVec> rows_;
  std::vector<int> pivots_;
};

// A stable submodule, stored as its reduced row echelon basis.
struct Submodule {
  std::vector<FqVec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Submodule& o) const = default;
  bool operator<(const Submodule& o) const { return basis < o.basis; }
};

constexpr uint64_t kDefaultModuleCap = uint64_t{1} << 16;

class FinModule {
 public:
  // `pi` is nilpotent; `endos` list the other operators (t-action, j, ...).
  FinModule(uint32_t q, int dim, FqMat pi, std::vector<FqMat> endos);

  uint32_t q() const { return q_; }
  int dim() const { return dim_; }
  const FqMat& pi() const { return pi_; }
  const std::vector<FqMat>& endos() const { return endos_; }
  // log_q |Q|.
  int log_size() const { return dim_; }

  // F_q-bilinear form used for orthogonals; must be invertible.
  void set_pairing(FqMat b);
  bool has_pairing() const { return has_pairing_; }
  const FqMat& pairing() const { return pairing_; }

  bool operators_commute() const;
  bool is_stable(const Submodule& s) const;
  Submodule closure(const Submodule& s, const std::vector<FqVec>& extra) const;
  Submodule zero() const { return {}; }
  Submodule whole() const;

 private:
  uint32_t q_;
  int dim_;
  FqMat pi_;
  std::vector<FqMat> endos_;
  FqMat pairing_;
  bool has_pairing_ = false;
};

// Every submodule stable under pi and the endomorphisms.  Raises
// CapExceeded when |Q| > cap.
std::vector<Submodule> enumerate_stable_submodules(const FinModule& m,
                                                   uint64_t cap = kDefaultModuleCap);

// Orthogonal of s under the pairing.
Submodule dual_submodule(const FinModule& m, const Submodule& s);

}  // namespace orbitale

#endif  // ORBITALE_FINMODULE_HPP_
