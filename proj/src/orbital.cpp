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

#include "orbitale/orbital.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>

namespace orbitale {

int HermiteLattice::colength() const {
  int s = 0;
  for (int x : e) s += x;
  return -s;
}

HermiteLattice hermite_lattice(const Mat& gens) {
  FieldPtr f = gens.field();
  int n = gens.rows();
  Mat g = lattice_basis(gens);
  if (g.cols() != n) fail(ErrorCode::kInvalidArgument, "generators do not span a full lattice");
  HermiteLattice out;
  out.e.resize(n);
  for (int j = 0; j < n; ++j) {
    const LocalElem p = g(j, j);
    int e = p.valuation();
    LocalElem u = p.shift(-e).inv();
    for (int i = 0; i < j; ++i) g(i, j) = g(i, j) * u;
    g(j, j) = LocalElem::pi_power(f, e);
    for (int i = j + 1; i < n; ++i) g(i, j) = LocalElem::zero(f);
    out.e[j] = e;
  }
  for (int j = 0; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      LocalElem x = g(i, j);
      int ei = out.e[i];
      if (x.precision() < ei) {
        fail(ErrorCode::kPrecisionExhausted, "Hermite reduction lost precision");
      }
      LocalElem low = x.truncate(ei);
      LocalElem high = x - low;
      if (!high.is_zero_within_precision()) {
        LocalElem mult = high.shift(-ei);
        for (int r = 0; r < i; ++r) g(r, j) -= mult * g(r, i);
      }
      g(i, j) = low;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.key += g(i, j).render();
      out.key += ';';
    }
  }
  out.g = std::move(g);
  return out;
}

namespace {

using DVec = std::vector<Digit>;

// Row echelon form over the residue field (F_q or F_{q^2}).
class DigitEchelon {
 public:
  DigitEchelon(const Field& f, int n) : f_(f), n_(n) {}

  DVec reduce(DVec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      Digit c = v[piv_[r]];
      if (c.is_zero()) continue;
      for (int i = 0; i < n_; ++i) v[i] = f_.sub(v[i], f_.mul(c, rows_[r][i]));
    }
    return v;
  }

  bool insert(const DVec& v) {
    DVec w = reduce(v);
    int p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    Digit s = f_.inv(w[p]);
    for (auto& x : w) x = f_.mul(x, s);
    rows_.push_back(std::move(w));
    piv_.push_back(p);
    return true;
  }

  const std::vector<DVec>& rows() const { return rows_; }

  std::string key() const {
    std::vector<DVec> rows = rows_;
    std::vector<int> piv = piv_;
    // Full reduction, then sort by pivot.
    for (size_t r = 0; r < rows.size(); ++r) {
      for (size_t s = 0; s < rows.size(); ++s) {
        if (s == r) continue;
        Digit c = rows[s][piv[r]];
        if (c.is_zero()) continue;
        for (int i = 0; i < n_; ++i) rows[s][i] = f_.sub(rows[s][i], f_.mul(c, rows[r][i]));
      }
    }
    std::vector<size_t> order(rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return piv[a] < piv[b]; });
    std::string k;
    for (size_t o : order) {
      for (const Digit& d : rows[o]) {
        k += std::to_string(d.u) + "," + std::to_string(d.v) + " ";
      }
      k += "|";
    }
    return k;
  }

 private:
  const Field& f_;
  int n_;
  std::vector<DVec> rows_;
  std::vector<int> piv_;
};

struct SearchSpec {
  FieldPtr f;
  int n = 0;
  bool residue_fq2 = false;  // o-lattices: residue field F_{q^2}
  std::vector<Mat> ops;      // L must be stable under these
  std::vector<Mat> contain;  // columns that must lie in L
  // Closed under passing to sublattices; used to prune the search.
  std::function<bool(const HermiteLattice&)> admissible;
  std::function<bool(const HermiteLattice&)> accept;
};

struct SearchOut {
  std::map<int, uint64_t> counts;
  bool exhausted = false;  // the start lattice already left the window
  uint64_t visited = 0;
};

bool in_window(const HermiteLattice& l, int B) { return l.g.val_lower_bound() >= -B; }

std::optional<HermiteLattice> stable_closure(const SearchSpec& s, Mat gens, int B) {
  HermiteLattice l = hermite_lattice(gens);
  while (true) {
    if (!in_window(l, B)) return std::nullopt;
    int n = s.n;
    Mat all(s.f, n, n * static_cast<int>(1 + s.ops.size()));
    all.set_block(0, 0, l.g);
    for (size_t k = 0; k < s.ops.size(); ++k) {
      all.set_block(0, n * static_cast<int>(k + 1), s.ops[k] * l.g);
    }
    HermiteLattice next = hermite_lattice(all);
    if (next.key == l.key) return l;
    l = std::move(next);
  }
}

std::vector<Mat> residue_ops(const SearchSpec& s, const HermiteLattice& l) {
  Mat ginv = inverse(l.g);
  std::vector<Mat> out;
  for (const Mat& op : s.ops) {
    Mat r = ginv * op * l.g;
    if (r.val_lower_bound() < 0) fail(ErrorCode::kInternal, "lattice is not stable");
    out.push_back(r);
  }
  return out;
}

DVec apply_residue(const Field& f, const Mat& r, const DVec& v) {
  int n = r.rows();
  DVec out(n);
  for (int i = 0; i < n; ++i) {
    Digit s{};
    for (int j = 0; j < n; ++j) s = f.add(s, f.mul(r(i, j).digit_at(0), v[j]));
    out[i] = s;
  }
  return out;
}

// Lattices L' with L < L' <= pi^{-1} L and L'/L stable under the ops.
std::vector<HermiteLattice> covers(const SearchSpec& s, const HermiteLattice& l) {
  const Field& f = *s.f;
  int n = s.n;
  std::vector<Mat> res = residue_ops(s, l);
  std::vector<Digit> scalars;
  for (uint32_t u = 0; u < f.q(); ++u) {
    for (uint32_t v = 0; v < (s.residue_fq2 ? f.q() : 1u); ++v) {
      scalars.push_back({static_cast<uint16_t>(u), static_cast<uint16_t>(v)});
    }
  }
  std::set<std::string> seen;
  std::vector<HermiteLattice> out;
  for (int lead = 0; lead < n; ++lead) {
    std::vector<size_t> idx(n - lead - 1, 0);
    while (true) {
      DVec v(n);
      v[lead] = {1, 0};
      for (int i = lead + 1; i < n; ++i) v[i] = scalars[idx[i - lead - 1]];
      DigitEchelon w(f, n);
      std::deque<DVec> work{v};
      while (!work.empty()) {
        DVec x = std::move(work.front());
        work.pop_front();
        if (!w.insert(x)) continue;
        for (const Mat& r : res) work.push_back(apply_residue(f, r, x));
      }
      if (seen.insert(w.key()).second) {
        int k = static_cast<int>(w.rows().size());
        Mat gens(s.f, n, n + k);
        gens.set_block(0, 0, l.g);
        for (int c = 0; c < k; ++c) {
          Mat col(s.f, n, 1);
          for (int i = 0; i < n; ++i) col(i, 0) = LocalElem::from_digit(s.f, w.rows()[c][i]);
          gens.set_block(0, n + c, (l.g * col).shift(-1));
        }
        out.push_back(hermite_lattice(gens));
      }
      size_t i = 0;
      while (i < idx.size() && idx[i] + 1 == scalars.size()) idx[i++] = 0;
      if (i == idx.size()) break;
      ++idx[i];
    }
  }
  return out;
}

SearchOut search(const SearchSpec& s, int B, uint64_t cap) {
  SearchOut out;
  Mat gens(s.f, s.n, s.n + static_cast<int>(s.contain.size()));
  gens.set_block(0, 0, Mat::identity(s.f, s.n).shift(B));
  for (size_t k = 0; k < s.contain.size(); ++k) gens.set_block(0, s.n + static_cast<int>(k), s.contain[k]);
  std::optional<HermiteLattice> start = stable_closure(s, gens, B);
  if (!start) {
    out.exhausted = true;
    return out;
  }
  if (!s.admissible(*start)) return out;
  std::set<std::string> seen{start->key};
  std::deque<HermiteLattice> work{*start};
  while (!work.empty()) {
    HermiteLattice l = std::move(work.front());
    work.pop_front();
    if (++out.visited > cap) {
      fail(ErrorCode::kCapExceeded, "lattice search visited more than " + std::to_string(cap) +
                                        " lattices");
    }
    if (s.accept(l)) ++out.counts[l.colength()];
    for (HermiteLattice& c : covers(s, l)) {
      if (!in_window(c, B) || seen.count(c.key)) continue;
      seen.insert(c.key);
      if (s.admissible(c)) work.push_back(std::move(c));
    }
  }
  return out;
}

int signed_sum(const std::map<int, uint64_t>& counts) {
  int64_t v = 0;
  for (const auto& [i, c] : counts) v += (i % 2 == 0 ? 1 : -1) * static_cast<int64_t>(c);
  return static_cast<int>(v);
}

std::string render_counts(const std::map<int, uint64_t>& c) {
  std::string s = "{";
  for (const auto& [i, k] : c) s += " " + std::to_string(i) + ":" + std::to_string(k);
  return s + " }";
}

OrbitalResult run(const SearchSpec& s, Space space, int B, const OrbitalOptions& opt,
                  const OrbitInvariants& inv) {
  B += opt.extra_bound;
  SearchOut a = search(s, B, opt.max_lattices);
  SearchOut b = search(s, B + 1, opt.max_lattices);
  if (a.counts != b.counts || a.exhausted != b.exhausted) {
    fail(ErrorCode::kBoundUnstable, "counts change from B=" + std::to_string(B) + " " +
                                        render_counts(a.counts) + " to B=" +
                                        std::to_string(B + 1) + " " + render_counts(b.counts));
  }
  OrbitalResult r;
  r.space = space;
  r.by_colength = a.counts;
  r.visited = a.visited + b.visited;
  r.bounds.B = B;
  r.bounds.stable = true;
  r.bounds.window_lo = inv.T_val - inv.delta_val;
  r.bounds.window_hi = inv.T_val;
  if (space == Space::kSymmetric) {
    r.value = signed_sum(a.counts);
    for (const auto& [i, c] : a.counts) {
      if (c && (i < r.bounds.window_lo || i > r.bounds.window_hi)) r.window_ok = false;
    }
  } else {
    for (const auto& [i, c] : a.counts) r.value += static_cast<int64_t>(c);
  }
  if (a.exhausted) r.note = "window-exhausted: no stable lattice contains the start";
  return r;
}

int base_bound(const OrbitInvariants& inv) {
  return std::max({inv.T_val, inv.delta_val - inv.T_val, inv.delta_val, 0}) + 1;
}

int form_slack(const Mat& beta) {
  if (beta.rows() == 0) return 0;
  LocalElem d = det(beta);
  return std::abs(d.valuation()) + std::max(0, -beta.val_lower_bound()) +
         std::max(0, -inverse(beta).val_lower_bound());
}

bool gram_integral(const Mat& beta, const HermiteLattice& l) {
  return (l.g.conj_transpose() * beta * l.g).is_integral();
}

bool gram_unimodular(const Mat& beta, const HermiteLattice& l) {
  return det(l.g.conj_transpose() * beta * l.g).is_unit();
}

OrbitInvariants checked_invariants(const SymOrbitDatum& d, Side side) {
  if (d.side != side || d.r != 0) {
    fail(ErrorCode::kInvalidArgument, std::string("oracle needs ") + side_name(side) +
                                          " data with r = 0");
  }
  OrbitInvariants inv = invariants(d, true);
  if (!inv.regular) fail(ErrorCode::kNotRegular, "datum is not regular: " + inv.reason);
  return inv;
}

OrbitInvariants checked_invariants(const UniOrbitDatum& d, Side side) {
  if (d.side != side || d.r != 0) {
    fail(ErrorCode::kInvalidArgument, std::string("oracle needs ") + side_name(side) +
                                          " data with r = 0");
  }
  OrbitInvariants inv = invariants(d, true);
  if (!inv.regular) fail(ErrorCode::kNotRegular, "datum is not regular: " + inv.reason);
  return inv;
}

OrbitalResult single_point(Space space, bool integral) {
  OrbitalResult r;
  r.space = space;
  r.bounds.stable = true;
  if (integral) {
    r.by_colength[0] = 1;
    r.value = 1;
  } else {
    r.note = "central entry is not integral";
  }
  return r;
}

}  // namespace

OrbitalResult orbital_sym_fj(const SymOrbitDatum& d, const OrbitalOptions& opt) {
  OrbitInvariants inv = checked_invariants(d, Side::kFJ);
  SearchSpec s;
  s.f = d.zeta.field();
  s.n = d.n;
  Mat z0, z1;
  d.zeta.split(&z0, &z1);
  s.ops = {z0, z1};
  s.contain = {d.y};
  Mat x = d.x;
  s.admissible = [x](const HermiteLattice& l) { return (x * l.g).is_integral(); };
  s.accept = [](const HermiteLattice&) { return true; };
  return run(s, Space::kSymmetric, base_bound(inv), opt, inv);
}

OrbitalResult orbital_uni_fj(const UniOrbitDatum& d, const OrbitalOptions& opt) {
  OrbitInvariants inv = checked_invariants(d, Side::kFJ);
  SearchSpec s;
  s.f = d.zeta.field();
  s.n = d.n;
  s.residue_fq2 = true;
  s.ops = {d.zeta};
  s.contain = {d.z_star()};
  Mat beta = d.beta;
  s.admissible = [beta](const HermiteLattice& l) { return gram_integral(beta, l); };
  s.accept = [beta](const HermiteLattice& l) { return gram_unimodular(beta, l); };
  return run(s, Space::kUnitary, base_bound(inv) + form_slack(beta), opt, inv);
}

OrbitalResult orbital_sym_bessel_r0(const SymOrbitDatum& d, const OrbitalOptions& opt) {
  OrbitInvariants inv = checked_invariants(d, Side::kBessel);
  int m = d.m;
  bool d_integral = d.zeta(m, m).is_integral();
  if (m == 0 || !d_integral) return single_point(Space::kSymmetric, d_integral);
  SearchSpec s;
  s.f = d.zeta.field();
  s.n = m;
  Mat a0, a1, b0, b1, c0, c1;
  d.zeta.block(0, 0, m, m).split(&a0, &a1);
  d.zeta.block(0, m, m, 1).split(&b0, &b1);
  d.zeta.block(m, 0, 1, m).split(&c0, &c1);
  s.ops = {a0, a1};
  s.contain = {b0, b1};
  s.admissible = [c0, c1](const HermiteLattice& l) {
    return (c0 * l.g).is_integral() && (c1 * l.g).is_integral();
  };
  s.accept = [](const HermiteLattice&) { return true; };
  return run(s, Space::kSymmetric, base_bound(inv), opt, inv);
}

OrbitalResult orbital_uni_bessel_r0(const UniOrbitDatum& d, const OrbitalOptions& opt) {
  OrbitInvariants inv = checked_invariants(d, Side::kBessel);
  int m = d.m;
  bool d_integral = d.zeta(m, m).is_integral();
  if (m == 0 || !d_integral) return single_point(Space::kUnitary, d_integral);
  if (!d.central_form()(m, m).is_unit()) {
    fail(ErrorCode::kInvalidArgument, "beta0 must be a unit");
  }
  SearchSpec s;
  s.f = d.zeta.field();
  s.n = m;
  s.residue_fq2 = true;
  s.ops = {d.zeta.block(0, 0, m, m)};
  s.contain = {d.zeta.block(0, m, m, 1)};
  Mat c = d.zeta.block(m, 0, 1, m);
  Mat beta = d.beta;
  s.admissible = [c, beta](const HermiteLattice& l) {
    return (c * l.g).is_integral() && gram_integral(beta, l);
  };
  s.accept = [beta](const HermiteLattice& l) { return gram_unimodular(beta, l); };
  return run(s, Space::kUnitary, base_bound(inv) + form_slack(beta), opt, inv);
}

FlReport verify_fl(const SymOrbitDatum& d, const VerifyOptions& opt) {
  FlReport rep;
  rep.datum = d;
  rep.inv = invariants(d);
  rep.parity = rep.inv.delta_val % 2 == 0 ? 1 : -1;
  rep.transfer = rep.inv.transfer_sign;
  rep.match = match_sym_to_uni(d);
  if (!rep.match.cert.verified) rep.failures.push_back("match certificate not verified");
  bool fj = d.side == Side::kFJ;
  rep.sym = fj ? orbital_sym_fj(d, opt.orbital) : orbital_sym_bessel_r0(d, opt.orbital);
  rep.uni = fj ? orbital_uni_fj(rep.match.uni, opt.orbital)
               : orbital_uni_bessel_r0(rep.match.uni, opt.orbital);
  if (!rep.sym.window_ok) rep.failures.push_back("symmetric lattice outside the colength window");
  if (rep.parity == 1) {
    if (rep.sym.value != rep.transfer * rep.uni.value) {
      rep.failures.push_back("sym != transfer * uni");
    }
  } else {
    if (rep.sym.value != 0) rep.failures.push_back("sym != 0 for odd val Delta");
    if (rep.match.cls.epsilon != -1) rep.failures.push_back("odd val Delta matched to split class");
  }
  if (fj) {
    std::vector<LocalElem> a, b;
    lattice_input(rep.inv, &a, &b);
    FiniteOAlgebra alg = build_algebra(d.zeta.field(), a);
    GramData g = build_gram(alg, b);
    rep.counts = count_lattices(alg, g, opt.module_cap);
    rep.have_counts = true;
    int sign_t = rep.inv.T_val % 2 == 0 ? 1 : -1;
    if (rep.sym.value != sign_t * rep.counts.alt_sum) {
      rep.failures.push_back("sym != (-1)^{val T} * alternating M-sum");
    }
    if (rep.uni.value != static_cast<int64_t>(rep.counts.N)) rep.failures.push_back("uni != |N|");
    if (!rep.counts.identity_holds) rep.failures.push_back("alternating M-sum != |N|");
  }
  rep.fl_holds = rep.failures.empty();
  return rep;
}

}  // namespace orbitale
