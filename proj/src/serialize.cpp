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

#include "serialize.hpp"

#include "orbitale/error.hpp"

namespace orbitale {

namespace {

LocalElem elem_from_json(const FieldPtr& f, const Json& j, const std::string& path) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<int64_t>());
  } else {
    fail(ErrorCode::kParse, path + ": expected a string or integer");
  }
  try {
    return LocalElem::parse(f, text);
  } catch (const Error& e) {
    std::string what = e.what();
    std::string::size_type colon = what.find(": ");
    fail(ErrorCode::kParse, path + ": " + what.substr(colon == std::string::npos ? 0 : colon + 2));
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) fail(ErrorCode::kParse, std::string(key) + ": expected an integer");
  return v.get<int>();
}

Mat matrix_from_json(const FieldPtr& f, const Json& j, int rows, int cols,
                     const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    fail(ErrorCode::kParse, path + ": expected " + std::to_string(rows) + " rows");
  }
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::string rp = path + "[" + std::to_string(i) + "]";
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail(ErrorCode::kParse, rp + ": expected " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      m(i, c) = elem_from_json(f, row[c], rp + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

}  // namespace

std::vector<LocalElem> elems_from_json(const FieldPtr& f, const Json& j,
                                       const std::string& path) {
  if (!j.is_array()) fail(ErrorCode::kParse, path + ": expected an array");
  std::vector<LocalElem> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(elem_from_json(f, j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json to_json(const LocalElem& e) { return e.render(); }

Json to_json(const Mat& m) { return m.render(); }

Json to_json(const std::vector<LocalElem>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.render());
  return out;
}

static Json row_json(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m(i, c).render());
  }
  return out;
}

Json to_json(const SymOrbitDatum& d) {
  Json j;
  j["q"] = d.zeta.field()->q();
  j["side"] = side_name(d.side);
  j["n"] = d.n;
  j["m"] = d.m;
  j["r"] = d.r;
  j["zeta"] = to_json(d.zeta);
  if (d.side == Side::kFJ) {
    j["x"] = row_json(d.x);
    j["y"] = row_json(d.y);
  }
  return j;
}

Json to_json(const UniOrbitDatum& d) {
  Json j;
  j["side"] = side_name(d.side);
  j["n"] = d.n;
  j["m"] = d.m;
  j["r"] = d.r;
  j["beta"] = to_json(d.beta);
  if (d.side == Side::kBessel) j["beta0"] = to_json(d.beta0);
  j["zeta"] = to_json(d.zeta);
  if (d.side == Side::kFJ) j["z"] = row_json(d.z);
  return j;
}

Json to_json(const OrbitInvariants& inv) {
  Json j;
  j["side"] = side_name(inv.side);
  j["t"] = to_json(inv.t);
  j["a"] = to_json(inv.a);
  j["b"] = to_json(inv.b);
  j["delta"] = to_json(inv.delta);
  j["delta_val"] = inv.delta_val;
  j["T_val"] = inv.T_val;
  j["parity"] = inv.parity;
  j["transfer"] = inv.transfer_sign;
  j["regular"] = inv.regular;
  if (!inv.regular) j["reason"] = inv.reason;
  return j;
}

Json to_json(const OrbitalResult& r) {
  Json j;
  j["space"] = r.space == Space::kSymmetric ? "symmetric" : "unitary";
  j["value"] = r.value;
  Json by = Json::object();
  for (const auto& [c, n] : r.by_colength) by[std::to_string(c)] = n;
  j["by_colength"] = by;
  j["B"] = r.bounds.B;
  j["window"] = {r.bounds.window_lo, r.bounds.window_hi};
  j["bound_stable"] = r.bounds.stable;
  j["window_ok"] = r.window_ok;
  j["visited"] = r.visited;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const LatticeCounts& c) {
  Json j;
  j["d"] = c.d;
  j["M"] = c.M;
  j["alt_sum"] = c.alt_sum;
  j["N"] = c.N;
  j["identity_holds"] = c.identity_holds;
  return j;
}

Json to_json(const FlReport& r) {
  Json j;
  j["datum"] = to_json(r.datum);
  j["invariants"] = to_json(r.inv);
  j["parity"] = r.parity;
  j["beta"] = to_json(r.match.cls.beta);
  j["epsilon"] = r.match.cls.epsilon;
  j["unitary_datum"] = to_json(r.match.uni);
  j["certificate_ok"] = r.match.cert.verified;
  j["sym"] = to_json(r.sym);
  j["uni"] = to_json(r.uni);
  if (r.have_counts) j["counts"] = to_json(r.counts);
  j["transfer"] = r.transfer;
  j["fl_holds"] = r.fl_holds;
  j["failures"] = r.failures;
  return j;
}

Json match_json(const SymOrbitDatum& d) {
  SymToUni m = match_sym_to_uni(d);
  Json j;
  j["beta"] = to_json(m.cls.beta);
  j["epsilon"] = m.cls.epsilon;
  j["unitary_datum"] = to_json(m.uni);
  j["certificate_ok"] = m.cert.verified;
  j["invariants"] = to_json(invariants(d));
  return j;
}

SymOrbitDatum sym_datum_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "datum: expected a JSON object");
  if (j.contains("q") && j.at("q") != f->q()) {
    fail(ErrorCode::kParse, "q: datum field does not match the context");
  }
  SymOrbitDatum d;
  const Json& side = require(j, "side");
  if (!side.is_string()) fail(ErrorCode::kParse, "side: expected \"fj\" or \"bessel\"");
  d.side = parse_side(side.get<std::string>());
  d.n = require_int(j, "n");
  d.m = require_int(j, "m");
  d.r = j.contains("r") ? require_int(j, "r") : 0;
  if (d.n < 1 || d.n > 8) fail(ErrorCode::kParse, "n: out of range");
  d.zeta = matrix_from_json(f, require(j, "zeta"), d.n, d.n, "zeta");
  if (d.side == Side::kFJ) {
    int m = d.m;
    auto x = elems_from_json(f, require(j, "x"), "x");
    auto y = elems_from_json(f, require(j, "y"), "y");
    if (static_cast<int>(x.size()) != m) fail(ErrorCode::kParse, "x: expected m entries");
    if (static_cast<int>(y.size()) != m) fail(ErrorCode::kParse, "y: expected m entries");
    d.x = Mat::row_vector(f, x);
    d.y = Mat::col_vector(f, y);
  }
  d.validate();
  return d;
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace orbitale
