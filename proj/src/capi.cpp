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

#include "orbitale/orbitale.h"

#include <cstring>
#include <string>

#include "orbitale/error.hpp"
#include "orbitale/sampler.hpp"
#include "serialize.hpp"

struct orb_context {
  orbitale::FieldPtr field;
};

struct orb_datum {
  orbitale::FieldPtr field;
  orbitale::SymOrbitDatum datum;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
orb_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ORB_OK;
  } catch (const orbitale::Error& e) {
    g_last_error = e.what();
    return static_cast<orb_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("Parse: ") + e.what();
    return ORB_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "Internal: out of memory";
    return ORB_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
    return ORB_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const orbitale::Json& j, char** out) {
  if (out == nullptr) orbitale::fail(orbitale::ErrorCode::kInvalidArgument, "null output");
  *out = dup_string(j.dump(2));
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    orbitale::fail(orbitale::ErrorCode::kInvalidArgument, std::string("null ") + what);
  }
}

}  // namespace

extern "C" {

const char* orb_status_name(orb_status s) {
  return orbitale::error_name(static_cast<orbitale::ErrorCode>(s));
}

const char* orb_last_error(void) { return g_last_error.c_str(); }

void orb_string_free(char* s) { delete[] s; }

orb_status orb_context_new(uint32_t q, int precision, orb_context** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = new orb_context{orbitale::Field::make(q, precision)};
  });
}

void orb_context_free(orb_context* ctx) { delete ctx; }

uint32_t orb_context_q(const orb_context* ctx) { return ctx->field->q(); }

int orb_context_precision(const orb_context* ctx) { return ctx->field->precision(); }

orb_status orb_datum_from_json(const orb_context* ctx, const char* json, orb_datum** out) {
  return guarded([&] {
    require(ctx, "context");
    require(json, "json");
    require(out, "output handle");
    orbitale::Json j;
    try {
      j = orbitale::Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      orbitale::fail(orbitale::ErrorCode::kParse, e.what());
    }
    *out = new orb_datum{ctx->field, orbitale::sym_datum_from_json(ctx->field, j)};
  });
}

orb_status orb_datum_to_json(const orb_datum* d, char** out) {
  return guarded([&] {
    require(d, "datum");
    emit(orbitale::to_json(d->datum), out);
  });
}

void orb_datum_free(orb_datum* d) { delete d; }

orb_status orb_sample(const orb_context* ctx, orb_side side, int n, int val_delta_max,
                      uint64_t seed, int index, orb_datum** out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "output handle");
    if (n < 1 || val_delta_max < 0 || index < 0) {
      orbitale::fail(orbitale::ErrorCode::kInvalidArgument, "n, val_delta_max or index out of range");
    }
    orbitale::SampleRequest req;
    req.side = side == ORB_SIDE_FJ ? orbitale::Side::kFJ : orbitale::Side::kBessel;
    req.n = n;
    req.val_delta_max = val_delta_max;
    req.seed = seed;
    *out = new orb_datum{ctx->field, orbitale::sample_instance(ctx->field, req, index)};
  });
}

uint64_t orb_instance_seed(uint64_t seed, int index) {
  return orbitale::mix_seed(seed, static_cast<uint64_t>(index));
}

orb_status orb_invariants(const orb_datum* d, char** out) {
  return guarded([&] {
    require(d, "datum");
    emit(orbitale::to_json(orbitale::invariants(d->datum, true)), out);
  });
}

orb_status orb_match(const orb_datum* d, char** out) {
  return guarded([&] {
    require(d, "datum");
    emit(orbitale::match_json(d->datum), out);
  });
}

orb_status orb_count_lattices(const orb_context* ctx, const char* json, uint64_t cap,
                              char** out, int* holds) {
  return guarded([&] {
    require(ctx, "context");
    require(json, "json");
    orbitale::Json j;
    try {
      j = orbitale::Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      orbitale::fail(orbitale::ErrorCode::kParse, e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
      orbitale::fail(orbitale::ErrorCode::kParse, "expected {q, a: [..], b: [..]}");
    }
    if (j.contains("q") && j.at("q") != ctx->field->q()) {
      orbitale::fail(orbitale::ErrorCode::kParse, "q: input does not match the context");
    }
    auto a = orbitale::elems_from_json(ctx->field, j.at("a"), "a");
    auto b = orbitale::elems_from_json(ctx->field, j.at("b"), "b");
    if (a.empty() || a.size() != b.size()) {
      orbitale::fail(orbitale::ErrorCode::kParse, "a and b must be non-empty of equal length");
    }
    auto alg = orbitale::build_algebra(ctx->field, a);
    auto gram = orbitale::build_gram(alg, b);
    auto counts = orbitale::count_lattices(alg, gram, cap);
    if (holds != nullptr) *holds = counts.identity_holds ? 1 : 0;
    emit(orbitale::to_json(counts), out);
  });
}

orb_status orb_verify_fl(const orb_datum* d, uint64_t module_cap, char** out, int* holds) {
  return guarded([&] {
    require(d, "datum");
    orbitale::VerifyOptions opt;
    if (module_cap > 0) opt.module_cap = module_cap;
    auto report = orbitale::verify_fl(d->datum, opt);
    if (holds != nullptr) *holds = report.fl_holds ? 1 : 0;
    emit(orbitale::to_json(report), out);
  });
}

orb_status orb_verify_whittaker(int n, int m, int order, int trials, uint64_t seed,
                                char** out, int* holds) {
  return guarded([&] {
    if (m < 1 || n < m || order < 0 || trials < 0) {
      orbitale::fail(orbitale::ErrorCode::kInvalidArgument, "need 1 <= m <= n, order >= 0");
    }
    bool all_zero = true;
    orbitale::Json rows = orbitale::Json::array();
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(orbitale::mix_seed(seed, static_cast<uint64_t>(t)));
      auto a = orbitale::random_satake(rng, n);
      auto b = orbitale::random_satake(rng, m);
      auto z = orbitale::zeta0_series(a, b, order);
      auto l = orbitale::lfactor_series(a, b, order);
      orbitale::Json row;
      row["trial"] = t;
      row["a_pi"] = orbitale::Json::array();
      for (const auto& x : a) row["a_pi"].push_back(orbitale::rational_str(x));
      row["a_sigma"] = orbitale::Json::array();
      for (const auto& x : b) row["a_sigma"].push_back(orbitale::rational_str(x));
      row["diffs"] = orbitale::Json::array();
      bool zero = true;
      for (int k = 0; k <= order; ++k) {
        orbitale::Rational diff = z[k] - l[k];
        if (diff != 0) zero = false;
        row["diffs"].push_back(orbitale::rational_str(diff));
      }
      row["all_zero"] = zero;
      all_zero = all_zero && zero;
      rows.push_back(row);
    }
    orbitale::Json j;
    j["n"] = n;
    j["m"] = m;
    j["order"] = order;
    j["seed"] = seed;
    j["trials"] = rows;
    j["all_zero"] = all_zero;
    if (holds != nullptr) *holds = all_zero ? 1 : 0;
    emit(j, out);
  });
}

}  // extern "C"
