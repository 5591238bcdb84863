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

// orbitale: command-line front end over the C API.
//
// Exit codes: 0 when every identity holds, 2 on input or precondition
// errors, 3 when an identity is violated (the offending record is in the
// JSON report).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "orbitale/orbitale.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolated = 3;

struct Common {
  int precision = 32;
  bool strict_precision = false;
  uint64_t cap = uint64_t{1} << 24;
};

struct CtxDeleter {
  void operator()(orb_context* c) const { orb_context_free(c); }
};
struct DatumDeleter {
  void operator()(orb_datum* d) const { orb_datum_free(d); }
};
using Ctx = std::unique_ptr<orb_context, CtxDeleter>;
using Datum = std::unique_ptr<orb_datum, DatumDeleter>;

// Status plus message, captured on the thread that made the call.
struct Failure {
  orb_status status = ORB_OK;
  std::string message;
};

Failure last_failure(orb_status s) { return {s, orb_last_error()}; }

bool is_input_error(orb_status s) {
  switch (s) {
    case ORB_INVALID_ARGUMENT:
    case ORB_PARSE:
    case ORB_NOT_PRE_REGULAR:
    case ORB_NOT_REGULAR:
    case ORB_NOT_THETA_STABLE:
    case ORB_DEGENERATE_GRAM:
    case ORB_DESCENT_FAILS:
    case ORB_SAMPLING_EXHAUSTED:
      return true;
    default:
      return false;
  }
}

int report_failure(const Failure& f) {
  std::cerr << "orbitale: " << f.message << "\n";
  return is_input_error(f.status) ? kExitInput : kExitViolated;
}

std::string take(char* s) {
  std::string out(s);
  orb_string_free(s);
  return out;
}

Ctx make_context(uint32_t q, int precision, Failure* err) {
  orb_context* c = nullptr;
  orb_status s = orb_context_new(q, precision, &c);
  if (s != ORB_OK) {
    *err = last_failure(s);
    return nullptr;
  }
  return Ctx(c);
}

void check_q(uint32_t q) {
  static const uint32_t kAllowed[] = {3, 5, 7, 11, 13};
  if (std::find(std::begin(kAllowed), std::end(kAllowed), q) == std::end(kAllowed)) {
    throw CLI::ValidationError("--q", "q must be an odd prime <= 13");
  }
}

std::optional<std::string> read_file(const std::string& path, Failure* err) {
  std::ifstream in(path);
  if (!in) {
    *err = {ORB_PARSE, "cannot read " + path};
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Runs `call` with a fresh context; retries once at doubled precision when
// the precision budget runs out, unless --strict-precision.
template <typename Call>
orb_status with_precision(uint32_t q, const Common& c, Failure* err, Call&& call) {
  int precision = c.precision;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Ctx ctx = make_context(q, precision, err);
    if (!ctx) return err->status;
    orb_status s = call(ctx.get());
    if (s == ORB_OK) {
      *err = {};
      return s;
    }
    *err = last_failure(s);
    if (s != ORB_PRECISION_EXHAUSTED || c.strict_precision) return s;
    precision *= 2;
  }
  return err->status;
}

// Reads a JSON document and returns its "q" (or the fallback).
uint32_t q_of(const std::string& text, uint32_t fallback) {
  try {
    Json j = Json::parse(text);
    if (j.is_object() && j.contains("q") && j["q"].is_number_unsigned()) {
      return j["q"].get<uint32_t>();
    }
  } catch (const nlohmann::json::exception&) {
    // Reported with field context by the library.
  }
  return fallback;
}

int threads_from_env() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBITALE_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return std::min<int>(t, static_cast<int>(hw));
  }
  return static_cast<int>(hw);
}

template <typename Work>
void parallel_for(int count, Work&& work) {
  int workers = std::min(threads_from_env(), std::max(count, 1));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) work(i);
    });
  }
  for (auto& t : pool) t.join();
}

// --- single-datum subcommands ---------------------------------------------

int cmd_datum(const std::string& path, uint32_t q_default, const Common& c,
              orb_status (*op)(const orb_datum*, char**), bool require_regular) {
  Failure err;
  auto text = read_file(path, &err);
  if (!text) return report_failure(err);
  uint32_t q = q_of(*text, q_default);
  std::string out;
  orb_status s = with_precision(q, c, &err, [&](orb_context* ctx) {
    orb_datum* d = nullptr;
    orb_status st = orb_datum_from_json(ctx, text->c_str(), &d);
    if (st != ORB_OK) return st;
    Datum datum(d);
    char* res = nullptr;
    st = op(datum.get(), &res);
    if (st == ORB_OK) out = take(res);
    return st;
  });
  if (s != ORB_OK) return report_failure(err);
  std::cout << out << "\n";
  if (require_regular && !Json::parse(out).value("regular", false)) {
    std::cerr << "orbitale: datum is not regular\n";
    return kExitInput;
  }
  return kExitOk;
}

int cmd_count_lattices(const std::string& path, uint32_t q_default, const Common& c) {
  Failure err;
  auto text = read_file(path, &err);
  if (!text) return report_failure(err);
  uint32_t q = q_of(*text, q_default);
  std::string out;
  int holds = 0;
  orb_status s = with_precision(q, c, &err, [&](orb_context* ctx) {
    char* res = nullptr;
    orb_status st = orb_count_lattices(ctx, text->c_str(), c.cap, &res, &holds);
    if (st == ORB_OK) out = take(res);
    return st;
  });
  if (s != ORB_OK) return report_failure(err);
  std::cout << out << "\n";
  return holds ? kExitOk : kExitViolated;
}

// --- sweeps -------------------------------------------------------------------

struct Sweep {
  uint32_t q = 3;
  int n = 1;
  std::string side = "fj";
  int val_delta_max = 4;
  int instances = 10;
  uint64_t seed = 0;
};

orb_side side_of(const std::string& s) { return s == "fj" ? ORB_SIDE_FJ : ORB_SIDE_BESSEL; }

int cmd_sample(const Sweep& sw, const Common& c, const std::string& out_dir) {
  std::vector<std::string> docs(sw.instances);
  std::vector<Failure> errs(sw.instances);
  parallel_for(sw.instances, [&](int i) {
    with_precision(sw.q, c, &errs[i], [&](orb_context* ctx) {
      orb_datum* d = nullptr;
      orb_status st = orb_sample(ctx, side_of(sw.side), sw.n, sw.val_delta_max, sw.seed, i, &d);
      if (st != ORB_OK) return st;
      Datum datum(d);
      char* res = nullptr;
      st = orb_datum_to_json(datum.get(), &res);
      if (st == ORB_OK) docs[i] = take(res);
      return st;
    });
  });
  for (const auto& e : errs) {
    if (e.status != ORB_OK) return report_failure(e);
  }
  if (out_dir.empty()) {
    Json all = Json::array();
    for (const auto& d : docs) all.push_back(Json::parse(d));
    std::cout << all.dump(2) << "\n";
    return kExitOk;
  }
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < sw.instances; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "datum_%04d.json", i);
    write_file((std::filesystem::path(out_dir) / name).string(), docs[i] + "\n");
  }
  std::cout << "wrote " << sw.instances << " data to " << out_dir << "\n";
  return kExitOk;
}

std::string csv_cell(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

int cmd_verify_fl(const Sweep& sw, const Common& c, const std::string& out_path,
                  std::string csv_path) {
  std::vector<Json> records(sw.instances);
  std::vector<Failure> errs(sw.instances);
  std::vector<int> holds(sw.instances, 0);
  parallel_for(sw.instances, [&](int i) {
    with_precision(sw.q, c, &errs[i], [&](orb_context* ctx) {
      orb_datum* d = nullptr;
      orb_status st = orb_sample(ctx, side_of(sw.side), sw.n, sw.val_delta_max, sw.seed, i, &d);
      if (st != ORB_OK) return st;
      Datum datum(d);
      char* res = nullptr;
      st = orb_verify_fl(datum.get(), c.cap, &res, &holds[i]);
      if (st == ORB_OK) records[i] = Json::parse(take(res));
      return st;
    });
  });

  Json report = Json::array();
  std::ostringstream csv;
  csv << "seed,n,q,valDelta,parity,sym,uni,altM,N,transfer,fl_holds\n";
  int exit_code = kExitOk;
  for (int i = 0; i < sw.instances; ++i) {
    uint64_t iseed = orb_instance_seed(sw.seed, i);
    Json rec;
    rec["index"] = i;
    rec["seed"] = iseed;
    rec["q"] = sw.q;
    rec["n"] = sw.n;
    if (errs[i].status != ORB_OK) {
      rec["error"] = errs[i].message;
      rec["fl_holds"] = false;
      int code = is_input_error(errs[i].status) ? kExitInput : kExitViolated;
      exit_code = std::max(exit_code, code);
      csv << iseed << "," << sw.n << "," << sw.q << ",,,,,,,,false\n";
    } else {
      for (auto& [k, v] : records[i].items()) rec[k] = v;
      if (!holds[i]) exit_code = kExitViolated;
      const Json& inv = rec["invariants"];
      Json alt, nn;
      if (rec.contains("counts")) {
        alt = rec["counts"]["alt_sum"];
        nn = rec["counts"]["N"];
      }
      csv << iseed << "," << sw.n << "," << sw.q << "," << csv_cell(inv["delta_val"]) << ","
          << csv_cell(rec["parity"]) << "," << csv_cell(rec["sym"]["value"]) << ","
          << csv_cell(rec["uni"]["value"]) << "," << csv_cell(alt) << "," << csv_cell(nn)
          << "," << csv_cell(rec["transfer"]) << "," << csv_cell(rec["fl_holds"]) << "\n";
    }
    report.push_back(rec);
  }
  if (csv_path.empty()) csv_path = std::filesystem::path(out_path).replace_extension(".csv").string();
  write_file(out_path, report.dump(2) + "\n");
  write_file(csv_path, csv.str());
  std::cout << csv.str();
  int passed = static_cast<int>(std::count(holds.begin(), holds.end(), 1));
  std::cerr << passed << "/" << sw.instances << " instances satisfy the identity\n";
  return exit_code;
}

int cmd_verify_whittaker(int n, int m, int order, int trials, uint64_t seed,
                         const std::string& out_path) {
  char* res = nullptr;
  int holds = 0;
  orb_status s = orb_verify_whittaker(n, m, order, trials, seed, &res, &holds);
  if (s != ORB_OK) return report_failure(last_failure(s));
  std::string out = take(res);
  if (!out_path.empty()) write_file(out_path, out + "\n");
  std::cout << out << "\n";
  return holds ? kExitOk : kExitViolated;
}

void add_common(CLI::App* app, Common* c) {
  app->add_option("--precision", c->precision, "Relative precision in pi-adic digits")
      ->check(CLI::Range(4, 4096));
  app->add_flag("--strict-precision", c->strict_precision,
                "Fail on precision exhaustion instead of retrying at doubled precision");
  app->add_option("--cap", c->cap, "Enumeration cap on |Q| for finite-module counts");
}

void add_sweep(CLI::App* app, Sweep* sw, bool with_case) {
  app->add_option("--q", sw->q, "Residue field size")->check([](const std::string& s) {
    try {
      check_q(static_cast<uint32_t>(std::stoul(s)));
    } catch (const std::exception&) {
      return std::string("q must be one of 3, 5, 7, 11, 13");
    }
    return std::string();
  });
  app->add_option("--n", sw->n, "Matrix size n")->check(CLI::Range(1, 4));
  if (with_case) {
    app->add_option("--case", sw->side, "fj or bessel")
        ->check(CLI::IsMember({"fj", "bessel"}));
  }
  app->add_option("--val-delta-max", sw->val_delta_max, "Largest sampled val(Delta)")
      ->check(CLI::Range(0, 6));
  app->add_option("--instances", sw->instances, "Number of instances")
      ->check(CLI::Range(1, 100000));
  app->add_option("--seed", sw->seed, "Sweep seed")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orbital-integral and lattice-count verification"};
  app.require_subcommand(1);
  Common common;
  uint32_t q_default = 3;
  std::string input;

  auto* inv = app.add_subcommand("invariants", "Invariants and regularity of a datum file");
  inv->add_option("file", input, "Datum JSON")->required();
  inv->add_option("--q", q_default, "Residue field size when the file has no q");
  add_common(inv, &common);

  auto* match = app.add_subcommand("match", "Match a symmetric datum to its unitary partner");
  match->add_option("file", input, "Datum JSON")->required();
  match->add_option("--q", q_default, "Residue field size when the file has no q");
  add_common(match, &common);

  auto* count = app.add_subcommand("count-lattices", "Count M_i and N for {q, a, b}");
  count->add_option("file", input, "Input JSON")->required();
  count->add_option("--q", q_default, "Residue field size when the file has no q");
  add_common(count, &common);

  Sweep sample_sw;
  std::string out_dir;
  auto* sample = app.add_subcommand("sample", "Seeded regular integral orbit data");
  add_sweep(sample, &sample_sw, true);
  sample->add_option("--out-dir", out_dir, "Directory for datum_NNNN.json files");
  add_common(sample, &common);

  Sweep fl_sw;
  std::string out_path = "report.json", csv_path;
  auto* fl = app.add_subcommand("verify-fl", "Check the fundamental lemma on random data");
  add_sweep(fl, &fl_sw, true);
  fl->add_option("--out", out_path, "JSON report path");
  fl->add_option("--csv", csv_path, "CSV summary path (default: report path with .csv)");
  add_common(fl, &common);

  int wn = 2, wm = 2, order = 6, trials = 10;
  uint64_t wseed = 0;
  std::string wout;
  auto* wh = app.add_subcommand("verify-whittaker", "Check zeta0 = L to a given order");
  wh->add_option("--n", wn)->check(CLI::Range(1, 4));
  wh->add_option("--m", wm)->check(CLI::Range(1, 4));
  wh->add_option("--order", order, "Truncation order K")->check(CLI::Range(0, 16));
  wh->add_option("--trials", trials)->check(CLI::Range(1, 1000));
  wh->add_option("--seed", wseed)->required();
  wh->add_option("--out", wout, "Optional JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*inv) return cmd_datum(input, q_default, common, orb_invariants, true);
    if (*match) return cmd_datum(input, q_default, common, orb_match, false);
    if (*count) return cmd_count_lattices(input, q_default, common);
    if (*sample) return cmd_sample(sample_sw, common, out_dir);
    if (*fl) return cmd_verify_fl(fl_sw, common, out_path, csv_path);
    if (*wh) {
      if (wm > wn) {
        std::cerr << "orbitale: --m must not exceed --n\n";
        return kExitInput;
      }
      return cmd_verify_whittaker(wn, wm, order, trials, wseed, wout);
    }
  } catch (const std::exception& e) {
    std::cerr << "orbitale: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
