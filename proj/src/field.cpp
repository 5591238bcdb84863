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

#include "orbitale/field.hpp"

#include <algorithm>
#include <cctype>

namespace orbitale {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::kNotPreRegular: return "NotPreRegular";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kLinearSolveSingular: return "LinearSolveSingular";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kNotThetaStable: return "NotThetaStable";
    case ErrorCode::kDegenerateGram: return "DegenerateGram";
    case ErrorCode::kDescentFails: return "DescentFails";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBoundUnstable: return "BoundUnstable";
    case ErrorCode::kSamplingExhausted: return "SamplingExhausted";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_odd_prime(uint32_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (uint32_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

uint32_t pow_mod(uint32_t b, uint32_t e, uint32_t q) {
  uint64_t r = 1, x = b % q;
  while (e) {
    if (e & 1) r = r * x % q;
    x = x * x % q;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

}  // namespace

Field::Field(uint32_t q, uint32_t eps, int precision)
    : q_(q), eps_(eps), precision_(precision), inv_(q, 0) {
  for (uint32_t x = 1; x < q; ++x) inv_[x] = pow_mod(x, q - 2, q);
}

FieldPtr Field::make(uint32_t q, int precision, uint32_t eps) {
  if (!is_odd_prime(q) || q > 251) {
    fail(ErrorCode::kInvalidArgument,
         "q must be an odd prime below 256, got " + std::to_string(q));
  }
  if (precision < 1) {
    fail(ErrorCode::kInvalidArgument, "precision must be positive");
  }
  if (eps == 0) {
    for (eps = 2; eps < q; ++eps) {
      if (pow_mod(eps, (q - 1) / 2, q) != 1) break;
    }
  } else {
    eps %= q;
    if (eps == 0 || pow_mod(eps, (q - 1) / 2, q) == 1) {
      fail(ErrorCode::kInvalidArgument,
           "eps must be a quadratic non-residue mod q");
    }
  }
  return FieldPtr(new Field(q, eps, precision));
}

FieldPtr Field::with_precision(int precision) const {
  return make(q_, precision, eps_);
}

bool Field::is_square_mod(uint32_t x) const {
  x %= q_;
  return x == 0 || pow_mod(x, (q_ - 1) / 2, q_) == 1;
}

Digit Field::inv(Digit a) const {
  uint32_t n = digit_norm(a);
  if (n == 0) fail(ErrorCode::kInvalidArgument, "inverse of zero digit");
  uint64_t ni = inv_[n];
  Digit c = conj(a);
  return {static_cast<uint16_t>(c.u * ni % q_),
          static_cast<uint16_t>(c.v * ni % q_)};
}

// ---------------------------------------------------------------------------

LocalElem::LocalElem(FieldPtr f, int start, std::vector<Digit> d, int prec)
    : field_(std::move(f)), val_(start), digits_(std::move(d)), prec_(prec) {
  normalize();
}

void LocalElem::normalize() {
  if (prec_ != kExact) {
    int64_t keep = static_cast<int64_t>(prec_) - val_;
    if (keep <= 0) {
      digits_.clear();
    } else if (static_cast<int64_t>(digits_.size()) > keep) {
      digits_.resize(static_cast<size_t>(keep));
    }
  }
  size_t first = 0;
  while (first < digits_.size() && digits_[first].is_zero()) ++first;
  if (first == digits_.size()) {
    digits_.clear();
    val_ = 0;
    return;
  }
  if (first > 0) {
    digits_.erase(digits_.begin(), digits_.begin() + first);
    val_ += static_cast<int>(first);
  }
  if (prec_ == kExact) {
    while (digits_.back().is_zero()) digits_.pop_back();
    int cap = field_->exact_cap();
    if (static_cast<int>(digits_.size()) > cap) {
      digits_.resize(field_->precision());
      prec_ = val_ + field_->precision();
    }
  } else if (static_cast<int64_t>(prec_) - val_ >
             static_cast<int64_t>(digits_.size())) {
    digits_.resize(prec_ - val_);
  }
}

LocalElem LocalElem::zero(FieldPtr f) { return LocalElem(std::move(f), 0, {}, kExact); }

LocalElem LocalElem::one(FieldPtr f) { return from_digit(std::move(f), {1, 0}, 0); }

LocalElem LocalElem::from_int(FieldPtr f, int64_t c) {
  uint16_t u = static_cast<uint16_t>(f->reduce(c));
  return from_digit(std::move(f), {u, 0}, 0);
}

LocalElem LocalElem::from_digit(FieldPtr f, Digit d, int val) {
  return LocalElem(std::move(f), val, {d}, kExact);
}

LocalElem LocalElem::j(FieldPtr f) { return from_digit(std::move(f), {0, 1}, 0); }

LocalElem LocalElem::pi_power(FieldPtr f, int k) {
  return from_digit(std::move(f), {1, 0}, k);
}

LocalElem LocalElem::zero_to(FieldPtr f, int abs_prec) {
  return LocalElem(std::move(f), abs_prec, {}, abs_prec);
}

LocalElem LocalElem::from_digits(FieldPtr f, int start, std::vector<Digit> d,
                                 int prec) {
  for (Digit& x : d) {
    x.u = static_cast<uint16_t>(x.u % f->q());
    x.v = static_cast<uint16_t>(x.v % f->q());
  }
  return LocalElem(std::move(f), start, std::move(d), prec);
}

int LocalElem::relative_precision() const {
  if (prec_ == kExact) return kExact;
  if (digits_.empty()) return 0;
  return prec_ - val_;
}

int LocalElem::valuation() const {
  if (!digits_.empty()) return val_;
  if (prec_ == kExact) fail(ErrorCode::kInvalidArgument, "valuation of exact zero");
  fail(ErrorCode::kPrecisionExhausted,
       "valuation not certified: element is O(pi^" + std::to_string(prec_) + ")");
}

int LocalElem::val_lower_bound() const {
  if (!digits_.empty()) return val_;
  return prec_;
}

bool LocalElem::in_base() const {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](Digit d) { return d.v == 0; });
}

bool LocalElem::is_integral() const {
  if (!digits_.empty()) return val_ >= 0;
  if (prec_ >= 0) return true;
  fail(ErrorCode::kPrecisionExhausted,
       "integrality not certified: element is O(pi^" + std::to_string(prec_) + ")");
}

Digit LocalElem::digit_at(int k) const {
  if (k >= prec_) {
    fail(ErrorCode::kPrecisionExhausted,
         "digit " + std::to_string(k) + " beyond precision " + std::to_string(prec_));
  }
  if (digits_.empty() || k < val_) return {};
  size_t idx = static_cast<size_t>(k - val_);
  return idx < digits_.size() ? digits_[idx] : Digit{};
}

LocalElem LocalElem::operator-() const {
  LocalElem r = *this;
  for (Digit& d : r.digits_) d = field_->neg(d);
  return r;
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  if (!field_->compatible(*o.field_)) {
    fail(ErrorCode::kInvalidArgument, "mixing elements of different fields");
  }
  int prec = std::min(prec_, o.prec_);
  int s1 = digits_.empty() ? prec_ : val_;
  int s2 = o.digits_.empty() ? o.prec_ : o.val_;
  int start = std::min(s1, s2);
  if (prec != kExact && start >= prec) return zero_to(field_, prec);
  int end;
  if (prec == kExact) {
    end = std::max(val_ + static_cast<int>(digits_.size()),
                   o.val_ + static_cast<int>(o.digits_.size()));
  } else {
    end = prec;
  }
  std::vector<Digit> d(static_cast<size_t>(end - start));
  const Field& f = *field_;
  for (size_t i = 0; i < digits_.size(); ++i) {
    int64_t idx = static_cast<int64_t>(val_) + static_cast<int64_t>(i) - start;
    if (idx < static_cast<int64_t>(d.size())) d[idx] = f.add(d[idx], digits_[i]);
  }
  for (size_t i = 0; i < o.digits_.size(); ++i) {
    int64_t idx = static_cast<int64_t>(o.val_) + static_cast<int64_t>(i) - start;
    if (idx < static_cast<int64_t>(d.size())) d[idx] = f.add(d[idx], o.digits_[i]);
  }
  return LocalElem(field_, start, std::move(d), prec);
}

LocalElem LocalElem::operator-(const LocalElem& o) const { return *this + (-o); }

LocalElem LocalElem::operator*(const LocalElem& o) const {
  if (is_exact_zero() || o.is_exact_zero()) {
    return zero(field_ ? field_ : o.field_);
  }
  if (!field_->compatible(*o.field_)) {
    fail(ErrorCode::kInvalidArgument, "mixing elements of different fields");
  }
  if (digits_.empty()) return zero_to(field_, prec_ + o.val_lower_bound());
  if (o.digits_.empty()) return zero_to(field_, o.prec_ + val_);
  int val = val_ + o.val_;
  int ra = relative_precision(), rb = o.relative_precision();
  int la = static_cast<int>(digits_.size()), lb = static_cast<int>(o.digits_.size());
  int rel = std::min(ra, rb);
  int len = (rel == kExact) ? la + lb - 1 : rel;
  const Field& f = *field_;
  uint64_t q = f.q(), eps = f.eps();
  std::vector<Digit> d(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) {
    uint64_t su = 0, sv = 0;
    int lo = std::max(0, k - (lb - 1));
    int hi = std::min(k, la - 1);
    for (int i = lo; i <= hi; ++i) {
      Digit a = digits_[i], b = o.digits_[k - i];
      su += static_cast<uint64_t>(a.u) * b.u + (eps * a.v % q) * b.v;
      sv += static_cast<uint64_t>(a.u) * b.v + static_cast<uint64_t>(a.v) * b.u;
    }
    d[k] = {static_cast<uint16_t>(su % q), static_cast<uint16_t>(sv % q)};
  }
  return LocalElem(field_, val, std::move(d), rel == kExact ? kExact : val + rel);
}

LocalElem LocalElem::inv() const {
  if (digits_.empty()) {
    if (prec_ == kExact) fail(ErrorCode::kInvalidArgument, "inverse of exact zero");
    fail(ErrorCode::kPrecisionExhausted, "inverse of O(pi^" + std::to_string(prec_) + ")");
  }
  const Field& f = *field_;
  if (prec_ == kExact && digits_.size() == 1) {
    return LocalElem(field_, -val_, {f.inv(digits_[0])}, kExact);
  }
  int rel = (prec_ == kExact) ? f.precision() : relative_precision();
  std::vector<Digit> b(static_cast<size_t>(rel));
  Digit b0 = f.inv(digits_[0]);
  b[0] = b0;
  int la = static_cast<int>(digits_.size());
  for (int k = 1; k < rel; ++k) {
    Digit s{};
    for (int i = 1; i <= std::min(k, la - 1); ++i) {
      s = f.add(s, f.mul(digits_[i], b[k - i]));
    }
    b[k] = f.neg(f.mul(b0, s));
  }
  return LocalElem(field_, -val_, std::move(b), -val_ + rel);
}

LocalElem LocalElem::operator/(const LocalElem& o) const {
  if (o.prec_ == kExact && o.digits_.size() == 1) {
    return (*this * LocalElem::from_digit(field_, field_->inv(o.digits_[0]), 0))
        .shift(-o.val_);
  }
  return *this * o.inv();
}

LocalElem LocalElem::shift(int k) const {
  LocalElem r = *this;
  if (r.is_exact_zero()) return r;
  if (!r.digits_.empty()) r.val_ += k;
  if (r.prec_ != kExact) r.prec_ += k;
  return r;
}

LocalElem LocalElem::truncate(int k) const {
  if (prec_ < k) {
    fail(ErrorCode::kPrecisionExhausted,
         "need digits below " + std::to_string(k) + ", have precision " +
             std::to_string(prec_));
  }
  if (digits_.empty() || val_ >= k) return zero(field_);
  std::vector<Digit> d(digits_.begin(),
                       digits_.begin() + std::min<int64_t>(digits_.size(), k - val_));
  return LocalElem(field_, val_, std::move(d), kExact);
}

LocalElem LocalElem::reduce_precision(int k) const {
  if (prec_ <= k) return *this;
  return LocalElem(field_, val_, digits_, k);
}

LocalElem LocalElem::with_field(FieldPtr f) const {
  if (field_ && !field_->compatible(*f)) {
    fail(ErrorCode::kInvalidArgument, "incompatible field");
  }
  return LocalElem(std::move(f), val_, digits_, prec_);
}

LocalElem LocalElem::tau() const {
  LocalElem r = *this;
  for (Digit& d : r.digits_) d = field_->conj(d);
  return r;
}

bool LocalElem::operator==(const LocalElem& o) const {
  if (prec_ != o.prec_ || digits_ != o.digits_) return false;
  if (!digits_.empty() && val_ != o.val_) return false;
  if (field_ && o.field_ && !field_->compatible(*o.field_)) return false;
  return true;
}

bool LocalElem::agrees_with(const LocalElem& o) const {
  return (*this - o).is_zero_within_precision();
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

std::string pow_str(int k) {
  if (k == 1) return "pi";
  return "pi^" + std::to_string(k);
}

std::string digit_str(Digit d) {
  std::string jv = d.v == 1 ? "j" : "j*" + std::to_string(d.v);
  if (d.v == 0) return std::to_string(d.u);
  if (d.u == 0) return jv;
  return "(" + std::to_string(d.u) + " + " + jv + ")";
}

std::string term_str(Digit d, int k) {
  if (k == 0) return digit_str(d);
  if (d.u == 1 && d.v == 0) return pow_str(k);
  return digit_str(d) + "*" + pow_str(k);
}

class Parser {
 public:
  Parser(FieldPtr f, const std::string& s) : f_(std::move(f)), s_(s) {}

  LocalElem run() {
    LocalElem r = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::kParse, msg + " at offset " + std::to_string(pos_) +
                                " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  int64_t integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) error("expected integer");
    if (pos_ - b > 9) error("integer too long");
    int64_t v = std::stoll(s_.substr(b, pos_ - b));
    return neg ? -v : v;
  }
  bool eat_pi() { return eat("pi") || eat("\xcf\x80"); }
  int pi_exponent() {
    if (eat("^")) return static_cast<int>(integer());
    return 1;
  }
  LocalElem expr() {
    LocalElem r = term();
    for (;;) {
      if (eat("+")) {
        r = r + term();
      } else if (eat("-")) {
        r = r - term();
      } else {
        return r;
      }
    }
  }
  LocalElem term() {
    LocalElem r = unary();
    while (eat("*")) r = r * unary();
    return r;
  }
  LocalElem unary() {
    if (eat("-")) return -unary();
    if (eat("+")) return unary();
    return primary();
  }
  LocalElem primary() {
    skip();
    if (eat("(")) {
      LocalElem r = expr();
      if (!eat(")")) error("expected ')'");
      return r;
    }
    if (eat("O(")) {
      int k = 0;
      if (eat_pi()) {
        k = pi_exponent();
      } else if (integer() != 1) {
        error("expected O(pi^k)");
      }
      if (!eat(")")) error("expected ')'");
      return LocalElem::zero_to(f_, k);
    }
    if (eat_pi()) return LocalElem::pi_power(f_, pi_exponent());
    if (eat("j")) return LocalElem::j(f_);
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return LocalElem::from_int(f_, integer());
    }
    error("unexpected token");
  }

  FieldPtr f_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

std::string LocalElem::render() const {
  if (is_exact_zero()) return "0";
  if (digits_.empty()) return "O(" + pow_str(prec_) + ")";
  if (prec_ == kExact && digits_.size() == 1) return term_str(digits_[0], val_);
  std::string inner;
  for (size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i].is_zero()) continue;
    if (!inner.empty()) inner += " + ";
    inner += term_str(digits_[i], static_cast<int>(i));
  }
  if (prec_ != kExact) inner += " + O(" + pow_str(prec_ - val_) + ")";
  if (val_ == 0) return inner;
  return pow_str(val_) + " * (" + inner + ")";
}

LocalElem LocalElem::parse(FieldPtr f, const std::string& text) {
  return Parser(std::move(f), text).run();
}

// ---------------------------------------------------------------------------

LocalElem random_poly(const FieldPtr& f, std::mt19937_64& rng, int start,
                      int len, bool base_only) {
  std::vector<Digit> d(static_cast<size_t>(len));
  for (Digit& x : d) {
    x.u = static_cast<uint16_t>(rng() % f->q());
    x.v = base_only ? 0 : static_cast<uint16_t>(rng() % f->q());
  }
  return LocalElem::from_digits(f, start, std::move(d));
}

LocalElem random_unit(const FieldPtr& f, std::mt19937_64& rng, bool base_only) {
  for (;;) {
    LocalElem x = random_poly(f, rng, 0, f->precision(), base_only);
    if (x.is_unit()) return x;
  }
}

LocalElem random_with_val(const FieldPtr& f, std::mt19937_64& rng, int v,
                          bool base_only) {
  return random_unit(f, rng, base_only).shift(v);
}

LocalElem random_unit(const FieldPtr& f, uint64_t seed, bool base_only) {
  std::mt19937_64 rng(seed);
  return random_unit(f, rng, base_only);
}

LocalElem random_with_val(const FieldPtr& f, uint64_t seed, int v, bool base_only) {
  std::mt19937_64 rng(seed);
  return random_with_val(f, rng, v, base_only);
}

}  // namespace orbitale
