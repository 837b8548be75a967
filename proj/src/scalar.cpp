// Copyright 2026 the loewy developers
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

#include "loewy/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace loewy {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DivisionByZeroDenominator: return "DivisionByZeroDenominator";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldError: return "FieldError";
    case Errc::RadicalNotComputable: return "RadicalNotComputable";
    case Errc::SplitFieldRequired: return "SplitFieldRequired";
    case Errc::SplitFailure: return "SplitFailure";
    case Errc::InvalidCocycle: return "InvalidCocycle";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotAPivot: return "NotAPivot";
    case Errc::BadRootOfUnity: return "BadRootOfUnity";
    case Errc::MalformedParams: return "MalformedParams";
    case Errc::FieldExtensionRequired: return "FieldExtensionRequired";
    case Errc::NotOneDimensional: return "NotOneDimensional";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NoConsistentScalar: return "NoConsistentScalar";
    case Errc::NotWellDefinedOnCohomology: return "NotWellDefinedOnCohomology";
    case Errc::StarConventionViolation: return "StarConventionViolation";
    case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---- polynomial helpers over GF(p), coefficients low degree first ----

void fp_trim(std::vector<long long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<long long> fp_poly_mul(const std::vector<long long>& a, const std::vector<long long>& b,
                                   long long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  fp_trim(r);
  return r;
}

long long fp_inv_ll(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

// a mod m (m monic not required; leading coeff inverted)
std::vector<long long> fp_poly_mod(std::vector<long long> a, const std::vector<long long>& m,
                                   long long p) {
  fp_trim(a);
  if (m.empty()) throw Error(Errc::Internal, "poly mod by zero");
  long long lcinv = fp_inv_ll(m.back(), p);
  while (a.size() >= m.size()) {
    long long c = (a.back() * lcinv) % p;
    size_t off = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
    fp_trim(a);
  }
  return a;
}

std::vector<long long> fp_poly_gcd(std::vector<long long> a, std::vector<long long> b, long long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    auto r = fp_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long long lcinv = fp_inv_ll(a.back(), p);
    for (auto& c : a) c = (c * lcinv) % p;
  }
  return a;
}

// x^(p^e) mod m via repeated Frobenius
std::vector<long long> fp_xq_pow(const std::vector<long long>& m, long long p, int e) {
  std::vector<long long> x{0, 1};
  x = fp_poly_mod(x, m, p);
  auto powmod = [&](std::vector<long long> base, long long exp) {
    std::vector<long long> r{1};
    while (exp > 0) {
      if (exp & 1) r = fp_poly_mod(fp_poly_mul(r, base, p), m, p);
      base = fp_poly_mod(fp_poly_mul(base, base, p), m, p);
      exp >>= 1;
    }
    return r;
  };
  std::vector<long long> cur = x;
  for (int i = 0; i < e; ++i) cur = powmod(cur, p);
  return cur;
}

// irreducibility of monic m over GF(p): x^(p^deg) == x mod m, and
// gcd(x^(p^(deg/t)) - x, m) = 1 for every prime t | deg.
bool fp_poly_irreducible(const std::vector<long long>& m, long long p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  auto xq = fp_xq_pow(m, p, deg);
  std::vector<long long> x{0, 1};
  x = fp_poly_mod(x, m, p);
  auto diff = xq;
  diff.resize(std::max(diff.size(), x.size()), 0);
  for (size_t i = 0; i < x.size(); ++i) diff[i] = ((diff[i] - x[i]) % p + p) % p;
  fp_trim(diff);
  if (!diff.empty()) return false;
  for (int t = 2; t <= deg; ++t) {
    if (deg % t != 0) continue;
    bool tprime = true;
    for (int d = 2; d * d <= t; ++d)
      if (t % d == 0) tprime = false;
    if (!tprime) continue;
    auto xqt = fp_xq_pow(m, p, deg / t);
    auto d2 = xqt;
    d2.resize(std::max(d2.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) d2[i] = ((d2[i] - x[i]) % p + p) % p;
    fp_trim(d2);
    auto g = fp_poly_gcd(m, d2, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// ---- polynomial helpers over Q ----

void q_trim(std::vector<mpq_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<mpq_class> q_poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  q_trim(r);
  return r;
}

// exact division a / b (remainder must vanish)
std::vector<mpq_class> q_poly_div_exact(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  q_trim(a);
  std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    q_trim(a);
  }
  if (!a.empty()) throw Error(Errc::Internal, "inexact polynomial division");
  return q;
}

// n-th cyclotomic polynomial, monic over Z, via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
std::vector<mpq_class> cyclotomic_poly(int n) {
  std::vector<mpq_class> num(n + 1, mpq_class(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto phi_d = cyclotomic_poly(d);
    num = q_poly_div_exact(num, phi_d);
  }
  return num;
}

}  // namespace

// ---------------------------------------------------------------------------

mpz_class Field::order() const {
  if (char_ == 0) return 0;
  mpz_class r = 1;
  for (int i = 0; i < deg_; ++i) r *= static_cast<long>(char_);
  return r;
}

void Field::init(const FieldSpec& spec) {
  spec_ = spec;
  switch (spec.kind) {
    case FieldKind::prime: {
      if (!is_prime_ll(spec.p)) throw Error(Errc::NotPrime, "p = " + std::to_string(spec.p));
      char_ = spec.p;
      deg_ = 1;
      mp_fp_ = {0, 1};  // formally x; unused at degree 1
      break;
    }
    case FieldKind::prime_power: {
      if (!is_prime_ll(spec.p)) throw Error(Errc::NotPrime, "p = " + std::to_string(spec.p));
      if (spec.m < 1) throw Error(Errc::FieldError, "extension degree must be >= 1");
      char_ = spec.p;
      deg_ = spec.m;
      if (!spec.min_poly.empty()) {
        if (static_cast<int>(spec.min_poly.size()) != deg_ + 1)
          throw Error(Errc::FieldError, "min_poly must have degree-many+1 coefficients");
        mp_fp_.resize(deg_ + 1);
        for (int i = 0; i <= deg_; ++i) {
          // coefficients of the defining polynomial are plain integers mod p
          long long v = 0;
          try {
            v = std::stoll(spec.min_poly[i]);
          } catch (...) {
            throw Error(Errc::SyntaxError, "min_poly coefficient '" + spec.min_poly[i] + "'");
          }
          mp_fp_[i] = ((v % char_) + char_) % char_;
        }
        if (mp_fp_[deg_] != 1) throw Error(Errc::FieldError, "min_poly must be monic");
      } else {
        // deterministic search for the lexicographically least monic irreducible
        mp_fp_.assign(deg_ + 1, 0);
        mp_fp_[deg_] = 1;
        bool found = false;
        std::vector<long long> low(deg_, 0);
        while (!found) {
          for (int i = 0; i < deg_; ++i) mp_fp_[i] = low[i];
          if (fp_poly_irreducible(mp_fp_, char_)) {
            found = true;
            break;
          }
          int i = 0;
          while (i < deg_ && ++low[i] == char_) low[i++] = 0;
          if (i == deg_) throw Error(Errc::Internal, "no irreducible polynomial found");
        }
      }
      if (deg_ > 1 && !fp_poly_irreducible(mp_fp_, char_))
        throw Error(Errc::ReduciblePolynomial, "defining polynomial factors over GF(p)");
      break;
    }
    case FieldKind::rationals: {
      char_ = 0;
      deg_ = 1;
      mp_q_ = {mpq_class(0), mpq_class(1)};
      break;
    }
    case FieldKind::cyclotomic: {
      if (spec.n < 1) throw Error(Errc::FieldError, "cyclotomic order must be >= 1");
      char_ = 0;
      auto phi = cyclotomic_poly(spec.n);
      deg_ = static_cast<int>(phi.size()) - 1;
      mp_q_ = phi;
      if (!spec.min_poly.empty()) {
        if (static_cast<int>(spec.min_poly.size()) != deg_ + 1)
          throw Error(Errc::ReduciblePolynomial, "min_poly does not match the cyclotomic polynomial");
        for (int i = 0; i <= deg_; ++i) {
          mpq_class v(spec.min_poly[i]);
          v.canonicalize();
          if (v != mp_q_[i])
            throw Error(Errc::ReduciblePolynomial, "min_poly does not match the cyclotomic polynomial");
        }
      }
      break;
    }
  }
  // canonical key
  std::ostringstream k;
  switch (spec.kind) {
    case FieldKind::prime: k << "GF(" << char_ << ")"; break;
    case FieldKind::prime_power: {
      k << "GF(" << char_ << "^" << deg_ << ";";
      for (int i = 0; i <= deg_; ++i) k << mp_fp_[i] << (i < deg_ ? "," : "");
      k << ")";
      break;
    }
    case FieldKind::rationals: k << "QQ"; break;
    case FieldKind::cyclotomic: k << "QQ(zeta_" << spec.n << ")"; break;
  }
  key_ = k.str();
}

std::shared_ptr<const Field> Field::make(const FieldSpec& spec) {
  auto f = std::shared_ptr<Field>(new Field());
  f->init(spec);
  return f;
}

std::shared_ptr<const Field> Field::prime(long long p) {
  FieldSpec s;
  s.kind = FieldKind::prime;
  s.p = p;
  return make(s);
}

std::shared_ptr<const Field> Field::prime_power(long long p, int m,
                                                const std::vector<long long>& min_poly) {
  FieldSpec s;
  s.kind = FieldKind::prime_power;
  s.p = p;
  s.m = m;
  for (auto c : min_poly) s.min_poly.push_back(std::to_string(c));
  return make(s);
}

std::shared_ptr<const Field> Field::rationals() {
  FieldSpec s;
  s.kind = FieldKind::rationals;
  return make(s);
}

std::shared_ptr<const Field> Field::cyclotomic(int n) {
  FieldSpec s;
  s.kind = FieldKind::cyclotomic;
  s.n = n;
  return make(s);
}

bool Field::same(const Field& other) const { return this == &other || key_ == other.key_; }

Scalar Field::zero() const {
  Scalar s;
  if (char_ > 0)
    s.fp_.assign(deg_, 0);
  else
    s.q_.assign(deg_, mpq_class(0));
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s = zero();
  if (char_ > 0)
    s.fp_[0] = ((v % char_) + char_) % char_;
  else
    s.q_[0] = mpq_class(static_cast<long>(v));
  return s;
}

Scalar Field::generator() const {
  if (deg_ < 2) throw Error(Errc::FieldError, "field has no extension generator");
  Scalar s = zero();
  if (char_ > 0)
    s.fp_[1] = 1;
  else
    s.q_[1] = 1;
  return s;
}

bool Field::is_zero(const Scalar& a) const {
  if (char_ > 0) {
    for (auto c : a.fp_)
      if (c != 0) return false;
    return true;
  }
  for (const auto& c : a.q_)
    if (c != 0) return false;
  return true;
}

bool Field::is_one(const Scalar& a) const { return a == one(); }

std::vector<long long> Field::fp_reduce(std::vector<long long> v) const {
  v = fp_poly_mod(std::move(v), mp_fp_, char_);
  v.resize(deg_, 0);
  return v;
}

std::vector<mpq_class> Field::q_reduce(std::vector<mpq_class> v) const {
  q_trim(v);
  if (deg_ > 1) {
    while (v.size() >= mp_q_.size()) {
      mpq_class c = v.back() / mp_q_.back();
      size_t off = v.size() - mp_q_.size();
      for (size_t i = 0; i < mp_q_.size(); ++i) v[off + i] -= c * mp_q_[i];
      q_trim(v);
    }
  } else if (v.size() > 1) {
    throw Error(Errc::Internal, "degree overflow in base field");
  }
  v.resize(deg_, mpq_class(0));
  for (auto& c : v) c.canonicalize();
  return v;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = zero();
  if (char_ > 0)
    for (int i = 0; i < deg_; ++i) r.fp_[i] = fp_add(a.fp_[i], b.fp_[i]);
  else
    for (int i = 0; i < deg_; ++i) r.q_[i] = a.q_[i] + b.q_[i];
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
  Scalar r = zero();
  if (char_ > 0)
    for (int i = 0; i < deg_; ++i) r.fp_[i] = fp_neg(a.fp_[i]);
  else
    for (int i = 0; i < deg_; ++i) r.q_[i] = -a.q_[i];
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = zero();
  if (char_ > 0) {
    if (deg_ == 1) {
      r.fp_[0] = fp_mul(a.fp_[0], b.fp_[0]);
      return r;
    }
    r.fp_ = fp_reduce(fp_poly_mul(a.fp_, b.fp_, char_));
  } else {
    if (deg_ == 1) {
      r.q_[0] = a.q_[0] * b.q_[0];
      r.q_[0].canonicalize();
      return r;
    }
    r.q_ = q_reduce(q_poly_mul(a.q_, b.q_));
  }
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(Errc::ZeroInverse, "inverse of zero");
  Scalar r = zero();
  if (char_ > 0) {
    if (deg_ == 1) {
      r.fp_[0] = fp_inv_ll(a.fp_[0], char_);
      return r;
    }
    // extended Euclid in GF(p)[x] mod min_poly
    std::vector<long long> r0 = mp_fp_, r1 = a.fp_;
    fp_trim(r1);
    std::vector<long long> t0{}, t1{1};
    while (!r1.empty()) {
      // divide r0 by r1
      std::vector<long long> q;
      std::vector<long long> rem = r0;
      long long lcinv = fp_inv_ll(r1.back(), char_);
      q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        long long c = (rem.back() * lcinv) % char_;
        size_t off = rem.size() - r1.size();
        q[off] = c;
        for (size_t i = 0; i < r1.size(); ++i)
          rem[off + i] = ((rem[off + i] - c * r1[i]) % char_ + char_) % char_;
        fp_trim(rem);
      }
      // (r0, r1) = (r1, rem); (t0, t1) = (t1, t0 - q t1)
      auto qt1 = fp_poly_mul(q, t1, char_);
      std::vector<long long> nt = t0;
      nt.resize(std::max(nt.size(), qt1.size()), 0);
      for (size_t i = 0; i < qt1.size(); ++i) nt[i] = ((nt[i] - qt1[i]) % char_ + char_) % char_;
      fp_trim(nt);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(nt);
    }
    if (r0.size() != 1) throw Error(Errc::Internal, "gcd with min_poly not constant");
    long long lcinv = fp_inv_ll(r0[0], char_);
    for (auto& c : t0) c = (c * lcinv) % char_;
    r.fp_ = fp_reduce(std::move(t0));
  } else {
    if (deg_ == 1) {
      r.q_[0] = mpq_class(1) / a.q_[0];
      r.q_[0].canonicalize();
      return r;
    }
    std::vector<mpq_class> r0 = mp_q_, r1 = a.q_;
    q_trim(r1);
    std::vector<mpq_class> t0{}, t1{mpq_class(1)};
    while (!r1.empty()) {
      std::vector<mpq_class> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, mpq_class(0));
      std::vector<mpq_class> rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        mpq_class c = rem.back() / r1.back();
        size_t off = rem.size() - r1.size();
        q[off] = c;
        for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
        q_trim(rem);
      }
      auto qt1 = q_poly_mul(q, t1);
      std::vector<mpq_class> nt = t0;
      nt.resize(std::max(nt.size(), qt1.size()), mpq_class(0));
      for (size_t i = 0; i < qt1.size(); ++i) nt[i] -= qt1[i];
      q_trim(nt);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(nt);
    }
    if (r0.size() != 1) throw Error(Errc::Internal, "gcd with min_poly not constant");
    for (auto& c : t0) c /= r0[0];
    r.q_ = q_reduce(std::move(t0));
  }
  return r;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar base = a, r = one();
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int Field::cmp(const Scalar& a, const Scalar& b) const {
  if (char_ > 0) {
    for (int i = 0; i < deg_; ++i)
      if (a.fp_[i] != b.fp_[i]) return a.fp_[i] < b.fp_[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < deg_; ++i) {
    int c = ::cmp(a.q_[i], b.q_[i]);
    if (c != 0) return c;
  }
  return 0;
}

long long Field::mult_order(const Scalar& a, long long bound) const {
  if (is_zero(a)) return 0;
  Scalar cur = a;
  for (long long k = 1; k <= bound; ++k) {
    if (is_one(cur)) return k;
    cur = mul(cur, a);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// parsing and printing

namespace {

struct Tok {
  enum Kind { Int, Z, Caret, Slash, Plus, Minus, Star, End } kind;
  mpz_class val;
};

struct Lexer {
  std::string_view s;
  size_t i = 0;
  Tok next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) return {Tok::End, 0};
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      mpz_class v(std::string(s.substr(i, j - i)));
      i = j;
      return {Tok::Int, v};
    }
    ++i;
    switch (c) {
      case 'z': return {Tok::Z, 0};
      case '^': return {Tok::Caret, 0};
      case '/': return {Tok::Slash, 0};
      case '+': return {Tok::Plus, 0};
      case '-': return {Tok::Minus, 0};
      case '*': return {Tok::Star, 0};
      default: throw Error(Errc::SyntaxError, std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

Scalar Field::parse(std::string_view text) const {
  Lexer lx{text};
  Tok t = lx.next();
  if (t.kind == Tok::End) throw Error(Errc::SyntaxError, "empty scalar");
  Scalar acc = zero();
  bool first = true;
  while (t.kind != Tok::End) {
    int sign = 1;
    if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
      sign = t.kind == Tok::Minus ? -1 : 1;
      t = lx.next();
    } else if (!first) {
      throw Error(Errc::SyntaxError, "expected '+' or '-' between terms");
    }
    first = false;
    // term: [rational] [*] [z[^k]]  — at least one of the two parts
    bool have_coeff = false;
    mpz_class num = 1, den = 1;
    if (t.kind == Tok::Int) {
      have_coeff = true;
      num = t.val;
      t = lx.next();
      if (t.kind == Tok::Slash) {
        t = lx.next();
        if (t.kind != Tok::Int) throw Error(Errc::SyntaxError, "expected integer denominator");
        den = t.val;
        if (den == 0) throw Error(Errc::DivisionByZeroDenominator, "denominator 0");
        t = lx.next();
      }
      if (t.kind == Tok::Star) t = lx.next();
    }
    long long zexp = 0;
    if (t.kind == Tok::Z) {
      t = lx.next();
      zexp = 1;
      if (t.kind == Tok::Caret) {
        t = lx.next();
        if (t.kind != Tok::Int) throw Error(Errc::SyntaxError, "expected integer exponent");
        if (!t.val.fits_slong_p()) throw Error(Errc::SyntaxError, "exponent too large");
        zexp = t.val.get_si();
        t = lx.next();
      }
      if (deg_ < 2) throw Error(Errc::SyntaxError, "'z' is not valid over a degree-1 field");
    } else if (!have_coeff) {
      throw Error(Errc::SyntaxError, "expected a coefficient or 'z'");
    }
    // build the term
    Scalar term;
    if (char_ > 0) {
      long long nm = mpz_class(num % mpz_class(static_cast<long>(char_))).get_si();
      nm = ((nm % char_) + char_) % char_;
      long long dn = mpz_class(den % mpz_class(static_cast<long>(char_))).get_si();
      dn = ((dn % char_) + char_) % char_;
      if (dn == 0) throw Error(Errc::DivisionByZeroDenominator, "denominator divisible by p");
      term = from_int(nm);
      term = mul(term, from_int(fp_inv_ll(dn, char_)));
    } else {
      term = zero();
      term.q_[0] = mpq_class(num, den);
      term.q_[0].canonicalize();
    }
    if (zexp > 0) {
      Scalar zp = pow(generator(), mpz_class(static_cast<long>(zexp)));  // exponent >= degree reduces, never errors
      term = mul(term, zp);
    }
    if (sign < 0) term = neg(term);
    acc = add(acc, term);
  }
  return acc;
}

std::string Field::print(const Scalar& a) const {
  auto coeff_str = [&](int i) -> std::string {
    if (char_ > 0) return std::to_string(a.fp_[i]);
    return a.q_[i].get_str();
  };
  auto coeff_zero = [&](int i) { return char_ > 0 ? a.fp_[i] == 0 : a.q_[i] == 0; };
  if (deg_ == 1) return coeff_str(0);
  std::string out;
  for (int i = 0; i < deg_; ++i) {
    if (coeff_zero(i)) continue;
    std::string c = coeff_str(i);
    bool neg = !c.empty() && c[0] == '-';
    std::string abs = neg ? c.substr(1) : c;
    std::string part;
    if (i == 0) {
      part = abs;
    } else {
      std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
      part = (abs == "1") ? zp : abs + zp;
    }
    if (out.empty())
      out = (neg ? "-" : "") + part;
    else
      out += (neg ? " - " : " + ") + part;
  }
  if (out.empty()) out = "0";
  return out;
}

// ---------------------------------------------------------------------------
// square roots

std::optional<Scalar> Field::sqrt(const Scalar& a) const {
  if (is_zero(a)) return zero();
  auto canonical = [&](const Scalar& r) {
    Scalar m = neg(r);
    return cmp(r, m) >= 0 ? r : m;
  };
  if (char_ > 0) {
    // scan; field orders at desk scale are small
    mpz_class q = order();
    if (q > 1000000) throw Error(Errc::FieldExtensionRequired, "finite field too large for sqrt scan");
    // enumerate all elements as coefficient vectors
    std::vector<long long> idx(deg_, 0);
    while (true) {
      Scalar s = zero();
      s.fp_ = idx;
      if (mul(s, s) == a) return canonical(s);
      int i = 0;
      while (i < deg_ && ++idx[i] == char_) idx[i++] = 0;
      if (i == deg_) break;
    }
    return std::nullopt;
  }
  auto rat_sqrt = [](const mpq_class& t) -> std::optional<mpq_class> {
    if (t < 0) return std::nullopt;
    mpz_class nu = t.get_num(), de = t.get_den();
    if (mpz_perfect_square_p(nu.get_mpz_t()) && mpz_perfect_square_p(de.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), nu.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), de.get_mpz_t());
      return mpq_class(rn, rd);
    }
    return std::nullopt;
  };
  if (deg_ == 1) {
    auto r = rat_sqrt(a.q_[0]);
    if (!r) return std::nullopt;
    Scalar s = zero();
    s.q_[0] = *r;
    return canonical(s);
  }
  if (deg_ == 2) {
    // z^2 = alpha z + beta; solve (a0 + a1 z)^2 = t0 + t1 z.
    mpq_class alpha = -mp_q_[1], beta = -mp_q_[0];
    mpq_class t0 = a.q_[0], t1 = a.q_[1];
    auto mk = [&](const mpq_class& x, const mpq_class& y) {
      Scalar s = zero();
      s.q_[0] = x;
      s.q_[1] = y;
      return s;
    };
    if (t1 == 0) {
      if (auto r = rat_sqrt(t0)) return canonical(mk(*r, 0));
    }
    // b != 0 branch: with u = b^2, (alpha^2+4 beta) u^2 - (2 alpha t1 + 4 t0) u + t1^2 = 0
    mpq_class A = alpha * alpha + 4 * beta;
    mpq_class B = -(2 * alpha * t1 + 4 * t0);
    mpq_class C = t1 * t1;
    std::vector<mpq_class> us;
    if (A == 0) {
      if (B != 0) us.push_back(-C / B);
    } else {
      mpq_class disc = B * B - 4 * A * C;
      if (auto sd = rat_sqrt(disc)) {
        us.push_back((-B + *sd) / (2 * A));
        us.push_back((-B - *sd) / (2 * A));
      }
    }
    for (const auto& u : us) {
      if (u == 0) continue;
      auto b1 = rat_sqrt(u);
      if (!b1) continue;
      for (int sgn : {1, -1}) {
        mpq_class b = *b1 * sgn;
        if (b == 0) continue;
        mpq_class a0 = (t1 - alpha * b * b) / (2 * b);
        Scalar cand = mk(a0, b);
        if (mul(cand, cand) == a) return canonical(cand);
      }
    }
    return std::nullopt;
  }
  throw Error(Errc::FieldExtensionRequired,
              "square root undecidable at extension degree " + std::to_string(deg_) +
                  "; rebuild over a quadratic extension containing sqrt(" + print(a) + ")");
}

}  // namespace loewy
