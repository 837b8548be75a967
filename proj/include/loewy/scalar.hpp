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

#ifndef LOEWY_SCALAR_HPP
#define LOEWY_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loewy/errors.hpp"

namespace loewy {

enum class FieldKind { prime, prime_power, rationals, cyclotomic };

/// Description of an exact coefficient field: GF(p), GF(p^m), Q, or Q(zeta_n).
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  long long p = 0;                    ///< characteristic (prime kinds)
  int m = 1;                          ///< extension degree over GF(p)
  int n = 0;                          ///< root-of-unity order (cyclotomic)
  std::vector<std::string> min_poly;  ///< monic defining polynomial, low degree first; optional
};

/// Element of a Field, stored as a fully reduced coefficient vector over the
/// base field (length 1 for GF(p) and Q). Always canonical: two equal field
/// elements compare equal as Scalars.
class Scalar {
public:
  Scalar() = default;
  bool operator==(const Scalar& o) const { return fp_ == o.fp_ && q_ == o.q_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  friend class Field;
  std::vector<long long> fp_;  // char p coefficients, each in [0, p)
  std::vector<mpq_class> q_;   // char 0 coefficients, canonical
};

/// Exact field arithmetic. Immutable; hold through shared_ptr and share freely.
class Field {
public:
  static std::shared_ptr<const Field> make(const FieldSpec& spec);

  // Convenience factories.
  static std::shared_ptr<const Field> prime(long long p);
  static std::shared_ptr<const Field> prime_power(long long p, int m,
                                                  const std::vector<long long>& min_poly = {});
  static std::shared_ptr<const Field> rationals();
  static std::shared_ptr<const Field> cyclotomic(int n);

  const FieldSpec& spec() const { return spec_; }
  long long characteristic() const { return char_; }
  int degree() const { return deg_; }
  bool is_finite() const { return char_ > 0; }
  /// p^m for finite fields, 0 for infinite ones.
  mpz_class order() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Class of z for extension fields (degree > 1 only).
  Scalar generator() const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;  ///< throws ZeroInverse on 0
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, const mpz_class& e) const;  ///< e may be negative

  /// Canonical total order on scalars (used for deterministic tie-breaks),
  /// lexicographic on the canonical coefficient vector.
  int cmp(const Scalar& a, const Scalar& b) const;

  /// Parse the scalar grammar: signed integer | "a/b" | polynomial in z with
  /// integer or fraction coefficients, e.g. "-z^2 + 1/3". Exponents >= degree
  /// are reduced modulo the defining polynomial.
  Scalar parse(std::string_view text) const;
  std::string print(const Scalar& a) const;

  /// Exact square root: finite fields by scan, Q exactly, degree-2 extensions
  /// by reduction to base-field roots. Returns the canonically chosen root.
  /// Throws FieldExtensionRequired for cyclotomic degree > 2 (undecidable here).
  std::optional<Scalar> sqrt(const Scalar& a) const;

  /// Multiplicative order of a, searched up to `bound`; 0 if not found.
  long long mult_order(const Scalar& a, long long bound) const;

  /// Structural equality of fields (same spec up to canonical key).
  bool same(const Field& other) const;
  std::string key() const { return key_; }

private:
  Field() = default;
  void init(const FieldSpec& spec);

  // base-field helpers (char p)
  long long fp_add(long long a, long long b) const { return (a + b) % char_; }
  long long fp_mul(long long a, long long b) const { return (a * b) % char_; }
  long long fp_neg(long long a) const { return (char_ - a % char_) % char_; }
  long long fp_inv(long long a) const;

  std::vector<long long> fp_reduce(std::vector<long long> v) const;
  std::vector<mpq_class> q_reduce(std::vector<mpq_class> v) const;

  FieldSpec spec_;
  long long char_ = 0;
  int deg_ = 1;
  std::vector<long long> mp_fp_;  // min_poly over GF(p), monic, length deg_+1
  std::vector<mpq_class> mp_q_;   // min_poly over Q, monic, length deg_+1
  std::string key_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace loewy

#endif
