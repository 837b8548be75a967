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

#ifndef LOEWY_ALGEBRA_HPP
#define LOEWY_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "loewy/matrix.hpp"

namespace loewy {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Sparse structure-constant entry: e_i e_j contains coeff * e_k.
struct MultEntry {
  int i, j, k;
  Scalar coeff;
};

struct CheckReport {
  bool pass = true;
  std::string first_violation;  // empty when pass
};

/// Finite-dimensional associative unital algebra presented by structure
/// constants on a fixed basis. Immutable; radical data is memoized.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  static AlgebraPtr make(FieldPtr f, int dim, const std::vector<MultEntry>& mult,
                         const std::vector<Scalar>& unit, std::vector<std::string> labels = {});

  const FieldPtr& field() const { return f_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& unit() const { return unit_; }

  /// Structure constants of e_i e_j as a coefficient vector.
  std::vector<Scalar> basis_product(int i, int j) const;
  const Scalar& c(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

  std::vector<Scalar> basis_vec(int i) const;
  std::vector<Scalar> mul_vec(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  Mat left_mult(const std::vector<Scalar>& a) const;
  Mat right_mult(const std::vector<Scalar>& a) const;
  const Mat& left_mult_basis(int i) const { return lmul_[i]; }
  const Mat& right_mult_basis(int i) const { return rmul_[i]; }

  bool is_commutative() const;
  std::optional<std::vector<Scalar>> invert(const std::vector<Scalar>& a) const;

  /// Associativity and unit axioms on all basis triples; the first violating
  /// triple is named in the report.
  CheckReport check() const;

  std::vector<MultEntry> sparse_mult() const;

private:
  Algebra() = default;
  FieldPtr f_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;  // dense dim^3
  std::vector<Scalar> unit_;
  std::vector<Mat> lmul_, rmul_;

  friend struct RadicalCache;
  mutable std::mutex rad_mutex_;
  mutable std::shared_ptr<const struct RadicalSeries> rad_cache_;
  friend const RadicalSeries& radical_series(const Algebra&);
};

/// Descending chain A = J^0 > J > J^2 > ... > J^w = 0.
struct RadicalSeries {
  std::vector<Subspace> powers;  // powers[n] = J^n; powers[0] = full space
  int loewy_length = 0;          // least w with J^w = 0
  const Subspace& power(int n) const;  // clamps n >= loewy_length to the zero subspace
};

/// Jacobson radical chain. Char 0 uses the trace-form kernel; char p the
/// layered Friedl-Ronyai iteration with p-power coefficient maps. The output
/// is certified (ideal, nilpotent, clean quotient) and RadicalNotComputable
/// is raised if certification fails.
const RadicalSeries& radical_series(const Algebra& a);

Subspace center(const Algebra& a);

enum class DualTag { Sym, SymN, CF, CFN, ReyN, CenterForms };

/// Subspace of the dual A*, rows are linear forms via f(e_i) = row[i].
struct DualSubspace {
  DualTag tag = DualTag::Sym;
  int n = 0;  // filtration index when tagged *N
  Subspace space;
  int dim() const { return space.dim(); }
};

/// Symmetric linear forms f(ab) = f(ba); n finite intersects with the
/// annihilator of J^n, n = nullopt gives Sym(A).
DualSubspace sym_n(const Algebra& a, std::optional<int> n);

/// n-th Reynolds ideal {z in Z(A) : J^n z = 0}, as a subspace of A.
Subspace reynolds_n(const Algebra& a, int n);

struct QuotientAlgebra {
  AlgebraPtr algebra;              // A / J^n on the complement basis
  Mat projection;                  // dim_q x dim: coordinates of e_t mod J^n
  std::vector<int> complement;     // ambient indices of the chosen complement basis
};

/// A/J^n with structure constants on the canonical complement basis (the
/// non-pivot coordinates of the rref basis of J^n).
QuotientAlgebra capital_quotient(const Algebra& a, int n);

/// Quotient by an arbitrary two-sided ideal given as a subspace.
QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal);

struct BasicReduction {
  std::vector<Scalar> idempotent;  // e = e_1 + ... + e_m
  AlgebraPtr basic;                // eAe
  Mat inclusion;                   // dim x dim_b: columns are the eAe basis inside A
  Mat restriction;                 // dim_b x dim: forms on A -> forms on eAe (f |-> f o incl)
};

/// Morita reduction to the basic algebra eAe, one primitive idempotent per
/// isomorphism class of simples. Requires a split semisimple quotient.
BasicReduction basic_reduction(const Algebra& a);

}  // namespace loewy

#endif
