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

#ifndef LOEWY_MATRIX_HPP
#define LOEWY_MATRIX_HPP

#include <optional>
#include <vector>

#include "loewy/scalar.hpp"

namespace loewy {

/// Dense matrix over a Field. Row-major, immutable by convention once built
/// (entries are exposed mutably only during assembly).
class Mat {
public:
  Mat() = default;
  Mat(FieldPtr f, int rows, int cols);
  static Mat identity(FieldPtr f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return f_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  Mat mul(const Mat& o) const;
  Mat add(const Mat& o) const;
  Mat sub(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;
  Mat pow(int e) const;  // square matrices, e >= 0
  /// Kronecker product; index convention (i,j) -> i*cols(b)+j (left factor is
  /// the slow index). Every tensor-power map in the library uses this order.
  Mat kron(const Mat& o) const;
  Scalar trace() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::vector<Scalar> row(int r) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // m * v (column vector)

  static Mat from_rows(FieldPtr f, const std::vector<std::vector<Scalar>>& rows, int cols);

private:
  FieldPtr f_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Canonical subspace of k^n: basis rows in reduced row echelon form with
/// strictly increasing pivots. Equality of subspaces is equality of grids.
class Subspace {
public:
  Subspace() = default;
  Subspace(FieldPtr f, int ambient);  // zero subspace

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const FieldPtr& field() const { return basis_.field(); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the rref basis; nullopt if v is outside.
  std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  friend Subspace rref_subspace(const Mat&);
  int ambient_ = 0;
  Mat basis_;
  std::vector<int> pivots_;
};

/// Row span of `rows` as a canonical Subspace.
Subspace rref_subspace(const Mat& rows);
Subspace rref_subspace(FieldPtr f, const std::vector<std::vector<Scalar>>& rows, int ambient);

/// Right kernel {v : m v = 0} as a canonical subspace of k^cols.
Subspace kernel(const Mat& m);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

int rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

/// Characteristic polynomial det(xI - m), low degree first, by the
/// division-free Berkowitz algorithm (valid over any field).
std::vector<Scalar> char_poly(const Mat& m);

/// Minimal polynomial of m (monic, low degree first).
std::vector<Scalar> min_poly(const Mat& m);

/// Evaluate a polynomial (low degree first) at a square matrix.
Mat poly_eval(const std::vector<Scalar>& poly, const Mat& m);

}  // namespace loewy

#endif
