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

#include "loewy/matrix.hpp"

#include <algorithm>

namespace loewy {

namespace {
void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same(*b)) throw Error(Errc::FieldMismatch, "operands live in different fields");
}
}  // namespace

Mat::Mat(FieldPtr f, int rows, int cols) : f_(std::move(f)), rows_(rows), cols_(cols) {
  e_.assign(static_cast<size_t>(rows_) * cols_, f_->zero());
}

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<Scalar>>& rows, int cols) {
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(Errc::DimensionMismatch, "row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Mat Mat::mul(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (cols_ != o.rows_) throw Error(Errc::DimensionMismatch, "matrix product shapes");
  Mat r(f_, rows_, o.cols_);
  const Field& F = *f_;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (F.is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (F.is_zero(b)) continue;
        r.at(i, j) = F.add(r.at(i, j), F.mul(a, b));
      }
    }
  return r;
}

Mat Mat::add(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "matrix add shapes");
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
  return r;
}

Mat Mat::sub(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "matrix sub shapes");
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->sub(e_[i], o.e_[i]);
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->mul(e_[i], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(int e) const {
  if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "matrix power of non-square");
  Mat r = identity(f_, rows_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

Mat Mat::kron(const Mat& o) const {
  require_same_field(f_, o.f_);
  Mat r(f_, rows_ * o.rows_, cols_ * o.cols_);
  const Field& F = *f_;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (F.is_zero(a)) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) {
          const Scalar& b = o.at(k, l);
          if (F.is_zero(b)) continue;
          r.at(i * o.rows_ + k, j * o.cols_ + l) = F.mul(a, b);
        }
    }
  return r;
}

Scalar Mat::trace() const {
  if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "trace of non-square");
  Scalar t = f_->zero();
  for (int i = 0; i < rows_; ++i) t = f_->add(t, at(i, i));
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!f_->is_zero(x)) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::vector<Scalar> Mat::row(int r) const {
  std::vector<Scalar> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(Errc::DimensionMismatch, "apply length");
  const Field& F = *f_;
  std::vector<Scalar> out(rows_, F.zero());
  for (int j = 0; j < cols_; ++j) {
    if (F.is_zero(v[j])) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (F.is_zero(a)) continue;
      out[i] = F.add(out[i], F.mul(a, v[j]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// in-place Gauss-Jordan; returns pivot columns. Deterministic: first nonzero
// entry in column order, so the result is canonical for a given row span.
std::vector<int> gauss_jordan(Mat& m) {
  const Field& F = *m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!F.is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || F.is_zero(m.at(i, c))) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Subspace::Subspace(FieldPtr f, int ambient) : ambient_(ambient), basis_(Mat(f, 0, ambient)) {}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  return static_cast<bool>(coordinates(v));
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error(Errc::DimensionMismatch, "coordinates");
  const Field& F = *field();
  std::vector<Scalar> rem = v;
  std::vector<Scalar> coords(dim(), F.zero());
  for (int i = 0; i < dim(); ++i) {
    int p = pivots_[i];
    if (F.is_zero(rem[p])) continue;
    Scalar c = rem[p];
    coords[i] = c;
    for (int j = 0; j < ambient_; ++j) rem[j] = F.sub(rem[j], F.mul(c, basis_.at(i, j)));
  }
  for (const auto& x : rem)
    if (!F.is_zero(x)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace rref_subspace(const Mat& rows) {
  Mat m = rows;
  auto pivots = gauss_jordan(m);
  Subspace s(rows.field(), rows.cols());
  Mat basis(rows.field(), static_cast<int>(pivots.size()), rows.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(static_cast<int>(i), j) = m.at(static_cast<int>(i), j);
  s.ambient_ = rows.cols();
  s.basis_ = basis;
  s.pivots_ = pivots;
  return s;
}

Subspace rref_subspace(FieldPtr f, const std::vector<std::vector<Scalar>>& rows, int ambient) {
  return rref_subspace(Mat::from_rows(std::move(f), rows, ambient));
}

int rank(const Mat& m) {
  Mat c = m;
  return static_cast<int>(gauss_jordan(c).size());
}

Subspace kernel(const Mat& m) {
  const Field& F = *m.field();
  Mat r = m;
  auto pivots = gauss_jordan(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> rows;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(m.cols(), F.zero());
    v[c] = F.one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(r.at(static_cast<int>(i), c));
    rows.push_back(std::move(v));
  }
  return rref_subspace(m.field(), rows, m.cols());
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error(Errc::DimensionMismatch, "solve rhs length");
  const Field& F = *m.field();
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = gauss_jordan(aug);
  std::vector<Scalar> x(m.cols(), F.zero());
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;  // inconsistent
    x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square");
  const Field& F = *m.field();
  int n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = F.one();
  }
  auto pivots = gauss_jordan(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw Error(Errc::DimensionMismatch, "subspace sum ambient");
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis().row(i));
  for (int i = 0; i < v.dim(); ++i) rows.push_back(v.basis().row(i));
  return rref_subspace(u.field(), rows, u.ambient());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw Error(Errc::DimensionMismatch, "subspace intersect ambient");
  const Field& F = *u.field();
  int n = u.ambient();
  // columns: coefficients on u-basis then v-basis; rows: ambient coordinates
  Mat m(u.field(), n, u.dim() + v.dim());
  for (int j = 0; j < u.dim(); ++j)
    for (int r = 0; r < n; ++r) m.at(r, j) = u.basis().at(j, r);
  for (int j = 0; j < v.dim(); ++j)
    for (int r = 0; r < n; ++r) m.at(r, u.dim() + j) = F.neg(v.basis().at(j, r));
  Subspace ker = kernel(m);
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < ker.dim(); ++i) {
    std::vector<Scalar> w(n, F.zero());
    for (int j = 0; j < u.dim(); ++j) {
      const Scalar& c = ker.basis().at(i, j);
      if (F.is_zero(c)) continue;
      for (int r = 0; r < n; ++r) w[r] = F.add(w[r], F.mul(c, u.basis().at(j, r)));
    }
    rows.push_back(std::move(w));
  }
  return rref_subspace(u.field(), rows, n);
}

// ---------------------------------------------------------------------------

std::vector<Scalar> char_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "char_poly of non-square");
  const Field& F = *m.field();
  int n = m.rows();
  if (n == 0) return {F.one()};
  // Berkowitz: iteratively extend by the leading principal minors.
  std::vector<Scalar> vec{F.one(), F.neg(m.at(0, 0))};
  for (int i = 1; i < n; ++i) {
    // Toeplitz column: t_0 = 1, t_1 = -M[i][i], t_k = -(row) A^(k-2) (col)
    std::vector<Scalar> ts{F.one(), F.neg(m.at(i, i))};
    std::vector<Scalar> v(i);
    for (int r = 0; r < i; ++r) v[r] = m.at(r, i);
    for (int k = 2; k <= i + 1; ++k) {
      if (k > 2) {
        std::vector<Scalar> nv(i, F.zero());
        for (int r = 0; r < i; ++r)
          for (int c = 0; c < i; ++c)
            if (!F.is_zero(m.at(r, c)) && !F.is_zero(v[c]))
              nv[r] = F.add(nv[r], F.mul(m.at(r, c), v[c]));
        v = std::move(nv);
      }
      Scalar s = F.zero();
      for (int r = 0; r < i; ++r)
        if (!F.is_zero(m.at(i, r)) && !F.is_zero(v[r])) s = F.add(s, F.mul(m.at(i, r), v[r]));
      ts.push_back(F.neg(s));
    }
    std::vector<Scalar> next(i + 2, F.zero());
    for (int r = 0; r < i + 2; ++r)
      for (int k = 0; k <= std::min<int>(r, static_cast<int>(ts.size()) - 1); ++k)
        if (r - k <= i) next[r] = F.add(next[r], F.mul(ts[k], vec[r - k]));
    vec = std::move(next);
  }
  // vec: leading first; return low degree first
  std::vector<Scalar> out(n + 1, F.zero());
  for (int i = 0; i <= n; ++i) out[i] = vec[n - i];
  return out;
}

Mat poly_eval(const std::vector<Scalar>& poly, const Mat& m) {
  const Field& F = *m.field();
  Mat acc(m.field(), m.rows(), m.cols());
  Mat p = Mat::identity(m.field(), m.rows());
  for (size_t i = 0; i < poly.size(); ++i) {
    if (!F.is_zero(poly[i])) acc = acc.add(p.scaled(poly[i]));
    if (i + 1 < poly.size()) p = p.mul(m);
  }
  return acc;
}

std::vector<Scalar> min_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "min_poly of non-square");
  const Field& F = *m.field();
  int n = m.rows();
  // stack flattened powers I, M, M^2, ... until linearly dependent
  std::vector<std::vector<Scalar>> flat;
  Mat p = Mat::identity(m.field(), n);
  for (int d = 0; d <= n; ++d) {
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) row.push_back(p.at(i, j));
    flat.push_back(row);
    Mat stacked = Mat::from_rows(m.field(), flat, n * n);
    if (rank(stacked) < static_cast<int>(flat.size())) {
      // solve c_0 I + ... + c_{d-1} M^{d-1} = M^d
      Mat cols(m.field(), n * n, d);
      for (int k = 0; k < d; ++k)
        for (int t = 0; t < n * n; ++t) cols.at(t, k) = flat[k][t];
      auto sol = solve(cols, flat[d]);
      if (!sol) throw Error(Errc::Internal, "min_poly solve failed");
      std::vector<Scalar> out(d + 1, F.zero());
      for (int k = 0; k < d; ++k) out[k] = F.neg((*sol)[k]);
      out[d] = F.one();
      return out;
    }
    p = p.mul(m);
  }
  throw Error(Errc::Internal, "min_poly did not terminate");
}

}  // namespace loewy
