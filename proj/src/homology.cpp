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

#include "loewy/homology.hpp"

#include <sstream>

namespace loewy {

namespace {

std::uint64_t ipow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (1ull << 40)) return r;  // saturate well above any budget
    r *= b;
  }
  return r;
}

void check_budget(std::uint64_t rows, std::uint64_t cols, std::uint64_t budget,
                  const char* what) {
  if (rows * cols > budget) {
    std::ostringstream os;
    os << what << " differential needs a " << rows << " x " << cols << " matrix ("
       << rows * cols << " entries > budget " << budget << ")";
    throw Error(Errc::SizeBudgetExceeded, os.str());
  }
}

}  // namespace

CochainComplex::CochainComplex(std::vector<int> dims, std::vector<Mat> diffs)
    : dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.size() != diffs_.size() + 1)
    throw Error(Errc::DimensionMismatch, "cochain complex needs one more space than differential");
  for (size_t n = 0; n < diffs_.size(); ++n) {
    if (diffs_[n].cols() != dims_[n] || diffs_[n].rows() != dims_[n + 1])
      throw Error(Errc::DimensionMismatch, "differential shape mismatch at degree " +
                                               std::to_string(n));
    if (n > 0 && !diffs_[n].mul(diffs_[n - 1]).is_zero())
      throw Error(Errc::ValidationError, "d o d != 0 at degree " + std::to_string(n - 1));
  }
}

int CochainComplex::space_dim(int n) const {
  if (n < 0 || n >= static_cast<int>(dims_.size()))
    throw Error(Errc::IndexOutOfRange, "cochain space degree " + std::to_string(n));
  return dims_[n];
}

const Mat& CochainComplex::diff(int n) const {
  if (n < 0 || n >= static_cast<int>(diffs_.size()))
    throw Error(Errc::IndexOutOfRange, "cochain differential degree " + std::to_string(n));
  return diffs_[n];
}

CochainComplex::Cohomology CochainComplex::cohomology(int n) const {
  if (n < 0 || n > top_degree())
    throw Error(Errc::IndexOutOfRange, "cohomology degree " + std::to_string(n));
  Cohomology out;
  out.cocycles = kernel(diffs_[n]);
  if (n == 0) {
    out.coboundaries = Subspace(diffs_[0].field(), dims_[0]);
  } else {
    const Mat& d = diffs_[n - 1];
    std::vector<std::vector<Scalar>> img;
    for (int c = 0; c < d.cols(); ++c) {
      std::vector<Scalar> col(d.rows());
      for (int r = 0; r < d.rows(); ++r) col[r] = d.at(r, c);
      img.push_back(std::move(col));
    }
    out.coboundaries = rref_subspace(d.field(), img, d.rows());
  }
  out.dim = out.cocycles.dim() - out.coboundaries.dim();
  Subspace acc = out.coboundaries;
  for (int b = 0; b < out.cocycles.dim() &&
                  static_cast<int>(out.representatives.size()) < out.dim;
       ++b) {
    auto row = out.cocycles.basis().row(b);
    Subspace bigger = sum(acc, rref_subspace(diffs_[n].field(), {row}, dims_[n]));
    if (bigger.dim() > acc.dim()) {
      acc = std::move(bigger);
      out.representatives.push_back(row);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CochainComplex bar_cochain_complex(const Algebra& a, int value_dim,
                                   const std::vector<Mat>& left_act,
                                   const std::vector<Mat>& right_act, int max_degree,
                                   std::uint64_t budget) {
  const Field& F = *a.field();
  int n = a.dim();
  auto cdim = [&](int k) { return static_cast<std::uint64_t>(value_dim) * ipow_u64(n, k); };
  std::vector<int> dims;
  std::vector<Mat> diffs;
  for (int k = 0; k <= max_degree + 1; ++k) {
    check_budget(cdim(k), 1, 1ull << 40, "cochain space");
    dims.push_back(static_cast<int>(cdim(k)));
  }
  for (int k = 0; k <= max_degree; ++k) {
    std::uint64_t rows = cdim(k + 1), cols = cdim(k);
    check_budget(rows, cols, budget, "bar cochain");
    Mat d(a.field(), static_cast<int>(rows), static_cast<int>(cols));
    std::uint64_t nk = ipow_u64(n, k);
    // iterate multi-indices of the source cochain
    std::vector<int> ins(k, 0);
    for (std::uint64_t mi = 0; mi < nk; ++mi) {
      {
        std::uint64_t t = mi;
        for (int s = k - 1; s >= 0; --s) {
          ins[s] = static_cast<int>(t % n);
          t /= n;
        }
      }
      for (int out = 0; out < value_dim; ++out) {
        std::uint64_t col = static_cast<std::uint64_t>(out) * nk + mi;
        // term 1: args = (h, ins...), value -> left_act[h] e_out
        for (int h = 0; h < n; ++h) {
          std::uint64_t argmi = static_cast<std::uint64_t>(h) * nk + mi;  // prepend h
          for (int o2 = 0; o2 < value_dim; ++o2) {
            const Scalar& c = left_act[h].at(o2, out);
            if (F.is_zero(c)) continue;
            std::uint64_t r = static_cast<std::uint64_t>(o2) * (nk * n) + argmi;
            d.at(static_cast<int>(r), static_cast<int>(col)) =
                F.add(d.at(static_cast<int>(r), static_cast<int>(col)), c);
          }
        }
        // middle terms i = 1..k: args = (ins[0..i-2], x, y, ins[i..k-1])
        for (int i = 1; i <= k; ++i) {
          bool odd = (i % 2) == 1;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              const Scalar& c = a.c(x, y, ins[i - 1]);
              if (F.is_zero(c)) continue;
              // build the (k+1)-tuple multi-index
              std::uint64_t argmi = 0;
              for (int s = 0; s < i - 1; ++s) argmi = argmi * n + ins[s];
              argmi = argmi * n + x;
              argmi = argmi * n + y;
              for (int s = i; s < k; ++s) argmi = argmi * n + ins[s];
              std::uint64_t r = static_cast<std::uint64_t>(out) * (nk * n) + argmi;
              Scalar val = odd ? F.neg(c) : c;
              d.at(static_cast<int>(r), static_cast<int>(col)) =
                  F.add(d.at(static_cast<int>(r), static_cast<int>(col)), val);
            }
        }
        // last term: args = (ins..., h), value -> right_act[h] e_out, sign (-1)^(k+1)
        bool odd = ((k + 1) % 2) == 1;
        for (int h = 0; h < n; ++h) {
          std::uint64_t argmi = mi * n + static_cast<std::uint64_t>(h);
          for (int o2 = 0; o2 < value_dim; ++o2) {
            const Scalar& c = right_act[h].at(o2, out);
            if (F.is_zero(c)) continue;
            std::uint64_t r = static_cast<std::uint64_t>(o2) * (nk * n) + argmi;
            Scalar val = odd ? F.neg(c) : c;
            d.at(static_cast<int>(r), static_cast<int>(col)) =
                F.add(d.at(static_cast<int>(r), static_cast<int>(col)), val);
          }
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex(std::move(dims), std::move(diffs));
}

CochainComplex hochschild_cochain(const Algebra& a, int max_degree, std::uint64_t budget) {
  std::vector<Mat> left, right;
  for (int i = 0; i < a.dim(); ++i) {
    left.push_back(a.left_mult_basis(i));
    right.push_back(a.right_mult_basis(i));
  }
  return bar_cochain_complex(a, a.dim(), left, right, max_degree, budget);
}

CochainComplex ext_trivial(const HopfAlgebra& h, const AModule& m, int max_degree,
                           std::uint64_t budget) {
  if (m.algebra.get() != h.algebra().get())
    throw Error(Errc::ShapeMismatch, "module is not over this Hopf algebra");
  const Field& F = *h.field();
  std::vector<Mat> left, right;
  for (int i = 0; i < h.dim(); ++i) {
    left.push_back(m.action[i]);
    right.push_back(Mat::identity(h.field(), m.dim).scaled(h.counit()[i]));
  }
  (void)F;
  return bar_cochain_complex(*h.algebra(), m.dim, left, right, max_degree, budget);
}

ChainReport hochschild_chain(const Algebra& a, int max_degree, std::uint64_t budget) {
  const Field& F = *a.field();
  int n = a.dim();
  auto cdim = [&](int k) { return ipow_u64(n, k + 1); };
  // boundaries d_k : C_k -> C_(k-1), k = 1..N+1
  std::vector<Mat> diffs;
  for (int k = 1; k <= max_degree + 1; ++k) {
    std::uint64_t rows = cdim(k - 1), cols = cdim(k);
    check_budget(rows, cols, budget, "Hochschild chain");
    Mat d(a.field(), static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> args(k + 1, 0);
    std::uint64_t total = cdim(k);
    for (std::uint64_t mi = 0; mi < total; ++mi) {
      {
        std::uint64_t t = mi;
        for (int s = k; s >= 0; --s) {
          args[s] = static_cast<int>(t % n);
          t /= n;
        }
      }
      for (int i = 0; i < k; ++i) {
        bool odd = (i % 2) == 1;
        auto prod = a.basis_product(args[i], args[i + 1]);
        for (int t = 0; t < n; ++t) {
          if (F.is_zero(prod[t])) continue;
          std::uint64_t r = 0;
          for (int s = 0; s < i; ++s) r = r * n + args[s];
          r = r * n + t;
          for (int s = i + 2; s <= k; ++s) r = r * n + args[s];
          Scalar val = odd ? F.neg(prod[t]) : prod[t];
          d.at(static_cast<int>(r), static_cast<int>(mi)) =
              F.add(d.at(static_cast<int>(r), static_cast<int>(mi)), val);
        }
      }
      {
        bool odd = (k % 2) == 1;
        auto prod = a.basis_product(args[k], args[0]);
        for (int t = 0; t < n; ++t) {
          if (F.is_zero(prod[t])) continue;
          std::uint64_t r = t;
          for (int s = 1; s < k; ++s) r = r * n + args[s];
          Scalar val = odd ? F.neg(prod[t]) : prod[t];
          d.at(static_cast<int>(r), static_cast<int>(mi)) =
              F.add(d.at(static_cast<int>(r), static_cast<int>(mi)), val);
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  for (size_t k = 1; k < diffs.size(); ++k)
    if (!diffs[k - 1].mul(diffs[k]).is_zero())
      throw Error(Errc::Internal, "chain d o d != 0 at degree " + std::to_string(k));
  ChainReport rep;
  for (int k = 0; k <= max_degree; ++k) {
    int kerdim = k == 0 ? static_cast<int>(cdim(0)) : static_cast<int>(cdim(k)) - rank(diffs[k - 1]);
    int imnext = rank(diffs[k]);
    rep.homology_dims.push_back(kerdim - imnext);
  }
  // duality: cohomology of Hom(A^(x)k, A^*) with the dual bimodule actions
  std::vector<Mat> left, right;
  for (int i = 0; i < n; ++i) {
    left.push_back(a.right_mult_basis(i).transpose());
    right.push_back(a.left_mult_basis(i).transpose());
  }
  CochainComplex dual = bar_cochain_complex(a, n, left, right, max_degree, budget);
  rep.duality_ok = true;
  for (int k = 0; k <= max_degree; ++k) {
    int d = dual.cohomology(k).dim;
    rep.dual_cochain_dims.push_back(d);
    rep.duality_ok = rep.duality_ok && d == rep.homology_dims[k];
  }
  rep.sym_dim = sym_n(a, std::nullopt).dim();
  rep.hh0_eq_sym = rep.homology_dims[0] == rep.sym_dim;
  return rep;
}

CompareReport compare_hh_adjoint(const HopfAlgebra& h, int max_degree, std::uint64_t budget) {
  CompareReport rep;
  CochainComplex hh = hochschild_cochain(*h.algebra(), max_degree, budget);
  AModule adj = adjoint_module(h);
  CochainComplex ext = ext_trivial(h, adj, max_degree, budget);
  rep.pass = true;
  for (int k = 0; k <= max_degree; ++k) {
    rep.hh_dims.push_back(hh.cohomology(k).dim);
    rep.ext_dims.push_back(ext.cohomology(k).dim);
    rep.per_degree.push_back(rep.hh_dims.back() == rep.ext_dims.back());
    rep.pass = rep.pass && rep.per_degree.back();
  }
  return rep;
}

}  // namespace loewy
