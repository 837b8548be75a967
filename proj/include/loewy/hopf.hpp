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

#ifndef LOEWY_HOPF_HPP
#define LOEWY_HOPF_HPP

#include "loewy/modules.hpp"

namespace loewy {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Sparse comultiplication entry: Delta(e_i) contains coeff * e_j (x) e_k.
struct ComulEntry {
  int i, j, k;
  Scalar coeff;
};

/// Finite-dimensional Hopf algebra over an exact field: an Algebra plus
/// comultiplication, counit and antipode on the same basis. Elements of
/// H (x) H are coefficient grids (Mat with at(i,j) = coefficient of e_i (x) e_j).
class HopfAlgebra : public std::enable_shared_from_this<HopfAlgebra> {
public:
  static HopfPtr make(AlgebraPtr base, const std::vector<ComulEntry>& comul,
                      std::vector<Scalar> counit, Mat antipode);

  const AlgebraPtr& algebra() const { return base_; }
  const FieldPtr& field() const { return base_->field(); }
  int dim() const { return base_->dim(); }
  const std::vector<Scalar>& counit() const { return counit_; }
  const Mat& antipode() const { return antipode_; }

  const Scalar& d(int i, int j, int k) const {
    return comul_[(static_cast<size_t>(i) * dim() + j) * dim() + k];
  }
  /// Delta of an element, as an H (x) H coefficient grid.
  Mat delta(const std::vector<Scalar>& v) const;
  std::vector<Scalar> apply_antipode(const std::vector<Scalar>& v) const;
  std::vector<Scalar> apply_antipode_inv(const std::vector<Scalar>& v) const;
  Scalar counit_of(const std::vector<Scalar>& v) const;

  /// Product in H (x) H of two coefficient grids.
  Mat tensor_mul(const Mat& x, const Mat& y) const;
  Mat tensor_unit() const;
  std::optional<Mat> tensor_inverse(const Mat& x) const;

  /// All Hopf axioms on basis elements; first violation named.
  CheckReport check() const;

  std::vector<ComulEntry> sparse_comul() const;

private:
  HopfAlgebra() = default;
  AlgebraPtr base_;
  std::vector<Scalar> comul_;  // dense dim^3
  std::vector<Scalar> counit_;
  Mat antipode_;      // column j = S(e_j)
  Mat antipode_inv_;  // cached inverse
};

// ---- builders (normal-form straightening on PBW-style bases) ----

/// Group algebra of a product of cyclic groups of the given orders.
HopfPtr build_group_algebra(FieldPtr f, const std::vector<int>& orders);
/// 4-dimensional Sweedler Hopf algebra (basis 1, g, x, gx).
HopfPtr build_sweedler(FieldPtr f);
/// Taft algebra of dimension N^2; q must be a primitive N-th root of unity.
HopfPtr build_taft(FieldPtr f, int N, const Scalar& q);
/// Restricted quantum sl2 of dimension 2p^3 (basis E^a F^b K^c); q must be a
/// primitive 2p-th root of unity.
HopfPtr build_uqsl2bar(FieldPtr f, int p, const Scalar& q);

struct DoubleResult {
  HopfPtr hopf;   // D(H) on basis f^i (x) e_j, index i*dim+j
  Mat r_matrix;   // canonical R in D (x) D
};

/// Drinfeld double with its canonical R-matrix.
DoubleResult drinfeld_double(const HopfAlgebra& h);

/// The dual algebra H^* (multiplication transposed from Delta, unit = counit).
AlgebraPtr dual_algebra(const HopfAlgebra& h);

/// Adjoint representation h . m = h(1) m S(h(2)) on the underlying space.
AModule adjoint_module(const HopfAlgebra& h);

AModule trivial_module(const HopfAlgebra& h);
/// Tensor product module via Delta (kron index order: left factor slow).
AModule tensor_module(const HopfAlgebra& h, const AModule& m, const AModule& n);

/// Class functions f(ab) = f(b S^2(a)); finite n intersects with the
/// annihilator of J^n.
DualSubspace cf_n(const HopfAlgebra& h, std::optional<int> n);

/// Convolution (f * g)(a) = f(a(1)) g(a(2)).
std::vector<Scalar> convolve(const HopfAlgebra& h, const std::vector<Scalar>& f,
                             const std::vector<Scalar>& g);

/// All group-like elements (Delta g = g (x) g, eps(g) = 1), via the one
/// dimensional simple modules of the dual algebra. Sorted canonically.
std::vector<std::vector<Scalar>> group_likes(const HopfAlgebra& h,
                                             std::uint64_t seed = kDefaultSeed);

/// Group-likes implementing S^2 by conjugation.
std::vector<std::vector<Scalar>> pivots(const HopfAlgebra& h, std::uint64_t seed = kDefaultSeed);

/// Internal character ch(M)(a) = Trace(rho_M(g a)) for a pivot g; the result
/// is verified to lie in CF(H).
std::vector<Scalar> internal_character(const HopfAlgebra& h, const std::vector<Scalar>& pivot,
                                       const AModule& m);

}  // namespace loewy

#endif
