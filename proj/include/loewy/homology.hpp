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

#ifndef LOEWY_HOMOLOGY_HPP
#define LOEWY_HOMOLOGY_HPP

#include "loewy/hopf.hpp"

namespace loewy {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 20;  // entries per differential

/// Finite cochain complex: spaces C^0..C^(K+1) with differentials
/// d_n : C^n -> C^(n+1) for n = 0..K; d o d = 0 is checked at construction.
class CochainComplex {
public:
  CochainComplex(std::vector<int> dims, std::vector<Mat> diffs);

  int top_degree() const { return static_cast<int>(diffs_.size()) - 1; }
  int space_dim(int n) const;
  const Mat& diff(int n) const;

  struct Cohomology {
    int dim = 0;
    Subspace cocycles;
    Subspace coboundaries;
    std::vector<std::vector<Scalar>> representatives;  // coset reps, canonical
  };
  /// H^n = ker d_n / im d_(n-1); valid for n <= top_degree().
  Cohomology cohomology(int n) const;

private:
  std::vector<int> dims_;
  std::vector<Mat> diffs_;
};

/// Bar-type cochain complex C^k = Hom(A^(x)k, M) for an A-bimodule M given by
/// left/right action matrices; the differential is
///   (df)(a_1..a_{k+1}) = a_1 . f(a_2..) + sum_i (-1)^i f(.. a_i a_{i+1} ..)
///                        + (-1)^(k+1) f(a_1..a_k) . a_{k+1}.
/// Flat coordinates: value index slow, tensor multi-index fast (left factor
/// slow within the multi-index, matching Mat::kron).
CochainComplex bar_cochain_complex(const Algebra& a, int value_dim,
                                   const std::vector<Mat>& left_act,
                                   const std::vector<Mat>& right_act, int max_degree,
                                   std::uint64_t budget = kDefaultBudget);

/// Standard Hochschild cochain complex C^k = Hom(A^(x)k, A) up to H^N.
CochainComplex hochschild_cochain(const Algebra& a, int max_degree,
                                  std::uint64_t budget = kDefaultBudget);

struct ChainReport {
  std::vector<int> homology_dims;        // HH_n for n = 0..N
  std::vector<int> dual_cochain_dims;    // H^n of Hom(A^(x)n, A*)
  bool duality_ok = false;               // the two agree per degree
  int sym_dim = 0;
  bool hh0_eq_sym = false;               // dim HH_0 == dim Sym(A)
};

/// Hochschild homology via C_n = A^(x)(n+1), plus the Tor/Ext duality report.
ChainReport hochschild_chain(const Algebra& a, int max_degree,
                             std::uint64_t budget = kDefaultBudget);

/// Ext_H^n(k, M) via the bar resolution of the trivial module:
/// C^k = Hom(H^(x)k, M) with the action/counit differential.
CochainComplex ext_trivial(const HopfAlgebra& h, const AModule& m, int max_degree,
                           std::uint64_t budget = kDefaultBudget);

struct CompareReport {
  std::vector<int> hh_dims;   // HH^n(H)
  std::vector<int> ext_dims;  // Ext_H^n(k, A_ad)
  std::vector<bool> per_degree;
  bool pass = false;
};

/// dim HH^n(H) == dim Ext_H^n(k, A_ad) for n = 0..N.
CompareReport compare_hh_adjoint(const HopfAlgebra& h, int max_degree,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace loewy

#endif
