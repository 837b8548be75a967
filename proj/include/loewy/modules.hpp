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

#ifndef LOEWY_MODULES_HPP
#define LOEWY_MODULES_HPP

#include <cstdint>

#include "loewy/algebra.hpp"

namespace loewy {

/// Left module over an Algebra: one action matrix per algebra basis element.
struct AModule {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<Mat> action;

  CheckReport check() const;
  Mat act(const std::vector<Scalar>& a) const;
};

AModule regular_module(const AlgebraPtr& a);

/// Intertwiner space Hom_A(m, n) as matrices n.dim x m.dim (row span of
/// flattened matrices).
std::vector<Mat> hom_space(const AModule& m, const AModule& n);

bool modules_isomorphic(const AModule& m, const AModule& n);

/// soc_n(M) = annihilator of J^n in M, ascending; last entry is all of M.
std::vector<Subspace> socle_series(const AModule& m);

struct SimplesResult {
  std::vector<AModule> simples;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Complete irredundant list of simple A-modules (split case). Deterministic
/// given the seed; raises SplitFieldRequired on a provably non-split input and
/// SplitFailure when the splitting schedule is exhausted.
SimplesResult simple_modules(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// Ext^1 representative: a skew derivation xi with xi(1) = 0 and
/// xi(ab) = xi(a) gV(b) + gW(a) xi(b), given as one W x V matrix per basis
/// element of A.
struct ExtClass {
  AModule source;  // V
  AModule target;  // W
  std::vector<Mat> xi;
};

struct Ext1Space {
  std::vector<ExtClass> basis;  // coset representatives
  int dim = 0;
  Subspace cocycles;
  Subspace coboundaries;
};

Ext1Space ext1_space(const AModule& v, const AModule& w);

/// The module V (+) W with block action (gV 0 ; xi gW); fits in
/// 0 -> W -> X -> V -> 0.
AModule extension_module(const ExtClass& xi);

/// Trace form a |-> Trace(xi(a)); lands in Sym(A) and, for simple modules,
/// in Sym_2(A). Requires V = W.
std::vector<Scalar> trace_star(const ExtClass& xi);

struct OkuyamaReport {
  bool pass = false;
  int dim_sym1 = 0, dim_sym2 = 0, dim_rhs = 0;
  std::vector<int> ext_dims;           // per simple
  std::vector<bool> trace_injective;   // per simple
  bool direct_sum = false;
  bool subspace_equal = false;
  std::uint64_t seed = 0;
};

/// Checks Sym_2(A) = Sym_1(A) (+) sum over simples of Img(Trace*), with both
/// sides computed independently.
OkuyamaReport okuyama_check(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// Submodule spanned by `space` (must be action-stable) with its induced
/// action, and the quotient module.
AModule submodule(const AModule& m, const Subspace& space);
AModule quotient_module(const AModule& m, const Subspace& space);

}  // namespace loewy

#endif
