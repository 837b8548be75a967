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

#ifndef LOEWY_RIBBON_HPP
#define LOEWY_RIBBON_HPP

#include "loewy/homology.hpp"

namespace loewy {

/// Quasitriangular/ribbon data on a Hopf algebra. Elements of H (x) H are
/// coefficient grids; lambda is the normalized left cointegral.
struct RibbonData {
  HopfPtr hopf;
  Mat R;
  std::vector<Scalar> u;       // Drinfeld element S(R_2) R_1
  std::vector<Scalar> v;       // ribbon element
  Mat Q;                       // S(R'_2 R_1) (x) R'_1 R_2
  std::vector<Scalar> lambda;  // (lambda (x) lambda)(Q) = 1
  Mat S_mat, T_mat;
  Scalar c;                    // modular scalar, set by modular_check
};

struct RvReport {
  bool pass = false;
  std::string first_violation;
  std::vector<Scalar> u;
};

/// All quasitriangular and ribbon axioms, exactly; u is computed as a
/// byproduct.
RvReport check_rv(const HopfAlgebra& h, const Mat& R, const std::vector<Scalar>& v);

/// All square roots of w inside a commutative algebra (split local pieces,
/// Newton lifting along the nilpotent part). w must be invertible.
std::vector<std::vector<Scalar>> central_square_roots(const Algebra& z,
                                                      const std::vector<Scalar>& w,
                                                      std::uint64_t seed = kDefaultSeed);

/// All ribbon elements for (h, R): central square roots of u S(u) filtered by
/// S(v) = v, eps(v) = 1 and Delta(v) = (R21 R)^(-1) (v (x) v). Sorted
/// canonically.
std::vector<std::vector<Scalar>> ribbon_search(const HopfAlgebra& h, const Mat& R,
                                               std::uint64_t seed = kDefaultSeed);

struct QFactorResult {
  Mat Q;
  bool factorizable = false;  // f |-> (f (x) id)(Q) bijective (both sides agree)
};

QFactorResult q_and_factorizability(const HopfAlgebra& h, const Mat& R);

/// The left cointegral normalized by (lambda (x) lambda)(Q) = 1; the sign is
/// fixed by the canonical square-root choice of the field.
std::vector<Scalar> normalized_integral(const HopfAlgebra& h, const Mat& Q);

/// Matrices of S(a) = lambda(a Q_1) Q_2 and T(a) = v a on the basis of H.
/// Both must be invertible.
std::pair<Mat, Mat> st_maps(const HopfAlgebra& h, const Mat& Q,
                            const std::vector<Scalar>& lambda, const std::vector<Scalar>& v);

struct ModularReport {
  Scalar c;
  bool st_relation = false;       // (ST)^3 = c S^2
  bool s4_is_theta_inv = false;   // S^4 = adjoint action of v^(-1)
  bool commutes_with_action = false;  // S, T are H-module maps of A_ad
  bool pass = false;
};

ModularReport modular_check(RibbonData& rd);

struct Sl2zReport {
  int degree = 0;
  int dim = 0;   // dimension of the representation space (Ext^degree)
  Mat s_rep, t_rep;
  Scalar c_rep;                    // scalar in (S T)^3 = c S^2 on cohomology
  bool c_matches = false;          // equals the modular scalar
  bool st_relation = false;
  bool s4_identity = false;
  bool pass = false;
};

/// Projective SL2(Z) action on Ext^degree(1, A_ad): degree 0 restricts to the
/// adjoint invariants, degree >= 1 post-composes bar cocycles and descends to
/// cohomology.
Sl2zReport sl2z_action(const RibbonData& rd, int degree,
                       std::uint64_t budget = kDefaultBudget);

}  // namespace loewy

#endif
