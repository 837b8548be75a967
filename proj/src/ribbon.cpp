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

#include "loewy/ribbon.hpp"

#include <algorithm>
#include <map>

namespace loewy {

namespace {

// order-3 tensors over H as flat arrays, index (a*n + b)*n + c
using T3 = std::vector<Scalar>;

size_t t3i(int n, int a, int b, int c) {
  return (static_cast<size_t>(a) * n + b) * n + c;
}

T3 t3_zero(const Field& F, int n) {
  return T3(static_cast<size_t>(n) * n * n, F.zero());
}

T3 t3_mul(const Algebra& A, const T3& x, const T3& y) {
  const Field& F = *A.field();
  int n = A.dim();
  T3 out = t3_zero(F, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Scalar& xv = x[t3i(n, a, b, c)];
        if (F.is_zero(xv)) continue;
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              const Scalar& yv = y[t3i(n, d, e, f)];
              if (F.is_zero(yv)) continue;
              Scalar co = F.mul(xv, yv);
              auto v1 = A.basis_product(a, d);
              auto v2 = A.basis_product(b, e);
              auto v3 = A.basis_product(c, f);
              for (int t1 = 0; t1 < n; ++t1) {
                if (F.is_zero(v1[t1])) continue;
                Scalar c1 = F.mul(co, v1[t1]);
                for (int t2 = 0; t2 < n; ++t2) {
                  if (F.is_zero(v2[t2])) continue;
                  Scalar c2 = F.mul(c1, v2[t2]);
                  for (int t3 = 0; t3 < n; ++t3)
                    if (!F.is_zero(v3[t3]))
                      out[t3i(n, t1, t2, t3)] = F.add(out[t3i(n, t1, t2, t3)], F.mul(c2, v3[t3]));
                }
              }
            }
      }
  return out;
}

// embed an H (x) H element into three-tensor positions 12, 13 or 23
T3 t3_embed(const HopfAlgebra& h, const Mat& x, int pos) {
  const Field& F = *h.field();
  int n = h.dim();
  T3 out = t3_zero(F, n);
  const auto& unit = h.algebra()->unit();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& v = x.at(a, b);
      if (F.is_zero(v)) continue;
      for (int u = 0; u < n; ++u) {
        if (F.is_zero(unit[u])) continue;
        Scalar co = F.mul(v, unit[u]);
        if (pos == 12)
          out[t3i(n, a, b, u)] = F.add(out[t3i(n, a, b, u)], co);
        else if (pos == 13)
          out[t3i(n, a, u, b)] = F.add(out[t3i(n, a, u, b)], co);
        else
          out[t3i(n, u, a, b)] = F.add(out[t3i(n, u, a, b)], co);
      }
    }
  return out;
}

Mat flip(const Mat& x) { return x.transpose(); }

}  // namespace

RvReport check_rv(const HopfAlgebra& h, const Mat& R, const std::vector<Scalar>& v) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  RvReport rep;
  // u = S(R_2) R_1
  std::vector<Scalar> u(n, F.zero());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& co = R.at(a, b);
      if (F.is_zero(co)) continue;
      auto t = A.mul_vec(h.apply_antipode(A.basis_vec(b)), A.basis_vec(a));
      for (int x = 0; x < n; ++x) u[x] = F.add(u[x], F.mul(co, t[x]));
    }
  rep.u = u;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.first_violation = msg;
    return rep;
  };
  if (!h.tensor_inverse(R)) return fail("R is not invertible in H (x) H");
  // intertwining: Delta^op(h) R = R Delta(h)
  for (int i = 0; i < n; ++i) {
    Mat dm = h.delta(A.basis_vec(i));
    if (h.tensor_mul(flip(dm), R) != h.tensor_mul(R, dm))
      return fail("Delta^op(h) R != R Delta(h) at basis " + std::to_string(i));
  }
  // hexagons
  {
    T3 lhs = t3_zero(F, n);
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) {
        const Scalar& co = R.at(i, b);
        if (F.is_zero(co)) continue;
        for (int a1 = 0; a1 < n; ++a1)
          for (int a2 = 0; a2 < n; ++a2) {
            const Scalar& c = h.d(i, a1, a2);
            if (!F.is_zero(c))
              lhs[t3i(n, a1, a2, b)] = F.add(lhs[t3i(n, a1, a2, b)], F.mul(co, c));
          }
      }
    T3 rhs = t3_mul(A, t3_embed(h, R, 13), t3_embed(h, R, 23));
    if (lhs != rhs) return fail("hexagon (Delta (x) id)R = R13 R23 fails");
  }
  {
    T3 lhs = t3_zero(F, n);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) {
        const Scalar& co = R.at(a, i);
        if (F.is_zero(co)) continue;
        for (int b1 = 0; b1 < n; ++b1)
          for (int b2 = 0; b2 < n; ++b2) {
            const Scalar& c = h.d(i, b1, b2);
            if (!F.is_zero(c))
              lhs[t3i(n, a, b1, b2)] = F.add(lhs[t3i(n, a, b1, b2)], F.mul(co, c));
          }
      }
    T3 rhs = t3_mul(A, t3_embed(h, R, 13), t3_embed(h, R, 12));
    if (lhs != rhs) return fail("hexagon (id (x) Delta)R = R13 R12 fails");
  }
  // ribbon element axioms
  if (static_cast<int>(v.size()) != n) return fail("ribbon element has wrong length");
  for (int i = 0; i < n; ++i) {
    auto lhs = A.mul_vec(v, A.basis_vec(i));
    auto rhs = A.mul_vec(A.basis_vec(i), v);
    if (lhs != rhs) return fail("ribbon element is not central at basis " + std::to_string(i));
  }
  if (!A.invert(v)) return fail("ribbon element is not invertible");
  if (h.apply_antipode(v) != v) return fail("S(v) != v");
  if (!F.is_one(h.counit_of(v))) return fail("eps(v) != 1");
  {
    // v is the twist element: v^2 = (u S(u))^(-1); its inverse is the
    // classical ribbon normalization
    auto uSu = A.mul_vec(u, h.apply_antipode(u));
    auto inv = A.invert(uSu);
    if (!inv) return fail("u S(u) is not invertible");
    if (A.mul_vec(v, v) != *inv) return fail("v^2 != (u S(u))^(-1)");
  }
  {
    Mat m = h.tensor_mul(flip(R), R);
    Mat vv(h.field(), n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) vv.at(a, b) = F.mul(v[a], v[b]);
    if (h.delta(v) != h.tensor_mul(m, vv)) return fail("Delta(v) != (R21 R) (v (x) v)");
  }
  rep.pass = true;
  return rep;
}

// ---------------------------------------------------------------------------
// square roots in a commutative algebra

std::vector<std::vector<Scalar>> central_square_roots(const Algebra& z,
                                                      const std::vector<Scalar>& w,
                                                      std::uint64_t seed) {
  const Field& F = *z.field();
  int n = z.dim();
  if (!z.is_commutative()) throw Error(Errc::ValidationError, "square roots need a commutative algebra");
  if (!z.invert(w)) throw Error(Errc::NotInvertible, "square roots of a non-invertible element");
  std::vector<std::vector<Scalar>> out;
  if (F.characteristic() == 2) {
    // squaring is additive in characteristic 2: x = sum c_i z_i squares to
    // sum c_i^2 (z_i^2); solve the linear system for d_i = c_i^2 and walk the
    // whole affine solution set
    Mat sq(z.field(), n, n);
    for (int i = 0; i < n; ++i) {
      auto zi2 = z.basis_product(i, i);
      for (int r = 0; r < n; ++r) sq.at(r, i) = zi2[r];
    }
    auto sol = solve(sq, w);
    if (!sol) return out;
    Subspace ker = kernel(sq);
    mpz_class e = F.order() / static_cast<long>(F.characteristic());
    mpz_class q = F.order();
    mpz_class combos = 1;
    for (int i = 0; i < ker.dim(); ++i) combos *= q;
    if (combos > 4096) combos = 0;  // enumerate only when small; base solution still reported
    std::vector<std::vector<Scalar>> dvs{*sol};
    if (combos > 0 && ker.dim() > 0) {
      dvs.clear();
      std::vector<Scalar> elements;
      {
        std::vector<long long> idx(F.degree(), 0);
        while (true) {
          Scalar s = F.zero();
          Scalar zp = F.one();
          for (int i = 0; i < F.degree(); ++i) {
            s = F.add(s, F.mul(F.from_int(idx[i]), zp));
            if (i + 1 < F.degree()) zp = F.mul(zp, F.generator());
          }
          elements.push_back(s);
          int i = 0;
          while (i < F.degree() && ++idx[i] == F.characteristic()) idx[i++] = 0;
          if (i == F.degree()) break;
        }
      }
      std::vector<size_t> pick(ker.dim(), 0);
      while (true) {
        std::vector<Scalar> d = *sol;
        for (int r = 0; r < ker.dim(); ++r)
          for (int t = 0; t < n; ++t)
            d[t] = F.add(d[t], F.mul(elements[pick[r]], ker.basis().at(r, t)));
        dvs.push_back(std::move(d));
        int r = 0;
        while (r < ker.dim() && ++pick[r] == elements.size()) pick[r++] = 0;
        if (r == ker.dim()) break;
      }
    }
    for (const auto& d : dvs) {
      std::vector<Scalar> x(n);
      for (int i = 0; i < n; ++i) x[i] = F.pow(d[i], e);
      if (z.mul_vec(x, x) == w) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      for (int t = 0; t < n; ++t) {
        int c = F.cmp(a[t], b[t]);
        if (c != 0) return c < 0;
      }
      return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  const auto& rad = radical_series(z);
  QuotientAlgebra zbar = quotient_by_ideal(z, rad.power(1));
  auto chars = simple_modules(*zbar.algebra, seed);
  int m = static_cast<int>(chars.simples.size());
  for (const auto& s : chars.simples)
    if (s.dim != 1) throw Error(Errc::SplitFieldRequired, "center quotient is not split");
  // residue idempotents: solve chi_i(e_j) = delta_ij in zbar
  Mat chi(z.field(), m, zbar.algebra->dim());
  for (int i = 0; i < m; ++i)
    for (int b = 0; b < zbar.algebra->dim(); ++b) chi.at(i, b) = chars.simples[i].action[b].at(0, 0);
  std::vector<std::vector<Scalar>> idems;
  for (int j = 0; j < m; ++j) {
    std::vector<Scalar> target(m, F.zero());
    target[j] = F.one();
    auto sol = solve(chi, target);
    if (!sol) throw Error(Errc::Internal, "residue idempotent solve failed");
    // embed along the complement and Newton-lift
    std::vector<Scalar> e(n, F.zero());
    for (int b = 0; b < zbar.algebra->dim(); ++b) e[zbar.complement[b]] = (*sol)[b];
    for (int it = 0; it < rad.loewy_length + 1; ++it) {
      auto e2 = z.mul_vec(e, e);
      auto e3 = z.mul_vec(e2, e);
      for (int t = 0; t < n; ++t)
        e[t] = F.sub(F.mul(F.from_int(3), e2[t]), F.mul(F.from_int(2), e3[t]));
    }
    if (z.mul_vec(e, e) != e) throw Error(Errc::Internal, "idempotent lifting failed");
    idems.push_back(std::move(e));
  }
  // per-piece square roots: scalar part + Newton refinement
  std::vector<std::vector<std::vector<Scalar>>> piece_roots(m);
  for (int j = 0; j < m; ++j) {
    // scalar part of w on piece j: chi_j(w mod J)
    auto wq = zbar.projection.apply(w);
    Scalar s0 = F.zero();
    for (int b = 0; b < zbar.algebra->dim(); ++b)
      s0 = F.add(s0, F.mul(chi.at(j, b), wq[b]));
    auto t0 = F.sqrt(s0);
    if (!t0 || F.is_zero(*t0)) {
      if (F.is_zero(s0)) throw Error(Errc::Internal, "invertible element with zero component");
      return {};  // no square root in the field: no solution at all
    }
    auto wj = z.mul_vec(idems[j], w);
    for (int sign = 0; sign < 2; ++sign) {
      Scalar t = sign == 0 ? *t0 : F.neg(*t0);
      std::vector<Scalar> x(n);
      for (int i2 = 0; i2 < n; ++i2) x[i2] = F.mul(t, idems[j][i2]);
      // Newton: x <- x - (x^2 - w_j) * (2x)^(-1 in the piece)
      for (int it = 0; it < rad.loewy_length + 2 && z.mul_vec(x, x) != wj; ++it) {
        std::vector<Scalar> twox(n);
        for (int i2 = 0; i2 < n; ++i2) twox[i2] = F.mul(F.from_int(2), x[i2]);
        // solve (2x) y = e_j with y in the piece: columns restricted to the
        // span of idems[j] * basis
        std::vector<std::vector<Scalar>> piece_basis;
        for (int b = 0; b < n; ++b) piece_basis.push_back(z.mul_vec(idems[j], z.basis_vec(b)));
        Subspace piece = rref_subspace(z.field(), piece_basis, n);
        Mat cols(z.field(), n, piece.dim());
        Mat L = z.left_mult(twox);
        for (int c = 0; c < piece.dim(); ++c) {
          auto img = L.apply(piece.basis().row(c));
          for (int r = 0; r < n; ++r) cols.at(r, c) = img[r];
        }
        auto ysol = solve(cols, idems[j]);
        if (!ysol) break;
        std::vector<Scalar> y(n, F.zero());
        for (int c = 0; c < piece.dim(); ++c) {
          if (F.is_zero((*ysol)[c])) continue;
          for (int r = 0; r < n; ++r)
            y[r] = F.add(y[r], F.mul((*ysol)[c], piece.basis().at(c, r)));
        }
        auto x2 = z.mul_vec(x, x);
        std::vector<Scalar> defect(n);
        for (int i2 = 0; i2 < n; ++i2) defect[i2] = F.sub(x2[i2], wj[i2]);
        auto corr = z.mul_vec(defect, y);
        for (int i2 = 0; i2 < n; ++i2) x[i2] = F.sub(x[i2], corr[i2]);
      }
      if (z.mul_vec(x, x) == wj) piece_roots[j].push_back(std::move(x));
    }
    if (piece_roots[j].empty()) return {};
  }
  // assemble all sign patterns
  std::vector<std::vector<Scalar>> acc{std::vector<Scalar>(n, F.zero())};
  for (int j = 0; j < m; ++j) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& partial : acc)
      for (const auto& r : piece_roots[j]) {
        std::vector<Scalar> s(n);
        for (int t = 0; t < n; ++t) s[t] = F.add(partial[t], r[t]);
        next.push_back(std::move(s));
      }
    acc = std::move(next);
  }
  for (auto& x : acc)
    if (z.mul_vec(x, x) == w) out.push_back(x);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    for (int t = 0; t < n; ++t) {
      int c = F.cmp(a[t], b[t]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Scalar>> ribbon_search(const HopfAlgebra& h, const Mat& R,
                                               std::uint64_t seed) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  // u S(u), a central invertible element
  std::vector<Scalar> u(n, F.zero());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& co = R.at(a, b);
      if (F.is_zero(co)) continue;
      auto t = A.mul_vec(h.apply_antipode(A.basis_vec(b)), A.basis_vec(a));
      for (int x = 0; x < n; ++x) u[x] = F.add(u[x], F.mul(co, t[x]));
    }
  auto uSu = A.mul_vec(u, h.apply_antipode(u));
  auto winv = A.invert(uSu);
  if (!winv) throw Error(Errc::NotInvertible, "u S(u) is not invertible");
  auto w = *winv;
  // the center as an algebra in its own right
  Subspace zc = center(A);
  std::vector<MultEntry> zmult;
  for (int i = 0; i < zc.dim(); ++i)
    for (int j = 0; j < zc.dim(); ++j) {
      auto prod = A.mul_vec(zc.basis().row(i), zc.basis().row(j));
      auto coords = zc.coordinates(prod);
      if (!coords) throw Error(Errc::Internal, "center is not closed under multiplication");
      for (int k = 0; k < zc.dim(); ++k)
        if (!F.is_zero((*coords)[k])) zmult.push_back({i, j, k, (*coords)[k]});
    }
  auto zunit = zc.coordinates(A.unit());
  if (!zunit) throw Error(Errc::Internal, "unit escapes the center");
  auto zalg = Algebra::make(h.field(), zc.dim(), zmult, *zunit);
  auto wz = zc.coordinates(w);
  if (!wz) throw Error(Errc::ValidationError, "u S(u) is not central");
  auto roots = central_square_roots(*zalg, *wz, seed);
  // filter by the remaining twist axioms
  Mat m21r = h.tensor_mul(R.transpose(), R);
  std::vector<std::vector<Scalar>> out;
  for (const auto& rz : roots) {
    std::vector<Scalar> v(n, F.zero());
    for (int b = 0; b < zc.dim(); ++b) {
      if (F.is_zero(rz[b])) continue;
      for (int t = 0; t < n; ++t) v[t] = F.add(v[t], F.mul(rz[b], zc.basis().at(b, t)));
    }
    if (h.apply_antipode(v) != v) continue;
    if (!F.is_one(h.counit_of(v))) continue;
    Mat vv(h.field(), n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) vv.at(a, b) = F.mul(v[a], v[b]);
    if (h.delta(v) != h.tensor_mul(m21r, vv)) continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    for (int t = 0; t < n; ++t) {
      int c = F.cmp(a[t], b[t]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

QFactorResult q_and_factorizability(const HopfAlgebra& h, const Mat& R) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  QFactorResult res;
  res.Q = Mat(h.field(), n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& c1 = R.at(a, b);  // R_1 = a, R_2 = b
      if (F.is_zero(c1)) continue;
      for (int ap = 0; ap < n; ++ap)
        for (int bp = 0; bp < n; ++bp) {
          const Scalar& c2 = R.at(ap, bp);  // R'_1 = ap, R'_2 = bp
          if (F.is_zero(c2)) continue;
          Scalar co = F.mul(c1, c2);
          auto left = h.apply_antipode(A.mul_vec(A.basis_vec(bp), A.basis_vec(a)));
          auto right = A.mul_vec(A.basis_vec(ap), A.basis_vec(b));
          for (int t1 = 0; t1 < n; ++t1) {
            if (F.is_zero(left[t1])) continue;
            Scalar c3 = F.mul(co, left[t1]);
            for (int t2 = 0; t2 < n; ++t2)
              if (!F.is_zero(right[t2]))
                res.Q.at(t1, t2) = F.add(res.Q.at(t1, t2), F.mul(c3, right[t2]));
          }
        }
    }
  // f |-> (f (x) id)(Q): matrix with column f = e^l mapping to sum_k Q[l][k] e_k
  bool left_bij = rank(res.Q) == n;
  bool right_bij = rank(res.Q.transpose()) == n;
  if (left_bij != right_bij)
    throw Error(Errc::Internal, "the two factorizability orientations disagree");
  res.factorizable = left_bij;
  return res;
}

std::vector<Scalar> normalized_integral(const HopfAlgebra& h, const Mat& Q) {
  const Field& F = *h.field();
  int n = h.dim();
  // left cointegral: h(1) lambda(h(2)) = lambda(h) 1 for all basis h
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> row(n, F.zero());
      for (int k = 0; k < n; ++k) row[k] = h.d(i, j, k);
      row[i] = F.sub(row[i], h.algebra()->unit()[j]);
      rows.push_back(std::move(row));
    }
  Subspace sol = kernel(Mat::from_rows(h.field(), rows, n));
  if (sol.dim() != 1)
    throw Error(Errc::NotOneDimensional,
                "cointegral space has dimension " + std::to_string(sol.dim()));
  auto lam = sol.basis().row(0);
  Scalar t = F.zero();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!F.is_zero(Q.at(a, b))) t = F.add(t, F.mul(Q.at(a, b), F.mul(lam[a], lam[b])));
  if (F.is_zero(t))
    throw Error(Errc::NotInvertible, "(lambda (x) lambda)(Q) = 0; input is not factorizable");
  auto s = F.sqrt(t);
  if (!s)
    throw Error(Errc::FieldExtensionRequired,
                "normalization needs sqrt(" + F.print(t) + "), absent from the field");
  Scalar sinv = F.inv(*s);
  for (auto& x : lam) x = F.mul(x, sinv);
  return lam;
}

std::pair<Mat, Mat> st_maps(const HopfAlgebra& h, const Mat& Q,
                            const std::vector<Scalar>& lambda, const std::vector<Scalar>& v) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  Mat S(h.field(), n, n);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Scalar& qc = Q.at(a, b);
        if (F.is_zero(qc)) continue;
        auto prod = A.basis_product(i, a);
        Scalar lv = F.zero();
        for (int t = 0; t < n; ++t)
          if (!F.is_zero(prod[t])) lv = F.add(lv, F.mul(lambda[t], prod[t]));
        if (!F.is_zero(lv)) S.at(b, i) = F.add(S.at(b, i), F.mul(qc, lv));
      }
  }
  Mat T = A.left_mult(v);
  if (!inverse(S)) throw Error(Errc::NotInvertible, "S map is singular");
  if (!inverse(T)) throw Error(Errc::NotInvertible, "T map is singular");
  return {S, T};
}

ModularReport modular_check(RibbonData& rd) {
  const HopfAlgebra& h = *rd.hopf;
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  ModularReport rep;
  Mat ST = rd.S_mat.mul(rd.T_mat);
  Mat ST3 = ST.mul(ST).mul(ST);
  Mat S2 = rd.S_mat.mul(rd.S_mat);
  std::optional<Scalar> c;
  for (int r = 0; r < n && !c; ++r)
    for (int cc = 0; cc < n && !c; ++cc)
      if (!F.is_zero(S2.at(r, cc))) c = F.div(ST3.at(r, cc), S2.at(r, cc));
  if (!c) throw Error(Errc::NoConsistentScalar, "S^2 vanishes");
  rep.c = *c;
  rep.st_relation = ST3 == S2.scaled(*c);
  if (!rep.st_relation)
    throw Error(Errc::NoConsistentScalar, "(ST)^3 is not a scalar multiple of S^2");
  auto vinv = A.invert(rd.v);
  if (!vinv) throw Error(Errc::NotInvertible, "ribbon element is not invertible");
  AModule adj = adjoint_module(h);
  Mat theta_inv = adj.act(*vinv);
  Mat S4 = S2.mul(S2);
  rep.s4_is_theta_inv = S4 == theta_inv;
  rep.commutes_with_action = true;
  for (int i = 0; i < n && rep.commutes_with_action; ++i) {
    rep.commutes_with_action =
        rd.S_mat.mul(adj.action[i]) == adj.action[i].mul(rd.S_mat) &&
        rd.T_mat.mul(adj.action[i]) == adj.action[i].mul(rd.T_mat);
  }
  rep.pass = rep.st_relation && rep.s4_is_theta_inv && rep.commutes_with_action;
  rd.c = rep.c;
  return rep;
}

Sl2zReport sl2z_action(const RibbonData& rd, int degree, std::uint64_t budget) {
  const HopfAlgebra& h = *rd.hopf;
  const Field& F = *h.field();
  int n = h.dim();
  Sl2zReport rep;
  rep.degree = degree;
  AModule adj = adjoint_module(h);
  std::vector<std::vector<Scalar>> reps;   // representatives, flat coords
  Subspace cocycles, coboundaries;
  int coord_dim = 0;
  if (degree == 0) {
    // invariants of the adjoint action
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < n; ++i) {
      Mat d = adj.action[i].sub(Mat::identity(h.field(), n).scaled(h.counit()[i]));
      for (int r = 0; r < n; ++r) rows.push_back(d.row(r));
    }
    Subspace inv = kernel(Mat::from_rows(h.field(), rows, n));
    coord_dim = n;
    cocycles = inv;
    coboundaries = Subspace(h.field(), n);
    for (int i = 0; i < inv.dim(); ++i) reps.push_back(inv.basis().row(i));
  } else {
    CochainComplex cx = ext_trivial(h, adj, degree, budget);
    auto coh = cx.cohomology(degree);
    cocycles = coh.cocycles;
    coboundaries = coh.coboundaries;
    reps = coh.representatives;
    coord_dim = cx.space_dim(degree);
  }
  rep.dim = static_cast<int>(reps.size());
  // post-composition with an H-module map phi: value coordinates are the slow
  // block of the flat index
  int block = degree == 0 ? 1 : coord_dim / n;
  auto post = [&](const Mat& phi, const std::vector<Scalar>& f) {
    std::vector<Scalar> out(f.size(), F.zero());
    for (int o = 0; o < n; ++o)
      for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(block); ++t) {
        const Scalar& x = f[static_cast<size_t>(o) * block + t];
        if (F.is_zero(x)) continue;
        for (int o2 = 0; o2 < n; ++o2) {
          const Scalar& p = phi.at(o2, o);
          if (!F.is_zero(p))
            out[static_cast<size_t>(o2) * block + t] =
                F.add(out[static_cast<size_t>(o2) * block + t], F.mul(p, x));
        }
      }
    return out;
  };
  // verify well-definedness: cocycles to cocycles, coboundaries to coboundaries
  for (const Mat* phi : {&rd.S_mat, &rd.T_mat}) {
    for (int b = 0; b < cocycles.dim(); ++b)
      if (!cocycles.contains(post(*phi, cocycles.basis().row(b))))
        throw Error(Errc::NotWellDefinedOnCohomology, "image of a cocycle is not a cocycle");
    for (int b = 0; b < coboundaries.dim(); ++b)
      if (!coboundaries.contains(post(*phi, coboundaries.basis().row(b))))
        throw Error(Errc::NotWellDefinedOnCohomology,
                    "image of a coboundary is not a coboundary");
  }
  // induced matrices: solve image = sum (coboundary basis) + sum (reps)
  int d = rep.dim;
  auto induced = [&](const Mat& phi) {
    Mat out(h.field(), d, d);
    int bdim = coboundaries.dim();
    Mat colsys(h.field(), coord_dim, bdim + d);
    for (int c = 0; c < bdim; ++c)
      for (int r = 0; r < coord_dim; ++r) colsys.at(r, c) = coboundaries.basis().at(c, r);
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < coord_dim; ++r) colsys.at(r, bdim + c) = reps[c][r];
    for (int j = 0; j < d; ++j) {
      auto img = post(phi, reps[j]);
      auto sol = solve(colsys, img);
      if (!sol)
        throw Error(Errc::NotWellDefinedOnCohomology, "image escapes cocycle representatives");
      for (int i = 0; i < d; ++i) out.at(i, j) = (*sol)[bdim + i];
    }
    return out;
  };
  rep.s_rep = induced(rd.S_mat);
  rep.t_rep = induced(rd.T_mat);
  if (d == 0) {
    rep.c_rep = rd.c;
    rep.c_matches = true;
    rep.st_relation = true;
    rep.s4_identity = true;
    rep.pass = true;
    return rep;
  }
  Mat ST = rep.s_rep.mul(rep.t_rep);
  Mat ST3 = ST.mul(ST).mul(ST);
  Mat S2 = rep.s_rep.mul(rep.s_rep);
  std::optional<Scalar> c;
  for (int r = 0; r < d && !c; ++r)
    for (int cc = 0; cc < d && !c; ++cc)
      if (!F.is_zero(S2.at(r, cc))) c = F.div(ST3.at(r, cc), S2.at(r, cc));
  if (!c) throw Error(Errc::NoConsistentScalar, "induced S^2 vanishes");
  rep.c_rep = *c;
  rep.st_relation = ST3 == S2.scaled(*c);
  rep.c_matches = rep.c_rep == rd.c;
  rep.s4_identity = S2.mul(S2) == Mat::identity(h.field(), d);
  rep.pass = rep.st_relation && rep.s4_identity;
  return rep;
}

}  // namespace loewy
