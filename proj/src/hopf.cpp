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

#include "loewy/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace loewy {

HopfPtr HopfAlgebra::make(AlgebraPtr base, const std::vector<ComulEntry>& comul,
                          std::vector<Scalar> counit, Mat antipode) {
  auto h = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  int n = base->dim();
  const Field& F = *base->field();
  h->base_ = std::move(base);
  if (static_cast<int>(counit.size()) != n)
    throw Error(Errc::DimensionMismatch, "counit length != dim");
  if (antipode.rows() != n || antipode.cols() != n)
    throw Error(Errc::DimensionMismatch, "antipode shape != dim x dim");
  h->counit_ = std::move(counit);
  h->antipode_ = std::move(antipode);
  h->comul_.assign(static_cast<size_t>(n) * n * n, F.zero());
  for (const auto& e : comul) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n || e.k < 0 || e.k >= n)
      throw Error(Errc::IndexOutOfRange, "comultiplication index out of range");
    size_t idx = (static_cast<size_t>(e.i) * n + e.j) * n + e.k;
    h->comul_[idx] = F.add(h->comul_[idx], e.coeff);
  }
  auto inv = inverse(h->antipode_);
  if (!inv) throw Error(Errc::ValidationError, "antipode matrix is not invertible");
  h->antipode_inv_ = *inv;
  return h;
}

Mat HopfAlgebra::delta(const std::vector<Scalar>& v) const {
  const Field& F = *field();
  int n = dim();
  Mat out(field(), n, n);
  for (int i = 0; i < n; ++i) {
    if (F.is_zero(v[i])) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = d(i, j, k);
        if (!F.is_zero(c)) out.at(j, k) = F.add(out.at(j, k), F.mul(v[i], c));
      }
  }
  return out;
}

std::vector<Scalar> HopfAlgebra::apply_antipode(const std::vector<Scalar>& v) const {
  return antipode_.apply(v);
}

std::vector<Scalar> HopfAlgebra::apply_antipode_inv(const std::vector<Scalar>& v) const {
  return antipode_inv_.apply(v);
}

Scalar HopfAlgebra::counit_of(const std::vector<Scalar>& v) const {
  const Field& F = *field();
  Scalar s = F.zero();
  for (int i = 0; i < dim(); ++i) s = F.add(s, F.mul(v[i], counit_[i]));
  return s;
}

Mat HopfAlgebra::tensor_mul(const Mat& x, const Mat& y) const {
  const Field& F = *field();
  const Algebra& A = *base_;
  int n = dim();
  Mat out(field(), n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (F.is_zero(x.at(a, b))) continue;
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          if (F.is_zero(y.at(c, e))) continue;
          Scalar co = F.mul(x.at(a, b), y.at(c, e));
          for (int t1 = 0; t1 < n; ++t1) {
            const Scalar& m1 = A.c(a, c, t1);
            if (F.is_zero(m1)) continue;
            Scalar co1 = F.mul(co, m1);
            for (int t2 = 0; t2 < n; ++t2) {
              const Scalar& m2 = A.c(b, e, t2);
              if (!F.is_zero(m2)) out.at(t1, t2) = F.add(out.at(t1, t2), F.mul(co1, m2));
            }
          }
        }
    }
  return out;
}

Mat HopfAlgebra::tensor_unit() const {
  const Field& F = *field();
  int n = dim();
  Mat out(field(), n, n);
  const auto& u = base_->unit();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!F.is_zero(u[i]) && !F.is_zero(u[j])) out.at(i, j) = F.mul(u[i], u[j]);
  return out;
}

std::optional<Mat> HopfAlgebra::tensor_inverse(const Mat& x) const {
  // left multiplication by x on H (x) H, then solve L x' = 1 (x) 1
  const Field& F = *field();
  int n = dim();
  int nn = n * n;
  Mat L(field(), nn, nn);
  for (int c = 0; c < nn; ++c) {
    Mat e(field(), n, n);
    e.at(c / n, c % n) = F.one();
    Mat col = tensor_mul(x, e);
    for (int r = 0; r < nn; ++r) L.at(r, c) = col.at(r / n, r % n);
  }
  Mat u = tensor_unit();
  std::vector<Scalar> rhs(nn);
  for (int r = 0; r < nn; ++r) rhs[r] = u.at(r / n, r % n);
  auto sol = solve(L, rhs);
  if (!sol) return std::nullopt;
  Mat inv(field(), n, n);
  for (int r = 0; r < nn; ++r) inv.at(r / n, r % n) = (*sol)[r];
  // verify the two-sided identity
  if (tensor_mul(inv, x) != u || tensor_mul(x, inv) != u) return std::nullopt;
  return inv;
}

CheckReport HopfAlgebra::check() const {
  const Field& F = *field();
  const Algebra& A = *base_;
  int n = dim();
  auto rep = A.check();
  if (!rep.pass) return rep;
  // coassociativity on basis elements
  for (int i = 0; i < n; ++i) {
    // (Delta (x) id) Delta(e_i) vs (id (x) Delta) Delta(e_i), order-3 tensors
    std::vector<Scalar> lhs(static_cast<size_t>(n) * n * n, F.zero());
    std::vector<Scalar> rhs(static_cast<size_t>(n) * n * n, F.zero());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = d(i, j, k);
        if (F.is_zero(c)) continue;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const Scalar& c2 = d(j, a, b);
            if (!F.is_zero(c2)) {
              size_t idx = (static_cast<size_t>(a) * n + b) * n + k;
              lhs[idx] = F.add(lhs[idx], F.mul(c, c2));
            }
            const Scalar& c3 = d(k, a, b);
            if (!F.is_zero(c3)) {
              size_t idx = (static_cast<size_t>(j) * n + a) * n + b;
              rhs[idx] = F.add(rhs[idx], F.mul(c, c3));
            }
          }
      }
    if (lhs != rhs) return {false, "coassociativity fails at basis " + std::to_string(i)};
  }
  // counit axioms
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> v1(n, F.zero()), v2(n, F.zero());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = d(i, j, k);
        if (F.is_zero(c)) continue;
        v1[k] = F.add(v1[k], F.mul(c, counit_[j]));
        v2[j] = F.add(v2[j], F.mul(c, counit_[k]));
      }
    if (v1 != A.basis_vec(i) || v2 != A.basis_vec(i))
      return {false, "counit axiom fails at basis " + std::to_string(i)};
  }
  // Delta is an algebra map
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = delta(A.basis_product(i, j));
      Mat rhs = tensor_mul(delta(A.basis_vec(i)), delta(A.basis_vec(j)));
      if (lhs != rhs)
        return {false,
                "Delta is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  if (delta(A.unit()) != tensor_unit()) return {false, "Delta(1) != 1 (x) 1"};
  // counit is an algebra map
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar lhs = counit_of(A.basis_product(i, j));
      Scalar rhs = F.mul(counit_[i], counit_[j]);
      if (lhs != rhs)
        return {false,
                "counit is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  if (!F.is_one(counit_of(A.unit()))) return {false, "eps(1) != 1"};
  // antipode axiom, both sides
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> s1(n, F.zero()), s2(n, F.zero());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = d(i, j, k);
        if (F.is_zero(c)) continue;
        auto t1 = A.mul_vec(apply_antipode(A.basis_vec(j)), A.basis_vec(k));
        auto t2 = A.mul_vec(A.basis_vec(j), apply_antipode(A.basis_vec(k)));
        for (int t = 0; t < n; ++t) {
          s1[t] = F.add(s1[t], F.mul(c, t1[t]));
          s2[t] = F.add(s2[t], F.mul(c, t2[t]));
        }
      }
    std::vector<Scalar> target(n);
    for (int t = 0; t < n; ++t) target[t] = F.mul(counit_[i], A.unit()[t]);
    if (s1 != target) return {false, "antipode axiom (left) fails at basis " + std::to_string(i)};
    if (s2 != target) return {false, "antipode axiom (right) fails at basis " + std::to_string(i)};
  }
  return {true, ""};
}

std::vector<ComulEntry> HopfAlgebra::sparse_comul() const {
  std::vector<ComulEntry> out;
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!field()->is_zero(d(i, j, k))) out.push_back({i, j, k, d(i, j, k)});
  return out;
}

// ---------------------------------------------------------------------------
// builders

HopfPtr build_group_algebra(FieldPtr f, const std::vector<int>& orders) {
  if (orders.empty()) throw Error(Errc::MalformedParams, "empty list of cyclic orders");
  for (int o : orders)
    if (o < 1) throw Error(Errc::MalformedParams, "cyclic order must be >= 1");
  int n = 1;
  for (int o : orders) n *= o;
  auto index = [&](const std::vector<int>& t) {
    int idx = 0;
    for (size_t a = 0; a < orders.size(); ++a) idx = idx * orders[a] + t[a];
    return idx;
  };
  auto tuple_of = [&](int idx) {
    std::vector<int> t(orders.size());
    for (size_t a = orders.size(); a-- > 0;) {
      t[a] = idx % orders[a];
      idx /= orders[a];
    }
    return t;
  };
  std::vector<MultEntry> mult;
  std::vector<ComulEntry> comul;
  std::vector<std::string> labels;
  Mat S(f, n, n);
  for (int i = 0; i < n; ++i) {
    auto ti = tuple_of(i);
    std::ostringstream lab;
    lab << "g";
    for (size_t a = 0; a < ti.size(); ++a) lab << (a ? "," : "(") << ti[a];
    lab << ")";
    labels.push_back(lab.str());
    comul.push_back({i, i, i, f->one()});
    std::vector<int> inv(ti.size());
    for (size_t a = 0; a < ti.size(); ++a) inv[a] = (orders[a] - ti[a]) % orders[a];
    S.at(index(inv), i) = f->one();
    for (int j = 0; j < n; ++j) {
      auto tj = tuple_of(j);
      std::vector<int> tk(ti.size());
      for (size_t a = 0; a < ti.size(); ++a) tk[a] = (ti[a] + tj[a]) % orders[a];
      mult.push_back({i, j, index(tk), f->one()});
    }
  }
  std::vector<Scalar> unit(n, f->zero());
  unit[0] = f->one();
  std::vector<Scalar> counit(n, f->one());
  auto base = Algebra::make(f, n, mult, unit, labels);
  auto h = HopfAlgebra::make(base, comul, counit, S);
  auto rep = h->check();
  if (!rep.pass) throw Error(Errc::Internal, "group algebra axioms: " + rep.first_violation);
  return h;
}

HopfPtr build_sweedler(FieldPtr f) {
  if (f->characteristic() == 2)
    throw Error(Errc::MalformedParams, "Sweedler algebra needs characteristic != 2");
  // basis 0:1, 1:g, 2:x, 3:gx with g^2 = 1, x^2 = 0, xg = -gx
  const Scalar one = f->one(), neg = f->neg(one);
  auto mono = [&](int i) { return std::pair<int, int>{i == 1 || i == 3, i >= 2}; };
  std::vector<MultEntry> mult;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto [a1, b1] = mono(i);
      auto [a2, b2] = mono(j);
      if (b1 + b2 >= 2) continue;
      int sign = (b1 && a2) ? -1 : 1;
      int a = (a1 + a2) % 2, b = b1 + b2;
      int k = a + 2 * b;
      mult.push_back({i, j, k, sign == 1 ? one : neg});
    }
  std::vector<Scalar> unit{one, f->zero(), f->zero(), f->zero()};
  auto base = Algebra::make(f, 4, mult, unit, {"1", "g", "x", "gx"});
  std::vector<ComulEntry> comul{
      {0, 0, 0, one}, {1, 1, 1, one}, {2, 2, 0, one}, {2, 1, 2, one}, {3, 3, 1, one}, {3, 0, 3, one}};
  std::vector<Scalar> counit{one, one, f->zero(), f->zero()};
  Mat S(f, 4, 4);
  S.at(0, 0) = one;
  S.at(1, 1) = one;
  S.at(3, 2) = neg;  // S(x) = -gx
  S.at(2, 3) = one;  // S(gx) = x
  auto h = HopfAlgebra::make(base, comul, counit, S);
  auto rep = h->check();
  if (!rep.pass) throw Error(Errc::Internal, "Sweedler axioms: " + rep.first_violation);
  return h;
}

HopfPtr build_taft(FieldPtr f, int N, const Scalar& q) {
  if (N < 2) throw Error(Errc::MalformedParams, "Taft algebra needs N >= 2");
  if (f->mult_order(q, N) != N)
    throw Error(Errc::BadRootOfUnity, "q must be a primitive N-th root of unity");
  int n = N * N;
  auto idx = [N](int a, int b) { return a * N + b; };
  // x g = q g x, so x^b g^a = q^(ab) g^a x^b
  std::vector<MultEntry> mult;
  std::vector<std::string> labels;
  for (int a1 = 0; a1 < N; ++a1)
    for (int b1 = 0; b1 < N; ++b1) {
      std::ostringstream lab;
      lab << "g^" << a1 << "x^" << b1;
      labels.push_back(lab.str());
      for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2) {
          if (b1 + b2 >= N) continue;
          Scalar co = f->pow(q, mpz_class(static_cast<long>(b1) * a2));
          mult.push_back({idx(a1, b1), idx(a2, b2), idx((a1 + a2) % N, b1 + b2), co});
        }
    }
  std::vector<Scalar> unit(n, f->zero());
  unit[0] = f->one();
  auto base = Algebra::make(f, n, mult, unit, labels);
  // Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x
  Mat Dg(f, n, n), Dx(f, n, n);
  Dg.at(idx(1, 0), idx(1, 0)) = f->one();
  Dx.at(idx(0, 1), idx(0, 0)) = f->one();
  Dx.at(idx(1, 0), idx(0, 1)) = f->one();
  auto hmk = [&](const Mat& dummy) { (void)dummy; };
  hmk(Dg);
  // build Delta on the PBW basis by multiplying in H (x) H; needs a dummy Hopf
  // wrapper for tensor_mul, so assemble comul entries through a scratch lambda
  auto t2mul = [&](const Mat& x, const Mat& y) {
    const Field& F = *f;
    Mat out(f, n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (F.is_zero(x.at(a, b))) continue;
        for (int c = 0; c < n; ++c)
          for (int e = 0; e < n; ++e) {
            if (F.is_zero(y.at(c, e))) continue;
            Scalar co = F.mul(x.at(a, b), y.at(c, e));
            auto v1 = base->basis_product(a, c);
            auto v2 = base->basis_product(b, e);
            for (int t1 = 0; t1 < n; ++t1) {
              if (F.is_zero(v1[t1])) continue;
              Scalar co1 = F.mul(co, v1[t1]);
              for (int t2 = 0; t2 < n; ++t2)
                if (!F.is_zero(v2[t2])) out.at(t1, t2) = F.add(out.at(t1, t2), F.mul(co1, v2[t2]));
            }
          }
      }
    return out;
  };
  std::vector<ComulEntry> comul;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      Mat cur(f, n, n);
      cur.at(0, 0) = f->one();
      for (int t = 0; t < a; ++t) cur = t2mul(cur, Dg);
      for (int t = 0; t < b; ++t) cur = t2mul(cur, Dx);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!f->is_zero(cur.at(j, k))) comul.push_back({idx(a, b), j, k, cur.at(j, k)});
    }
  std::vector<Scalar> counit(n, f->zero());
  for (int a = 0; a < N; ++a) counit[idx(a, 0)] = f->one();
  // S(g) = g^{-1}, S(x) = -g^{-1} x; S antihomomorphism
  Mat S(f, n, n);
  std::vector<Scalar> Sg(n, f->zero()), Sx(n, f->zero());
  Sg[idx((N - 1) % N, 0)] = f->one();
  Sx[idx(N - 1, 1)] = f->neg(f->one());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      // S(g^a x^b) = S(x)^b S(g)^a
      std::vector<Scalar> cur = base->unit();
      for (int t = 0; t < b; ++t) cur = base->mul_vec(cur, Sx);
      for (int t = 0; t < a; ++t) cur = base->mul_vec(cur, Sg);
      for (int t = 0; t < n; ++t) S.at(t, idx(a, b)) = cur[t];
    }
  auto h = HopfAlgebra::make(base, comul, counit, S);
  auto rep = h->check();
  if (!rep.pass) throw Error(Errc::Internal, "Taft axioms: " + rep.first_violation);
  return h;
}

HopfPtr build_uqsl2bar(FieldPtr f, int p, const Scalar& q) {
  if (p < 2) throw Error(Errc::MalformedParams, "uqsl2bar needs p >= 2");
  if (f->mult_order(q, 2 * p) != 2 * p)
    throw Error(Errc::BadRootOfUnity, "q must be a primitive 2p-th root of unity");
  const Field& F = *f;
  int twop = 2 * p;
  int n = p * p * twop;
  auto idx = [&](int a, int b, int c) { return (a * p + b) * twop + c; };
  Scalar qi = F.inv(q);
  Scalar den = F.inv(F.sub(q, qi));
  // generator action on the PBW basis E^a F^b K^c
  Mat LE(f, n, n), LF(f, n, n), LK(f, n, n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < twop; ++c) {
        int col = idx(a, b, c);
        if (a + 1 < p) LE.at(idx(a + 1, b, c), col) = F.one();
        // K E^a = q^(2a) E^a K and K F^b = q^(-2b) F^b K
        Scalar co = F.mul(F.pow(q, mpz_class(2L * a)), F.pow(qi, mpz_class(2L * b)));
        LK.at(idx(a, b, (c + 1) % twop), col) = co;
        // F E^a = E^a F - sum_{t<a} E^(a-1) (q^(2s) K - q^(-2s) K^(-1)) / (q - q^(-1)), s = a-1-t
        if (b + 1 < p) LF.at(idx(a, b + 1, c), col) = F.add(LF.at(idx(a, b + 1, c), col), F.one());
        for (int t = 0; t < a; ++t) {
          int s = a - 1 - t;
          Scalar co1 = F.mul(den, F.mul(F.pow(q, mpz_class(2L * s)), F.pow(qi, mpz_class(2L * b))));
          LF.at(idx(a - 1, b, (c + 1) % twop), col) =
              F.sub(LF.at(idx(a - 1, b, (c + 1) % twop), col), co1);
          Scalar co2 = F.mul(den, F.mul(F.pow(qi, mpz_class(2L * s)), F.pow(q, mpz_class(2L * b))));
          LF.at(idx(a - 1, b, (c - 1 + twop) % twop), col) =
              F.add(LF.at(idx(a - 1, b, (c - 1 + twop) % twop), col), co2);
        }
      }
  // left multiplication by E^a F^b K^c is LE^a LF^b LK^c
  std::vector<MultEntry> mult;
  std::vector<std::string> labels(n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < twop; ++c) {
        std::ostringstream lab;
        lab << "E^" << a << "F^" << b << "K^" << c;
        labels[idx(a, b, c)] = lab.str();
        Mat L = LE.pow(a).mul(LF.pow(b)).mul(LK.pow(c));
        int i = idx(a, b, c);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (!F.is_zero(L.at(k, j))) mult.push_back({i, j, k, L.at(k, j)});
      }
  std::vector<Scalar> unit(n, F.zero());
  unit[idx(0, 0, 0)] = F.one();
  auto base = Algebra::make(f, n, mult, unit, labels);
  {
    auto rep = base->check();
    if (!rep.pass) throw Error(Errc::Internal, "uqsl2bar straightening: " + rep.first_violation);
  }
  // comultiplication from Delta(E) = E (x) K + 1 (x) E, Delta(F) = F (x) 1 + K^(-1) (x) F,
  // Delta(K) = K (x) K, multiplied out in H (x) H
  auto t2mul = [&](const Mat& x, const Mat& y) {
    Mat out(f, n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (F.is_zero(x.at(a, b))) continue;
        for (int c = 0; c < n; ++c)
          for (int e = 0; e < n; ++e) {
            if (F.is_zero(y.at(c, e))) continue;
            Scalar co = F.mul(x.at(a, b), y.at(c, e));
            auto v1 = base->basis_product(a, c);
            auto v2 = base->basis_product(b, e);
            for (int t1 = 0; t1 < n; ++t1) {
              if (F.is_zero(v1[t1])) continue;
              Scalar co1 = F.mul(co, v1[t1]);
              for (int t2 = 0; t2 < n; ++t2)
                if (!F.is_zero(v2[t2])) out.at(t1, t2) = F.add(out.at(t1, t2), F.mul(co1, v2[t2]));
            }
          }
      }
    return out;
  };
  Mat DE(f, n, n), DF(f, n, n), DK(f, n, n);
  DE.at(idx(1, 0, 0), idx(0, 0, 1)) = F.one();
  DE.at(idx(0, 0, 0), idx(1, 0, 0)) = F.one();
  DF.at(idx(0, 1, 0), idx(0, 0, 0)) = F.one();
  DF.at(idx(0, 0, twop - 1), idx(0, 1, 0)) = F.one();
  DK.at(idx(0, 0, 1), idx(0, 0, 1)) = F.one();
  std::vector<ComulEntry> comul;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      Mat curEF(f, n, n);
      curEF.at(0, 0) = F.one();
      for (int t = 0; t < a; ++t) curEF = t2mul(curEF, DE);
      for (int t = 0; t < b; ++t) curEF = t2mul(curEF, DF);
      for (int c = 0; c < twop; ++c) {
        Mat cur = curEF;
        for (int t = 0; t < c; ++t) cur = t2mul(cur, DK);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (!F.is_zero(cur.at(j, k))) comul.push_back({idx(a, b, c), j, k, cur.at(j, k)});
      }
    }
  std::vector<Scalar> counit(n, F.zero());
  for (int c = 0; c < twop; ++c) counit[idx(0, 0, c)] = F.one();
  // S(E) = -E K^(-1), S(F) = -K F, S(K) = K^(-1); antihomomorphism
  std::vector<Scalar> SE(n, F.zero()), SF(n, F.zero()), SK(n, F.zero());
  SE[idx(1, 0, twop - 1)] = F.neg(F.one());
  // -K F = -q^(-2) F K in PBW order
  SF[idx(0, 1, 1)] = F.neg(F.mul(qi, qi));
  SK[idx(0, 0, twop - 1)] = F.one();
  Mat S(f, n, n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < twop; ++c) {
        // S(E^a F^b K^c) = S(K)^c S(F)^b S(E)^a
        std::vector<Scalar> cur = base->unit();
        for (int t = 0; t < c; ++t) cur = base->mul_vec(cur, SK);
        for (int t = 0; t < b; ++t) cur = base->mul_vec(cur, SF);
        for (int t = 0; t < a; ++t) cur = base->mul_vec(cur, SE);
        for (int t = 0; t < n; ++t) S.at(t, idx(a, b, c)) = cur[t];
      }
  auto h = HopfAlgebra::make(base, comul, counit, S);
  auto rep = h->check();
  if (!rep.pass) throw Error(Errc::Internal, "uqsl2bar axioms: " + rep.first_violation);
  return h;
}

// ---------------------------------------------------------------------------
// Drinfeld double D(H) = H*^cop (x) H

DoubleResult drinfeld_double(const HopfAlgebra& h) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  int N = n * n;
  auto I = [n](int i, int j) { return i * n + j; };
  // iterated comultiplication Delta2(e_i) as sparse (j1,j2,j3) -> coeff
  struct Triple {
    int a, b, c;
    Scalar co;
  };
  std::vector<std::vector<Triple>> D2(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = h.d(i, j, k);
        if (F.is_zero(c)) continue;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const Scalar& c2 = h.d(j, a, b);
            if (!F.is_zero(c2)) D2[i].push_back({a, b, k, F.mul(c, c2)});
          }
      }
  // (f (x) e_j)(e^g (x) e_k) = sum_{Delta2(e_j) = j1 (x) j2 (x) j3}
  //   f * (e_{j1} -> e^g <- S^{-1}(e_{j3})) (x) e_{j2} e_k
  std::vector<MultEntry> mult;
  std::vector<std::string> labels(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels[I(i, j)] = "f" + std::to_string(i) + "*" + A.labels()[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
          std::vector<Scalar> out(N, F.zero());
          for (const auto& tr : D2[j]) {
            auto sv = h.apply_antipode_inv(A.basis_vec(tr.c));
            // w[t] = coefficient of e_g in sv * e_t * e_{j1}
            std::vector<Scalar> w(n, F.zero());
            for (int t = 0; t < n; ++t) {
              auto v = A.mul_vec(sv, A.mul_vec(A.basis_vec(t), A.basis_vec(tr.a)));
              w[t] = v[g];
            }
            // f' = e^i * w in H*: f'[t] = sum_b d(t, i, b) w[b]
            std::vector<Scalar> fp(n, F.zero());
            for (int t = 0; t < n; ++t) {
              Scalar s = F.zero();
              for (int b = 0; b < n; ++b) {
                const Scalar& dd = h.d(t, i, b);
                if (!F.is_zero(dd) && !F.is_zero(w[b])) s = F.add(s, F.mul(dd, w[b]));
              }
              fp[t] = s;
            }
            auto hk = A.basis_product(tr.b, k);
            for (int t = 0; t < n; ++t) {
              if (F.is_zero(fp[t])) continue;
              for (int u = 0; u < n; ++u)
                if (!F.is_zero(hk[u]))
                  out[I(t, u)] = F.add(out[I(t, u)], F.mul(tr.co, F.mul(fp[t], hk[u])));
            }
          }
          for (int t = 0; t < N; ++t)
            if (!F.is_zero(out[t])) mult.push_back({I(i, j), I(g, k), t, out[t]});
        }
  // unit = eps (x) 1
  std::vector<Scalar> unit(N, F.zero());
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u)
      if (!F.is_zero(h.counit()[t]) && !F.is_zero(A.unit()[u]))
        unit[I(t, u)] = F.mul(h.counit()[t], A.unit()[u]);
  auto base = Algebra::make(h.field(), N, mult, unit, labels);
  // comultiplication: Delta_D(e^i (x) e_j) = (e^b (x) e_{j1}) (x) (e^a (x) e_{j2})
  // where e_a e_b picks up the coefficient of e_i (H*^cop side)
  std::vector<ComulEntry> comul;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Scalar& cm = A.c(a, b, i);
          if (F.is_zero(cm)) continue;
          for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
              const Scalar& c2 = h.d(j, j1, j2);
              if (!F.is_zero(c2)) comul.push_back({I(i, j), I(b, j1), I(a, j2), F.mul(cm, c2)});
            }
        }
  std::vector<Scalar> counit(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) counit[I(i, j)] = F.mul(A.unit()[i], h.counit()[j]);
  // solve the antipode axiom as a linear system in the entries of S
  // sum_{(Y,Z)} comul[X][Y][Z] S(e_Y) e_Z = eps(X) 1, for all X
  // Build dense comul lookup first.
  std::vector<Scalar> dco(static_cast<size_t>(N) * N * N, F.zero());
  for (const auto& e : comul) {
    size_t id = (static_cast<size_t>(e.i) * N + e.j) * N + e.k;
    dco[id] = F.add(dco[id], e.coeff);
  }
  Mat lhs(h.field(), N * N, N * N);
  std::vector<Scalar> rhs(static_cast<size_t>(N) * N, F.zero());
  // columns: S entries S[t][Y] at index t*N+Y; rows: (X, o)
  for (int X = 0; X < N; ++X) {
    for (int Y = 0; Y < N; ++Y)
      for (int Z = 0; Z < N; ++Z) {
        const Scalar& c = dco[(static_cast<size_t>(X) * N + Y) * N + Z];
        if (F.is_zero(c)) continue;
        auto prod = [&](int t) { return base->basis_product(t, Z); };
        for (int t = 0; t < N; ++t) {
          auto pz = prod(t);
          for (int o = 0; o < N; ++o)
            if (!F.is_zero(pz[o]))
              lhs.at(X * N + o, t * N + Y) = F.add(lhs.at(X * N + o, t * N + Y), F.mul(c, pz[o]));
        }
      }
    for (int o = 0; o < N; ++o) rhs[static_cast<size_t>(X) * N + o] = F.mul(counit[X], unit[o]);
  }
  auto sol = solve(lhs, rhs);
  if (!sol) throw Error(Errc::Internal, "double antipode system inconsistent");
  Mat S(h.field(), N, N);
  for (int t = 0; t < N; ++t)
    for (int Y = 0; Y < N; ++Y) S.at(t, Y) = (*sol)[static_cast<size_t>(t) * N + Y];
  auto dh = HopfAlgebra::make(base, comul, counit, S);
  auto rep = dh->check();
  if (!rep.pass) throw Error(Errc::Internal, "double axioms: " + rep.first_violation);
  // canonical R = sum_i (eps (x) e_i) (x) (e^i (x) 1)
  Mat R(h.field(), N, N);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      if (F.is_zero(h.counit()[t])) continue;
      for (int u = 0; u < n; ++u)
        if (!F.is_zero(A.unit()[u]))
          R.at(I(t, i), I(i, u)) = F.add(R.at(I(t, i), I(i, u)), F.mul(h.counit()[t], A.unit()[u]));
    }
  return {dh, R};
}

AlgebraPtr dual_algebra(const HopfAlgebra& h) {
  const Field& F = *h.field();
  int n = h.dim();
  std::vector<MultEntry> mult;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        const Scalar& c = h.d(t, a, b);
        if (!F.is_zero(c)) mult.push_back({a, b, t, c});
      }
  return Algebra::make(h.field(), n, mult, h.counit());
}

AModule adjoint_module(const HopfAlgebra& h) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  AModule m;
  m.algebra = h.algebra();
  m.dim = n;
  for (int i = 0; i < n; ++i) {
    Mat act(h.field(), n, n);
    for (int col = 0; col < n; ++col) {
      std::vector<Scalar> out(n, F.zero());
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Scalar& c = h.d(i, j, k);
          if (F.is_zero(c)) continue;
          auto t = A.mul_vec(A.basis_vec(j), A.mul_vec(A.basis_vec(col), h.apply_antipode(A.basis_vec(k))));
          for (int u = 0; u < n; ++u) out[u] = F.add(out[u], F.mul(c, t[u]));
        }
      for (int r = 0; r < n; ++r) act.at(r, col) = out[r];
    }
    m.action.push_back(std::move(act));
  }
  return m;
}

AModule trivial_module(const HopfAlgebra& h) {
  AModule m;
  m.algebra = h.algebra();
  m.dim = 1;
  for (int i = 0; i < h.dim(); ++i) {
    Mat a(h.field(), 1, 1);
    a.at(0, 0) = h.counit()[i];
    m.action.push_back(std::move(a));
  }
  return m;
}

AModule tensor_module(const HopfAlgebra& h, const AModule& m, const AModule& n) {
  const Field& F = *h.field();
  AModule out;
  out.algebra = h.algebra();
  out.dim = m.dim * n.dim;
  for (int i = 0; i < h.dim(); ++i) {
    Mat act(h.field(), out.dim, out.dim);
    for (int j = 0; j < h.dim(); ++j)
      for (int k = 0; k < h.dim(); ++k) {
        const Scalar& c = h.d(i, j, k);
        if (!F.is_zero(c)) act = act.add(m.action[j].kron(n.action[k]).scaled(c));
      }
    out.action.push_back(std::move(act));
  }
  return out;
}

DualSubspace cf_n(const HopfAlgebra& h, std::optional<int> nn) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < n; ++i) {
    auto s2i = h.apply_antipode(h.apply_antipode(A.basis_vec(i)));
    for (int j = 0; j < n; ++j) {
      auto lhs = A.basis_product(i, j);
      auto rhs = A.mul_vec(A.basis_vec(j), s2i);
      std::vector<Scalar> row(n);
      bool nz = false;
      for (int k = 0; k < n; ++k) {
        row[k] = F.sub(lhs[k], rhs[k]);
        nz = nz || !F.is_zero(row[k]);
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  if (nn) {
    const auto& rad = radical_series(A);
    const Subspace& Jn = rad.power(*nn);
    for (int b = 0; b < Jn.dim(); ++b) rows.push_back(Jn.basis().row(b));
  }
  DualSubspace out;
  out.tag = nn ? DualTag::CFN : DualTag::CF;
  out.n = nn.value_or(0);
  out.space = rows.empty() ? rref_subspace(Mat::identity(h.field(), n))
                           : kernel(Mat::from_rows(h.field(), rows, n));
  return out;
}

std::vector<Scalar> convolve(const HopfAlgebra& h, const std::vector<Scalar>& f,
                             const std::vector<Scalar>& g) {
  const Field& F = *h.field();
  int n = h.dim();
  std::vector<Scalar> out(n, F.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (F.is_zero(f[j])) continue;
      for (int k = 0; k < n; ++k) {
        const Scalar& c = h.d(i, j, k);
        if (!F.is_zero(c) && !F.is_zero(g[k])) out[i] = F.add(out[i], F.mul(c, F.mul(f[j], g[k])));
      }
    }
  return out;
}

std::vector<std::vector<Scalar>> group_likes(const HopfAlgebra& h, std::uint64_t seed) {
  const Field& F = *h.field();
  int n = h.dim();
  auto dual = dual_algebra(h);
  auto sims = simple_modules(*dual, seed);
  std::vector<std::vector<Scalar>> out;
  for (const auto& s : sims.simples) {
    if (s.dim != 1) continue;
    std::vector<Scalar> g(n);
    for (int a = 0; a < n; ++a) g[a] = s.action[a].at(0, 0);
    // verify the group-like equations exactly
    Mat dg = h.delta(g);
    Mat gg(h.field(), n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) gg.at(a, b) = F.mul(g[a], g[b]);
    if (dg != gg) continue;
    if (!F.is_one(h.counit_of(g))) continue;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    for (int t = 0; t < n; ++t) {
      int c = F.cmp(x[t], y[t]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

std::vector<std::vector<Scalar>> pivots(const HopfAlgebra& h, std::uint64_t seed) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  std::vector<std::vector<Scalar>> out;
  for (auto& g : group_likes(h, seed)) {
    auto ginv = A.invert(g);
    if (!ginv) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      auto s2 = h.apply_antipode(h.apply_antipode(A.basis_vec(i)));
      auto conj = A.mul_vec(g, A.mul_vec(A.basis_vec(i), *ginv));
      ok = s2 == conj;
    }
    if (ok) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Scalar> internal_character(const HopfAlgebra& h, const std::vector<Scalar>& pivot,
                                       const AModule& m) {
  const Field& F = *h.field();
  const Algebra& A = *h.algebra();
  int n = h.dim();
  // validate the pivot: group-like, invertible, implements S^2
  {
    Mat dg = h.delta(pivot);
    Mat gg(h.field(), n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) gg.at(a, b) = F.mul(pivot[a], pivot[b]);
    auto ginv = A.invert(pivot);
    bool ok = dg == gg && F.is_one(h.counit_of(pivot)) && ginv.has_value();
    if (ok) {
      for (int i = 0; i < n && ok; ++i) {
        auto s2 = h.apply_antipode(h.apply_antipode(A.basis_vec(i)));
        ok = s2 == A.mul_vec(pivot, A.mul_vec(A.basis_vec(i), *ginv));
      }
    }
    if (!ok) throw Error(Errc::NotAPivot, "element is not a pivot");
  }
  std::vector<Scalar> ch(n);
  for (int i = 0; i < n; ++i) ch[i] = m.act(A.mul_vec(pivot, A.basis_vec(i))).trace();
  // the character must be a class function; anything else signals a broken
  // convention upstream
  auto cf = cf_n(h, std::nullopt);
  if (!cf.space.contains(ch))
    throw Error(Errc::StarConventionViolation, "internal character escapes CF(H)");
  return ch;
}

}  // namespace loewy
