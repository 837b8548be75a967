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

#include <doctest.h>

#include "loewy/algebra.hpp"
#include "loewy/modules.hpp"

using namespace loewy;

namespace {

AlgebraPtr group_alg_cyclic(FieldPtr f, int p) {
  std::vector<MultEntry> mult;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) mult.push_back({i, j, (i + j) % p, f->one()});
  std::vector<Scalar> unit(p, f->zero());
  unit[0] = f->one();
  return Algebra::make(f, p, mult, unit);
}

AlgebraPtr truncated_poly(FieldPtr f, int n) {  // k[x]/(x^n), basis 1, x, ..., x^(n-1)
  std::vector<MultEntry> mult;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) mult.push_back({i, j, i + j, f->one()});
  std::vector<Scalar> unit(n, f->zero());
  unit[0] = f->one();
  return Algebra::make(f, n, mult, unit);
}

AlgebraPtr mat2(FieldPtr f) {  // 2x2 matrices, basis E00, E01, E10, E11
  auto idx = [](int r, int c) { return r * 2 + c; };
  std::vector<MultEntry> mult;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          if (c == r2) mult.push_back({idx(r, c), idx(r2, c2), idx(r, c2), f->one()});
  std::vector<Scalar> unit(4, f->zero());
  unit[0] = f->one();
  unit[3] = f->one();
  return Algebra::make(f, 4, mult, unit);
}

AlgebraPtr sweedler_algebra(FieldPtr f) {
  // 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
  const Scalar one = f->one(), neg = f->neg(one);
  std::vector<MultEntry> mult;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int a1 = (i == 1 || i == 3), b1 = (i >= 2);
      int a2 = (j == 1 || j == 3), b2 = (j >= 2);
      if (b1 + b2 >= 2) continue;
      int sign = (b1 && a2) ? -1 : 1;
      int k = ((a1 + a2) % 2) + 2 * (b1 + b2);
      mult.push_back({i, j, k, sign == 1 ? one : neg});
    }
  std::vector<Scalar> unit{one, f->zero(), f->zero(), f->zero()};
  return Algebra::make(f, 4, mult, unit);
}

}  // namespace

TEST_CASE("check_algebra passes and names violations") {
  auto f3 = Field::prime(3);
  auto a = group_alg_cyclic(f3, 3);
  CHECK(a->check().pass);
  // perturb c[0][0][0]: 1*1 = 1 + e1 breaks associativity or the unit
  std::vector<MultEntry> bad = a->sparse_mult();
  bad.push_back({0, 0, 1, f3->one()});
  auto b = Algebra::make(f3, 3, bad, a->unit());
  auto rep = b->check();
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.first_violation.empty());
  CHECK(truncated_poly(Field::rationals(), 2)->check().pass);
  CHECK_THROWS_AS(Algebra::make(f3, 0, {}, {}), Error);
}

TEST_CASE("radical of GF(3)[Z/3] is generated by g - 1") {
  auto a = group_alg_cyclic(Field::prime(3), 3);
  const auto& rad = radical_series(*a);
  CHECK(rad.power(1).dim() == 2);
  CHECK(rad.loewy_length == 3);
  auto f3 = a->field();
  // x = g - 1 lies in J
  std::vector<Scalar> x{f3->from_int(-1), f3->one(), f3->zero()};
  CHECK(rad.power(1).contains(x));
  CHECK(rad.power(2).contains(a->mul_vec(x, x)));
}

TEST_CASE("Maschke: Q[Z/2] is semisimple") {
  auto a = group_alg_cyclic(Field::rationals(), 2);
  const auto& rad = radical_series(*a);
  CHECK(rad.power(1).dim() == 0);
  CHECK(rad.loewy_length == 1);
}

TEST_CASE("radical of Q[x]/(x^3) against the monomial-ideal oracle") {
  auto q = Field::rationals();
  auto a = truncated_poly(q, 3);
  // oracle: enumerate all monomial-spanned subspaces, keep nilpotent ideals,
  // take the largest
  int best_mask = 0, best_count = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) rows.push_back(a->basis_vec(i));
    if (rows.empty()) continue;
    Subspace s = rref_subspace(q, rows, 3);
    // ideal?
    bool ideal = true;
    for (const auto& r : rows)
      for (int i = 0; i < 3 && ideal; ++i) {
        ideal = s.contains(a->mul_vec(r, a->basis_vec(i))) &&
                s.contains(a->mul_vec(a->basis_vec(i), r));
      }
    if (!ideal) continue;
    // nilpotent? all products of 3 basis vectors vanish
    bool nil = true;
    for (const auto& r1 : rows)
      for (const auto& r2 : rows)
        for (const auto& r3 : rows)
          if (a->mul_vec(a->mul_vec(r1, r2), r3) != std::vector<Scalar>(3, q->zero())) nil = false;
    if (nil && static_cast<int>(rows.size()) > best_count) {
      best_count = static_cast<int>(rows.size());
      best_mask = mask;
    }
  }
  CHECK(best_mask == 0b110);  // span{x, x^2}
  const auto& rad = radical_series(*a);
  CHECK(rad.power(1).dim() == best_count);
  CHECK(rad.loewy_length == 3);
  std::vector<std::vector<Scalar>> oracle_rows{a->basis_vec(1), a->basis_vec(2)};
  CHECK(rad.power(1) == rref_subspace(q, oracle_rows, 3));
}

TEST_CASE("center: commutative, matrix algebra, and the Sweedler enumeration oracle") {
  CHECK(center(*group_alg_cyclic(Field::prime(3), 3)).dim() == 3);
  CHECK(center(*mat2(Field::rationals())).dim() == 1);
  // Sweedler H4 over GF(5): enumerate all 5^4 elements and filter commutation
  auto f5 = Field::prime(5);
  auto h4 = sweedler_algebra(f5);
  int count = 0;
  std::vector<Scalar> v(4, f5->zero());
  std::vector<long long> idx(4, 0);
  while (true) {
    for (int i = 0; i < 4; ++i) v[i] = f5->from_int(idx[i]);
    bool central = true;
    for (int i = 0; i < 4 && central; ++i)
      central = h4->mul_vec(v, h4->basis_vec(i)) == h4->mul_vec(h4->basis_vec(i), v);
    if (central) ++count;
    int i = 0;
    while (i < 4 && ++idx[i] == 5) idx[i++] = 0;
    if (i == 4) break;
  }
  // |Z| = 5^dim Z
  int dim = 0;
  while (count > 1) {
    count /= 5;
    ++dim;
  }
  CHECK(center(*h4).dim() == dim);
}

TEST_CASE("sym_n of the dual numbers, cross-checked by GF(3) enumeration") {
  auto q = Field::rationals();
  auto a = truncated_poly(q, 2);
  CHECK(sym_n(*a, 1).dim() == 1);
  CHECK(sym_n(*a, 2).dim() == 2);
  // GF(3) analogue by brute force: forms f with f(ab) = f(ba) (all pass,
  // commutative) and f(J^n) = 0
  auto f3 = Field::prime(3);
  auto a3 = truncated_poly(f3, 2);
  const auto& rad = radical_series(*a3);
  for (int n = 1; n <= 2; ++n) {
    int cnt = 0;
    for (int c0 = 0; c0 < 3; ++c0)
      for (int c1 = 0; c1 < 3; ++c1) {
        std::vector<Scalar> f{f3->from_int(c0), f3->from_int(c1)};
        bool ok = true;
        const Subspace& jn = rad.power(n);
        for (int b = 0; b < jn.dim() && ok; ++b) {
          Scalar s = f3->zero();
          for (int t = 0; t < 2; ++t) s = f3->add(s, f3->mul(f[t], jn.basis().at(b, t)));
          ok = f3->is_zero(s);
        }
        if (ok) ++cnt;
      }
    int dim = 0;
    while (cnt > 1) {
      cnt /= 3;
      ++dim;
    }
    CHECK(sym_n(*a3, n).dim() == dim);
    CHECK(sym_n(*a3, n).dim() == sym_n(*a, n).dim());
  }
  // a field is its own Sym for every n
  auto k = group_alg_cyclic(Field::rationals(), 1);
  CHECK(sym_n(*k, 1).dim() == 1);
  CHECK(sym_n(*k, 5).dim() == 1);
}

TEST_CASE("Reynolds ideals") {
  auto a = group_alg_cyclic(Field::prime(3), 3);
  for (int n = 1; n <= 4; ++n) CHECK(reynolds_n(*a, n).dim() == std::min(n, 3));
  // semisimple: Rey_1 = Z(A)
  auto s = group_alg_cyclic(Field::rationals(), 2);
  CHECK(reynolds_n(*s, 1) == center(*s));
  // dual numbers: Rey_1 = span{x}
  auto q = Field::rationals();
  auto d = truncated_poly(q, 2);
  Subspace r1 = reynolds_n(*d, 1);
  CHECK(r1.dim() == 1);
  CHECK(r1.contains(d->basis_vec(1)));
}

TEST_CASE("dim Rey_n = dim Sym_n on group algebras (symmetric Frobenius)") {
  for (auto a : {group_alg_cyclic(Field::prime(3), 3), group_alg_cyclic(Field::prime(5), 5),
                 group_alg_cyclic(Field::rationals(), 2)}) {
    const auto& rad = radical_series(*a);
    for (int n = 1; n <= rad.loewy_length + 1; ++n)
      CHECK(reynolds_n(*a, n).dim() == sym_n(*a, n).dim());
  }
}

TEST_CASE("capital quotients") {
  auto a = group_alg_cyclic(Field::prime(3), 3);
  CHECK(capital_quotient(*a, 1).algebra->dim() == 1);
  CHECK(capital_quotient(*a, 3).algebra->dim() == 3);
  auto q = Field::rationals();
  auto cube = truncated_poly(q, 3);
  auto quo = capital_quotient(*cube, 2);
  CHECK(quo.algebra->dim() == 2);
  CHECK(quo.algebra->check().pass);
  // A/J^2 of Q[x]/(x^3) is the dual numbers: same radical data
  CHECK(radical_series(*quo.algebra).loewy_length == 2);
}

TEST_CASE("radical powers multiply into each other") {
  for (auto a : {group_alg_cyclic(Field::prime(3), 3), truncated_poly(Field::rationals(), 4),
                 sweedler_algebra(Field::rationals())}) {
    const auto& rad = radical_series(*a);
    int w = rad.loewy_length;
    for (int m = 1; m <= w; ++m)
      for (int n = 1; n <= w; ++n) {
        const Subspace& target = rad.power(std::min(m + n, w));
        for (int i = 0; i < rad.power(m).dim(); ++i)
          for (int j = 0; j < rad.power(n).dim(); ++j)
            CHECK(target.contains(
                a->mul_vec(rad.power(m).basis().row(i), rad.power(n).basis().row(j))));
      }
  }
}

TEST_CASE("sym chain ascends and stabilizes from the Loewy length on") {
  for (auto a : {group_alg_cyclic(Field::prime(5), 5), sweedler_algebra(Field::rationals()),
                 truncated_poly(Field::prime(3), 4)}) {
    const auto& rad = radical_series(*a);
    int w = rad.loewy_length;
    int full = sym_n(*a, std::nullopt).dim();
    int prev = 0;
    for (int n = 1; n <= w + 2; ++n) {
      int d = sym_n(*a, n).dim();
      CHECK(d >= prev);
      prev = d;
      if (n >= w) CHECK(d == full);
    }
  }
}

TEST_CASE("dim Sym_1 equals the number of simples when basic reduction works") {
  for (auto a : {group_alg_cyclic(Field::prime(3), 3), sweedler_algebra(Field::rationals()),
                 mat2(Field::rationals())}) {
    auto sims = simple_modules(*a);
    CHECK(sym_n(*a, 1).dim() == static_cast<int>(sims.simples.size()));
  }
}

TEST_CASE("basic reduction") {
  // already basic: kG for an abelian p-group in char p
  auto a = group_alg_cyclic(Field::prime(3), 3);
  auto br = basic_reduction(*a);
  CHECK(br.basic->dim() == 3);
  CHECK(br.idempotent == a->unit());
  // matrix algebra reduces to the field
  auto m = mat2(Field::rationals());
  auto brm = basic_reduction(*m);
  CHECK(brm.basic->dim() == 1);
  CHECK(brm.basic->check().pass);
  // Sweedler is basic: e = 1 and the restriction is a bijection on Sym
  auto h4 = sweedler_algebra(Field::rationals());
  auto br4 = basic_reduction(*h4);
  CHECK(br4.basic->dim() == 4);
  CHECK(br4.idempotent == h4->unit());
}

TEST_CASE("restriction to eAe is a dimension-preserving bijection on Sym and Sym_n") {
  auto q = Field::rationals();
  // non-basic example: M_2(Q) (x) Q[x]/(x^2), dim 8
  auto m = mat2(q);
  auto d = truncated_poly(q, 2);
  std::vector<MultEntry> mult;
  auto idx = [&](int i, int j) { return i * 2 + j; };
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          auto p1 = m->basis_product(i1, i2);
          auto p2 = d->basis_product(j1, j2);
          for (int k1 = 0; k1 < 4; ++k1)
            for (int k2 = 0; k2 < 2; ++k2)
              if (!q->is_zero(p1[k1]) && !q->is_zero(p2[k2]))
                mult.push_back({idx(i1, j1), idx(i2, j2), idx(k1, k2), q->mul(p1[k1], p2[k2])});
        }
  std::vector<Scalar> unit(8, q->zero());
  for (int k1 = 0; k1 < 4; ++k1)
    if (!q->is_zero(m->unit()[k1])) unit[idx(k1, 0)] = m->unit()[k1];
  auto big = Algebra::make(q, 8, mult, unit);
  REQUIRE(big->check().pass);
  auto br = basic_reduction(*big);
  CHECK(br.basic->dim() == 2);  // Morita-reduces to the dual numbers
  const auto& rad = radical_series(*big);
  for (int n = 1; n <= rad.loewy_length; ++n) {
    auto sa = sym_n(*big, n);
    auto sb = sym_n(*br.basic, n);
    // push the Sym_n(A) basis through the restriction and compare spans
    std::vector<std::vector<Scalar>> mapped;
    for (int i = 0; i < sa.space.dim(); ++i)
      mapped.push_back(br.restriction.apply(sa.space.basis().row(i)));
    CHECK(rref_subspace(q, mapped, br.basic->dim()) == sb.space);
    CHECK(sa.dim() == sb.dim());
  }
  CHECK(sym_n(*big, std::nullopt).dim() == sym_n(*br.basic, std::nullopt).dim());
}
