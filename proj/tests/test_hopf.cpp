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

#include "loewy/hopf.hpp"

using namespace loewy;

TEST_CASE("group algebra Hopf axioms and perturbation detection") {
  auto f3 = Field::prime(3);
  auto h = build_group_algebra(f3, {3});
  CHECK(h->check().pass);
  CHECK(h->algebra()->check().pass);
  // perturb one comultiplication coefficient
  auto comul = h->sparse_comul();
  comul.push_back({1, 0, 2, f3->one()});
  auto bad = HopfAlgebra::make(h->algebra(), comul, h->counit(), h->antipode());
  auto rep = bad->check();
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation.find("basis") != std::string::npos);
}

TEST_CASE("Sweedler: axioms and S^2 = conjugation by g") {
  auto h = build_sweedler(Field::rationals());
  CHECK(h->check().pass);
  const Algebra& a = *h->algebra();
  auto ginv = *a.invert(a.basis_vec(1));
  for (int i = 0; i < 4; ++i) {
    auto s2 = h->apply_antipode(h->apply_antipode(a.basis_vec(i)));
    CHECK(s2 == a.mul_vec(a.basis_vec(1), a.mul_vec(a.basis_vec(i), ginv)));
  }
}

TEST_CASE("uqsl2bar relations hold in the structure constants") {
  auto f5 = Field::prime(5);
  auto h = build_uqsl2bar(f5, 2, f5->from_int(2));
  CHECK(h->dim() == 16);
  CHECK(h->check().pass);
  const Algebra& a = *h->algebra();
  auto idx = [](int e, int f, int k) { return (e * 2 + f) * 4 + k; };
  auto E = a.basis_vec(idx(1, 0, 0));
  auto F = a.basis_vec(idx(0, 1, 0));
  auto K = a.basis_vec(idx(0, 0, 1));
  // E^2 = F^2 = 0
  CHECK(a.mul_vec(E, E) == std::vector<Scalar>(16, f5->zero()));
  CHECK(a.mul_vec(F, F) == std::vector<Scalar>(16, f5->zero()));
  // K^4 = 1
  auto K2 = a.mul_vec(K, K);
  CHECK(a.mul_vec(K2, K2) == a.unit());
  // K E = q^2 E K with q = 2
  auto lhs = a.mul_vec(K, E);
  auto rhs = a.mul_vec(E, K);
  for (auto& x : rhs) x = f5->mul(x, f5->from_int(4));
  CHECK(lhs == rhs);
  // bad roots of unity are rejected
  CHECK_THROWS_AS((void)build_uqsl2bar(f5, 2, f5->from_int(4)), Error);
  auto f7 = Field::prime(7);
  CHECK_THROWS_AS((void)build_taft(f7, 3, f7->from_int(3)), Error);
}

TEST_CASE("group algebra in char p: J is generated by g - 1") {
  auto f3 = Field::prime(3);
  auto h = build_group_algebra(f3, {3});
  const auto& rad = radical_series(*h->algebra());
  std::vector<Scalar> x{f3->from_int(-1), f3->one(), f3->zero()};
  CHECK(rad.power(1).dim() == 2);
  CHECK(rad.power(1).contains(x));
}

TEST_CASE("Drinfeld doubles") {
  auto q = Field::rationals();
  // D(k) = k with R = 1 (x) 1
  auto k = build_group_algebra(q, {1});
  auto dk = drinfeld_double(*k);
  CHECK(dk.hopf->dim() == 1);
  CHECK(dk.hopf->check().pass);
  CHECK(dk.r_matrix.at(0, 0) == q->one());
  // D(Q[Z/2]): dim 4, commutative and cocommutative
  auto h2 = build_group_algebra(q, {2});
  auto d2 = drinfeld_double(*h2);
  CHECK(d2.hopf->dim() == 4);
  CHECK(d2.hopf->check().pass);
  CHECK(d2.hopf->algebra()->is_commutative());
  bool cocomm = true;
  for (int i = 0; i < 4 && cocomm; ++i)
    for (int j = 0; j < 4 && cocomm; ++j)
      for (int l = 0; l < 4 && cocomm; ++l) cocomm = d2.hopf->d(i, j, l) == d2.hopf->d(i, l, j);
  CHECK(cocomm);
  // D(Q(zeta_3)[Z/3]): dim 9
  auto h3 = build_group_algebra(Field::cyclotomic(3), {3});
  auto d3 = drinfeld_double(*h3);
  CHECK(d3.hopf->dim() == 9);
  CHECK(d3.hopf->check().pass);
  // the double of the Sweedler algebra passes all axioms too
  auto d4 = drinfeld_double(*build_sweedler(q));
  CHECK(d4.hopf->dim() == 16);
  CHECK(d4.hopf->check().pass);
}

TEST_CASE("adjoint module") {
  auto q = Field::rationals();
  // group algebra: conjugation, trivial for abelian groups
  auto h = build_group_algebra(q, {2});
  auto adj = adjoint_module(*h);
  CHECK(adj.check().pass);
  for (int i = 0; i < 2; ++i)
    CHECK(adj.action[i] == Mat::identity(q, 2).scaled(h->counit()[i]));
  // Sweedler: g . x = -x
  auto h4 = build_sweedler(q);
  auto adj4 = adjoint_module(*h4);
  CHECK(adj4.check().pass);
  std::vector<Scalar> x(4, q->zero());
  x[2] = q->one();
  auto gx = adj4.action[1].apply(x);
  CHECK(gx == std::vector<Scalar>{q->zero(), q->zero(), q->from_int(-1), q->zero()});
  // 1 spans a trivial submodule
  for (int i = 0; i < 4; ++i) {
    auto img = adj4.action[i].apply(h4->algebra()->unit());
    std::vector<Scalar> want(4);
    for (int t = 0; t < 4; ++t) want[t] = q->mul(h4->counit()[i], h4->algebra()->unit()[t]);
    CHECK(img == want);
  }
}

TEST_CASE("class function filtration") {
  auto f3 = Field::prime(3);
  auto h = build_group_algebra(f3, {3});
  for (int n = 1; n <= 4; ++n) CHECK(cf_n(*h, n).dim() == std::min(n, 3));
  // group algebras have S^2 = id, so CF = Sym
  CHECK(cf_n(*h, std::nullopt).space == sym_n(*h->algebra(), std::nullopt).space);
  // Sweedler: dims match Sym level by level (S^2 inner)
  auto h4 = build_sweedler(Field::rationals());
  const auto& rad = radical_series(*h4->algebra());
  for (int n = 1; n <= rad.loewy_length + 1; ++n)
    CHECK(cf_n(*h4, n).dim() == sym_n(*h4->algebra(), n).dim());
  CHECK(cf_n(*h4, std::nullopt).dim() == sym_n(*h4->algebra(), std::nullopt).dim());
}

TEST_CASE("convolution: unit, associativity, closure of CF") {
  auto h = build_sweedler(Field::rationals());
  const Field& F = *h->field();
  auto cf = cf_n(*h, std::nullopt);
  std::vector<std::vector<Scalar>> forms;
  for (int i = 0; i < cf.dim(); ++i) forms.push_back(cf.space.basis().row(i));
  // f * eps = eps * f = f
  for (const auto& f : forms) {
    CHECK(convolve(*h, f, h->counit()) == f);
    CHECK(convolve(*h, h->counit(), f) == f);
  }
  // associativity and closure
  for (const auto& f : forms)
    for (const auto& g : forms) {
      auto fg = convolve(*h, f, g);
      CHECK(cf.space.contains(fg));
      for (const auto& e : forms)
        CHECK(convolve(*h, convolve(*h, f, g), e) == convolve(*h, f, convolve(*h, g, e)));
    }
  (void)F;
  // group algebra: (f * g)(x) = f(x) g(x) on group elements
  auto f3 = Field::prime(3);
  auto kz3 = build_group_algebra(f3, {3});
  std::vector<Scalar> f{f3->one(), f3->from_int(2), f3->zero()};
  std::vector<Scalar> g{f3->from_int(2), f3->one(), f3->one()};
  auto fg = convolve(*kz3, f, g);
  for (int i = 0; i < 3; ++i) CHECK(fg[i] == f3->mul(f[i], g[i]));
}

TEST_CASE("group-likes and pivots") {
  auto q = Field::rationals();
  auto kz2 = build_group_algebra(q, {2});
  auto gl = group_likes(*kz2);
  CHECK(gl.size() == 2);
  auto pv = pivots(*kz2);
  REQUIRE(!pv.empty());
  // 1 qualifies (S^2 = id)
  bool unit_found = false;
  for (const auto& g : pv) unit_found = unit_found || g == kz2->algebra()->unit();
  CHECK(unit_found);
  // Sweedler: only g implements S^2
  auto h4 = build_sweedler(q);
  auto pv4 = pivots(*h4);
  REQUIRE(pv4.size() == 1);
  CHECK(pv4[0] == h4->algebra()->basis_vec(1));
  // uqsl2bar: K implements S^2
  auto f5 = Field::prime(5);
  auto uq = build_uqsl2bar(f5, 2, f5->from_int(2));
  auto pvu = pivots(*uq);
  auto K = uq->algebra()->basis_vec(1);  // E^0 F^0 K^1
  bool k_found = false;
  for (const auto& g : pvu) k_found = k_found || g == K;
  CHECK(k_found);
  // S^2(E) = K E K^{-1} directly
  const Algebra& a = *uq->algebra();
  auto E = a.basis_vec((1 * 2 + 0) * 4 + 0);
  auto kinv = *a.invert(K);
  CHECK(uq->apply_antipode(uq->apply_antipode(E)) == a.mul_vec(K, a.mul_vec(E, kinv)));
}

TEST_CASE("internal characters: unit, independence, span of CF_1") {
  auto q = Field::rationals();
  auto h4 = build_sweedler(q);
  auto pv = pivots(*h4);
  REQUIRE(pv.size() == 1);
  // trivial module: ch(k) = eps
  CHECK(internal_character(*h4, pv[0], trivial_module(*h4)) == h4->counit());
  auto sims = simple_modules(*h4->algebra());
  REQUIRE(sims.simples.size() == 2);
  std::vector<std::vector<Scalar>> chars;
  for (const auto& L : sims.simples) chars.push_back(internal_character(*h4, pv[0], L));
  Subspace span = rref_subspace(q, chars, 4);
  CHECK(span.dim() == 2);
  CHECK(span == cf_n(*h4, 1).space);
  // a non-pivot is rejected
  CHECK_THROWS_AS((void)internal_character(*h4, h4->algebra()->unit(), sims.simples[0]), Error);
  // group algebra with pivot 1: the ordinary character
  auto kz2 = build_group_algebra(q, {2});
  auto reg = regular_module(kz2->algebra());
  auto ch = internal_character(*kz2, kz2->algebra()->unit(), reg);
  CHECK(ch[0] == q->from_int(2));
  CHECK(ch[1] == q->zero());
}

TEST_CASE("characters are multiplicative and additive") {
  auto q = Field::rationals();
  auto h4 = build_sweedler(q);
  auto pv = pivots(*h4);
  auto sims = simple_modules(*h4->algebra());
  // multiplicative under (x) against the convolution
  for (const auto& v : sims.simples)
    for (const auto& w : sims.simples) {
      auto chv = internal_character(*h4, pv[0], v);
      auto chw = internal_character(*h4, pv[0], w);
      auto vw = tensor_module(*h4, v, w);
      CHECK(vw.check().pass);
      CHECK(internal_character(*h4, pv[0], vw) == convolve(*h4, chv, chw));
    }
  // additive on every extension built from ext1 generators
  const Field& F = *q;
  for (const auto& v : sims.simples)
    for (const auto& w : sims.simples) {
      auto ext = ext1_space(v, w);
      for (const auto& cls : ext.basis) {
        auto x = extension_module(cls);
        auto chx = internal_character(*h4, pv[0], x);
        auto chv = internal_character(*h4, pv[0], v);
        auto chw = internal_character(*h4, pv[0], w);
        std::vector<Scalar> sum(4);
        for (int t = 0; t < 4; ++t) sum[t] = F.add(chv[t], chw[t]);
        CHECK(chx == sum);
      }
    }
}

TEST_CASE("dim CF_2 - dim CF_1 equals the total self-extension dimension") {
  struct Inst {
    HopfPtr h;
  };
  auto f3 = Field::prime(3);
  auto f5 = Field::prime(5);
  auto f7 = Field::prime(7);
  std::vector<HopfPtr> insts{build_group_algebra(f3, {3}), build_sweedler(Field::rationals()),
                             build_taft(f7, 3, f7->from_int(2)),
                             build_uqsl2bar(f5, 2, f5->from_int(2))};
  for (const auto& h : insts) {
    REQUIRE(!pivots(*h).empty());
    auto sims = simple_modules(*h->algebra());
    int total = 0;
    for (const auto& L : sims.simples) total += ext1_space(L, L).dim;
    CHECK(cf_n(*h, 2).dim() - cf_n(*h, 1).dim() == total);
  }
}
