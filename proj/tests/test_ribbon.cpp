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

#include "loewy/ribbon.hpp"

using namespace loewy;

namespace {

RibbonData make_ribbon_data(const DoubleResult& dr, std::uint64_t seed = kDefaultSeed) {
  RibbonData rd;
  rd.hopf = dr.hopf;
  rd.R = dr.r_matrix;
  auto ribbons = ribbon_search(*dr.hopf, dr.r_matrix, seed);
  REQUIRE(!ribbons.empty());
  rd.v = ribbons.front();
  auto rv = check_rv(*dr.hopf, dr.r_matrix, rd.v);
  REQUIRE(rv.pass);
  rd.u = rv.u;
  auto qf = q_and_factorizability(*dr.hopf, dr.r_matrix);
  REQUIRE(qf.factorizable);
  rd.Q = qf.Q;
  rd.lambda = normalized_integral(*dr.hopf, qf.Q);
  auto [s, t] = st_maps(*dr.hopf, rd.Q, rd.lambda, rd.v);
  rd.S_mat = s;
  rd.T_mat = t;
  return rd;
}

}  // namespace

TEST_CASE("trivial Hopf algebra: R = 1 (x) 1, v = 1 passes everything") {
  auto q = Field::rationals();
  auto k = build_group_algebra(q, {1});
  Mat r(q, 1, 1);
  r.at(0, 0) = q->one();
  auto rv = check_rv(*k, r, k->algebra()->unit());
  CHECK(rv.pass);
  auto qf = q_and_factorizability(*k, r);
  CHECK(qf.factorizable);
  auto lam = normalized_integral(*k, qf.Q);
  CHECK(lam[0] == q->one());
  RibbonData rd{k, r, rv.u, k->algebra()->unit(), qf.Q, lam, Mat(), Mat(), q->zero()};
  auto [s, t] = st_maps(*k, qf.Q, lam, rd.v);
  rd.S_mat = s;
  rd.T_mat = t;
  CHECK(t == Mat::identity(q, 1));
  auto mc = modular_check(rd);
  CHECK(mc.pass);
  CHECK(mc.c == q->one());
  auto sl = sl2z_action(rd, 0);
  CHECK(sl.dim == 1);
  CHECK(sl.pass);
}

TEST_CASE("perturbed R fails a hexagon") {
  auto q = Field::rationals();
  auto h2 = build_group_algebra(q, {2});
  auto dr = drinfeld_double(*h2);
  Mat bad = dr.r_matrix;
  bad.at(0, 0) = q->from_int(2);
  auto ribbons = ribbon_search(*dr.hopf, dr.r_matrix);
  auto rv = check_rv(*dr.hopf, bad, ribbons.front());
  CHECK_FALSE(rv.pass);
}

TEST_CASE("cocommutative R = 1 (x) 1 is not factorizable beyond dimension 1") {
  auto q = Field::rationals();
  auto h = build_group_algebra(q, {2});
  Mat r(q, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = q->mul(h->algebra()->unit()[i], h->algebra()->unit()[j]);
  auto qf = q_and_factorizability(*h, r);
  CHECK_FALSE(qf.factorizable);
  // Q = 1 (x) 1
  CHECK(qf.Q == r);
}

TEST_CASE("D(Q[Z/2]) ribbon search finds exactly the four ribbons, all valid") {
  auto q = Field::rationals();
  auto dr = drinfeld_double(*build_group_algebra(q, {2}));
  auto ribbons = ribbon_search(*dr.hopf, dr.r_matrix);
  CHECK(ribbons.size() == 4);
  for (const auto& v : ribbons) CHECK(check_rv(*dr.hopf, dr.r_matrix, v).pass);
}

TEST_CASE("D(Q[Z/2]): factorizability, integral, modular relations") {
  auto q = Field::rationals();
  auto dr = drinfeld_double(*build_group_algebra(q, {2}));
  auto rd = make_ribbon_data(dr);
  // lambda normalization
  const Field& F = *q;
  Scalar t = F.zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      t = F.add(t, F.mul(rd.Q.at(a, b), F.mul(rd.lambda[a], rd.lambda[b])));
  CHECK(F.is_one(t));
  auto mc = modular_check(rd);
  CHECK(mc.pass);
  CHECK(mc.commutes_with_action);
  CHECK((mc.c == q->one() || mc.c == q->from_int(-1)));
  // T is an involution here (eigenvalues among +-1)
  CHECK(rd.T_mat.mul(rd.T_mat) == Mat::identity(q, 4));
  for (int deg = 0; deg <= 1; ++deg) {
    auto sl = sl2z_action(rd, deg);
    CHECK(sl.pass);
    if (deg == 0) CHECK(sl.dim == 4);  // semisimple commutative: all invariants
    if (deg == 1) CHECK(sl.dim == 0);
  }
}

TEST_CASE("mis-normalized lambda breaks S^4 = theta inverse") {
  auto q = Field::rationals();
  auto dr = drinfeld_double(*build_group_algebra(q, {2}));
  auto rd = make_ribbon_data(dr);
  RibbonData bad = rd;
  for (auto& x : bad.lambda) x = q->mul(x, q->from_int(2));
  auto [s, t] = st_maps(*dr.hopf, bad.Q, bad.lambda, bad.v);
  bad.S_mat = s;
  bad.T_mat = t;
  bool failed = false;
  try {
    auto mc = modular_check(bad);
    failed = !mc.pass;  // S^4 picks up a factor 16
  } catch (const Error&) {
    failed = true;
  }
  CHECK(failed);
}

TEST_CASE("sign flip of lambda flips S and c, fixing the projective action") {
  auto q = Field::rationals();
  auto dr = drinfeld_double(*build_group_algebra(q, {2}));
  auto rd = make_ribbon_data(dr);
  auto mc = modular_check(rd);
  RibbonData flipped = rd;
  for (auto& x : flipped.lambda) x = q->neg(x);
  auto [s, t] = st_maps(*dr.hopf, flipped.Q, flipped.lambda, flipped.v);
  flipped.S_mat = s;
  flipped.T_mat = t;
  CHECK(s == rd.S_mat.scaled(q->from_int(-1)));
  auto mc2 = modular_check(flipped);
  CHECK(mc2.pass);
  CHECK(mc2.c == q->neg(mc.c));
  for (int deg = 0; deg <= 1; ++deg) {
    auto a = sl2z_action(rd, deg);
    auto b = sl2z_action(flipped, deg);
    CHECK(a.pass);
    CHECK(b.pass);
    if (a.dim > 0) CHECK(b.s_rep == a.s_rep.scaled(q->from_int(-1)));
    CHECK(b.t_rep == a.t_rep);
  }
}

TEST_CASE("S and T commute with the adjoint action and restrict to invariants") {
  auto dr = drinfeld_double(*build_group_algebra(Field::rationals(), {2}));
  auto rd = make_ribbon_data(dr);
  AModule adj = adjoint_module(*dr.hopf);
  for (int i = 0; i < 4; ++i) {
    CHECK(rd.S_mat.mul(adj.action[i]) == adj.action[i].mul(rd.S_mat));
    CHECK(rd.T_mat.mul(adj.action[i]) == adj.action[i].mul(rd.T_mat));
  }
}

TEST_CASE("D(Q(zeta_3)[Z/3]) is factorizable and modular") {
  auto dr = drinfeld_double(*build_group_algebra(Field::cyclotomic(3), {3}));
  auto qf = q_and_factorizability(*dr.hopf, dr.r_matrix);
  CHECK(qf.factorizable);
  CHECK(rank(qf.Q) == 9);
  auto rd = make_ribbon_data(dr);
  auto mc = modular_check(rd);
  CHECK(mc.pass);
  auto sl0 = sl2z_action(rd, 0);
  CHECK(sl0.pass);
  CHECK(sl0.dim == 9);
}

TEST_CASE("group algebras with the trivial R are not factorizable") {
  auto f3 = Field::prime(3);
  auto h = build_group_algebra(f3, {3});
  Mat r(f3, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.at(i, j) = f3->mul(h->algebra()->unit()[i], h->algebra()->unit()[j]);
  auto qf = q_and_factorizability(*h, r);
  REQUIRE_FALSE(qf.factorizable);
  // a degenerate Q makes the normalization impossible
  Mat zero(f3, 3, 3);
  CHECK_THROWS_AS((void)normalized_integral(*h, zero), Error);
}

TEST_CASE("central square roots: Hensel branch and char-2 branch") {
  auto q = Field::rationals();
  std::vector<MultEntry> mult{{0, 0, 0, q->one()}, {0, 1, 1, q->one()}, {1, 0, 1, q->one()}};
  auto dn = Algebra::make(q, 2, mult, {q->one(), q->zero()});
  auto roots = central_square_roots(*dn, {q->one(), q->one()});
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(dn->mul_vec(r, r) == std::vector<Scalar>{q->one(), q->one()});
  // sqrt(1 + x) = +-(1 + x/2)
  bool found = false;
  for (const auto& r : roots)
    found = found || (r[0] == q->one() && r[1] == q->parse("1/2"));
  CHECK(found);
  // char 2: GF(2)[Z/2], square roots of 1
  auto f2 = Field::prime(2);
  std::vector<MultEntry> m2{{0, 0, 0, f2->one()}, {0, 1, 1, f2->one()},
                            {1, 0, 1, f2->one()}, {1, 1, 0, f2->one()}};
  auto kz2 = Algebra::make(f2, 2, m2, {f2->one(), f2->zero()});
  auto roots2 = central_square_roots(*kz2, kz2->unit());
  REQUIRE(!roots2.empty());
  for (const auto& r : roots2) CHECK(kz2->mul_vec(r, r) == kz2->unit());
}
