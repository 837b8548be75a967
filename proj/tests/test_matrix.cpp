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

#include "loewy/matrix.hpp"

using namespace loewy;

namespace {

struct Rng {
  std::uint64_t s = 0x243f6a8885a308d3ULL;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  Mat mat(FieldPtr f, int r, int c, long long range = 7) {
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m.at(i, j) = f->from_int(static_cast<long long>(next() % range) - range / 2);
    return m;
  }
};

}  // namespace

TEST_CASE("rref canonical subspaces") {
  auto f5 = Field::prime(5);
  Mat m(f5, 2, 2);
  m.at(0, 1) = f5->from_int(2);
  m.at(1, 1) = f5->from_int(4);
  Subspace s = rref_subspace(m);
  CHECK(s.dim() == 1);
  CHECK(s.pivots() == std::vector<int>{1});
  CHECK(s.basis().at(0, 1) == f5->one());

  auto q = Field::rationals();
  CHECK(rref_subspace(Mat::identity(q, 3)).dim() == 3);
  Mat dep(q, 2, 2);
  dep.at(0, 0) = q->one();
  dep.at(0, 1) = q->from_int(2);
  dep.at(1, 0) = q->from_int(2);
  dep.at(1, 1) = q->from_int(4);
  Subspace sd = rref_subspace(dep);
  CHECK(sd.dim() == 1);
  CHECK(sd.basis().at(0, 0) == q->one());
  CHECK(sd.basis().at(0, 1) == q->from_int(2));
}

TEST_CASE("canonicality: any generating set of the same span gives identical bases") {
  Rng rng;
  auto f7 = Field::prime(7);
  for (int t = 0; t < 20; ++t) {
    Mat m = rng.mat(f7, 4, 5);
    Subspace s1 = rref_subspace(m);
    // shuffle rows and add row combinations
    Mat m2(f7, 6, 5);
    for (int j = 0; j < 5; ++j) {
      m2.at(0, j) = m.at(3, j);
      m2.at(1, j) = m.at(1, j);
      m2.at(2, j) = f7->add(m.at(0, j), m.at(2, j));
      m2.at(3, j) = m.at(2, j);
      m2.at(4, j) = m.at(0, j);
      m2.at(5, j) = f7->add(m.at(1, j), f7->mul(f7->from_int(3), m.at(3, j)));
    }
    CHECK(rref_subspace(m2) == s1);
  }
}

TEST_CASE("kernel examples") {
  auto f3 = Field::prime(3);
  Mat m(f3, 1, 2);
  m.at(0, 0) = f3->one();
  m.at(0, 1) = f3->one();
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  // span{(1,2)}
  CHECK(k.basis().at(0, 0) == f3->one());
  CHECK(k.basis().at(0, 1) == f3->from_int(2));
  CHECK(kernel(Mat::identity(f3, 3)).dim() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng;
  for (auto f : {Field::prime(5), Field::rationals()})
    for (int t = 0; t < 15; ++t) {
      int r = 1 + static_cast<int>(rng.next() % 5), c = 1 + static_cast<int>(rng.next() % 5);
      Mat m = rng.mat(f, r, c);
      CHECK(rank(m) + kernel(m).dim() == c);
    }
}

TEST_CASE("solve finds solutions and reports inconsistency") {
  auto q = Field::rationals();
  Mat m(q, 2, 2);
  m.at(0, 0) = q->one();
  m.at(1, 0) = q->one();
  // x = (1, anything) with second column zero: [1 0; 1 0] x = (1, 2) inconsistent
  CHECK_FALSE(solve(m, {q->one(), q->from_int(2)}).has_value());
  auto sol = solve(m, {q->from_int(3), q->from_int(3)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == q->from_int(3));
}

TEST_CASE("intersection and dimension formula") {
  auto q = Field::rationals();
  Mat u(q, 2, 2);
  u.at(0, 0) = q->one();
  u.at(1, 1) = q->one();
  Mat v(q, 1, 2);
  v.at(0, 0) = q->one();
  v.at(0, 1) = q->one();
  Subspace U = rref_subspace(u), V = rref_subspace(v);
  Subspace I = intersect(U, V);
  CHECK(I.dim() == 1);
  CHECK(I == V);
  Rng rng;
  for (int t = 0; t < 15; ++t) {
    auto f = Field::prime(5);
    Subspace A = rref_subspace(rng.mat(f, 3, 6));
    Subspace B = rref_subspace(rng.mat(f, 3, 6));
    CHECK(sum(A, B).dim() + intersect(A, B).dim() == A.dim() + B.dim());
  }
}

TEST_CASE("kron conventions") {
  auto f5 = Field::prime(5);
  Mat two(f5, 1, 1);
  two.at(0, 0) = f5->from_int(2);
  CHECK(two.kron(Mat::identity(f5, 2)) == Mat::identity(f5, 2).scaled(f5->from_int(2)));
  CHECK(Mat::identity(f5, 3).kron(Mat::identity(f5, 4)) == Mat::identity(f5, 12));
  Rng rng;
  auto f7 = Field::prime(7);
  for (int t = 0; t < 10; ++t) {
    Mat a = rng.mat(f7, 2, 2), b = rng.mat(f7, 2, 2), c = rng.mat(f7, 2, 2), d = rng.mat(f7, 2, 2);
    CHECK(a.kron(b).mul(c.kron(d)) == a.mul(c).kron(b.mul(d)));
  }
}

TEST_CASE("characteristic and minimal polynomials") {
  auto q = Field::rationals();
  auto cp = char_poly(Mat::identity(q, 3));
  // (x-1)^3 = x^3 - 3x^2 + 3x - 1
  CHECK(cp == std::vector<Scalar>{q->from_int(-1), q->from_int(3), q->from_int(-3), q->one()});
  CHECK(min_poly(Mat::identity(q, 3)) == std::vector<Scalar>{q->from_int(-1), q->one()});
  Mat nil(q, 2, 2);
  nil.at(0, 1) = q->one();
  CHECK(min_poly(nil) == std::vector<Scalar>{q->zero(), q->zero(), q->one()});
  // Cayley-Hamilton on random matrices over GF(7)
  Rng rng;
  auto f7 = Field::prime(7);
  for (int t = 0; t < 10; ++t) {
    Mat m = rng.mat(f7, 3, 3);
    CHECK(poly_eval(char_poly(m), m).is_zero());
  }
}
