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

#include "loewy/scalar.hpp"

using namespace loewy;

namespace {

// cheap deterministic generator for property loops
struct Rng {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  Scalar scalar(const Field& f) {
    if (f.is_finite()) {
      long long p = f.characteristic();
      Scalar acc = f.from_int(static_cast<long long>(next() % p));
      for (int i = 1; i < f.degree(); ++i) {
        Scalar c = f.from_int(static_cast<long long>(next() % p));
        acc = f.add(acc, f.mul(c, f.pow(f.generator(), i)));
      }
      return acc;
    }
    auto small = [&] {
      long long num = static_cast<long long>(next() % 19) - 9;
      long long den = 1 + static_cast<long long>(next() % 7);
      return f.div(f.from_int(num), f.from_int(den));
    };
    Scalar acc = small();
    for (int i = 1; i < f.degree(); ++i) acc = f.add(acc, f.mul(small(), f.pow(f.generator(), i)));
    return acc;
  }
};

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
  auto f5 = Field::prime(5);
  CHECK(f5->mul(f5->from_int(2), f5->from_int(3)) == f5->one());
  CHECK(f5->parse("7") == f5->from_int(2));
  CHECK(f5->inv(f5->from_int(2)) == f5->from_int(3));
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS((void)f5->inv(f5->zero()), Error);
}

TEST_CASE("cyclotomic field z^2 = -1 at n = 4") {
  auto c4 = Field::cyclotomic(4);
  CHECK(c4->parse("z^2") == c4->from_int(-1));
  CHECK(c4->inv(c4->generator()) == c4->neg(c4->generator()));
  CHECK(c4->mul(c4->generator(), c4->neg(c4->generator())) == c4->one());
}

TEST_CASE("GF(9) via x^2 + 1") {
  auto f9 = Field::prime_power(3, 2, {1, 0, 1});
  auto z = f9->generator();
  CHECK(f9->mul(z, z) == f9->from_int(2));
  CHECK(f9->order() == 9);
  // reducible polynomial rejected: x^2 - 1 = (x-1)(x+1)
  CHECK_THROWS_AS(Field::prime_power(3, 2, {2, 0, 1}), Error);
}

TEST_CASE("rational canonical form") {
  auto q = Field::rationals();
  CHECK(q->parse("2/4") == q->div(q->one(), q->from_int(2)));
  CHECK(q->print(q->parse("2/4")) == "1/2");
  CHECK(q->inv(q->parse("2/3")) == q->parse("3/2"));
  CHECK_THROWS_AS((void)q->parse("1/0"), Error);
  CHECK_THROWS_AS((void)q->parse("x+1"), Error);
}

TEST_CASE("field axioms on deterministic random triples") {
  Rng rng;
  std::vector<FieldPtr> fields = {Field::prime(5), Field::prime(3), Field::prime_power(3, 2),
                                  Field::rationals(), Field::cyclotomic(3), Field::cyclotomic(4),
                                  Field::prime_power(2, 3)};
  for (const auto& f : fields) {
    for (int t = 0; t < 40; ++t) {
      Scalar a = rng.scalar(*f), b = rng.scalar(*f), c = rng.scalar(*f);
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      if (!f->is_zero(a)) CHECK(f->mul(a, f->inv(a)) == f->one());
    }
  }
}

TEST_CASE("Frobenius fixes GF(p^m)") {
  Rng rng;
  for (auto f : {Field::prime_power(3, 2), Field::prime_power(2, 3), Field::prime_power(5, 2)}) {
    for (int t = 0; t < 25; ++t) {
      Scalar a = rng.scalar(*f);
      CHECK(f->pow(a, f->order()) == a);
    }
  }
}

TEST_CASE("parse/print round trip") {
  Rng rng;
  std::vector<FieldPtr> fields = {Field::prime(7), Field::prime_power(3, 2), Field::rationals(),
                                  Field::cyclotomic(3), Field::cyclotomic(4)};
  for (const auto& f : fields)
    for (int t = 0; t < 50; ++t) {
      Scalar a = rng.scalar(*f);
      CHECK(f->parse(f->print(a)) == a);
    }
}

TEST_CASE("exponent overflow reduces instead of failing") {
  auto c4 = Field::cyclotomic(4);
  CHECK(c4->parse("z^5") == c4->generator());
  CHECK(c4->parse("z^4") == c4->one());
  auto f9 = Field::prime_power(3, 2, {1, 0, 1});
  CHECK(f9->parse("z^2") == f9->from_int(-1));
}

TEST_CASE("square roots") {
  auto q = Field::rationals();
  CHECK(q->sqrt(q->parse("9/4")).has_value());
  CHECK_FALSE(q->sqrt(q->from_int(2)).has_value());
  CHECK_FALSE(q->sqrt(q->from_int(-1)).has_value());
  auto c3 = Field::cyclotomic(3);
  auto r = c3->sqrt(c3->from_int(-3));
  REQUIRE(r.has_value());
  CHECK(c3->mul(*r, *r) == c3->from_int(-3));
  auto c4 = Field::cyclotomic(4);
  auto i = c4->sqrt(c4->from_int(-1));
  REQUIRE(i.has_value());
  CHECK(c4->mul(*i, *i) == c4->from_int(-1));
  auto f7 = Field::prime(7);
  auto s = f7->sqrt(f7->from_int(2));
  REQUIRE(s.has_value());  // 3^2 = 2 mod 7
  CHECK(f7->mul(*s, *s) == f7->from_int(2));
  CHECK_FALSE(f7->sqrt(f7->from_int(3)).has_value());  // 3 is not a QR mod 7
}

TEST_CASE("multiplicative orders used by the builders") {
  auto f5 = Field::prime(5);
  CHECK(f5->mult_order(f5->from_int(2), 10) == 4);
  auto f7 = Field::prime(7);
  CHECK(f7->mult_order(f7->from_int(2), 10) == 3);
  CHECK(f7->mult_order(f7->from_int(3), 10) == 6);
}
