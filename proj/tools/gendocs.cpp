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

// Regenerates the canonical documents shipped under documents/.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "loewy/document.hpp"

using namespace loewy;

namespace {

void write_doc(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
  std::ofstream out(p, std::ios::binary);
  out << text;
  std::cout << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "documents";
  std::filesystem::create_directories(dir);

  // kz3_char3: GF(3)[Z/3]
  {
    auto h = build_group_algebra(Field::prime(3), {3});
    write_doc(dir, "kz3_char3", serialize_document("kz3_char3", *h->algebra(), h.get(), nullptr));
  }
  // q_kz2: Q[Z/2]
  {
    auto h = build_group_algebra(Field::rationals(), {2});
    write_doc(dir, "q_kz2", serialize_document("q_kz2", *h->algebra(), h.get(), nullptr));
  }
  // dual_numbers: Q[x]/(x^2), a plain algebra
  {
    auto Q = Field::rationals();
    std::vector<MultEntry> mult{{0, 0, 0, Q->one()}, {0, 1, 1, Q->one()}, {1, 0, 1, Q->one()}};
    auto a = Algebra::make(Q, 2, mult, {Q->one(), Q->zero()}, {"1", "x"});
    write_doc(dir, "dual_numbers", serialize_document("dual_numbers", *a, nullptr, nullptr));
  }
  // sweedler: H_4 over Q
  {
    auto h = build_sweedler(Field::rationals());
    write_doc(dir, "sweedler", serialize_document("sweedler", *h->algebra(), h.get(), nullptr));
  }
  // taft9_gf7: Taft N = 3 over GF(7), q = 2
  {
    auto F = Field::prime(7);
    auto h = build_taft(F, 3, F->from_int(2));
    write_doc(dir, "taft9_gf7", serialize_document("taft9_gf7", *h->algebra(), h.get(), nullptr));
  }
  // uqsl2_p2_gf5: restricted quantum sl2, p = 2 over GF(5), q = 2
  {
    auto F = Field::prime(5);
    auto h = build_uqsl2bar(F, 2, F->from_int(2));
    write_doc(dir, "uqsl2_p2_gf5",
              serialize_document("uqsl2_p2_gf5", *h->algebra(), h.get(), nullptr));
  }
  // d_kz2: Drinfeld double of Q[Z/2] with its canonical R; ribbon and pivot
  // are left to the search
  {
    auto h = build_group_algebra(Field::rationals(), {2});
    auto dd = drinfeld_double(*h);
    QuasitriangularBlock qt{dd.r_matrix, std::nullopt, std::nullopt};
    write_doc(dir, "d_kz2", serialize_document("d_kz2", *dd.hopf->algebra(), dd.hopf.get(), &qt));
  }
  // d_kz3_cyclo: double of Q(zeta_3)[Z/3]
  {
    auto h = build_group_algebra(Field::cyclotomic(3), {3});
    auto dd = drinfeld_double(*h);
    QuasitriangularBlock qt{dd.r_matrix, std::nullopt, std::nullopt};
    write_doc(dir, "d_kz3_cyclo",
              serialize_document("d_kz3_cyclo", *dd.hopf->algebra(), dd.hopf.get(), &qt));
  }
  return 0;
}
