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

#include "loewy/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "loewy/sha256.hpp"

namespace loewy {

using nlohmann::json;

namespace {

FieldPtr field_from_json(const json& j) {
  FieldSpec spec;
  std::string kind = j.value("kind", "");
  if (kind == "prime")
    spec.kind = FieldKind::prime;
  else if (kind == "prime_power")
    spec.kind = FieldKind::prime_power;
  else if (kind == "rationals")
    spec.kind = FieldKind::rationals;
  else if (kind == "cyclotomic")
    spec.kind = FieldKind::cyclotomic;
  else
    throw Error(Errc::FieldError, "unknown field kind '" + kind + "'");
  spec.p = j.value("p", 0ll);
  spec.m = j.value("m", 1);
  spec.n = j.value("n", 0);
  if (j.contains("min_poly"))
    for (const auto& c : j.at("min_poly")) spec.min_poly.push_back(c.get<std::string>());
  return Field::make(spec);
}

std::vector<Scalar> parse_vector(const Field& f, const json& arr, int dim, const char* what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    throw Error(Errc::ParseError, std::string(what) + " must be an array of length dim");
  std::vector<Scalar> out;
  out.reserve(dim);
  for (const auto& c : arr) out.push_back(f.parse(c.get<std::string>()));
  return out;
}

}  // namespace

LoadedDocument parse_document(const std::string& json_text, std::uint64_t seed) {
  LoadedDocument doc;
  doc.digest = sha256_hex(json_text);
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("JSON: ") + e.what());
  }
  try {
    doc.name = j.value("name", "");
    doc.field = field_from_json(j.at("field"));
    const Field& F = *doc.field;
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels;
    if (j.contains("basis"))
      for (const auto& b : j.at("basis")) labels.push_back(b.get<std::string>());
    auto unit = parse_vector(F, j.at("unit"), dim, "unit");
    std::vector<MultEntry> mult;
    for (const auto& q : j.at("mult")) {
      if (!q.is_array() || q.size() != 4)
        throw Error(Errc::ParseError, "mult entries must be [i, j, k, coeff]");
      int i = q[0].get<int>(), jj = q[1].get<int>(), k = q[2].get<int>();
      if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim) {
        std::ostringstream os;
        os << "mult index out of range in [" << i << "," << jj << "," << k << "]";
        throw Error(Errc::ParseError, os.str());
      }
      mult.push_back({i, jj, k, F.parse(q[3].get<std::string>())});
    }
    doc.algebra = Algebra::make(doc.field, dim, mult, unit, labels);
    auto rep = doc.algebra->check();
    if (!rep.pass) throw Error(Errc::ValidationError, rep.first_violation);
    if (j.contains("hopf")) {
      const json& hb = j.at("hopf");
      std::vector<ComulEntry> comul;
      for (const auto& q : hb.at("comul")) {
        if (!q.is_array() || q.size() != 4)
          throw Error(Errc::ParseError, "comul entries must be [i, j, k, coeff]");
        int i = q[0].get<int>(), jj = q[1].get<int>(), k = q[2].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
          throw Error(Errc::ParseError, "comul index out of range");
        comul.push_back({i, jj, k, F.parse(q[3].get<std::string>())});
      }
      auto counit = parse_vector(F, hb.at("counit"), dim, "counit");
      Mat S(doc.field, dim, dim);
      for (const auto& q : hb.at("antipode")) {
        if (!q.is_array() || q.size() != 3)
          throw Error(Errc::ParseError, "antipode entries must be [i, j, coeff]");
        int i = q[0].get<int>(), jj = q[1].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim)
          throw Error(Errc::ParseError, "antipode index out of range");
        // S(e_i) contains coeff * e_j
        S.at(jj, i) = F.add(S.at(jj, i), F.parse(q[2].get<std::string>()));
      }
      doc.hopf = HopfAlgebra::make(doc.algebra, comul, counit, S);
      auto hrep = doc.hopf->check();
      if (!hrep.pass) throw Error(Errc::ValidationError, hrep.first_violation);
    }
    if (j.contains("quasitriangular")) {
      if (!doc.hopf)
        throw Error(Errc::ValidationError, "quasitriangular block requires a hopf block");
      const json& qb = j.at("quasitriangular");
      Mat R(doc.field, dim, dim);
      for (const auto& q : qb.at("R")) {
        if (!q.is_array() || q.size() != 3)
          throw Error(Errc::ParseError, "R entries must be [i, j, coeff]");
        int i = q[0].get<int>(), jj = q[1].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim)
          throw Error(Errc::ParseError, "R index out of range");
        R.at(i, jj) = F.add(R.at(i, jj), F.parse(q[2].get<std::string>()));
      }
      doc.R = R;
      if (qb.contains("ribbon")) {
        if (qb.at("ribbon").is_string() && qb.at("ribbon").get<std::string>() == "search") {
          doc.ribbon_searched = true;
          doc.ribbon_candidates = ribbon_search(*doc.hopf, R, seed);
          if (!doc.ribbon_candidates.empty()) doc.ribbon = doc.ribbon_candidates.front();
        } else {
          doc.ribbon = parse_vector(F, qb.at("ribbon"), dim, "ribbon");
        }
      }
      if (doc.ribbon) {
        auto rv = check_rv(*doc.hopf, R, *doc.ribbon);
        if (!rv.pass) throw Error(Errc::ValidationError, rv.first_violation);
      }
      if (qb.contains("pivot")) {
        if (qb.at("pivot").is_string() && qb.at("pivot").get<std::string>() == "search") {
          doc.pivot_searched = true;
          doc.pivot_candidates = pivots(*doc.hopf, seed);
          if (!doc.pivot_candidates.empty()) doc.pivot = doc.pivot_candidates.front();
        } else {
          doc.pivot = parse_vector(F, qb.at("pivot"), dim, "pivot");
        }
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("JSON: ") + e.what());
  }
  return doc;
}

LoadedDocument load_document(const std::string& path, std::uint64_t seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  LoadedDocument doc = parse_document(os.str(), seed);
  doc.path = path;
  return doc;
}

std::string serialize_document(const std::string& name, const Algebra& a, const HopfAlgebra* h,
                               const QuasitriangularBlock* qt) {
  const Field& F = *a.field();
  nlohmann::ordered_json j;
  j["name"] = name;
  nlohmann::ordered_json fj;
  const FieldSpec& spec = a.field()->spec();
  switch (spec.kind) {
    case FieldKind::prime:
      fj["kind"] = "prime";
      fj["p"] = spec.p;
      break;
    case FieldKind::prime_power: {
      fj["kind"] = "prime_power";
      fj["p"] = spec.p;
      fj["m"] = spec.m;
      std::vector<std::string> mp = spec.min_poly;
      fj["min_poly"] = mp;
      break;
    }
    case FieldKind::rationals:
      fj["kind"] = "rationals";
      break;
    case FieldKind::cyclotomic:
      fj["kind"] = "cyclotomic";
      fj["n"] = spec.n;
      break;
  }
  j["field"] = fj;
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  std::vector<std::string> unit;
  for (const auto& c : a.unit()) unit.push_back(F.print(c));
  j["unit"] = unit;
  nlohmann::ordered_json mult = nlohmann::ordered_json::array();
  for (const auto& e : a.sparse_mult())
    mult.push_back({e.i, e.j, e.k, F.print(e.coeff)});
  j["mult"] = mult;
  if (h) {
    nlohmann::ordered_json hb;
    nlohmann::ordered_json comul = nlohmann::ordered_json::array();
    for (const auto& e : h->sparse_comul()) comul.push_back({e.i, e.j, e.k, F.print(e.coeff)});
    hb["comul"] = comul;
    std::vector<std::string> counit;
    for (const auto& c : h->counit()) counit.push_back(F.print(c));
    hb["counit"] = counit;
    nlohmann::ordered_json anti = nlohmann::ordered_json::array();
    for (int i = 0; i < a.dim(); ++i)
      for (int jj = 0; jj < a.dim(); ++jj)
        if (!F.is_zero(h->antipode().at(jj, i)))
          anti.push_back({i, jj, F.print(h->antipode().at(jj, i))});
    hb["antipode"] = anti;
    j["hopf"] = hb;
  }
  if (qt) {
    nlohmann::ordered_json qb;
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (int i = 0; i < a.dim(); ++i)
      for (int jj = 0; jj < a.dim(); ++jj)
        if (!F.is_zero(qt->R.at(i, jj))) r.push_back({i, jj, F.print(qt->R.at(i, jj))});
    qb["R"] = r;
    if (qt->ribbon) {
      std::vector<std::string> v;
      for (const auto& c : *qt->ribbon) v.push_back(F.print(c));
      qb["ribbon"] = v;
    } else {
      qb["ribbon"] = "search";
    }
    if (qt->pivot) {
      std::vector<std::string> v;
      for (const auto& c : *qt->pivot) v.push_back(F.print(c));
      qb["pivot"] = v;
    } else {
      qb["pivot"] = "search";
    }
    j["quasitriangular"] = qb;
  }
  return j.dump(2) + "\n";
}

}  // namespace loewy
