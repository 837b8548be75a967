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

#include "loewy/report.hpp"

#include <sstream>

#include <json.hpp>

namespace loewy {

bool Report::all_pass() const {
  for (const auto& [k, v] : pass_fail)
    if (!v) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::json j;  // nlohmann::json sorts object keys: deterministic bytes
  j["command"] = command;
  j["input"] = {{"path", input_path}, {"sha256", digest}};
  j["seed"] = seed;
  j["version"] = version;
  j["dims"] = dims;
  j["scalars"] = scalars;
  j["bases"] = bases;
  j["pass_fail"] = pass_fail;
  j["notes"] = notes;
  j["all_pass"] = all_pass();
  return j.dump(2) + "\n";
}

std::string Report::to_table() const {
  std::ostringstream os;
  os << "command   " << command << "\n";
  if (!input_path.empty()) os << "input     " << input_path << "\n";
  os << "sha256    " << digest << "\n";
  os << "seed      " << seed << "\n";
  if (!dims.empty()) {
    os << "-- dims --\n";
    for (const auto& [k, v] : dims) os << "  " << k << " = " << v << "\n";
  }
  if (!scalars.empty()) {
    os << "-- scalars --\n";
    for (const auto& [k, v] : scalars) os << "  " << k << " = " << v << "\n";
  }
  if (!bases.empty()) {
    os << "-- bases --\n";
    for (const auto& [k, rows] : bases) {
      os << "  " << k << ":\n";
      for (const auto& r : rows) {
        os << "    [";
        for (size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i];
        os << "]\n";
      }
    }
  }
  if (!notes.empty()) {
    os << "-- notes --\n";
    for (const auto& [k, v] : notes) os << "  " << k << ": " << v << "\n";
  }
  if (!pass_fail.empty()) {
    os << "-- checks --\n";
    for (const auto& [k, v] : pass_fail) os << "  [" << (v ? "pass" : "FAIL") << "] " << k << "\n";
  }
  os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace loewy
