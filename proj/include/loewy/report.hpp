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

#ifndef LOEWY_REPORT_HPP
#define LOEWY_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace loewy {

inline constexpr const char* kVersion = "0.1.0";

/// Machine-readable result of one CLI command. Serialization is
/// byte-deterministic: sorted keys, exact scalar strings, no floats.
struct Report {
  std::string command;
  std::string input_path;
  std::string digest;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::map<std::string, long long> dims;
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::vector<std::vector<std::string>>> bases;
  std::map<std::string, bool> pass_fail;
  std::map<std::string, std::string> notes;

  bool all_pass() const;
  std::string to_json() const;
  std::string to_table() const;
};

struct RunOptions {
  int filtration_n = 0;  // 0 = up to the Loewy length
  int max_degree = 2;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1ull << 20;
};

struct LoadedDocument;

/// Dispatch one CLI command on a loaded document.
Report run_command(const LoadedDocument& doc, const std::string& command,
                   const RunOptions& options);

}  // namespace loewy

#endif
