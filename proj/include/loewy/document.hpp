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

#ifndef LOEWY_DOCUMENT_HPP
#define LOEWY_DOCUMENT_HPP

#include "loewy/ribbon.hpp"

namespace loewy {

/// A parsed and validated algebra document. Optional layers: hopf block,
/// quasitriangular block with explicit or searched ribbon/pivot.
struct LoadedDocument {
  std::string name;
  std::string path;    // empty when parsed from a string
  std::string digest;  // sha256 of the input bytes
  FieldPtr field;
  AlgebraPtr algebra;
  HopfPtr hopf;  // null when the document has no hopf block
  std::optional<Mat> R;
  std::optional<std::vector<Scalar>> ribbon;
  bool ribbon_searched = false;
  std::vector<std::vector<Scalar>> ribbon_candidates;
  std::optional<std::vector<Scalar>> pivot;
  bool pivot_searched = false;
  std::vector<std::vector<Scalar>> pivot_candidates;
};

/// Parse, construct and validate (check_algebra, check_hopf, check_rv as
/// applicable); "search" directives run the ribbon and pivot searches.
LoadedDocument parse_document(const std::string& json_text, std::uint64_t seed = kDefaultSeed);
LoadedDocument load_document(const std::string& path, std::uint64_t seed = kDefaultSeed);

struct QuasitriangularBlock {
  Mat R;
  std::optional<std::vector<Scalar>> ribbon;  // nullopt serializes as "search"
  std::optional<std::vector<Scalar>> pivot;
};

/// Serialize an algebra (plus optional Hopf/quasitriangular layers) in the
/// document format; coefficients use the exact scalar grammar.
std::string serialize_document(const std::string& name, const Algebra& a, const HopfAlgebra* h,
                               const QuasitriangularBlock* qt);

}  // namespace loewy

#endif
