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

#include "loewy.h"

#include <string>

#include "loewy/document.hpp"
#include "loewy/report.hpp"

struct loewy_doc {
  loewy::LoadedDocument doc;
};

struct loewy_report {
  loewy::Report rep;
  std::string json;
  std::string table;
};

namespace {

thread_local std::string g_last_error;

loewy_status status_of(const loewy::Error& e) {
  using loewy::Errc;
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::SyntaxError:
      return LOEWY_E_PARSE;
    case Errc::ValidationError:
    case Errc::InvalidCocycle:
    case Errc::NotAPivot:
    case Errc::MalformedParams:
    case Errc::DimensionMismatch:
    case Errc::IndexOutOfRange:
      return LOEWY_E_VALIDATE;
    case Errc::NotPrime:
    case Errc::ReduciblePolynomial:
    case Errc::DivisionByZeroDenominator:
    case Errc::ZeroInverse:
    case Errc::FieldMismatch:
    case Errc::FieldError:
    case Errc::FieldExtensionRequired:
      return LOEWY_E_FIELD;
    case Errc::SizeBudgetExceeded:
      return LOEWY_E_BUDGET;
    case Errc::RadicalNotComputable:
    case Errc::SplitFieldRequired:
    case Errc::SplitFailure:
    case Errc::NotOneDimensional:
    case Errc::NotInvertible:
    case Errc::NoConsistentScalar:
    case Errc::NotWellDefinedOnCohomology:
    case Errc::StarConventionViolation:
    case Errc::ShapeMismatch:
      return LOEWY_E_UNSUPPORTED;
    case Errc::Internal:
      return LOEWY_E_INTERNAL;
  }
  return LOEWY_E_INTERNAL;
}

template <typename Fn>
loewy_status guarded(Fn&& fn) {
  try {
    fn();
    return LOEWY_OK;
  } catch (const loewy::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LOEWY_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

void loewy_options_init(loewy_options* opt) {
  if (!opt) return;
  opt->filtration_n = 0;
  opt->max_degree = 2;
  opt->seed = 1;
  opt->budget = 1ull << 20;
}

loewy_status loewy_doc_load(const char* path, loewy_doc** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return LOEWY_E_PARSE;
  }
  *out = nullptr;
  return guarded([&] {
    auto d = new loewy_doc{loewy::load_document(path)};
    *out = d;
  });
}

loewy_status loewy_doc_parse_json(const char* json_text, loewy_doc** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return LOEWY_E_PARSE;
  }
  *out = nullptr;
  return guarded([&] {
    auto d = new loewy_doc{loewy::parse_document(json_text)};
    *out = d;
  });
}

void loewy_doc_free(loewy_doc* doc) { delete doc; }

loewy_status loewy_run(const loewy_doc* doc, const char* command, const loewy_options* opt,
                       loewy_report** out) {
  if (!doc || !command || !out) {
    g_last_error = "null argument";
    return LOEWY_E_VALIDATE;
  }
  *out = nullptr;
  loewy::RunOptions ro;
  if (opt) {
    ro.filtration_n = opt->filtration_n;
    ro.max_degree = opt->max_degree;
    ro.seed = opt->seed;
    ro.budget = opt->budget;
  }
  return guarded([&] {
    auto rep = loewy::run_command(doc->doc, command, ro);
    auto r = new loewy_report{rep, rep.to_json(), rep.to_table()};
    *out = r;
  });
}

const char* loewy_report_json(const loewy_report* rep) { return rep ? rep->json.c_str() : ""; }

const char* loewy_report_table(const loewy_report* rep) { return rep ? rep->table.c_str() : ""; }

int loewy_report_all_pass(const loewy_report* rep) {
  return rep && rep->rep.all_pass() ? 1 : 0;
}

void loewy_report_free(loewy_report* rep) { delete rep; }

const char* loewy_last_error(void) { return g_last_error.c_str(); }

const char* loewy_version(void) { return loewy::kVersion; }

}  // extern "C"
