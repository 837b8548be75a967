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

// Exercises the shared-library C surface; the documents directory is passed
// on the command line by ctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <string>

#include "loewy.h"

namespace {
std::string g_docs = "documents";
}

TEST_CASE("version and defaults") {
  CHECK(std::strlen(loewy_version()) > 0);
  loewy_options opt;
  loewy_options_init(&opt);
  CHECK(opt.seed == 1);
  CHECK(opt.max_degree == 2);
  CHECK(opt.budget == (1ull << 20));
}

TEST_CASE("parse errors carry a message and status") {
  loewy_doc* doc = nullptr;
  CHECK(loewy_doc_load("/nonexistent/file.json", &doc) == LOEWY_E_PARSE);
  CHECK(doc == nullptr);
  CHECK(std::strlen(loewy_last_error()) > 0);
  CHECK(loewy_doc_parse_json("{not json", &doc) == LOEWY_E_PARSE);
}

TEST_CASE("load a bundled document and run commands") {
  loewy_doc* doc = nullptr;
  std::string path = g_docs + "/sweedler.json";
  REQUIRE(loewy_doc_load(path.c_str(), &doc) == LOEWY_OK);
  for (const char* cmd : {"inspect", "filtration", "okuyama", "characters"}) {
    loewy_report* rep = nullptr;
    REQUIRE(loewy_run(doc, cmd, nullptr, &rep) == LOEWY_OK);
    CHECK(loewy_report_all_pass(rep) == 1);
    CHECK(std::strlen(loewy_report_json(rep)) > 0);
    CHECK(std::strlen(loewy_report_table(rep)) > 0);
    loewy_report_free(rep);
  }
  loewy_report* bad = nullptr;
  CHECK(loewy_run(doc, "no-such-command", nullptr, &bad) == LOEWY_E_VALIDATE);
  loewy_doc_free(doc);
}

TEST_CASE("budget errors map to the budget status") {
  loewy_doc* doc = nullptr;
  std::string path = g_docs + "/uqsl2_p2_gf5.json";
  REQUIRE(loewy_doc_load(path.c_str(), &doc) == LOEWY_OK);
  loewy_options opt;
  loewy_options_init(&opt);
  opt.max_degree = 2;
  opt.budget = 1024;
  loewy_report* rep = nullptr;
  CHECK(loewy_run(doc, "hochschild", &opt, &rep) == LOEWY_E_BUDGET);
  loewy_doc_free(doc);
}

TEST_CASE("reports are byte-identical across two runs through the C API") {
  loewy_doc* doc = nullptr;
  std::string path = g_docs + "/d_kz2.json";
  REQUIRE(loewy_doc_load(path.c_str(), &doc) == LOEWY_OK);
  loewy_options opt;
  loewy_options_init(&opt);
  opt.max_degree = 1;
  loewy_report *r1 = nullptr, *r2 = nullptr;
  REQUIRE(loewy_run(doc, "modular", &opt, &r1) == LOEWY_OK);
  REQUIRE(loewy_run(doc, "modular", &opt, &r2) == LOEWY_OK);
  CHECK(std::string(loewy_report_json(r1)) == loewy_report_json(r2));
  CHECK(loewy_report_all_pass(r1) == 1);
  loewy_report_free(r1);
  loewy_report_free(r2);
  loewy_doc_free(doc);
}

int main(int argc, char** argv) {
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_docs = argv[argc - 1];
    --argc;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
