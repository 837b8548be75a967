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

// Command-line front end; talks to the library through the C API only.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "loewy.h"

namespace {

// exit statuses: 0 pass, 1 check failure, 2 input error, 3 budget exceeded
int exit_code_of(loewy_status st) {
  switch (st) {
    case LOEWY_OK: return 0;
    case LOEWY_E_BUDGET: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loewy: exact filtrations, characters and modular data for "
               "finite-dimensional algebras and Hopf algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string json_out;
  loewy_options opt;
  loewy_options_init(&opt);

  const char* names[] = {"inspect", "filtration", "characters", "okuyama", "hochschild",
                         "modular"};
  const char* descs[] = {
      "axioms, dimensions, radical series, Loewy length, center",
      "dims of Sym_n, CF_n (Hopf only) and Rey_n for n = 1..Lw",
      "pivot, character table of the simples, independence and CF_1 span",
      "the Sym_2 = Sym_1 (+) Trace* decomposition, both sides computed independently",
      "HH^n, HH_n, Ext^n(k, adjoint) dims and the comparison verdict",
      "factorizability, normalized integral, modular relations, SL2(Z) on Ext"};
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("file", file, "algebra document (JSON)")->required();
    sub->add_option("--n", opt.filtration_n, "filtration depth (default: Loewy length)");
    sub->add_option("--max-degree", opt.max_degree, "top (co)homology degree (default 2)");
    sub->add_option("--seed", opt.seed, "seed for deterministic schedules (default 1)");
    sub->add_option("--budget", opt.budget, "max entries per differential (default 2^20)");
    sub->add_option("--json", json_out, "write the machine-readable report to this path");
  }

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  loewy_doc* doc = nullptr;
  loewy_status st = loewy_doc_load(file.c_str(), &doc);
  if (st != LOEWY_OK) {
    std::cerr << "error: " << loewy_last_error() << "\n";
    return exit_code_of(st);
  }
  loewy_report* rep = nullptr;
  st = loewy_run(doc, command.c_str(), &opt, &rep);
  if (st != LOEWY_OK) {
    std::cerr << "error: " << loewy_last_error() << "\n";
    loewy_doc_free(doc);
    return exit_code_of(st);
  }
  std::cout << loewy_report_table(rep);
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << json_out << "'\n";
      loewy_report_free(rep);
      loewy_doc_free(doc);
      return 2;
    }
    out << loewy_report_json(rep);
  }
  int rc = loewy_report_all_pass(rep) ? 0 : 1;
  loewy_report_free(rep);
  loewy_doc_free(doc);
  return rc;
}
