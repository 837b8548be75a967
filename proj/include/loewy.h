/*
 * Copyright 2026 the loewy developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of the loewy library: exact class-function filtrations, symmetric
 * linear forms, Reynolds ideals, internal characters, Hochschild (co)homology
 * and the projective SL2(Z) action for finite-dimensional (Hopf) algebras
 * given by structure constants.
 *
 * All objects are opaque handles; every call reports a status code and the
 * last error message is available per thread via loewy_last_error().
 */

#ifndef LOEWY_H
#define LOEWY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct loewy_doc loewy_doc;
typedef struct loewy_report loewy_report;

typedef enum {
  LOEWY_OK = 0,
  LOEWY_E_PARSE = 1,       /* malformed input document */
  LOEWY_E_VALIDATE = 2,    /* an axiom or precondition failed */
  LOEWY_E_FIELD = 3,       /* field construction or arithmetic error */
  LOEWY_E_BUDGET = 4,      /* size budget exceeded */
  LOEWY_E_UNSUPPORTED = 5, /* computation not possible on this input */
  LOEWY_E_INTERNAL = 6
} loewy_status;

typedef struct {
  int filtration_n;            /* 0 = up to the Loewy length */
  int max_degree;              /* top (co)homology degree */
  unsigned long long seed;     /* deterministic schedule seed */
  unsigned long long budget;   /* max entries per assembled differential */
} loewy_options;

/* Fill in the default options (n = 0, max_degree = 2, seed = 1, budget = 2^20). */
void loewy_options_init(loewy_options* opt);

/* Load and validate a JSON algebra document from a file or a string.
 * "search" directives in the quasitriangular block run the ribbon and pivot
 * searches during the load. */
loewy_status loewy_doc_load(const char* path, loewy_doc** out);
loewy_status loewy_doc_parse_json(const char* json_text, loewy_doc** out);
void loewy_doc_free(loewy_doc* doc);

/* Run one command: inspect, filtration, characters, okuyama, hochschild or
 * modular. opt may be NULL for defaults. */
loewy_status loewy_run(const loewy_doc* doc, const char* command, const loewy_options* opt,
                       loewy_report** out);

/* Accessors; the returned strings live as long as the report. */
const char* loewy_report_json(const loewy_report* rep);
const char* loewy_report_table(const loewy_report* rep);
int loewy_report_all_pass(const loewy_report* rep);
void loewy_report_free(loewy_report* rep);

/* Thread-local message for the most recent failing call. */
const char* loewy_last_error(void);
const char* loewy_version(void);

#ifdef __cplusplus
}
#endif

#endif /* LOEWY_H */
