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

#include <sstream>

#include "loewy/document.hpp"
#include "loewy/report.hpp"

namespace loewy {

namespace {

std::string key_n(const char* stem, int n) {
  std::ostringstream os;
  os << stem << "_" << n;
  return os.str();
}

std::vector<std::vector<std::string>> rows_of(const Field& F, const Subspace& s) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < s.ambient(); ++j) row.push_back(F.print(s.basis().at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> row_of(const Field& F, const std::vector<Scalar>& v) {
  std::vector<std::string> row;
  for (const auto& x : v) row.push_back(F.print(x));
  return row;
}

void cmd_inspect(const LoadedDocument& doc, Report& rep) {
  const Algebra& A = *doc.algebra;
  rep.pass_fail["algebra_axioms"] = A.check().pass;
  if (doc.hopf) rep.pass_fail["hopf_axioms"] = doc.hopf->check().pass;
  rep.dims["dim"] = A.dim();
  const auto& rad = radical_series(A);
  rep.dims["loewy_length"] = rad.loewy_length;
  for (int n = 1; n <= rad.loewy_length; ++n)
    rep.dims[key_n("radical_power", n)] = rad.power(n).dim();
  rep.dims["center"] = center(A).dim();
}

void cmd_filtration(const LoadedDocument& doc, const RunOptions& opt, Report& rep) {
  const Algebra& A = *doc.algebra;
  const auto& rad = radical_series(A);
  int N = opt.filtration_n > 0 ? opt.filtration_n : rad.loewy_length;
  rep.dims["loewy_length"] = rad.loewy_length;
  bool ascending = true;
  int prev_sym = -1, prev_cf = -1, prev_rey = -1;
  for (int n = 1; n <= N; ++n) {
    int s = sym_n(A, n).dim();
    rep.dims[key_n("sym", n)] = s;
    ascending = ascending && s >= prev_sym;
    prev_sym = s;
    int r = reynolds_n(A, n).dim();
    rep.dims[key_n("rey", n)] = r;
    ascending = ascending && r >= prev_rey;
    prev_rey = r;
    if (doc.hopf) {
      int c = cf_n(*doc.hopf, n).dim();
      rep.dims[key_n("cf", n)] = c;
      ascending = ascending && c >= prev_cf;
      prev_cf = c;
    }
  }
  rep.dims["sym"] = sym_n(A, std::nullopt).dim();
  if (doc.hopf) rep.dims["cf"] = cf_n(*doc.hopf, std::nullopt).dim();
  rep.pass_fail["chains_ascending"] = ascending;
  // the chains stabilize at the Loewy length
  rep.pass_fail["sym_stabilizes_at_loewy"] =
      sym_n(A, rad.loewy_length).dim() == rep.dims["sym"];
  if (doc.hopf)
    rep.pass_fail["cf_stabilizes_at_loewy"] =
        cf_n(*doc.hopf, rad.loewy_length).dim() == rep.dims["cf"];
}

void cmd_characters(const LoadedDocument& doc, const RunOptions& opt, Report& rep) {
  if (!doc.hopf) throw Error(Errc::ValidationError, "characters needs a hopf block");
  const HopfAlgebra& H = *doc.hopf;
  const Field& F = *H.field();
  std::vector<Scalar> pivot;
  if (doc.pivot) {
    pivot = *doc.pivot;
  } else {
    auto pv = pivots(H, opt.seed);
    if (pv.empty()) {
      rep.pass_fail["pivot_found"] = false;
      return;
    }
    pivot = pv.front();
  }
  rep.pass_fail["pivot_found"] = true;
  rep.bases["pivot"] = {row_of(F, pivot)};
  auto sims = simple_modules(*doc.algebra, opt.seed);
  rep.dims["simples"] = static_cast<long long>(sims.simples.size());
  std::vector<std::vector<Scalar>> chars;
  std::vector<std::vector<std::string>> table;
  for (const auto& L : sims.simples) {
    auto ch = internal_character(H, pivot, L);
    table.push_back(row_of(F, ch));
    chars.push_back(std::move(ch));
  }
  rep.bases["characters"] = table;
  Subspace span = rref_subspace(H.field(), chars, H.dim());
  rep.pass_fail["characters_independent"] = span.dim() == static_cast<int>(chars.size());
  auto cf1 = cf_n(H, 1);
  rep.dims["cf_1"] = cf1.dim();
  rep.pass_fail["characters_span_cf1"] = span == cf1.space;
}

void cmd_okuyama(const LoadedDocument& doc, const RunOptions& opt, Report& rep) {
  auto ok = okuyama_check(*doc.algebra, opt.seed);
  rep.dims["sym_1"] = ok.dim_sym1;
  rep.dims["sym_2"] = ok.dim_sym2;
  rep.dims["rhs"] = ok.dim_rhs;
  for (size_t i = 0; i < ok.ext_dims.size(); ++i) {
    rep.dims[key_n("ext1_self", static_cast<int>(i))] = ok.ext_dims[i];
    rep.pass_fail[key_n("trace_star_injective", static_cast<int>(i))] = ok.trace_injective[i];
  }
  rep.pass_fail["direct_sum"] = ok.direct_sum;
  rep.pass_fail["subspace_equal"] = ok.subspace_equal;
  rep.pass_fail["okuyama"] = ok.pass;
}

void cmd_hochschild(const LoadedDocument& doc, const RunOptions& opt, Report& rep) {
  const Algebra& A = *doc.algebra;
  int N = opt.max_degree;
  CochainComplex hh = hochschild_cochain(A, N, opt.budget);
  for (int n = 0; n <= N; ++n) rep.dims[key_n("HH^", n)] = hh.cohomology(n).dim;
  // HH^0 equals the center as a subspace
  rep.pass_fail["hh0_is_center"] = hh.cohomology(0).cocycles == center(A);
  auto chain = hochschild_chain(A, N, opt.budget);
  for (int n = 0; n <= N; ++n) rep.dims[key_n("HH_", n)] = chain.homology_dims[n];
  rep.dims["sym"] = chain.sym_dim;
  rep.pass_fail["hh0_dim_equals_sym"] = chain.hh0_eq_sym;
  rep.pass_fail["tor_ext_duality"] = chain.duality_ok;
  if (doc.hopf) {
    auto cmp = compare_hh_adjoint(*doc.hopf, N, opt.budget);
    for (int n = 0; n <= N; ++n) {
      rep.dims[key_n("Ext^", n)] = cmp.ext_dims[n];
      rep.pass_fail[key_n("hh_matches_ext", n)] = cmp.per_degree[n];
    }
    rep.pass_fail["hh_matches_ext"] = cmp.pass;
  }
}

void cmd_modular(const LoadedDocument& doc, const RunOptions& opt, Report& rep) {
  if (!doc.hopf || !doc.R)
    throw Error(Errc::ValidationError, "modular needs a quasitriangular block");
  const HopfAlgebra& H = *doc.hopf;
  const Field& F = *H.field();
  if (!doc.ribbon) {
    rep.pass_fail["ribbon_found"] = false;
    return;
  }
  rep.pass_fail["ribbon_found"] = true;
  if (doc.ribbon_searched)
    rep.dims["ribbon_candidates"] = static_cast<long long>(doc.ribbon_candidates.size());
  auto rv = check_rv(H, *doc.R, *doc.ribbon);
  rep.pass_fail["quasitriangular_ribbon_axioms"] = rv.pass;
  if (!rv.pass) {
    rep.notes["rv_violation"] = rv.first_violation;
    return;
  }
  auto qf = q_and_factorizability(H, *doc.R);
  rep.pass_fail["factorizable"] = qf.factorizable;
  if (!qf.factorizable) return;
  RibbonData rd;
  rd.hopf = doc.hopf;
  rd.R = *doc.R;
  rd.u = rv.u;
  rd.v = *doc.ribbon;
  rd.Q = qf.Q;
  rd.lambda = normalized_integral(H, qf.Q);
  rep.bases["lambda"] = {row_of(F, rd.lambda)};
  auto [S, T] = st_maps(H, rd.Q, rd.lambda, rd.v);
  rd.S_mat = S;
  rd.T_mat = T;
  auto mc = modular_check(rd);
  rep.scalars["c"] = F.print(mc.c);
  rep.pass_fail["st_relation"] = mc.st_relation;
  rep.pass_fail["s4_is_theta_inverse"] = mc.s4_is_theta_inv;
  rep.pass_fail["st_commute_with_adjoint_action"] = mc.commutes_with_action;
  int maxdeg = opt.max_degree;
  for (int deg = 0; deg <= maxdeg; ++deg) {
    auto sl = sl2z_action(rd, deg, opt.budget);
    rep.dims[key_n("sl2z_dim", deg)] = sl.dim;
    rep.pass_fail[key_n("sl2z_relations", deg)] = sl.st_relation && sl.s4_identity;
    rep.pass_fail[key_n("sl2z_scalar_matches", deg)] = sl.c_matches;
  }
  // flipping the sign of lambda flips S and leaves the projective action
  // unchanged; c is reported for both signs
  RibbonData rd2 = rd;
  for (auto& x : rd2.lambda) x = F.neg(x);
  auto [S2, T2] = st_maps(H, rd2.Q, rd2.lambda, rd2.v);
  rd2.S_mat = S2;
  rd2.T_mat = T2;
  auto mc2 = modular_check(rd2);
  rep.scalars["c_minus_lambda"] = F.print(mc2.c);
  bool flip_ok = S2 == S.scaled(F.neg(F.one())) && mc2.pass;
  for (int deg = 0; deg <= maxdeg && flip_ok; ++deg) {
    auto sl = sl2z_action(rd2, deg, opt.budget);
    flip_ok = sl.st_relation && sl.s4_identity;
  }
  rep.pass_fail["sign_flip_projectively_invariant"] = flip_ok;
}

}  // namespace

Report run_command(const LoadedDocument& doc, const std::string& command,
                   const RunOptions& options) {
  Report rep;
  rep.command = command;
  rep.input_path = doc.path.empty() ? doc.name : doc.path;
  rep.digest = doc.digest;
  rep.seed = options.seed;
  if (command == "inspect")
    cmd_inspect(doc, rep);
  else if (command == "filtration")
    cmd_filtration(doc, options, rep);
  else if (command == "characters")
    cmd_characters(doc, options, rep);
  else if (command == "okuyama")
    cmd_okuyama(doc, options, rep);
  else if (command == "hochschild")
    cmd_hochschild(doc, options, rep);
  else if (command == "modular")
    cmd_modular(doc, options, rep);
  else
    throw Error(Errc::ValidationError, "unknown command '" + command + "'");
  return rep;
}

}  // namespace loewy
