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

#include "loewy/algebra.hpp"

#include <sstream>

#include "loewy/modules.hpp"

namespace loewy {

AlgebraPtr Algebra::make(FieldPtr f, int dim, const std::vector<MultEntry>& mult,
                         const std::vector<Scalar>& unit, std::vector<std::string> labels) {
  if (dim <= 0) throw Error(Errc::ValidationError, "algebra dimension must be positive");
  if (static_cast<int>(unit.size()) != dim)
    throw Error(Errc::DimensionMismatch, "unit vector length != dim");
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->f_ = std::move(f);
  a->dim_ = dim;
  a->unit_ = unit;
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels.size()) != dim)
    throw Error(Errc::DimensionMismatch, "labels length != dim");
  a->labels_ = std::move(labels);
  a->c_.assign(static_cast<size_t>(dim) * dim * dim, a->f_->zero());
  for (const auto& e : mult) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw Error(Errc::IndexOutOfRange, "structure constant index out of range");
    size_t idx = (static_cast<size_t>(e.i) * dim + e.j) * dim + e.k;
    a->c_[idx] = a->f_->add(a->c_[idx], e.coeff);
  }
  // left/right multiplication matrices per basis element
  a->lmul_.reserve(dim);
  a->rmul_.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    Mat L(a->f_, dim, dim), R(a->f_, dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        L.at(k, j) = a->c(i, j, k);  // e_i e_j = sum_k c(i,j,k) e_k
        R.at(k, j) = a->c(j, i, k);
      }
    a->lmul_.push_back(std::move(L));
    a->rmul_.push_back(std::move(R));
  }
  return a;
}

std::vector<Scalar> Algebra::basis_product(int i, int j) const {
  std::vector<Scalar> v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

std::vector<Scalar> Algebra::basis_vec(int i) const {
  std::vector<Scalar> v(dim_, f_->zero());
  v[i] = f_->one();
  return v;
}

std::vector<Scalar> Algebra::mul_vec(const std::vector<Scalar>& a,
                                     const std::vector<Scalar>& b) const {
  const Field& F = *f_;
  std::vector<Scalar> out(dim_, F.zero());
  for (int i = 0; i < dim_; ++i) {
    if (F.is_zero(a[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (F.is_zero(b[j])) continue;
      Scalar ab = F.mul(a[i], b[j]);
      for (int k = 0; k < dim_; ++k) {
        const Scalar& ck = c(i, j, k);
        if (!F.is_zero(ck)) out[k] = F.add(out[k], F.mul(ab, ck));
      }
    }
  }
  return out;
}

Mat Algebra::left_mult(const std::vector<Scalar>& a) const {
  const Field& F = *f_;
  Mat m(f_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (!F.is_zero(a[i])) m = m.add(lmul_[i].scaled(a[i]));
  return m;
}

Mat Algebra::right_mult(const std::vector<Scalar>& a) const {
  const Field& F = *f_;
  Mat m(f_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (!F.is_zero(a[i])) m = m.add(rmul_[i].scaled(a[i]));
  return m;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

std::optional<std::vector<Scalar>> Algebra::invert(const std::vector<Scalar>& a) const {
  return solve(left_mult(a), unit_);
}

CheckReport Algebra::check() const {
  const Field& F = *f_;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      auto ij = basis_product(i, j);
      for (int k = 0; k < dim_; ++k) {
        auto lhs = mul_vec(ij, basis_vec(k));
        auto rhs = mul_vec(basis_vec(i), basis_product(j, k));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails at triple (" << i << "," << j << "," << k << ")";
          return {false, os.str()};
        }
      }
    }
  for (int i = 0; i < dim_; ++i) {
    if (mul_vec(unit_, basis_vec(i)) != basis_vec(i))
      return {false, "unit axiom fails on the left at basis " + std::to_string(i)};
    if (mul_vec(basis_vec(i), unit_) != basis_vec(i))
      return {false, "unit axiom fails on the right at basis " + std::to_string(i)};
  }
  (void)F;
  return {true, ""};
}

std::vector<MultEntry> Algebra::sparse_mult() const {
  std::vector<MultEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (!f_->is_zero(c(i, j, k))) out.push_back({i, j, k, c(i, j, k)});
  return out;
}

// ---------------------------------------------------------------------------
// radical

namespace {

// span of pairwise products of two subspaces
Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) rows.push_back(a.mul_vec(u.basis().row(i), v.basis().row(j)));
  return rref_subspace(a.field(), rows, a.dim());
}

// e_k of the characteristic polynomial of the regular representation of x:
// det(tI - L_x) = t^n - e_1 t^(n-1) + e_2 t^(n-2) - ...
Scalar elementary_symmetric(const Algebra& a, const std::vector<Scalar>& x, int k) {
  const Field& F = *a.field();
  auto cp = char_poly(a.left_mult(x));
  int n = a.dim();
  Scalar ek = cp[n - k];
  if (k % 2 == 1) ek = F.neg(ek);
  return ek;
}

// one pass of the radical computation (no certification)
Subspace radical_once(const Algebra& a) {
  const Field& F = *a.field();
  int n = a.dim();
  long long p = F.characteristic();
  if (p == 0) {
    // kernel of the trace form Tr(L_x L_y); an ideal by associativity of the form
    Mat gram(a.field(), n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram.at(i, j) = a.left_mult(a.basis_product(i, j)).trace();
    return kernel(gram);
  }
  // layered Friedl-Ronyai iteration over GF(p^m)
  int m = F.degree();
  Subspace cur = rref_subspace(Mat::identity(a.field(), n));
  long long pl = 1;
  int l = 0;
  while (pl <= n) {
    int d = cur.dim();
    if (d == 0) break;
    // rows indexed by y in cur, columns by x-basis of cur: T_l(x_b y)
    Mat cond(a.field(), d, d);
    for (int yi = 0; yi < d; ++yi)
      for (int b = 0; b < d; ++b) {
        auto xy = a.mul_vec(cur.basis().row(b), cur.basis().row(yi));
        cond.at(yi, b) = elementary_symmetric(a, xy, static_cast<int>(pl));
      }
    Subspace dker = kernel(cond);
    // untwist the p^l-semilinearity: c_b = d_b^(p^(m - l mod m))
    int lm = l % m;
    mpz_class unexp = 1;
    for (int t = 0; t < (lm == 0 ? 0 : m - lm); ++t) unexp *= static_cast<long>(p);
    std::vector<std::vector<Scalar>> rows;
    for (int r = 0; r < dker.dim(); ++r) {
      std::vector<Scalar> v(n, F.zero());
      for (int b = 0; b < d; ++b) {
        Scalar cb = dker.basis().at(r, b);
        if (F.is_zero(cb)) continue;
        if (lm != 0) cb = F.pow(cb, unexp);
        for (int t = 0; t < n; ++t) v[t] = F.add(v[t], F.mul(cb, cur.basis().at(b, t)));
      }
      rows.push_back(std::move(v));
    }
    cur = rref_subspace(a.field(), rows, n);
    ++l;
    pl *= p;
  }
  return cur;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  for (int b = 0; b < s.dim(); ++b) {
    auto v = s.basis().row(b);
    for (int i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.mul_vec(v, a.basis_vec(i)))) return false;
      if (!s.contains(a.mul_vec(a.basis_vec(i), v))) return false;
    }
  }
  return true;
}

}  // namespace

const Subspace& RadicalSeries::power(int n) const {
  if (n < 0) throw Error(Errc::IndexOutOfRange, "radical power index");
  if (n >= static_cast<int>(powers.size())) return powers.back();
  return powers[static_cast<size_t>(n)];
}

const RadicalSeries& radical_series(const Algebra& a) {
  {
    std::lock_guard<std::mutex> lk(a.rad_mutex_);
    if (a.rad_cache_) return *a.rad_cache_;
  }
  Subspace J = radical_once(a);
  // certification: ideal, nilpotent, and a clean quotient
  if (!is_ideal(a, J))
    throw Error(Errc::RadicalNotComputable, "radical candidate is not an ideal");
  auto series = std::make_shared<RadicalSeries>();
  series->powers.push_back(rref_subspace(Mat::identity(a.field(), a.dim())));
  series->powers.push_back(J);
  while (series->powers.back().dim() > 0) {
    if (static_cast<int>(series->powers.size()) > a.dim() + 1)
      throw Error(Errc::RadicalNotComputable, "radical candidate is not nilpotent");
    series->powers.push_back(product_span(a, series->powers.back(), J));
    // powers must strictly descend until zero
    auto& ps = series->powers;
    size_t w = ps.size();
    if (ps[w - 1].dim() >= ps[w - 2].dim() && ps[w - 2].dim() > 0)
      throw Error(Errc::RadicalNotComputable, "radical powers fail to descend");
  }
  series->loewy_length = static_cast<int>(series->powers.size()) - 1;
  if (J.dim() > 0) {
    QuotientAlgebra q = quotient_by_ideal(a, J);
    Subspace jq = radical_once(*q.algebra);
    if (jq.dim() != 0)
      throw Error(Errc::RadicalNotComputable, "quotient by radical candidate is not semisimple");
  }
  // J^m J^n subset J^(m+n) on the computed range
  for (size_t mi = 1; mi < series->powers.size(); ++mi)
    for (size_t ni = 1; mi + ni < series->powers.size() + 1 && ni < series->powers.size(); ++ni) {
      auto prod = product_span(a, series->powers[mi], series->powers[ni]);
      const Subspace& target = mi + ni < series->powers.size() ? series->powers[mi + ni]
                                                               : series->powers.back();
      if (!target.contains(prod))
        throw Error(Errc::RadicalNotComputable, "J^m J^n escapes J^(m+n)");
    }
  std::lock_guard<std::mutex> lk(a.rad_mutex_);
  if (!a.rad_cache_) a.rad_cache_ = series;
  return *a.rad_cache_;
}

// ---------------------------------------------------------------------------

Subspace center(const Algebra& a) {
  int n = a.dim();
  Mat cond(a.field(), n * n, n);
  for (int i = 0; i < n; ++i) {
    Mat d = a.left_mult_basis(i).sub(a.right_mult_basis(i));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) cond.at(i * n + r, c) = d.at(r, c);
  }
  return kernel(cond);
}

DualSubspace sym_n(const Algebra& a, std::optional<int> nn) {
  const Field& F = *a.field();
  int n = a.dim();
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Scalar> row(n);
      bool nz = false;
      for (int k = 0; k < n; ++k) {
        row[k] = F.sub(a.c(i, j, k), a.c(j, i, k));
        nz = nz || !F.is_zero(row[k]);
      }
      if (nz) rows.push_back(std::move(row));
    }
  if (nn) {
    const auto& rad = radical_series(a);
    const Subspace& Jn = rad.power(*nn);
    for (int b = 0; b < Jn.dim(); ++b) rows.push_back(Jn.basis().row(b));
  }
  Subspace space = rows.empty() ? rref_subspace(Mat::identity(a.field(), n))
                                : kernel(Mat::from_rows(a.field(), rows, n));
  DualSubspace out;
  out.tag = nn ? DualTag::SymN : DualTag::Sym;
  out.n = nn.value_or(0);
  out.space = std::move(space);
  return out;
}

Subspace reynolds_n(const Algebra& a, int n) {
  const auto& rad = radical_series(a);
  const Subspace& Jn = rad.power(n);
  int d = a.dim();
  std::vector<std::vector<Scalar>> rows;
  // centrality: (L_i - R_i) z = 0
  for (int i = 0; i < d; ++i) {
    Mat diff = a.left_mult_basis(i).sub(a.right_mult_basis(i));
    for (int r = 0; r < d; ++r) rows.push_back(diff.row(r));
  }
  // annihilation: L_b z = 0 for b in J^n
  for (int b = 0; b < Jn.dim(); ++b) {
    Mat Lb = a.left_mult(Jn.basis().row(b));
    for (int r = 0; r < d; ++r) rows.push_back(Lb.row(r));
  }
  return kernel(Mat::from_rows(a.field(), rows, d));
}

QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  const Field& F = *a.field();
  int n = a.dim();
  std::vector<bool> is_pivot(n, false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) comp.push_back(i);
  int q = static_cast<int>(comp.size());
  if (q == 0) throw Error(Errc::ValidationError, "quotient by the whole algebra is empty");
  auto reduce = [&](std::vector<Scalar> v) {
    for (int r = 0; r < ideal.dim(); ++r) {
      int p = ideal.pivots()[r];
      if (F.is_zero(v[p])) continue;
      Scalar c0 = v[p];
      for (int j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(c0, ideal.basis().at(r, j)));
    }
    std::vector<Scalar> out(q);
    for (int t = 0; t < q; ++t) out[t] = v[comp[t]];
    return out;
  };
  std::vector<MultEntry> mult;
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t) {
      auto prod = reduce(a.basis_product(comp[s], comp[t]));
      for (int k = 0; k < q; ++k)
        if (!F.is_zero(prod[k])) mult.push_back({s, t, k, prod[k]});
    }
  std::vector<std::string> labels;
  for (int t = 0; t < q; ++t) labels.push_back(a.labels()[comp[t]] + "~");
  QuotientAlgebra out;
  out.algebra = Algebra::make(a.field(), q, mult, reduce(a.unit()), labels);
  out.complement = comp;
  out.projection = Mat(a.field(), q, n);
  for (int t = 0; t < n; ++t) {
    auto col = reduce(a.basis_vec(t));
    for (int r = 0; r < q; ++r) out.projection.at(r, t) = col[r];
  }
  return out;
}

QuotientAlgebra capital_quotient(const Algebra& a, int n) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "capital quotient needs n >= 1");
  const auto& rad = radical_series(a);
  return quotient_by_ideal(a, rad.power(n));
}

// ---------------------------------------------------------------------------
// basic reduction

BasicReduction basic_reduction(const Algebra& a) {
  const Field& F = *a.field();
  auto simples = simple_modules(a);
  const auto& rad = radical_series(a);
  QuotientAlgebra Abar = capital_quotient(a, 1);
  int nq = Abar.algebra->dim();
  int blocks = 0;
  for (const auto& s : simples.simples) blocks += s.dim * s.dim;
  if (blocks != nq)
    throw Error(Errc::SplitFieldRequired, "sum of squared simple dimensions misses dim A/J");
  // phi: Abar -> prod End(S_i), columns indexed by Abar basis
  Mat phi(a.field(), blocks, nq);
  for (int b = 0; b < nq; ++b) {
    // lift Abar basis b to A: complement coordinate embedding
    std::vector<Scalar> lift(a.dim(), F.zero());
    lift[Abar.complement[b]] = F.one();
    int off = 0;
    for (const auto& s : simples.simples) {
      Mat act(a.field(), s.dim, s.dim);
      for (int i = 0; i < a.dim(); ++i)
        if (!F.is_zero(lift[i])) act = act.add(s.action[i].scaled(lift[i]));
      for (int r = 0; r < s.dim; ++r)
        for (int c = 0; c < s.dim; ++c) phi.at(off + r * s.dim + c, b) = act.at(r, c);
      off += s.dim * s.dim;
    }
  }
  std::vector<Scalar> target(blocks, F.zero());
  {
    int off = 0;
    for (const auto& s : simples.simples) {
      target[off] = F.one();  // E_00 of the block
      off += s.dim * s.dim;
    }
  }
  auto sol = solve(phi, target);
  if (!sol) throw Error(Errc::SplitFieldRequired, "semisimple quotient is not split");
  // embed to A and Newton-lift along the radical: e <- 3e^2 - 2e^3
  std::vector<Scalar> e(a.dim(), F.zero());
  for (int b = 0; b < nq; ++b) e[Abar.complement[b]] = (*sol)[b];
  for (int it = 0; it < rad.loewy_length + 1; ++it) {
    auto e2 = a.mul_vec(e, e);
    auto e3 = a.mul_vec(e2, e);
    std::vector<Scalar> ne(a.dim());
    for (int i = 0; i < a.dim(); ++i)
      ne[i] = F.sub(F.mul(F.from_int(3), e2[i]), F.mul(F.from_int(2), e3[i]));
    e = std::move(ne);
  }
  if (a.mul_vec(e, e) != e)
    throw Error(Errc::Internal, "idempotent lifting failed to converge");
  // eAe basis
  std::vector<std::vector<Scalar>> gens;
  for (int j = 0; j < a.dim(); ++j) gens.push_back(a.mul_vec(e, a.mul_vec(a.basis_vec(j), e)));
  Subspace span = rref_subspace(a.field(), gens, a.dim());
  int nb = span.dim();
  Mat incl(a.field(), a.dim(), nb);
  for (int c = 0; c < nb; ++c)
    for (int r = 0; r < a.dim(); ++r) incl.at(r, c) = span.basis().at(c, r);
  std::vector<MultEntry> mult;
  for (int s = 0; s < nb; ++s)
    for (int t = 0; t < nb; ++t) {
      auto prod = a.mul_vec(span.basis().row(s), span.basis().row(t));
      auto coords = span.coordinates(prod);
      if (!coords) throw Error(Errc::Internal, "eAe is not closed under multiplication");
      for (int k = 0; k < nb; ++k)
        if (!F.is_zero((*coords)[k])) mult.push_back({s, t, k, (*coords)[k]});
    }
  auto ecoords = span.coordinates(e);
  if (!ecoords) throw Error(Errc::Internal, "idempotent outside eAe");
  BasicReduction out;
  out.idempotent = e;
  out.basic = Algebra::make(a.field(), nb, mult, *ecoords);
  out.inclusion = incl;
  out.restriction = incl.transpose();
  return out;
}

}  // namespace loewy
