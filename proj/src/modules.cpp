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

#include "loewy/modules.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace loewy {

namespace {

// counter-based generator; the seed is recorded in reports
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// ---- dense polynomials over a Field, low degree first ----

using Poly = std::vector<Scalar>;

void ptrim(const Field& F, Poly& p) {
  while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

int pdeg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly pmul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!F.is_zero(b[j])) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  ptrim(F, r);
  return r;
}

Poly psub(const Field& F, Poly a, const Poly& b) {
  a.resize(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  ptrim(F, a);
  return a;
}

// remainder of a by monic-normalizable b
Poly pmod(const Field& F, Poly a, const Poly& b) {
  ptrim(F, a);
  Scalar lcinv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    Scalar c = F.mul(a.back(), lcinv);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(c, b[i]));
    ptrim(F, a);
  }
  return a;
}

Poly pgcd(const Field& F, Poly a, Poly b) {
  ptrim(F, a);
  ptrim(F, b);
  while (!b.empty()) {
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar lcinv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, lcinv);
  }
  return a;
}

Poly pderiv(const Field& F, const Poly& a) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(F.from_int(static_cast<long long>(i)), a[i]));
  ptrim(F, r);
  return r;
}

Poly ppowmod(const Field& F, Poly base, mpz_class e, const Poly& f) {
  Poly r{F.one()};
  base = pmod(F, std::move(base), f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod(F, pmul(F, r, base), f);
    base = pmod(F, pmul(F, base, base), f);
    e >>= 1;
  }
  return r;
}

Scalar peval(const Field& F, const Poly& p, const Scalar& x) {
  Scalar acc = F.zero();
  for (size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
  return acc;
}

// nontrivial monic divisor of mu (monic, deg >= 2) over a finite field;
// deterministic distinct-degree stage, seeded Cantor-Zassenhaus stage.
std::optional<Poly> finite_field_divisor(const Field& F, const Poly& mu, SplitMix64& rng) {
  mpz_class q = F.order();
  // squarefree defect
  Poly d = pderiv(F, mu);
  if (d.empty()) {
    // mu = g(x^p): its p-th "root" is a proper divisor
    long long p = F.characteristic();
    Poly g;
    mpz_class e = q / static_cast<long>(p);  // p-th root exponent via Frobenius inverse: a^(q/p)
    for (size_t i = 0; i < mu.size(); i += static_cast<size_t>(p)) {
      Scalar c = mu[i];
      g.push_back(F.pow(c, e));
    }
    return g;
  }
  Poly h = pgcd(F, mu, d);
  if (pdeg(h) >= 1 && pdeg(h) < pdeg(mu)) return h;
  // mu squarefree: distinct degree
  int n = pdeg(mu);
  Poly x{F.zero(), F.one()};
  Poly xq = x;
  for (int deg = 1; deg <= n; ++deg) {
    xq = ppowmod(F, xq, q, mu);
    Poly diff = psub(F, xq, x);
    Poly g = pgcd(F, mu, diff);
    if (pdeg(g) >= 1 && pdeg(g) < pdeg(mu)) return g;
    if (pdeg(g) == pdeg(mu)) {
      // product of irreducibles all of degree `deg`
      if (deg == pdeg(mu)) return std::nullopt;  // irreducible
      // equal-degree splitting
      for (int tries = 0; tries < 64; ++tries) {
        Poly r(static_cast<size_t>(pdeg(mu)), F.zero());
        bool nz = false;
        for (auto& c : r) {
          if (F.characteristic() > 0 && F.degree() == 1) {
            c = F.from_int(static_cast<long long>(rng.next() % static_cast<std::uint64_t>(F.characteristic())));
          } else {
            // random element: random small polynomial in the generator
            long long p = F.characteristic();
            c = F.from_int(static_cast<long long>(rng.next() % static_cast<std::uint64_t>(p)));
            if (F.degree() > 1) {
              Scalar acc = c;
              Scalar zp = F.one();
              for (int t = 1; t < F.degree(); ++t) {
                zp = F.mul(zp, F.generator());
                acc = F.add(acc, F.mul(F.from_int(static_cast<long long>(
                                           rng.next() % static_cast<std::uint64_t>(p))),
                                       zp));
              }
              c = acc;
            }
          }
          nz = nz || !F.is_zero(c);
        }
        if (!nz) continue;
        Poly g2;
        if (F.characteristic() == 2) {
          // additive trace to GF(2)
          int md = F.degree() * deg;
          Poly t = r, acc = r;
          for (int i = 1; i < md; ++i) {
            t = pmod(F, pmul(F, t, t), mu);
            acc = psub(F, acc, t);  // char 2: sub == add
          }
          g2 = pgcd(F, mu, acc);
        } else {
          mpz_class qd = 1;
          for (int i = 0; i < deg; ++i) qd *= q;
          Poly pw = ppowmod(F, r, (qd - 1) / 2, mu);
          pw = psub(F, pw, Poly{F.one()});
          g2 = pgcd(F, mu, pw);
        }
        if (pdeg(g2) >= 1 && pdeg(g2) < pdeg(mu)) return g2;
      }
      return std::nullopt;  // schedule exhausted on this polynomial
    }
  }
  return std::nullopt;
}

// rational roots of a monic polynomial over Q, by divisor enumeration after
// integer scaling; complete when the scaled constant term is small enough.
std::vector<Scalar> rational_roots(const Field& F, const Poly& mu) {
  std::vector<Scalar> roots;
  if (F.characteristic() != 0 || F.degree() != 1) return roots;
  // extract rational coefficients
  int n = pdeg(mu);
  std::vector<mpq_class> co(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::string s = F.print(mu[i]);
    co[i] = mpq_class(s);
    co[i].canonicalize();
  }
  // clear denominators: c = lcm of denominators; y = c x turns monic rational
  // into monic integer in y
  mpz_class c = 1;
  for (auto& x : co) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ico(n + 1);
  mpz_class cp = 1;
  for (int i = n; i >= 0; --i) {
    mpq_class v = co[i] * cp;
    ico[i] = v.get_num();  // denominator is 1 by construction
    if (v.get_den() != 1) return roots;
    cp *= c;
  }
  mpz_class a0 = ico[0];
  if (a0 == 0) {
    roots.push_back(F.zero());
    return roots;
  }
  mpz_class abs0 = abs(a0);
  if (abs0 > 1000000000000L) return roots;  // enumeration not worth it
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= abs0; ++d) {
    if (abs0 % d == 0) {
      divs.push_back(d);
      divs.push_back(abs0 / d);
    }
    if (divs.size() > 4096) return roots;
  }
  for (const auto& d : divs)
    for (int sgn : {1, -1}) {
      mpq_class cand(d * sgn, c);
      cand.canonicalize();
      Scalar s = F.parse(cand.get_str());
      if (F.is_zero(peval(F, mu, s))) roots.push_back(s);
    }
  std::sort(roots.begin(), roots.end(),
            [&](const Scalar& a, const Scalar& b) { return F.cmp(a, b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// root scan over a small grid of candidates: integers and low-height
// combinations of powers of the field generator (covers roots of unity)
std::vector<Scalar> grid_roots(const Field& F, const Poly& mu) {
  std::vector<Scalar> roots;
  if (F.characteristic() != 0 || F.degree() < 2) return roots;
  std::vector<Scalar> cands;
  for (int a = -2; a <= 2; ++a) cands.push_back(F.from_int(a));
  int d = F.degree();
  // all sums of 0/+-1/+-2 times z^i for up to two powers
  for (int i = 1; i < d; ++i) {
    Scalar zi = F.pow(F.generator(), mpz_class(static_cast<long>(i)));
    size_t base = cands.size();
    for (size_t t = 0; t < base; ++t)
      for (int b = -2; b <= 2; ++b) {
        if (b == 0) continue;
        cands.push_back(F.add(cands[t], F.mul(F.from_int(b), zi)));
      }
  }
  for (const auto& c : cands)
    if (F.is_zero(peval(F, mu, c))) roots.push_back(c);
  std::sort(roots.begin(), roots.end(),
            [&](const Scalar& a, const Scalar& b) { return F.cmp(a, b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// roots of a degree-2 monic polynomial via the field's square root
std::vector<Scalar> quadratic_roots(const Field& F, const Poly& mu) {
  std::vector<Scalar> roots;
  if (pdeg(mu) != 2 || F.characteristic() == 2) return roots;
  // x^2 + b x + c: x = (-b +- sqrt(b^2 - 4c)) / 2
  const Scalar& b = mu[1];
  const Scalar& c0 = mu[0];
  Scalar disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), c0));
  std::optional<Scalar> sd;
  try {
    sd = F.sqrt(disc);
  } catch (const Error&) {
    return roots;
  }
  if (!sd) return roots;
  Scalar half = F.inv(F.from_int(2));
  roots.push_back(F.mul(F.sub(*sd, b), half));
  roots.push_back(F.mul(F.sub(F.neg(*sd), b), half));
  if (roots[0] == roots[1]) roots.pop_back();
  return roots;
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport AModule::check() const {
  const Algebra& A = *algebra;
  const Field& F = *A.field();
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Mat lhs = action[i].mul(action[j]);
      Mat rhs(A.field(), dim, dim);
      for (int k = 0; k < A.dim(); ++k) {
        const Scalar& c = A.c(i, j, k);
        if (!F.is_zero(c)) rhs = rhs.add(action[k].scaled(c));
      }
      if (lhs != rhs) {
        std::ostringstream os;
        os << "module axiom fails at pair (" << i << "," << j << ")";
        return {false, os.str()};
      }
    }
  if (act(A.unit()) != Mat::identity(A.field(), dim)) return {false, "unit does not act as identity"};
  return {true, ""};
}

Mat AModule::act(const std::vector<Scalar>& a) const {
  const Field& F = *algebra->field();
  Mat m(algebra->field(), dim, dim);
  for (int i = 0; i < algebra->dim(); ++i)
    if (!F.is_zero(a[i])) m = m.add(action[i].scaled(a[i]));
  return m;
}

AModule regular_module(const AlgebraPtr& a) {
  AModule m;
  m.algebra = a;
  m.dim = a->dim();
  for (int i = 0; i < a->dim(); ++i) m.action.push_back(a->left_mult_basis(i));
  return m;
}

std::vector<Mat> hom_space(const AModule& m, const AModule& n) {
  if (m.algebra.get() != n.algebra.get() && !m.algebra->field()->same(*n.algebra->field()))
    throw Error(Errc::FieldMismatch, "hom_space over different algebras");
  const Field& F = *m.algebra->field();
  int dm = m.dim, dn = n.dim;
  int nu = dn * dm;  // X: dn x dm with X rho_m(a) = rho_n(a) X
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < m.algebra->dim(); ++i) {
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        std::vector<Scalar> row(nu, F.zero());
        // (X rho_m(e_i))[r][c] = sum_t X[r][t] rho_m[t][c]
        for (int t = 0; t < dm; ++t)
          row[r * dm + t] = F.add(row[r * dm + t], m.action[i].at(t, c));
        // -(rho_n(e_i) X)[r][c] = -sum_t rho_n[r][t] X[t][c]
        for (int t = 0; t < dn; ++t)
          row[t * dm + c] = F.sub(row[t * dm + c], n.action[i].at(r, t));
        rows.push_back(std::move(row));
      }
  }
  Subspace sol = kernel(Mat::from_rows(m.algebra->field(), rows, nu));
  std::vector<Mat> out;
  for (int b = 0; b < sol.dim(); ++b) {
    Mat X(m.algebra->field(), dn, dm);
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) X.at(r, c) = sol.basis().at(b, r * dm + c);
    out.push_back(std::move(X));
  }
  return out;
}

bool modules_isomorphic(const AModule& m, const AModule& n) {
  if (m.dim != n.dim) return false;
  auto homs = hom_space(m, n);
  for (const auto& h : homs)
    if (inverse(h)) return true;
  // deterministic small combinations in case no basis element is invertible
  if (homs.size() >= 2) {
    const Field& F = *m.algebra->field();
    for (size_t i = 0; i < homs.size(); ++i)
      for (size_t j = i + 1; j < homs.size(); ++j)
        for (int c = -2; c <= 2; ++c) {
          if (c == 0) continue;
          Mat comb = homs[i].add(homs[j].scaled(F.from_int(c)));
          if (inverse(comb)) return true;
        }
  }
  return false;
}

std::vector<Subspace> socle_series(const AModule& m) {
  const auto& rad = radical_series(*m.algebra);
  std::vector<Subspace> out;
  for (int n = 1;; ++n) {
    const Subspace& Jn = rad.power(n);
    std::vector<std::vector<Scalar>> rows;
    for (int b = 0; b < Jn.dim(); ++b) {
      Mat act = m.act(Jn.basis().row(b));
      for (int r = 0; r < m.dim; ++r) rows.push_back(act.row(r));
    }
    Subspace soc = rows.empty() ? rref_subspace(Mat::identity(m.algebra->field(), m.dim))
                                : kernel(Mat::from_rows(m.algebra->field(), rows, m.dim));
    out.push_back(soc);
    if (soc.dim() == m.dim) break;
    if (n > m.algebra->dim() + 1)
      throw Error(Errc::Internal, "socle series fails to exhaust the module");
  }
  return out;
}

AModule submodule(const AModule& m, const Subspace& space) {
  const Field& F = *m.algebra->field();
  AModule out;
  out.algebra = m.algebra;
  out.dim = space.dim();
  for (int i = 0; i < m.algebra->dim(); ++i) {
    Mat act(m.algebra->field(), out.dim, out.dim);
    for (int c = 0; c < out.dim; ++c) {
      auto img = m.action[i].apply(space.basis().row(c));
      auto coords = space.coordinates(img);
      if (!coords) throw Error(Errc::ValidationError, "subspace is not action-stable");
      for (int r = 0; r < out.dim; ++r) act.at(r, c) = (*coords)[r];
    }
    out.action.push_back(std::move(act));
  }
  (void)F;
  return out;
}

AModule quotient_module(const AModule& m, const Subspace& space) {
  const Field& F = *m.algebra->field();
  std::vector<bool> is_pivot(m.dim, false);
  for (int p : space.pivots()) is_pivot[p] = true;
  std::vector<int> comp;
  for (int i = 0; i < m.dim; ++i)
    if (!is_pivot[i]) comp.push_back(i);
  int q = static_cast<int>(comp.size());
  auto reduce = [&](std::vector<Scalar> v) {
    for (int r = 0; r < space.dim(); ++r) {
      int p = space.pivots()[r];
      if (F.is_zero(v[p])) continue;
      Scalar c0 = v[p];
      for (int j = 0; j < m.dim; ++j) v[j] = F.sub(v[j], F.mul(c0, space.basis().at(r, j)));
    }
    std::vector<Scalar> out(q);
    for (int t = 0; t < q; ++t) out[t] = v[comp[t]];
    return out;
  };
  AModule out;
  out.algebra = m.algebra;
  out.dim = q;
  for (int i = 0; i < m.algebra->dim(); ++i) {
    Mat act(m.algebra->field(), q, q);
    for (int c = 0; c < q; ++c) {
      std::vector<Scalar> e(m.dim, F.zero());
      e[comp[c]] = F.one();
      auto img = reduce(m.action[i].apply(e));
      for (int r = 0; r < q; ++r) act.at(r, c) = img[r];
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

// ---------------------------------------------------------------------------
// simple modules

namespace {

// endomorphism algebra basis of M
std::vector<Mat> end_space(const AModule& m) { return hom_space(m, m); }

bool is_scalar_mat(const Field& F, const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j) {
        if (m.at(i, j) != m.at(0, 0)) return false;
      } else if (!F.is_zero(m.at(i, j))) {
        return false;
      }
    }
  return true;
}

// find a proper nonzero submodule of a semisimple module with dim End >= 2,
// or decide SplitFieldRequired. nullopt = schedule exhausted.
std::optional<Subspace> find_submodule(const AModule& m, const std::vector<Mat>& ends,
                                       SplitMix64& rng, bool* proven_division) {
  const Field& F = *m.algebra->field();
  *proven_division = false;
  std::vector<Mat> candidates;
  for (const auto& e : ends) candidates.push_back(e);
  std::vector<Scalar> coeffs{F.one(), F.neg(F.one()), F.from_int(2), F.neg(F.from_int(2))};
  if (F.degree() > 1 && F.characteristic() == 0) {
    coeffs.push_back(F.generator());
    coeffs.push_back(F.neg(F.generator()));
  }
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = 0; j < ends.size(); ++j) {
      if (i == j) continue;
      for (const auto& c : coeffs) candidates.push_back(ends[i].add(ends[j].scaled(c)));
    }
  // seeded random combinations
  for (int t = 0; t < 160; ++t) {
    Mat acc(m.algebra->field(), m.dim, m.dim);
    for (const auto& e : ends) {
      long long r;
      if (F.is_finite())
        r = static_cast<long long>(rng.next() % static_cast<std::uint64_t>(F.characteristic()));
      else
        r = static_cast<long long>(rng.next() % 7) - 3;
      if (r != 0) acc = acc.add(e.scaled(F.from_int(r)));
    }
    candidates.push_back(std::move(acc));
  }
  for (const auto& psi : candidates) {
    if (psi.is_zero() || is_scalar_mat(F, psi)) continue;
    Poly mu = min_poly(psi);
    if (pdeg(mu) < 2) continue;
    std::optional<Poly> divisor;
    if (F.is_finite()) {
      divisor = finite_field_divisor(F, mu, rng);
      if (!divisor && pdeg(mu) == static_cast<int>(ends.size())) {
        // min poly irreducible of full End dimension: End contains a field of
        // the same dimension, so End is a field and M is simple but not split
        *proven_division = true;
        return std::nullopt;
      }
    } else {
      // char 0: squarefree defect, root searches, quadratic formula
      Poly d = pderiv(F, mu);
      Poly h = pgcd(F, mu, d);
      if (pdeg(h) >= 1 && pdeg(h) < pdeg(mu)) {
        divisor = h;
      } else {
        auto roots = rational_roots(F, mu);
        if (roots.empty()) roots = grid_roots(F, mu);
        if (roots.empty() && pdeg(mu) == 2) roots = quadratic_roots(F, mu);
        if (!roots.empty()) divisor = Poly{F.neg(roots[0]), F.one()};
        if (!divisor && F.degree() == 1 && pdeg(mu) <= 3 &&
            pdeg(mu) == static_cast<int>(ends.size()) && ends.size() >= 2) {
          // over Q the rational root search is complete, so a rootless
          // polynomial of degree <= 3 is irreducible and End is a field
          *proven_division = true;
          return std::nullopt;
        }
      }
    }
    if (!divisor) continue;
    Mat g = poly_eval(*divisor, psi);
    Subspace w = kernel(g);
    if (w.dim() > 0 && w.dim() < m.dim) return w;
  }
  return std::nullopt;
}

}  // namespace

SimplesResult simple_modules(const Algebra& a, std::uint64_t seed) {
  const Field& F = *a.field();
  QuotientAlgebra Abar = capital_quotient(a, 1);
  SplitMix64 rng(seed);
  std::deque<AModule> work;
  work.push_back(regular_module(Abar.algebra));
  std::vector<AModule> found;  // simples over Abar
  int guard = 0;
  while (!work.empty()) {
    if (++guard > 4 * a.dim() + 64) throw Error(Errc::Internal, "module splitting runaway");
    AModule m = std::move(work.front());
    work.pop_front();
    if (m.dim == 0) continue;
    if (m.dim == 1) {
      found.push_back(std::move(m));
      continue;
    }
    auto ends = end_space(m);
    if (ends.size() == 1) {
      found.push_back(std::move(m));
      continue;
    }
    bool division = false;
    auto sub = find_submodule(m, ends, rng, &division);
    if (!sub) {
      if (division)
        throw Error(Errc::SplitFieldRequired,
                    "simple module with endomorphism ring larger than the field");
      throw Error(Errc::SplitFailure,
                  "splitting schedule exhausted (seed " + std::to_string(seed) + ")");
    }
    work.push_back(submodule(m, *sub));
    work.push_back(quotient_module(m, *sub));
  }
  // deduplicate up to isomorphism, keep first occurrences
  std::vector<AModule> unique;
  for (auto& s : found) {
    bool dup = false;
    for (const auto& u : unique)
      if (modules_isomorphic(s, u)) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(std::move(s));
  }
  // certificates
  long long sumsq = 0;
  for (const auto& s : unique) {
    if (hom_space(s, s).size() != 1)
      throw Error(Errc::SplitFieldRequired, "a simple has End of dimension > 1");
    sumsq += static_cast<long long>(s.dim) * s.dim;
  }
  if (sumsq != Abar.algebra->dim())
    throw Error(Errc::SplitFieldRequired,
                "sum of squared simple dimensions is " + std::to_string(sumsq) + ", expected " +
                    std::to_string(Abar.algebra->dim()));
  // pull back to A along the projection
  SimplesResult out;
  out.seed = seed;
  for (const auto& s : unique) {
    AModule lifted;
    lifted.algebra = a.shared_from_this();
    lifted.dim = s.dim;
    for (int i = 0; i < a.dim(); ++i) {
      Mat act(a.field(), s.dim, s.dim);
      for (int t = 0; t < Abar.algebra->dim(); ++t) {
        const Scalar& c = Abar.projection.at(t, i);
        if (!F.is_zero(c)) act = act.add(s.action[t].scaled(c));
      }
      lifted.action.push_back(std::move(act));
    }
    out.simples.push_back(std::move(lifted));
  }
  // deterministic order: by dimension, then by canonical action comparison
  std::stable_sort(out.simples.begin(), out.simples.end(),
                   [](const AModule& x, const AModule& y) { return x.dim < y.dim; });
  return out;
}

// ---------------------------------------------------------------------------
// Ext^1 via skew derivations

Ext1Space ext1_space(const AModule& v, const AModule& w) {
  const Algebra& A = *v.algebra;
  if (w.algebra.get() != &A) throw Error(Errc::ShapeMismatch, "ext1_space needs one algebra");
  const Field& F = *A.field();
  int n = A.dim(), dv = v.dim, dw = w.dim;
  int nu = n * dw * dv;
  auto uidx = [&](int i, int r, int c) { return (i * dw + r) * dv + c; };
  std::vector<std::vector<Scalar>> rows;
  // xi(1) = 0
  for (int r = 0; r < dw; ++r)
    for (int c = 0; c < dv; ++c) {
      std::vector<Scalar> row(nu, F.zero());
      for (int i = 0; i < n; ++i)
        if (!F.is_zero(A.unit()[i])) row[uidx(i, r, c)] = A.unit()[i];
      rows.push_back(std::move(row));
    }
  // xi(e_i e_j) = xi(e_i) gV(e_j) + gW(e_i) xi(e_j)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < dw; ++r)
        for (int c = 0; c < dv; ++c) {
          std::vector<Scalar> row(nu, F.zero());
          for (int k = 0; k < n; ++k) {
            const Scalar& ck = A.c(i, j, k);
            if (!F.is_zero(ck)) row[uidx(k, r, c)] = F.add(row[uidx(k, r, c)], ck);
          }
          for (int t = 0; t < dv; ++t)
            row[uidx(i, r, t)] = F.sub(row[uidx(i, r, t)], v.action[j].at(t, c));
          for (int t = 0; t < dw; ++t)
            row[uidx(j, t, c)] = F.sub(row[uidx(j, t, c)], w.action[i].at(r, t));
          rows.push_back(std::move(row));
        }
  Subspace cocycles = kernel(Mat::from_rows(A.field(), rows, nu));
  // inner: partial(f)(a) = f gV(a) - gW(a) f
  std::vector<std::vector<Scalar>> brows;
  for (int fr = 0; fr < dw; ++fr)
    for (int fc = 0; fc < dv; ++fc) {
      std::vector<Scalar> vec(nu, F.zero());
      for (int i = 0; i < n; ++i) {
        for (int c = 0; c < dv; ++c)
          vec[uidx(i, fr, c)] = F.add(vec[uidx(i, fr, c)], v.action[i].at(fc, c));
        for (int r = 0; r < dw; ++r)
          vec[uidx(i, r, fc)] = F.sub(vec[uidx(i, r, fc)], w.action[i].at(r, fr));
      }
      brows.push_back(std::move(vec));
    }
  Subspace coboundaries = rref_subspace(A.field(), brows, nu);
  if (!cocycles.contains(coboundaries))
    throw Error(Errc::Internal, "inner derivations escape the cocycle space");
  Ext1Space out;
  out.cocycles = cocycles;
  out.coboundaries = coboundaries;
  out.dim = cocycles.dim() - coboundaries.dim();
  // coset representatives: cocycle basis rows independent modulo coboundaries
  Subspace acc = coboundaries;
  for (int b = 0; b < cocycles.dim() && static_cast<int>(out.basis.size()) < out.dim; ++b) {
    auto row = cocycles.basis().row(b);
    Subspace bigger = sum(acc, rref_subspace(A.field(), {row}, nu));
    if (bigger.dim() > acc.dim()) {
      acc = bigger;
      ExtClass cls;
      cls.source = v;
      cls.target = w;
      for (int i = 0; i < n; ++i) {
        Mat xi(A.field(), dw, dv);
        for (int r = 0; r < dw; ++r)
          for (int c = 0; c < dv; ++c) xi.at(r, c) = row[uidx(i, r, c)];
        cls.xi.push_back(std::move(xi));
      }
      out.basis.push_back(std::move(cls));
    }
  }
  return out;
}

namespace {

void validate_cocycle(const ExtClass& xi) {
  const Algebra& A = *xi.source.algebra;
  const Field& F = *A.field();
  int n = A.dim();
  // xi(1) = 0
  Mat at_unit(A.field(), xi.target.dim, xi.source.dim);
  for (int i = 0; i < n; ++i)
    if (!F.is_zero(A.unit()[i])) at_unit = at_unit.add(xi.xi[i].scaled(A.unit()[i]));
  if (!at_unit.is_zero()) throw Error(Errc::InvalidCocycle, "xi(1) != 0");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs(A.field(), xi.target.dim, xi.source.dim);
      for (int k = 0; k < n; ++k) {
        const Scalar& c = A.c(i, j, k);
        if (!F.is_zero(c)) lhs = lhs.add(xi.xi[k].scaled(c));
      }
      Mat rhs = xi.xi[i].mul(xi.source.action[j]).add(xi.target.action[i].mul(xi.xi[j]));
      if (lhs != rhs)
        throw Error(Errc::InvalidCocycle, "skew derivation identity fails at (" +
                                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

}  // namespace

AModule extension_module(const ExtClass& xi) {
  validate_cocycle(xi);
  const Algebra& A = *xi.source.algebra;
  int dv = xi.source.dim, dw = xi.target.dim;
  AModule out;
  out.algebra = xi.source.algebra;
  out.dim = dv + dw;
  for (int i = 0; i < A.dim(); ++i) {
    Mat act(A.field(), out.dim, out.dim);
    for (int r = 0; r < dv; ++r)
      for (int c = 0; c < dv; ++c) act.at(r, c) = xi.source.action[i].at(r, c);
    for (int r = 0; r < dw; ++r)
      for (int c = 0; c < dw; ++c) act.at(dv + r, dv + c) = xi.target.action[i].at(r, c);
    for (int r = 0; r < dw; ++r)
      for (int c = 0; c < dv; ++c) act.at(dv + r, c) = xi.xi[i].at(r, c);
    out.action.push_back(std::move(act));
  }
  return out;
}

std::vector<Scalar> trace_star(const ExtClass& xi) {
  if (xi.source.dim != xi.target.dim)
    throw Error(Errc::ShapeMismatch, "trace_star needs V = W");
  const Algebra& A = *xi.source.algebra;
  std::vector<Scalar> f(A.dim());
  for (int i = 0; i < A.dim(); ++i) f[i] = xi.xi[i].trace();
  return f;
}

OkuyamaReport okuyama_check(const Algebra& a, std::uint64_t seed) {
  const Field& F = *a.field();
  auto simples = simple_modules(a, seed);
  DualSubspace s1 = sym_n(a, 1);
  DualSubspace s2 = sym_n(a, 2);
  OkuyamaReport rep;
  rep.seed = seed;
  rep.dim_sym1 = s1.dim();
  rep.dim_sym2 = s2.dim();
  std::vector<std::vector<Scalar>> rhs_rows;
  for (int b = 0; b < s1.space.dim(); ++b) rhs_rows.push_back(s1.space.basis().row(b));
  int expected = s1.dim();
  for (const auto& L : simples.simples) {
    auto ext = ext1_space(L, L);
    rep.ext_dims.push_back(ext.dim);
    std::vector<std::vector<Scalar>> trows;
    for (const auto& cls : ext.basis) trows.push_back(trace_star(cls));
    Subspace img = rref_subspace(a.field(), trows, a.dim());
    rep.trace_injective.push_back(img.dim() == ext.dim);
    for (auto& r : trows) rhs_rows.push_back(std::move(r));
    expected += ext.dim;
  }
  Subspace rhs = rref_subspace(a.field(), rhs_rows, a.dim());
  rep.dim_rhs = rhs.dim();
  rep.direct_sum = rhs.dim() == expected;
  rep.subspace_equal = rhs == s2.space;
  rep.pass = rep.direct_sum && rep.subspace_equal;
  for (bool inj : rep.trace_injective) rep.pass = rep.pass && inj;
  (void)F;
  return rep;
}

}  // namespace loewy
