#include "weyl/moyal.hpp"

#include <stdexcept>

namespace weyl {

const char* to_string(BracketKind k) {
  switch (k) {
    case BracketKind::lie: return "lie";
    case BracketKind::super: return "super";
    case BracketKind::twisted_lie: return "twisted_lie";
    case BracketKind::twisted_super: return "twisted_super";
  }
  return "?";
}

BracketKind bracket_kind_from_string(const std::string& s) {
  if (s == "lie") return BracketKind::lie;
  if (s == "super") return BracketKind::super;
  if (s == "twisted_lie") return BracketKind::twisted_lie;
  if (s == "twisted_super") return BracketKind::twisted_super;
  throw std::invalid_argument("unknown bracket kind '" + s + "'");
}

namespace {

// Elements of S (x) S as exponent vectors of length 4n: (p, q) of the left
// factor followed by (p', q') of the right factor.
using Tensor = Poly::TermMap;

void add_to(Tensor& t, MultiIndex e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor tensor(const Poly& f, const Poly& g) {
  Tensor t;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) t.emplace(a.concat(b), ca * cb);
  return t;
}

// sum_i d/dp_i (x) d/dq_i - d/dq_i (x) d/dp_i
Tensor apply_wp(const Tensor& t, unsigned n) {
  Tensor out;
  for (const auto& [e, c] : t) {
    for (unsigned i = 0; i < n; ++i) {
      unsigned fp = i, fq = n + i, gp = 2 * n + i, gq = 3 * n + i;
      if (e[fp] && e[gq]) {
        MultiIndex d = e;
        --d[fp];
        --d[gq];
        add_to(out, std::move(d), c * Scalar(static_cast<long>(e[fp]) * e[gq]));
      }
      if (e[fq] && e[gp]) {
        MultiIndex d = e;
        --d[fq];
        --d[gp];
        add_to(out, std::move(d), -(c * Scalar(static_cast<long>(e[fq]) * e[gp])));
      }
    }
  }
  return out;
}

void collapse_into(Poly& r, const Tensor& t, unsigned n, const Scalar& scale, int max_degree) {
  unsigned nv = 2 * n;
  for (const auto& [e, c] : t) {
    if (max_degree >= 0 && e.total() > static_cast<unsigned>(max_degree)) continue;
    MultiIndex m(nv);
    for (unsigned v = 0; v < nv; ++v) m[v] = e[v] + e[nv + v];
    r.add_term(m, c * scale);
  }
}

void check_pair(const Poly& f, const Poly& g) {
  require_same_space(f, g);
  require_symplectic(f);
}

Poly star_impl(const Poly& f, const Poly& g, int max_degree, const Scalar& t) {
  check_pair(f, g);
  unsigned n = f.space().n;
  Poly r(f.space());
  if (f.is_zero() || g.is_zero()) return r;
  Tensor cur = tensor(f, g);
  Scalar scale(1);
  for (unsigned k = 0; !cur.empty(); ++k) {
    if (k > 0) {
      cur = apply_wp(cur, n);
      scale *= t / Scalar(2 * static_cast<long>(k));
      if (scale.is_zero()) break;
    }
    collapse_into(r, cur, n, scale, max_degree);
  }
  return r;
}

}  // namespace

Poly ck_coefficient(unsigned k, const Poly& f, const Poly& g) {
  check_pair(f, g);
  unsigned n = f.space().n;
  Tensor cur = tensor(f, g);
  for (unsigned s = 0; s < k && !cur.empty(); ++s) cur = apply_wp(cur, n);
  Poly r(f.space());
  Scalar scale = Scalar(1) / Scalar(mpz_class(mpz_class(1) << k) * factorial(k));
  collapse_into(r, cur, n, scale, -1);
  return r;
}

Poly star(const Poly& f, const Poly& g, const DeformationParameter& t) {
  return star_impl(f, g, -1, t.t);
}

Poly star_truncated(const Poly& f, const Poly& g, unsigned max_degree,
                    const DeformationParameter& t) {
  return star_impl(f, g, static_cast<int>(max_degree), t.t);
}

Poly star_n1_closed(const Poly& f, const Poly& g, const DeformationParameter& t) {
  check_pair(f, g);
  if (f.space().n != 1) throw std::invalid_argument("star_n1_closed requires n = 1");
  Poly r(f.space());
  if (f.is_zero() || g.is_zero()) return r;
  int kmax = std::min(f.degree(), g.degree());
  Scalar scale(1);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) scale *= t.t / Scalar(2L * k);
    Poly ck(f.space());
    for (int s = 0; s <= k; ++s) {
      int rr = k - s;
      Poly df = partial_derivative(partial_derivative(f, 0, rr), 1, s);
      Poly dg = partial_derivative(partial_derivative(g, 0, s), 1, rr);
      Scalar c(binomial(k, s));
      if (s % 2) c = -c;
      ck.add_scaled(df * dg, c);
    }
    r.add_scaled(ck, scale);
  }
  return r;
}

Poly bracket(BracketKind kind, const Poly& f, const Poly& g) {
  check_pair(f, g);
  const Poly fp[2] = {f.even_part(), f.odd_part()};
  const Poly gp[2] = {g.even_part(), g.odd_part()};
  Poly r(f.space());
  for (int a = 0; a < 2; ++a) {
    if (fp[a].is_zero()) continue;
    for (int b = 0; b < 2; ++b) {
      if (gp[b].is_zero()) continue;
      int e = 0;
      switch (kind) {
        case BracketKind::lie: e = 0; break;
        case BracketKind::super: e = a * b; break;
        case BracketKind::twisted_lie: e = a; break;
        case BracketKind::twisted_super: e = a * (b + 1); break;
      }
      r += star(fp[a], gp[b]);
      r.add_scaled(star(gp[b], fp[a]), e % 2 ? 1 : -1);
    }
  }
  return r;
}

Scalar supertrace(const Poly& f) {
  require_symplectic(f);
  return eval_zero(f);
}

Scalar kappa(const Poly& f, const Poly& g) { return supertrace(star_truncated(f, g, 0)); }

Scalar b_form(const Poly& f, const Poly& g) {
  check_pair(f, g);
  const Poly fp[2] = {f.even_part(), f.odd_part()};
  const Poly gp[2] = {g.even_part(), g.odd_part()};
  Scalar r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (fp[a].is_zero() || gp[b].is_zero()) continue;
      Scalar k = kappa(fp[a], gp[b]);
      r += (a * b + 1) % 2 ? -k : k;
    }
  return r;
}

std::vector<Scalar> laguerre_coefficients(unsigned beta, long alpha) {
  std::vector<Scalar> prev{Scalar(1)};
  if (beta == 0) return prev;
  std::vector<Scalar> cur{Scalar(1 + alpha), Scalar(-1)};
  for (unsigned k = 1; k < beta; ++k) {
    std::vector<Scalar> next(k + 2);
    Scalar a(static_cast<long>(2 * k + 1) + alpha), b(static_cast<long>(k) + alpha);
    for (unsigned m = 0; m < cur.size(); ++m) {
      next[m] += a * cur[m];
      next[m + 1] -= cur[m];
    }
    for (unsigned m = 0; m < prev.size(); ++m) next[m] -= b * prev[m];
    Scalar inv = Scalar(1) / Scalar(static_cast<long>(k + 1));
    for (auto& c : next) c *= inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly laguerre_poly(unsigned beta, long alpha, const Poly& x) {
  auto c = laguerre_coefficients(beta, alpha);
  Poly r(x.space());
  for (std::size_t m = c.size(); m-- > 0;) {
    r = r * x;
    r += Poly::constant(x.space(), c[m]);
  }
  return r;
}

Poly star_monomial_closed(unsigned i, unsigned j) {
  Space s = Space::symplectic(1);
  Poly x = Poly::p(1, 1) * Poly::q(1, 1) * Scalar(2);
  unsigned lo = std::min(i, j);
  Scalar c = Scalar(factorial(lo)) / Scalar(mpz_class(mpz_class(1) << lo));
  if (lo % 2) c = -c;
  Poly l = laguerre_poly(lo, static_cast<long>(i > j ? i - j : j - i), x);
  MultiIndex e(2);
  if (i >= j) e[1] = i - j;
  else e[0] = j - i;
  return l * Poly::monomial(s, e, c);
}

}  // namespace weyl
