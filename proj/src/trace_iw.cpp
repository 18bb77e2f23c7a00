#include "weyl/trace_iw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "weyl/moyal.hpp"

namespace weyl {

const char* to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::converged: return "converged";
    case SeriesStatus::diverged: return "diverged";
    case SeriesStatus::undetermined: return "undetermined";
  }
  return "?";
}

std::string format_number(std::complex<double> z) {
  char buf[96];
  if (z.imag() == 0) std::snprintf(buf, sizeof buf, "%.17g", z.real());
  else if (z.real() == 0) std::snprintf(buf, sizeof buf, "%.17g*i", z.imag());
  else std::snprintf(buf, sizeof buf, "%.17g%+.17g*i", z.real(), z.imag());
  return buf;
}

std::string TraceResult::value_string() const { return exact ? partial.to_string() : format_number(value); }

SeriesStatus GradedSeries::status() const {
  bool undetermined = false;
  for (const auto& c : components) {
    if (c.status == SeriesStatus::diverged) return SeriesStatus::diverged;
    if (c.status == SeriesStatus::undetermined) undetermined = true;
  }
  return undetermined ? SeriesStatus::undetermined : SeriesStatus::converged;
}

Poly GradedSeries::sum() const {
  Poly out(Space::symplectic(n));
  for (const auto& c : components)
    if (c.status == SeriesStatus::converged) out += c.value;
  return out;
}

Scalar finite_rank_supertrace(const LinOp& t) {
  const auto* f = std::get_if<FiniteRankOp>(&t.kind());
  if (!f) throw std::invalid_argument("supertrace needs a finite rank operator");
  Scalar s;
  for (const auto& [in, out] : f->table) {
    Scalar d = out.coefficient(in);
    s += in.total() % 2 ? -d : d;
  }
  return s;
}

namespace {

// The normal-symbol series handed out batch by batch.
struct BatchSource {
  unsigned n = 1;
  unsigned onset = 0;
  // alphas with |I| = l, or nothing when the source cannot say
  std::function<std::optional<PolyTable>(unsigned)> batch;
  // every batch after this one is zero
  std::optional<unsigned> last;
};

BatchSource source_of(const LinOp& t) {
  BatchSource src;
  src.n = t.n();
  src.onset = t.onset();
  auto bound = t.degree_bound();
  src.batch = [&t, bound](unsigned l) -> std::optional<PolyTable> {
    if (bound && l > *bound) return std::nullopt;
    PolyTable b;
    for (const auto& order : monomials_of_degree(t.n(), l)) {
      Poly c = diffop_coefficient(t, order);
      if (!c.is_zero()) b.emplace(order, std::move(c));
    }
    return b;
  };
  return src;
}

BatchSource source_of(const NormalSymbol& sym) {
  BatchSource src;
  src.n = sym.n;
  std::optional<unsigned> trunc = sym.truncation;
  src.batch = [&sym, trunc](unsigned l) -> std::optional<PolyTable> {
    if (trunc && l > *trunc) return std::nullopt;
    PolyTable b;
    for (const auto& [order, a] : sym.alphas)
      if (order.total() == l) b.emplace(order, a);
    return b;
  };
  if (!trunc) src.last = sym.alphas.empty() ? 0u : std::prev(sym.alphas.end())->first.total();
  return src;
}

double max_abs(const Poly& f) {
  double m = 0;
  for (const auto& [e, c] : f.terms()) m = std::max(m, c.abs());
  return m;
}

struct ComponentState {
  double prev_mag = 0, prev_ratio = 0;
  bool has_ratio = false;
  unsigned small_run = 0, zero_run = 0, grow_run = 0;
  bool decided = false;
};

GradedSeries sum_series(const BatchSource& src, unsigned max_degree, const SummationPolicy& pol) {
  GradedSeries out{src.n, max_degree, {}};
  Space s = Space::symplectic(src.n);
  for (unsigned k = 0; k <= max_degree; ++k) out.components.push_back({k, SeriesStatus::undetermined, Poly(s), 0, false});
  std::vector<ComponentState> st(max_degree + 1);

  for (unsigned l = 0; l < pol.max_terms; ++l) {
    if (src.last && l > *src.last) {
      for (unsigned k = 0; k <= max_degree; ++k)
        if (!st[k].decided) {
          out.components[k].status = SeriesStatus::converged;
          out.components[k].exact = true;
        }
      break;
    }
    auto alphas = src.batch(l);
    if (!alphas) break;
    Poly batch(s);
    for (const auto& [order, a] : *alphas) batch += ordered_product(a, order, max_degree);

    bool any_diverged = false, all_decided = true;
    for (unsigned k = 0; k <= max_degree; ++k) {
      ComponentState& cs = st[k];
      if (cs.decided) continue;
      SeriesComponent& comp = out.components[k];
      Poly part = batch.homogeneous_part(k);
      comp.value += part;
      comp.terms_used = l + 1;
      double mag = max_abs(part);

      if (l >= src.onset && mag > 0 && cs.prev_mag > 0) {
        double ratio = mag / cs.prev_mag;
        bool grows = ratio >= 1 - 1e-12 && (!cs.has_ratio || ratio >= cs.prev_ratio * (1 - 1e-9));
        cs.grow_run = grows ? cs.grow_run + 1 : 0;
        cs.prev_ratio = ratio;
        cs.has_ratio = true;
      } else {
        cs.grow_run = 0;
        cs.has_ratio = false;
      }
      cs.prev_mag = mag;

      if (cs.grow_run >= pol.diverge_run || mag > pol.cap || max_abs(comp.value) > pol.cap) {
        comp.status = SeriesStatus::diverged;
        cs.decided = true;
        any_diverged = true;
        continue;
      }
      if (l >= std::max(src.onset, k)) {
        if (mag < pol.tol) {
          ++cs.small_run;
          cs.zero_run = part.is_zero() ? cs.zero_run + 1 : 0;
        } else {
          cs.small_run = cs.zero_run = 0;
        }
        if (cs.small_run >= pol.converge_run) {
          comp.status = SeriesStatus::converged;
          comp.exact = cs.zero_run >= pol.converge_run;
          cs.decided = true;
          continue;
        }
      }
      all_decided = false;
    }
    if (any_diverged || all_decided) break;
  }
  return out;
}

TraceResult trace_of(const GradedSeries& g) {
  const SeriesComponent& c = g.component(0);
  TraceResult r;
  r.status = c.status;
  r.partial = eval_zero(c.value);
  r.value = r.partial.to_complex();
  r.terms_used = c.terms_used;
  r.exact = c.exact;
  return r;
}

TraceResult renormalized(TraceResult r, unsigned n) {
  Scalar scale = Scalar::rational(1, 2).pow(n);
  r.partial *= scale;
  r.value = r.partial.to_complex();
  return r;
}

}  // namespace

TraceResult str_wbar(const LinOp& t, const SummationPolicy& policy) {
  return trace_of(sum_series(source_of(t), 0, policy));
}

TraceResult str_wbar(const NormalSymbol& sym, const SummationPolicy& policy) {
  return trace_of(sum_series(source_of(sym), 0, policy));
}

TraceResult rstr(const LinOp& t, const SummationPolicy& policy) {
  return renormalized(str_wbar(t, policy), t.n());
}

TraceResult rstr(const NormalSymbol& sym, const SummationPolicy& policy) {
  return renormalized(str_wbar(sym, policy), sym.n);
}

BinomialTailReport binomial_tail_identity_check(const MultiIndex& index, unsigned batches) {
  unsigned n = static_cast<unsigned>(index.size());
  BinomialTailReport r;
  r.index = index;
  r.limit = Scalar(mpz_class(1) << (index.total() + n));
  Scalar acc;
  r.monotone = true;
  for (unsigned l = 0; l < batches; ++l) {
    Scalar batch;
    for (const auto& s : monomials_of_degree(n, l)) {
      mpz_class c = 1;
      for (unsigned i = 0; i < n; ++i) c *= binomial(index[i] + s[i], s[i]);
      batch += Scalar(c);
    }
    batch *= Scalar::rational(1, 2).pow(l);
    if (!(batch.re() > 0)) r.monotone = false;
    acc += batch;
    r.partial_sums.push_back(acc);
  }
  r.gap = r.limit - acc;
  return r;
}

GradedSeries iw_numeric(const LinOp& t, unsigned max_degree, const SummationPolicy& policy) {
  return sum_series(source_of(t), max_degree, policy);
}

GradedSeries iw_numeric(const NormalSymbol& sym, unsigned max_degree, const SummationPolicy& policy) {
  return sum_series(source_of(sym), max_degree, policy);
}

Poly exp_truncated(const Poly& f, unsigned max_degree) {
  if (!eval_zero(f).is_zero()) throw std::invalid_argument("exponent must vanish at 0");
  Poly out = Poly::constant(f.space(), 1), term = out;
  for (unsigned k = 1; k <= max_degree; ++k) {
    term = (term * f).truncated(max_degree) * Scalar::rational(1, k);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

bool scaling_in_domain(const Scalar& lambda) { return (Scalar(1) - lambda).norm2() < 4; }

namespace {

void require_domain(const Scalar& lambda) {
  if (!scaling_in_domain(lambda))
    throw std::domain_error("closed form needs |1 - lambda| < 2, got lambda = " + lambda.to_string());
}

Poly sum_pq(unsigned n) {
  Poly s(Space::symplectic(n));
  for (unsigned i = 1; i <= n; ++i) s += Poly::p(n, i) * Poly::q(n, i);
  return s;
}

Poly scaling_closed(const Scalar& lambda, unsigned n, unsigned max_degree) {
  require_domain(lambda);
  Scalar pref = (Scalar(2) / (Scalar(1) + lambda)).pow(n);
  Scalar c = Scalar(2) * (lambda - Scalar(1)) / (lambda + Scalar(1));
  return exp_truncated(sum_pq(n) * c, max_degree) * pref;
}

Poly elementary_closed(const ElementaryOp& e, unsigned n, unsigned max_degree) {
  Poly out = Poly::constant(Space::symplectic(n), 1);
  for (unsigned k = 0; k < n; ++k) {
    unsigned i = e.out[k], j = e.in[k];
    Poly p = Poly::p(n, k + 1), q = Poly::q(n, k + 1), pq = p * q;
    Poly factor = exp_truncated(pq * Scalar(-2), max_degree);
    Scalar c;
    if (j <= i) {
      c = Scalar(mpz_class(1) << (i - j + 1));
      if (j % 2) c = -c;
      factor = (factor * laguerre_poly(j, static_cast<long>(i - j), pq * Scalar(4))).truncated(max_degree);
      factor = (factor * q.pow(i - j)).truncated(max_degree);
    } else {
      c = Scalar(mpz_class(1) << (j - i + 1)) * Scalar(mpq_class(factorial(i), factorial(j)));
      if (i % 2) c = -c;
      factor = (factor * laguerre_poly(i, static_cast<long>(j - i), pq * Scalar(4))).truncated(max_degree);
      factor = (factor * p.pow(j - i)).truncated(max_degree);
    }
    out = (out * factor * c).truncated(max_degree);
  }
  return out;
}

// a + b s with s^2 = lambda
struct QuadExt {
  Scalar a, b;
  const Scalar* lambda;

  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, lambda}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b, lambda}; }
  QuadExt operator*(const QuadExt& o) const {
    return {a * o.a + b * o.b * *lambda, a * o.b + b * o.a, lambda};
  }
  QuadExt operator*(const Scalar& c) const { return {a * c, b * c, lambda}; }
  QuadExt inverse() const {
    Scalar norm = a * a - b * b * *lambda;
    return {a / norm, -b / norm, lambda};
  }
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }
  Scalar rational() const {
    if (!b.is_zero()) throw std::logic_error("half-angle value left the base field");
    return a;
  }
};

GradedSeries exact_series(const Poly& f, unsigned n, unsigned max_degree) {
  GradedSeries g{n, max_degree, {}};
  Poly t = f.truncated(max_degree);
  for (unsigned k = 0; k <= max_degree; ++k)
    g.components.push_back({k, SeriesStatus::converged, t.homogeneous_part(k), 0, true});
  return g;
}

}  // namespace

Poly iw_expeuler_half_angle(const Scalar& lambda, unsigned n, unsigned max_degree) {
  require_domain(lambda);
  if (lambda.is_zero()) throw std::domain_error("lambda = e^tau cannot vanish");
  QuadExt s{Scalar(0), Scalar(1), &lambda};
  QuadExt half_exp = s, half_exp_inv = s.inverse();
  QuadExt cosh = (half_exp + half_exp_inv) * Scalar::rational(1, 2);
  QuadExt sinh = (half_exp - half_exp_inv) * Scalar::rational(1, 2);
  Scalar pref = (half_exp_inv / cosh).rational();
  Scalar tanh = (sinh / cosh).rational();
  return exp_truncated(sum_pq(n) * (Scalar(2) * tanh), max_degree) * pref.pow(n);
}

GradedSeries iw_closed_form(const SpecialOp& op, unsigned n, unsigned max_degree) {
  Poly f(Space::symplectic(n));
  if (auto* e = std::get_if<ElementaryOp>(&op)) {
    if (e->in.size() != n || e->out.size() != n) throw std::invalid_argument("elementary operator does not match n");
    f = elementary_closed(*e, n, max_degree);
  } else if (auto* s = std::get_if<ScalingOp>(&op)) {
    f = scaling_closed(s->lambda, n, max_degree);
  } else {
    f = iw_expeuler_half_angle(std::get<ExpEulerOp>(op).lambda, n, max_degree);
  }
  return exact_series(f, n, max_degree);
}

Scalar rstr_closed_form(const SpecialOp& op, unsigned n) {
  return eval_zero(iw_closed_form(op, n, 0).sum()) * Scalar::rational(1, 2).pow(n);
}

}  // namespace weyl
