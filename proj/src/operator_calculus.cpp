#include "weyl/operator_calculus.hpp"

#include <stdexcept>

#include "weyl/moyal.hpp"
#include "weyl/weyl_oracle.hpp"

namespace weyl {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

void require_plain(const Poly& f) {
  if (f.space().kind != VarKind::plain) throw std::invalid_argument("expected plain variables");
}

Scalar inverse_factorial(const MultiIndex& e) { return Scalar(1) / Scalar(e.factorial()); }

}  // namespace

std::string special_name(const SpecialOp& op) {
  return std::visit(overloaded{[](const ElementaryOp&) { return std::string("E"); },
                               [](const ScalingOp&) { return std::string("S"); },
                               [](const ExpEulerOp&) { return std::string("expEuler"); }},
                    op);
}

Scalar special_lambda(const SpecialOp& op) {
  if (auto* s = std::get_if<ScalingOp>(&op)) return s->lambda;
  if (auto* e = std::get_if<ExpEulerOp>(&op)) return e->lambda;
  throw std::invalid_argument("elementary operator has no lambda");
}

LinOp::LinOp(unsigned n, Kind kind) : n_(n), kind_(std::move(kind)) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (auto* f = std::get_if<FiniteRankOp>(&kind_)) {
    for (auto it = f->table.begin(); it != f->table.end();) {
      if (it->first.size() != n || it->second.space() != Space::plain(n))
        throw std::invalid_argument("finite rank table does not match n");
      it = it->second.is_zero() ? f->table.erase(it) : std::next(it);
    }
  }
  if (auto* s = std::get_if<SpecialOp>(&kind_)) {
    if (auto* e = std::get_if<ElementaryOp>(s))
      if (e->in.size() != n || e->out.size() != n)
        throw std::invalid_argument("elementary operator does not match n");
  }
}

LinOp LinOp::finite_rank(unsigned n, PolyTable table) { return LinOp(n, FiniteRankOp{std::move(table)}); }

LinOp LinOp::rule(unsigned n, std::function<Poly(const MultiIndex&)> action, unsigned degree_bound,
                  std::string name) {
  return LinOp(n, RuleOp{std::move(action), degree_bound, std::move(name)});
}

LinOp LinOp::special(unsigned n, SpecialOp op) { return LinOp(n, std::move(op)); }

LinOp LinOp::elementary(const MultiIndex& out, const MultiIndex& in) {
  return special(static_cast<unsigned>(in.size()), ElementaryOp{out, in});
}

LinOp LinOp::derivative(unsigned n, unsigned i, unsigned degree_bound) {
  if (i == 0 || i > n) throw std::out_of_range("derivative index out of range");
  return rule(
      n, [n, i](const MultiIndex& e) { return partial_derivative(Poly::monomial(Space::plain(n), e), i - 1); },
      degree_bound, "d/dx" + std::to_string(i));
}

std::optional<unsigned> LinOp::degree_bound() const {
  if (auto* r = std::get_if<RuleOp>(&kind_)) return r->degree_bound;
  return std::nullopt;
}

unsigned LinOp::onset() const {
  return std::visit(overloaded{[](const FiniteRankOp& f) {
                                 return f.table.empty() ? 0u : std::prev(f.table.end())->first.total();
                               },
                               [](const RuleOp&) { return 0u; },
                               [](const SpecialOp& s) {
                                 auto* e = std::get_if<ElementaryOp>(&s);
                                 return e ? e->in.total() : 0u;
                               }},
                    kind_);
}

Poly LinOp::apply_monomial(const MultiIndex& e) const {
  if (e.size() != n_) throw std::invalid_argument("monomial does not match n");
  Space s = space();
  return std::visit(
      overloaded{[&](const FiniteRankOp& f) {
                   auto it = f.table.find(e);
                   return it == f.table.end() ? Poly(s) : it->second;
                 },
                 [&](const RuleOp& r) {
                   if (e.total() > r.degree_bound)
                     throw std::domain_error(r.name + " queried beyond its degree bound");
                   return r.action(e);
                 },
                 [&](const SpecialOp& sp) {
                   if (auto* el = std::get_if<ElementaryOp>(&sp))
                     return e == el->in ? Poly::monomial(s, el->out) : Poly(s);
                   return Poly::monomial(s, e, special_lambda(sp).pow(e.total()));
                 }},
      kind_);
}

Poly LinOp::apply(const Poly& f) const {
  if (f.space() != space()) throw std::invalid_argument("operator applied outside its space");
  Poly out(space());
  for (const auto& [e, c] : f.terms()) out.add_scaled(apply_monomial(e), c);
  return out;
}

std::string LinOp::describe() const {
  return std::visit(
      overloaded{[](const FiniteRankOp& f) { return "finite_rank[" + std::to_string(f.table.size()) + "]"; },
                 [](const RuleOp& r) { return r.name; },
                 [](const SpecialOp& s) {
                   if (auto* e = std::get_if<ElementaryOp>(&s))
                     return "E(" + e->out.to_string() + "," + e->in.to_string() + ")";
                   return special_name(s) + "(" + special_lambda(s).to_string() + ")";
                 }},
      kind_);
}

Poly hopf_coproduct(const Poly& f) {
  require_plain(f);
  unsigned n = f.space().n;
  Space d = Space::plain(2 * n);
  Poly out(d);
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::constant(d, c);
    for (unsigned i = 0; i < n; ++i)
      if (e[i]) term = term * (Poly::x(2 * n, i + 1) + Poly::x(2 * n, n + i + 1)).pow(e[i]);
    out += term;
  }
  return out;
}

Poly antipode(const Poly& f) {
  require_plain(f);
  Poly out(f.space());
  for (const auto& [e, c] : f.terms()) out.add_term(e, e.total() % 2 ? -c : c);
  return out;
}

Scalar counit(const Poly& f) { return eval_zero(f); }

Poly tensor_apply(const Poly& doubled, const std::function<Poly(const MultiIndex&)>& left,
                  const std::function<Poly(const MultiIndex&)>& right) {
  require_plain(doubled);
  if (doubled.nvars() % 2) throw std::invalid_argument("tensor element needs 2n variables");
  unsigned n = doubled.nvars() / 2;
  Poly out(Space::plain(n));
  for (const auto& [e, c] : doubled.terms())
    out.add_scaled(left(e.slice(0, n)) * right(e.slice(n, n)), c);
  return out;
}

Scalar duality_pairing(const Poly& p, const Poly& f) {
  require_plain(p);
  require_same_space(p, f);
  Scalar s;
  for (const auto& [e, c] : p.terms()) {
    Scalar d = f.coefficient(e);
    if (!d.is_zero()) s += c * d * Scalar(e.factorial());
  }
  return s;
}

Poly truncated_exponential(const std::vector<Scalar>& v, unsigned degree) {
  unsigned n = static_cast<unsigned>(v.size());
  Space s = Space::plain(n);
  Poly out(s);
  for (unsigned d = 0; d <= degree; ++d)
    for (const auto& e : monomials_of_degree(n, d)) {
      Scalar c = inverse_factorial(e);
      for (unsigned i = 0; i < n; ++i) c *= v[i].pow(e[i]);
      out.add_term(e, c);
    }
  return out;
}

Poly derivative(const Poly& f, const MultiIndex& order) {
  if (order.size() != f.nvars()) throw std::invalid_argument("derivative order does not match");
  Poly r = f;
  for (unsigned i = 0; i < order.size() && !r.is_zero(); ++i)
    if (order[i]) r = partial_derivative(r, i, order[i]);
  return r;
}

Poly DiffOpSeries::coefficient(const MultiIndex& order) const {
  auto it = coefficients.find(order);
  return it == coefficients.end() ? Poly(Space::plain(n)) : it->second;
}

Poly DiffOpSeries::apply(const Poly& f) const {
  require_plain(f);
  if (f.space().n != n) throw std::invalid_argument("series applied outside its space");
  if (f.degree() > static_cast<int>(truncation))
    throw std::domain_error("polynomial degree exceeds the series truncation");
  Poly out(f.space());
  for (const auto& [order, c] : coefficients) {
    if (static_cast<int>(order.total()) > f.degree()) break;
    Poly d = derivative(f, order);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

namespace {

std::string operator_terms(const PolyTable& table, std::optional<unsigned> truncation,
                           const char* symbol, unsigned n) {
  std::string out;
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    std::string d;
    for (unsigned i = 0; i < n; ++i) {
      if (!it->first[i]) continue;
      if (!d.empty()) d += "*";
      d += std::string(symbol) + std::to_string(i + 1);
      if (it->first[i] > 1) d += "^" + std::to_string(it->first[i]);
    }
    std::string c = "(" + it->second.to_string() + ")";
    if (!out.empty()) out += " + ";
    out += d.empty() ? c : c + "*" + d;
  }
  if (out.empty()) out = "0";
  if (truncation) out += " [order <= " + std::to_string(*truncation) + "]";
  return out;
}

}  // namespace

std::string DiffOpSeries::to_string() const { return operator_terms(coefficients, truncation, "d", n); }

Poly diffop_coefficient(const LinOp& t, const MultiIndex& order) {
  unsigned n = t.n();
  if (order.size() != n) throw std::invalid_argument("order does not match n");
  Space s = Space::plain(n);
  Poly c(s);
  for (const auto& r : sub_indices(order)) {
    Poly tr = t.apply_monomial(r);
    if (tr.is_zero()) continue;
    MultiIndex rest = order - r;
    Scalar k = inverse_factorial(r) * inverse_factorial(rest);
    if (rest.total() % 2) k = -k;
    c += tr * Poly::monomial(s, rest, k);
  }
  return c;
}

DiffOpSeries reconstruct_diffop(const LinOp& t, unsigned max_order) {
  DiffOpSeries d{t.n(), {}, max_order};
  for (unsigned k = 0; k <= max_order; ++k)
    for (const auto& order : monomials_of_degree(t.n(), k)) {
      Poly c = diffop_coefficient(t, order);
      if (!c.is_zero()) d.coefficients.emplace(order, std::move(c));
    }
  return d;
}

Poly NormalSymbol::alpha(const MultiIndex& order) const {
  auto it = alphas.find(order);
  return it == alphas.end() ? Poly(Space::plain(n)) : it->second;
}

std::string NormalSymbol::to_string() const {
  // alpha(Q) * P^I, with the alphas printed in x
  return operator_terms(alphas, truncation, "P", n);
}

Poly wmap_apply(const NormalSymbol& sym, const Poly& f) {
  require_plain(f);
  if (f.space().n != sym.n) throw std::invalid_argument("symbol applied outside its space");
  if (sym.truncation && f.degree() > static_cast<int>(*sym.truncation))
    throw std::domain_error("polynomial degree exceeds the symbol truncation");
  Poly out(f.space());
  for (const auto& [order, a] : sym.alphas) {
    if (static_cast<int>(order.total()) > f.degree()) break;
    Poly d = derivative(f, order);
    if (!d.is_zero()) out += a * d;
  }
  return out;
}

NormalSymbol to_normal_symbol(const LinOp& t, unsigned max_order) {
  DiffOpSeries d = reconstruct_diffop(t, max_order);
  return {d.n, std::move(d.coefficients), max_order};
}

NormalSymbol normal_symbol_of(const Poly& w) {
  require_symplectic(w);
  unsigned n = w.space().n;
  NormalSymbol sym{n, {}, std::nullopt};
  Space s = Space::plain(n);
  NormalForm nf = symmetrize(w);
  for (const auto& [key, c] : nf.terms()) {
    auto [it, fresh] = sym.alphas.try_emplace(key.second, s);
    it->second.add_term(key.first, c);
    if (it->second.is_zero()) sym.alphas.erase(it);
  }
  return sym;
}

Poly weyl_element(const NormalSymbol& sym) {
  if (sym.truncation) throw std::domain_error("truncated symbol is not an element of W");
  Poly out(Space::symplectic(sym.n));
  for (const auto& [order, a] : sym.alphas) out += ordered_product(a, order);
  return out;
}

Poly embed_q(const Poly& alpha) {
  require_plain(alpha);
  unsigned n = alpha.space().n;
  Poly out(Space::symplectic(n));
  for (const auto& [e, c] : alpha.terms()) out.add_term(MultiIndex(n).concat(e), c);
  return out;
}

Poly ordered_product(const Poly& alpha, const MultiIndex& order, std::optional<unsigned> max_degree) {
  require_plain(alpha);
  unsigned n = alpha.space().n;
  if (order.size() != n) throw std::invalid_argument("order does not match n");
  Poly out(Space::symplectic(n));
  unsigned b = order.total();
  // Q^A * P^B = sum_K (-1/2)^|K| / K! A!/(A-K)! B!/(B-K)! q^(A-K) p^(B-K)
  for (const auto& [a, c] : alpha.terms()) {
    MultiIndex bound(n);
    for (unsigned i = 0; i < n; ++i) bound[i] = std::min(a[i], order[i]);
    for (const auto& k : sub_indices(bound)) {
      unsigned deg = a.total() + b - 2 * k.total();
      if (max_degree && deg > *max_degree) continue;
      mpz_class num = 1;
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned s = 0; s < k[i]; ++s) num *= (a[i] - s) * (order[i] - s);
      }
      Scalar coef = c * Scalar(mpq_class(num, k.factorial()));
      coef *= Scalar::rational(1, 2).pow(k.total());
      if (k.total() % 2) coef = -coef;
      out.add_term((order - k).concat(a - k), coef);
    }
  }
  return out;
}

}  // namespace weyl
