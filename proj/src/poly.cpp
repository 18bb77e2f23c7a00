#include "weyl/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace weyl {

std::string Space::var_name(unsigned var) const {
  if (kind == VarKind::plain) return "x" + std::to_string(var + 1);
  if (var < n) return "p" + std::to_string(var + 1);
  return "q" + std::to_string(var - n + 1);
}

std::string Space::to_string() const {
  return std::string(kind == VarKind::symplectic ? "symplectic" : "plain") + "(" +
         std::to_string(n) + ")";
}

void require_same_space(const Poly& f, const Poly& g) {
  if (f.space() != g.space())
    throw std::invalid_argument("variable mismatch: " + f.space().to_string() + " vs " +
                                g.space().to_string());
}

void require_symplectic(const Poly& f) {
  if (f.space().kind != VarKind::symplectic)
    throw std::invalid_argument("symplectic polynomial required");
}

Poly Poly::constant(Space space, const Scalar& c) {
  Poly r(space);
  r.add_term(MultiIndex(space.nvars()), c);
  return r;
}

Poly Poly::monomial(Space space, const MultiIndex& e, const Scalar& c) {
  if (e.size() != space.nvars()) throw std::invalid_argument("exponent length mismatch");
  Poly r(space);
  r.add_term(e, c);
  return r;
}

Poly Poly::variable(Space space, unsigned var) {
  if (var >= space.nvars()) throw std::out_of_range("variable index out of range");
  return monomial(space, MultiIndex::unit(space.nvars(), var));
}

Poly Poly::p(unsigned n, unsigned i) { return variable(Space::symplectic(n), i - 1); }
Poly Poly::q(unsigned n, unsigned i) { return variable(Space::symplectic(n), n + i - 1); }
Poly Poly::x(unsigned n, unsigned i) { return variable(Space::plain(n), i - 1); }

Scalar Poly::coefficient(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.total());
}

int Poly::low_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
}

bool Poly::is_homogeneous() const { return degree() == low_degree(); }

Poly Poly::homogeneous_part(unsigned k) const {
  Poly r(space_);
  for (const auto& [e, c] : terms_)
    if (e.total() == k) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Poly Poly::truncated(unsigned max_degree) const {
  Poly r(space_);
  for (const auto& [e, c] : terms_) {
    if (e.total() > max_degree) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

Poly Poly::even_part() const {
  Poly r(space_);
  for (const auto& [e, c] : terms_)
    if (e.total() % 2 == 0) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Poly Poly::odd_part() const {
  Poly r(space_);
  for (const auto& [e, c] : terms_)
    if (e.total() % 2 == 1) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

void Poly::add_term(const MultiIndex& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (e.size() != nvars()) throw std::invalid_argument("exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::add_scaled(const Poly& o, const Scalar& c) {
  require_same_space(*this, o);
  if (c.is_zero()) return;
  for (const auto& [e, v] : o.terms_) add_term(e, c.is_one() ? v : v * c);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, -1);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

Poly Poly::pow(unsigned e) const {
  Poly r = constant(space_, 1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

std::string monomial_text(const Space& s, const MultiIndex& e) {
  std::string out;
  for (unsigned v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += s.var_name(v);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

std::string term_text(const Space& s, const MultiIndex& e, const Scalar& c) {
  std::string mono = monomial_text(s, e);
  if (mono.empty()) return c.to_string();
  if (c.is_real()) {
    if (c.re() == 1) return mono;
    if (c.re() == -1) return "-" + mono;
    return c.re().get_str() + "*" + mono;
  }
  if (sgn(c.re()) == 0) {
    // c/d*i*mono, i*mono, -i*mono
    return c.to_string() + "*" + mono;
  }
  return "(" + c.to_string() + ")*" + mono;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string t = term_text(space_, it->first, it->second);
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

Poly multiply(const Poly& f, const Poly& g) {
  require_same_space(f, g);
  Poly r(f.space());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) r.add_term(a + b, ca * cb);
  return r;
}

Poly partial_derivative(const Poly& f, unsigned var, unsigned order) {
  if (var >= f.nvars()) throw std::out_of_range("variable index out of range");
  Poly r(f.space());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] < order) continue;
    mpz_class fall = 1;
    for (unsigned k = 0; k < order; ++k) fall *= e[var] - k;
    MultiIndex d = e;
    d[var] -= order;
    r.add_term(d, c * Scalar(fall));
  }
  return r;
}

Poly poisson_bracket(const Poly& f, const Poly& g) {
  require_same_space(f, g);
  require_symplectic(f);
  unsigned n = f.space().n;
  Poly r(f.space());
  for (unsigned i = 0; i < n; ++i) {
    r += partial_derivative(f, i) * partial_derivative(g, n + i);
    r -= partial_derivative(f, n + i) * partial_derivative(g, i);
  }
  return r;
}

std::vector<std::pair<unsigned, Poly>> graded_components(const Poly& f) {
  std::vector<std::pair<unsigned, Poly>> out;
  for (const auto& [e, c] : f.terms()) {
    unsigned d = e.total();
    if (out.empty() || out.back().first != d) out.emplace_back(d, Poly(f.space()));
    out.back().second.add_term(e, c);
  }
  return out;
}

Scalar eval_zero(const Poly& f) { return f.coefficient(MultiIndex(f.nvars())); }

int parity(const Poly& f) {
  bool even = false, odd = false;
  for (const auto& [e, c] : f.terms()) (e.total() % 2 ? odd : even) = true;
  if (even && odd) throw std::invalid_argument("polynomial of mixed parity");
  return odd ? 1 : 0;
}

}  // namespace weyl
