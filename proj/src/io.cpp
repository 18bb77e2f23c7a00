#include "weyl/io.hpp"

#include <fstream>
#include <stdexcept>

#include "weyl/parse.hpp"

namespace weyl {

namespace {

std::string decimal(const mpq_class& q) { return format_number({q.get_d(), 0}); }

Json exponent_json(const MultiIndex& e) { return Json(e.to_vector()); }

MultiIndex exponent_from_json(const Json& j) {
  return MultiIndex(j.get<std::vector<MultiIndex::value_type>>());
}

Scalar scalar_from_json(const Json& term) {
  try {
    mpq_class re(term.at("re").get<std::string>()), im(term.value("im", std::string("0")));
    return Scalar(re, im);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational in polynomial JSON", 0);
  }
}

Json table_json(const PolyTable& t, const char* key) {
  Json terms = Json::array();
  for (const auto& [order, f] : t) terms.push_back({{"order", exponent_json(order)}, {key, to_json(f)}});
  return terms;
}

}  // namespace

Json to_json(const Poly& f, bool dec) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Scalar& c = it->second;
    terms.push_back({{"exp", exponent_json(it->first)},
                     {"re", dec ? decimal(c.re()) : c.re().get_str()},
                     {"im", dec ? decimal(c.im()) : c.im().get_str()}});
  }
  return {{"nvars", f.nvars()},
          {"kind", f.space().kind == VarKind::symplectic ? "symplectic" : "plain"},
          {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  unsigned nvars = j.at("nvars").get<unsigned>();
  std::string kind = j.at("kind").get<std::string>();
  Space s;
  if (kind == "plain") s = Space::plain(nvars);
  else if (kind == "symplectic" && nvars % 2 == 0) s = Space::symplectic(nvars / 2);
  else throw ParseError("bad polynomial kind '" + kind + "'", 0);
  Poly f(s);
  for (const auto& t : j.at("terms")) {
    MultiIndex e = exponent_from_json(t.at("exp"));
    if (e.size() != nvars) throw ParseError("exponent length does not match nvars", 0);
    f.add_term(e, scalar_from_json(t));
  }
  return f;
}

Json to_json(const NormalForm& a) {
  Json terms = Json::array();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
    terms.push_back({{"q", exponent_json(it->first.first)},
                     {"p", exponent_json(it->first.second)},
                     {"re", it->second.re().get_str()},
                     {"im", it->second.im().get_str()}});
  return {{"n", a.n()}, {"terms", terms}};
}

Json to_json(const LinOp& t) {
  Json j{{"n", t.n()}};
  if (auto* f = std::get_if<FiniteRankOp>(&t.kind())) {
    j["kind"] = "finite_rank";
    Json table = Json::array();
    for (const auto& [in, out] : f->table) table.push_back({{"in", exponent_json(in)}, {"out", to_json(out)}});
    j["table"] = table;
  } else if (auto* r = std::get_if<RuleOp>(&t.kind())) {
    j["kind"] = "rule";
    j["name"] = r->name;
    j["degree_bound"] = r->degree_bound;
  } else {
    const SpecialOp& s = *t.as_special();
    j["kind"] = "special";
    j["name"] = special_name(s);
    if (auto* e = std::get_if<ElementaryOp>(&s)) {
      j["params"] = Json::array({exponent_json(e->out), exponent_json(e->in)});
    } else {
      Json params = Json::array({special_lambda(s).to_string()});
      if (auto* x = std::get_if<ExpEulerOp>(&s); x && x->tau) params.push_back(*x->tau);
      j["params"] = params;
    }
  }
  return j;
}

LinOp linop_from_json(const Json& j) {
  unsigned n = j.at("n").get<unsigned>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite_rank") {
    PolyTable table;
    for (const auto& entry : j.at("table")) {
      Poly out = poly_from_json(entry.at("out"));
      MultiIndex in = exponent_from_json(entry.at("in"));
      if (auto it = table.find(in); it != table.end()) it->second += out;
      else table.emplace(in, std::move(out));
    }
    return LinOp::finite_rank(n, std::move(table));
  }
  if (kind != "special") throw ParseError("operator kind '" + kind + "' cannot be read", 0);
  std::string name = j.at("name").get<std::string>();
  const Json& params = j.at("params");
  if (name == "E") {
    return LinOp::special(n, ElementaryOp{exponent_from_json(params.at(0)), exponent_from_json(params.at(1))});
  }
  Scalar lambda = parse_scalar(params.at(0).get<std::string>());
  if (name == "S") return LinOp::scaling(n, lambda);
  if (name == "expEuler") {
    std::optional<double> tau;
    if (params.size() > 1) tau = params.at(1).get<double>();
    return LinOp::special(n, ExpEulerOp{lambda, tau});
  }
  throw ParseError("unknown special operator '" + name + "'", 0);
}

LinOp linop_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return linop_from_json(Json::parse(in));
}

Json to_json(const DiffOpSeries& d) {
  return {{"n", d.n}, {"truncation", d.truncation}, {"terms", table_json(d.coefficients, "coefficient")}};
}

Json to_json(const NormalSymbol& s) {
  return {{"n", s.n},
          {"truncation", s.truncation ? Json(*s.truncation) : Json(nullptr)},
          {"terms", table_json(s.alphas, "alpha")}};
}

Json to_json(const GradedSeries& g) {
  Json comps = Json::array();
  for (const auto& c : g.components) {
    Json poly = c.status == SeriesStatus::converged ? to_json(c.value, !c.exact) : Json(nullptr);
    comps.push_back({{"degree", c.degree},
                     {"status", to_string(c.status)},
                     {"exact", c.exact},
                     {"poly", poly},
                     {"terms_used", c.terms_used}});
  }
  return {{"n", g.n}, {"max_degree", g.max_degree}, {"status", to_string(g.status())}, {"components", comps}};
}

Json to_json(const TraceResult& r) {
  Json value = r.status == SeriesStatus::converged ? Json(r.value_string()) : Json(nullptr);
  return {{"status", to_string(r.status)}, {"value", value}, {"exact", r.exact}, {"terms_used", r.terms_used}};
}

Json to_json(const RootDatum& r) {
  return {{"label", r.label},
          {"vector", r.vector.to_string()},
          {"weight", r.weight},
          {"positive", r.positive},
          {"odd", r.odd}};
}

std::string format_poly_numeric(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string mono;
    for (unsigned v = 0; v < f.nvars(); ++v) {
      unsigned e = it->first[v];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += f.space().var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::complex<double> c = it->second.to_complex();
    std::string coef = format_number(c);
    bool negative = c.imag() == 0 ? c.real() < 0 : c.real() == 0 && c.imag() < 0;
    if (negative) coef = format_number(-c);
    if (c.imag() != 0 && c.real() != 0) coef = "(" + coef + ")";
    std::string t = mono.empty() ? coef : coef + "*" + mono;
    if (out.empty()) out = negative ? "-" + t : t;
    else out += (negative ? " - " : " + ") + t;
  }
  return out;
}

}  // namespace weyl
