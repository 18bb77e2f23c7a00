#include "weyl/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "weyl/io.hpp"
#include "weyl/moyal.hpp"
#include "weyl/parse.hpp"

namespace weyl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned n = 1;
  std::string t = "1";
  std::string kind = "lie";
  bool json = false, text = false;
  std::vector<std::string> exprs;
  std::optional<unsigned> max_degree;
  unsigned max_order = 6;

  std::string op, lambda, from_json;
  std::optional<double> tau;
  std::vector<unsigned> out_index, in_index;
  double tol = 1e-12;
  unsigned max_terms = 400;
  bool closed = false;

  std::string check;
  unsigned k = 1, l = 1, m = 1;
  std::string vector;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-n", o.n, "number of degrees of freedom")->check(CLI::PositiveNumber);
  auto* j = sub->add_flag("--json", o.json, "JSON output");
  auto* t = sub->add_flag("--text", o.text, "text output (default)");
  j->excludes(t);
}

void add_exprs(CLI::App* sub, Options& o, std::size_t count) {
  sub->add_option("exprs", o.exprs, "polynomial expressions")->expected(static_cast<int>(count))->required();
}

void add_op(CLI::App* sub, Options& o) {
  sub->add_option("--op", o.op, "E, S or expEuler")->check(CLI::IsMember({"E", "S", "expEuler"}));
  sub->add_option("--lambda", o.lambda, "S and expEuler parameter");
  sub->add_option("--tau", o.tau, "tau with lambda = e^tau, informational");
  sub->add_option("--I", o.out_index, "E: output exponent")->delimiter(',');
  sub->add_option("--J", o.in_index, "E: input exponent")->delimiter(',');
  sub->add_option("--from-json", o.from_json, "operator JSON file");
}

void add_series(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-terms", o.max_terms, "maximum number of batches");
}

LinOp build_op(Options& o) {
  if (!o.from_json.empty()) {
    if (!o.op.empty()) throw UsageError("--op and --from-json are exclusive");
    LinOp t = linop_from_file(o.from_json);
    o.n = t.n();
    return t;
  }
  if (o.op.empty()) throw UsageError("an operator is required (--op or --from-json)");
  if (o.op == "E") {
    if (o.out_index.empty() || o.in_index.empty()) throw UsageError("E needs --I and --J");
    if (o.out_index.size() != o.in_index.size()) throw UsageError("--I and --J differ in length");
    o.n = static_cast<unsigned>(o.in_index.size());
    return LinOp::elementary(MultiIndex(o.out_index), MultiIndex(o.in_index));
  }
  if (o.lambda.empty()) throw UsageError(o.op + " needs --lambda");
  Scalar lambda = parse_scalar(o.lambda);
  if (o.op == "S") return LinOp::scaling(o.n, lambda);
  return LinOp::special(o.n, ExpEulerOp{lambda, o.tau});
}

const SpecialOp& require_special(const LinOp& t) {
  const SpecialOp* s = t.as_special();
  if (!s) throw UsageError("closed forms exist only for E, S and expEuler");
  return *s;
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}
  bool json() const { return json_; }
  void emit(const Json& j, const std::string& text) {
    if (json_) out_ << j.dump(2) << "\n";
    else out_ << text << "\n";
  }

 private:
  std::ostream& out_;
  bool json_;
};

std::string scalars_text(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <class Range>
Json as_list(const Range& r) {
  Json j = Json::array();
  for (const auto& x : r) j.push_back(x);
  return j;
}

int report(Emitter& e, const std::string& check, const Json& params, bool pass,
           const std::vector<std::string>& witnesses, Json details, const std::string& summary) {
  Json j{{"check", check}, {"parameters", params}, {"status", pass ? "pass" : "fail"}, {"witnesses", witnesses}};
  for (auto& [k, v] : details.items()) j[k] = v;
  std::string text = check + ": " + (pass ? "pass" : "fail") + "\n" + summary;
  for (const auto& w : witnesses) text += "\n  " + w;
  e.emit(j, text);
  return pass ? ok : domain;
}

std::string degree_list(const std::vector<DegreeRank>& v) {
  std::vector<std::string> parts;
  for (const auto& d : v)
    parts.push_back(std::to_string(d.degree) + ":" + std::to_string(d.rank) + "/" + std::to_string(d.dim));
  return join(parts, " ");
}

Json degree_json(const std::vector<DegreeRank>& v) {
  Json j = Json::array();
  for (const auto& d : v) j.push_back({{"degree", d.degree}, {"rank", d.rank}, {"dim", d.dim}});
  return j;
}

int osp_check(Emitter& e, const Options& o) {
  unsigned n = o.n;
  const std::string& c = o.check;
  if (c == "structure") {
    auto r = osp_structure_check(n);
    return report(e, c, {{"n", n}}, r.ok(), r.witnesses,
                  {{"dimension", r.dimension}, {"expected_dimension", r.expected_dimension},
                   {"closed", r.closed}, {"super_jacobi", r.super_jacobi}},
                  "dimension " + std::to_string(r.dimension) + " (expected " +
                      std::to_string(r.expected_dimension) + ")");
  }
  if (c == "stability") {
    auto a = check_stability(SubspaceSpec::A(n, o.k), BracketKind::super, SubspaceSpec::algebra(n));
    auto b = check_stability(SubspaceSpec::B(n, o.k), BracketKind::twisted_super, SubspaceSpec::algebra(n));
    std::vector<std::string> w = a.violations;
    w.insert(w.end(), b.violations.begin(), b.violations.end());
    return report(e, c, {{"n", n}, {"k", o.k}}, a.stable && b.stable, w,
                  {{"A_stable", a.stable}, {"B_stable", b.stable}},
                  a.space + " under " + to_string(a.action) + ": " + (a.stable ? "stable" : "not stable") + "\n" +
                      b.space + " under " + to_string(b.action) + ": " + (b.stable ? "stable" : "not stable"));
  }
  if (c == "highest-weight") {
    Poly v = o.vector.empty() ? Poly::p(n, 1).pow(o.k) : parse_expression(o.vector, Space::symplectic(n));
    auto r = highest_weight_check(v, n);
    std::vector<std::string> weight;
    for (const auto& s : r.weight) weight.push_back(s.to_string());
    return report(e, c, {{"n", n}, {"vector", v.to_string()}}, r.eigenvector && r.annihilated, r.witnesses,
                  {{"action", to_string(r.action)}, {"weight", weight}, {"annihilated", r.annihilated}},
                  "weight " + scalars_text(r.weight) + " under " + to_string(r.action));
  }
  if (c == "musson") {
    unsigned md = o.max_degree.value_or(6);
    auto r = musson_decomposition_check(md, n);
    return report(e, c, {{"n", n}, {"max_degree", md}}, r.ok(), {},
                  {{"per_degree", degree_json(r.per_degree)}, {"str_vanishes", r.str_vanishes}},
                  "rank/dim per degree " + degree_list(r.per_degree));
  }
  if (c == "sp2n") {
    auto r = sp2n_embedding_check(n);
    return report(e, c, {{"n", n}}, r.ok(), r.witnesses,
                  {{"homomorphism", r.homomorphism}, {"form_invariant", r.form_invariant}, {"injective", r.injective}},
                  "S^2 -> sp(2n) by brackets on S^1");
  }
  if (c == "theta") {
    auto r = theta_check(n);
    return report(e, c, {{"n", n}}, r.ok(), r.witnesses,
                  {{"theta_one_one", r.theta_one_one.to_string()}, {"half_poisson", r.half_poisson},
                   {"supersymmetric", r.supersymmetric}, {"invariant", r.invariant}},
                  "Theta(1,1) = " + r.theta_one_one.to_string());
  }
  if (c == "gram") {
    auto r = kappa_gram(o.l, n);
    bool sym_ok = o.l % 2 ? r.antisymmetric : r.symmetric;
    return report(e, c, {{"n", n}, {"l", o.l}}, r.nonsingular() && sym_ok, {},
                  {{"size", r.gram.size()}, {"rank", r.rank}, {"symmetric", r.symmetric},
                   {"antisymmetric", r.antisymmetric}},
                  "rank " + std::to_string(r.rank) + " of " + std::to_string(r.gram.size()) +
                      (r.symmetric ? ", symmetric" : "") + (r.antisymmetric ? ", antisymmetric" : ""));
  }
  if (c == "degree-image") {
    BracketKind kind = bracket_kind_from_string(o.kind);
    auto r = bracket_degree_image(o.l, o.m, kind, n);
    std::vector<std::string> pred;
    for (unsigned d : r.predicted) pred.push_back(std::to_string(d));
    return report(e, c, {{"n", n}, {"l", o.l}, {"m", o.m}, {"kind", o.kind}}, r.ok(), {},
                  {{"reached", degree_json(r.reached)}, {"predicted", as_list(r.predicted)},
                   {"total_rank", r.total_rank}, {"total_dim", r.total_dim}},
                  "reached " + degree_list(r.reached) + "\npredicted " + join(pred, " "));
  }
  throw UsageError("unknown check '" + c + "'");
}

std::string series_text(const GradedSeries& g) {
  std::string s = std::string("status: ") + to_string(g.status());
  for (const auto& c : g.components) {
    std::string v = c.status != SeriesStatus::converged ? "-"
                    : c.exact                            ? c.value.to_string()
                                                         : format_poly_numeric(c.value);
    s += "\n" + std::to_string(c.degree) + ": " + v + " [" + to_string(c.status);
    if (c.terms_used) s += ", " + std::to_string(c.terms_used) + " terms";
    s += "]";
  }
  return s;
}

int trace_output(Emitter& e, const TraceResult& r) {
  e.emit(to_json(r), r.status == SeriesStatus::converged ? r.value_string() : to_string(r.status));
  return r.status == SeriesStatus::converged ? ok : numeric;
}

int dispatch(CLI::App& app, Options& o, std::ostream& out) {
  Emitter e(out, o.json);
  SummationPolicy policy;
  policy.tol = o.tol;
  policy.max_terms = o.max_terms;
  Space w = Space::symplectic(o.n);
  auto expr = [&](std::size_t i, Space s) { return parse_expression(o.exprs.at(i), s); };
  auto poly_out = [&](const Poly& f) {
    e.emit(to_json(f), f.to_string());
    return ok;
  };
  auto scalar_out = [&](const Scalar& s) {
    e.emit(Json{{"value", s.to_string()}}, s.to_string());
    return ok;
  };
  const std::string name = app.get_subcommands().front()->get_name();

  if (name == "star") {
    DeformationParameter t{parse_scalar(o.t)};
    Poly a = expr(0, w), b = expr(1, w);
    return poly_out(o.max_degree ? star_truncated(a, b, *o.max_degree, t) : star(a, b, t));
  }
  if (name == "bracket") return poly_out(bracket(bracket_kind_from_string(o.kind), expr(0, w), expr(1, w)));
  if (name == "str") return scalar_out(supertrace(expr(0, w)));
  if (name == "kappa") return scalar_out(kappa(expr(0, w), expr(1, w)));
  if (name == "bform") return scalar_out(b_form(expr(0, w), expr(1, w)));
  if (name == "rho") {
    NormalForm r = symmetrize(expr(0, w));
    e.emit(to_json(r), r.to_string());
    return ok;
  }
  if (name == "osp-roots") {
    auto r = verify_root_table(o.n);
    Json roots = Json::array();
    std::string text;
    for (const auto& d : r.roots) {
      roots.push_back(to_json(d));
      std::vector<std::string> wt;
      for (int x : d.weight) wt.push_back(std::to_string(x));
      text += d.label + "  " + d.vector.to_string() + "  (" + join(wt, ", ") + ")  " +
              (d.positive ? "positive" : "negative") + " " + (d.odd ? "odd" : "even") + "\n";
    }
    text += std::string("status: ") + (r.ok() ? "pass" : "fail");
    e.emit({{"check", "roots"}, {"parameters", {{"n", o.n}}}, {"status", r.ok() ? "pass" : "fail"},
            {"witnesses", r.witnesses}, {"roots", roots}},
           text);
    return r.ok() ? ok : domain;
  }
  if (name == "osp-check") return osp_check(e, o);
  if (name == "ck-image") {
    auto r = ck_image_rank(o.k, o.l, o.m, o.n);
    e.emit({{"k", o.k}, {"l", o.l}, {"m", o.m}, {"n", o.n}, {"rank", r.rank}, {"target_dim", r.target_dim},
            {"status", r.ok() ? "pass" : "fail"}},
           "rank " + std::to_string(r.rank) + " of " + std::to_string(r.target_dim) + ": " +
               (r.ok() ? "pass" : "fail"));
    return r.ok() ? ok : domain;
  }
  if (name == "cg") {
    auto r = clebsch_gordan_n1(o.l, o.m);
    e.emit({{"l", o.l}, {"m", o.m}, {"rank", r.rank}, {"expected", r.expected}, {"target_dim", r.target_dim},
            {"bijective", r.bijective()}},
           "rank " + std::to_string(r.rank) + ", expected " + std::to_string(r.expected) +
               (r.bijective() ? ": bijective" : ": not bijective"));
    return r.bijective() ? ok : domain;
  }
  if (name == "reconstruct") {
    DiffOpSeries d = reconstruct_diffop(build_op(o), o.max_order);
    e.emit(to_json(d), d.to_string());
    return ok;
  }
  if (name == "wmap") {
    bool has_op = !o.op.empty() || !o.from_json.empty();
    NormalSymbol sym;
    Poly p;
    if (has_op) {
      if (o.exprs.size() != 1) throw UsageError("wmap with an operator takes one polynomial");
      LinOp t = build_op(o);
      p = expr(0, Space::plain(o.n));
      sym = to_normal_symbol(t, static_cast<unsigned>(std::max(p.degree(), 0)));
    } else {
      if (o.exprs.size() != 2) throw UsageError("wmap takes a W element and a polynomial");
      sym = normal_symbol_of(expr(0, w));
      p = expr(1, Space::plain(o.n));
    }
    return poly_out(wmap_apply(sym, p));
  }
  if (name == "strwbar") return trace_output(e, str_wbar(build_op(o), policy));
  if (name == "rstr") {
    LinOp t = build_op(o);
    if (!o.closed) return trace_output(e, rstr(t, policy));
    Scalar v = rstr_closed_form(require_special(t), t.n());
    e.emit({{"status", "converged"}, {"value", v.to_string()}, {"exact", true}, {"mode", "closed"}}, v.to_string());
    return ok;
  }
  if (name == "iw") {
    LinOp t = build_op(o);
    unsigned md = o.max_degree.value_or(6);
    GradedSeries g = o.closed ? iw_closed_form(require_special(t), t.n(), md) : iw_numeric(t, md, policy);
    e.emit(to_json(g), series_text(g));
    return g.exists() ? ok : numeric;
  }
  throw UsageError("unknown subcommand " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Weyl algebra and the Moyal star product", "weylcalc"};
  app.require_subcommand(1, 1);
  Options o;

  auto* star = app.add_subcommand("star", "Moyal star product of two polynomials");
  add_common(star, o);
  add_exprs(star, o, 2);
  star->add_option("-t", o.t, "deformation parameter");
  star->add_option("--max-degree", o.max_degree, "keep only degrees up to this");

  auto* br = app.add_subcommand("bracket", "lie, super, twisted_lie or twisted_super bracket");
  add_common(br, o);
  add_exprs(br, o, 2);
  br->add_option("--kind", o.kind, "bracket kind");

  for (auto [nm, help, count] : {std::tuple{"str", "supertrace", 1}, std::tuple{"kappa", "kappa(F, G)", 2},
                                 std::tuple{"bform", "B(F, G)", 2}, std::tuple{"rho", "symmetrized normal form", 1}}) {
    auto* sub = app.add_subcommand(nm, help);
    add_common(sub, o);
    add_exprs(sub, o, static_cast<std::size_t>(count));
  }

  add_common(app.add_subcommand("osp-roots", "Cartan elements and root vectors"), o);

  auto* osp = app.add_subcommand("osp-check", "orthosymplectic verifications");
  add_common(osp, o);
  osp->add_option("--check", o.check, "structure, stability, highest-weight, musson, sp2n, theta, gram, degree-image")
      ->required();
  osp->add_option("-k,--k", o.k, "k");
  osp->add_option("-l,--l", o.l, "l");
  osp->add_option("-m,--m", o.m, "m");
  osp->add_option("--kind", o.kind, "bracket kind for degree-image");
  osp->add_option("--max-degree", o.max_degree, "musson degree bound");
  osp->add_option("--vector", o.vector, "highest-weight candidate");

  auto* ck = app.add_subcommand("ck-image", "rank of C_k on S^l x S^m");
  add_common(ck, o);
  ck->add_option("-k,--k", o.k, "k");
  ck->add_option("-l,--l", o.l, "l");
  ck->add_option("-m,--m", o.m, "m");

  auto* cg = app.add_subcommand("cg", "rank of the star map S^l x S^m, n = 1");
  add_common(cg, o);
  cg->add_option("-l,--l", o.l, "l");
  cg->add_option("-m,--m", o.m, "m");

  auto* rec = app.add_subcommand("reconstruct", "operator as a differential operator series");
  add_common(rec, o);
  add_op(rec, o);
  rec->add_option("--max-order", o.max_order, "highest derivative order");

  auto* wm = app.add_subcommand("wmap", "apply a normal symbol to a polynomial in x");
  add_common(wm, o);
  add_op(wm, o);
  wm->add_option("exprs", o.exprs, "[F] P")->expected(1, 2)->required();

  auto* sw = app.add_subcommand("strwbar", "supertrace over the completion");
  add_common(sw, o);
  add_op(sw, o);
  add_series(sw, o);

  auto* rs = app.add_subcommand("rstr", "renormalized supertrace");
  add_common(rs, o);
  add_op(rs, o);
  add_series(rs, o);
  rs->add_flag("--closed", o.closed, "use the closed form");

  auto* iw = app.add_subcommand("iw", "formal inverse Weyl transform");
  add_common(iw, o);
  add_op(iw, o);
  add_series(iw, o);
  iw->add_option("--max-degree", o.max_degree, "highest component degree");
  iw->add_flag("--closed", o.closed, "use the closed form");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse;
  }

  try {
    return dispatch(app, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return parse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return domain;
  }
}

}  // namespace weyl::cli
