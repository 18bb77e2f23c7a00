#include "weyl/osp_rep.hpp"

#include <deque>
#include <stdexcept>

namespace weyl {

namespace {

int par(const Poly& f) { return parity(f); }

Scalar sign(int e) { return e % 2 ? Scalar(-1) : Scalar(1); }

std::string pairs_text(const Poly& a, const Poly& b) {
  return "[" + a.to_string() + ", " + b.to_string() + "]";
}

// f == c * v for a scalar c; returns c when it exists
std::optional<Scalar> proportional(const Poly& f, const Poly& v) {
  if (v.is_zero()) return std::nullopt;
  if (f.is_zero()) return Scalar();
  const auto& [e, c] = *v.terms().begin();
  Scalar ratio = f.coefficient(e) / c;
  if (f == v * ratio) return ratio;
  return std::nullopt;
}

}  // namespace

std::vector<Poly> osp_basis(unsigned n) { return MonomialBasis(Space::symplectic(n), {1, 2}).elements(); }

OspStructureReport osp_structure_check(unsigned n, bool check_jacobi) {
  OspStructureReport r;
  r.n = n;
  auto basis = osp_basis(n);
  r.dimension = basis.size();
  r.expected_dimension = 2 * n + n * (2 * n + 1);
  MonomialBasis span(Space::symplectic(n), {1, 2});
  r.closed = true;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      Poly b = bracket(BracketKind::super, x, y);
      if (!span.contains(b)) {
        r.closed = false;
        r.witnesses.push_back("not closed: " + pairs_text(x, y) + " = " + b.to_string());
      }
    }
  r.super_jacobi = true;
  if (!check_jacobi) return r;
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        int a = par(x), b = par(y), c = par(z);
        Poly s = bracket(BracketKind::super, x, bracket(BracketKind::super, y, z)) * sign(a * c);
        s += bracket(BracketKind::super, y, bracket(BracketKind::super, z, x)) * sign(b * a);
        s += bracket(BracketKind::super, z, bracket(BracketKind::super, x, y)) * sign(c * b);
        if (!s.is_zero()) {
          r.super_jacobi = false;
          r.witnesses.push_back("super-Jacobi fails on " + x.to_string() + ", " + y.to_string() +
                                ", " + z.to_string());
        }
      }
  return r;
}

Poly cartan_element(unsigned n, unsigned i) {
  return bracket(BracketKind::super, Poly::p(n, i), Poly::q(n, i)) * Scalar::rational(-1, 2);
}

std::vector<RootDatum> cartan_and_roots(unsigned n) {
  std::vector<RootDatum> out;
  auto w = [&](std::initializer_list<std::pair<unsigned, int>> parts) {
    std::vector<int> v(n, 0);
    for (auto [i, c] : parts) v[i - 1] += c;
    return v;
  };
  auto lab = [](char a, unsigned i, char b, unsigned j) {
    return "[" + std::string(1, a) + std::to_string(i) + "," + std::string(1, b) + std::to_string(j) + "]";
  };
  for (unsigned i = 1; i <= n; ++i) {
    out.push_back({"p" + std::to_string(i), Poly::p(n, i), w({{i, 1}}), true, true});
    out.push_back({"q" + std::to_string(i), Poly::q(n, i), w({{i, -1}}), false, true});
  }
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (i != j)
        out.push_back({lab('p', i, 'q', j), bracket(BracketKind::super, Poly::p(n, i), Poly::q(n, j)),
                       w({{i, 1}, {j, -1}}), i < j, false});
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      out.push_back({lab('p', i, 'p', j), bracket(BracketKind::super, Poly::p(n, i), Poly::p(n, j)),
                     w({{i, 1}, {j, 1}}), true, false});
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      out.push_back({lab('q', i, 'q', j), bracket(BracketKind::super, Poly::q(n, i), Poly::q(n, j)),
                     w({{i, -1}, {j, -1}}), false, false});
  return out;
}

std::vector<Poly> fundamental_root_vectors(unsigned n) {
  std::vector<Poly> out;
  for (unsigned i = 1; i < n; ++i)
    out.push_back(bracket(BracketKind::super, Poly::p(n, i), Poly::q(n, i + 1)));
  out.push_back(Poly::p(n, n));
  return out;
}

RootTableReport verify_root_table(unsigned n) {
  RootTableReport r;
  r.n = n;
  r.roots = cartan_and_roots(n);
  r.cartan_is_minus_pq = true;
  for (unsigned i = 1; i <= n; ++i)
    if (cartan_element(n, i) != -(Poly::p(n, i) * Poly::q(n, i))) {
      r.cartan_is_minus_pq = false;
      r.witnesses.push_back("H" + std::to_string(i) + " != -p" + std::to_string(i) + "*q" +
                            std::to_string(i));
    }
  r.all_eigen = true;
  for (const auto& root : r.roots) {
    if (root.vector.is_zero()) {
      r.all_eigen = false;
      r.witnesses.push_back(root.label + " is zero");
      continue;
    }
    for (unsigned i = 1; i <= n; ++i) {
      Poly act = bracket(BracketKind::super, cartan_element(n, i), root.vector);
      if (act != root.vector * Scalar(static_cast<long>(root.weight[i - 1]))) {
        r.all_eigen = false;
        r.witnesses.push_back("ad(H" + std::to_string(i) + ")(" + root.label + ") = " + act.to_string());
      }
    }
  }
  return r;
}

SubspaceSpec SubspaceSpec::A(unsigned n, unsigned k) {
  if (k == 0) return {n, {}, 2, "A_0"};
  return {n, {2 * k - 1, 2 * k}, 2 * k + 2, "A_" + std::to_string(k)};
}

SubspaceSpec SubspaceSpec::B(unsigned n, unsigned k) {
  return {n, {2 * k, 2 * k + 1}, 2 * k + 3, "B_" + std::to_string(k)};
}

SubspaceSpec SubspaceSpec::algebra(unsigned n) { return {n, {1, 2}, 4, "osp"}; }

SubspaceSpec SubspaceSpec::degree(unsigned n, unsigned k) {
  return {n, {k}, k + 2, "S^" + std::to_string(k)};
}

SubspaceSpec SubspaceSpec::positive_part(unsigned n, unsigned max_degree) {
  SubspaceSpec s{n, {}, max_degree + 2, "S^1..S^" + std::to_string(max_degree)};
  for (unsigned k = 1; k <= max_degree; ++k) s.degrees.insert(k);
  return s;
}

MonomialBasis SubspaceSpec::basis() const {
  return MonomialBasis(Space::symplectic(n), std::vector<unsigned>(degrees.begin(), degrees.end()));
}

StabilityReport check_stability(const SubspaceSpec& spec, BracketKind action,
                                const SubspaceSpec& acting) {
  if (spec.n != acting.n) throw std::invalid_argument("subspace sizes differ");
  StabilityReport r;
  r.space = spec.label;
  r.acting = acting.label;
  r.action = action;
  MonomialBasis target = spec.basis();
  auto xs = acting.basis().elements();
  auto fs = target.elements();
  for (const auto& x : xs)
    for (const auto& f : fs) {
      ++r.pairs_checked;
      Poly b = bracket(action, x, f);
      if (!target.contains(b))
        r.violations.push_back(std::string(to_string(action)) + pairs_text(x, f) + " = " + b.to_string());
    }
  r.stable = r.violations.empty();
  return r;
}

HighestWeightReport highest_weight_check(const Poly& v, unsigned n) {
  if (!v.is_homogeneous()) throw std::invalid_argument("highest weight check needs homogeneous v");
  HighestWeightReport r;
  r.action = par(v) ? BracketKind::twisted_super : BracketKind::super;
  r.eigenvector = true;
  for (unsigned i = 1; i <= n; ++i) {
    auto c = proportional(bracket(r.action, cartan_element(n, i), v), v);
    if (!c) {
      r.eigenvector = false;
      r.witnesses.push_back("not an eigenvector of H" + std::to_string(i));
      r.weight.emplace_back();
    } else {
      r.weight.push_back(*c);
    }
  }
  r.annihilated = true;
  for (const auto& x : fundamental_root_vectors(n)) {
    Poly b = bracket(r.action, x, v);
    if (!b.is_zero()) {
      r.annihilated = false;
      r.witnesses.push_back(std::string(to_string(r.action)) + pairs_text(x, v) + " = " + b.to_string());
    }
  }
  return r;
}

CyclicReport cyclic_generation(const Poly& v, BracketKind action, const SubspaceSpec& acting,
                               const SubspaceSpec& target) {
  auto keep = [&](const Poly& f) {
    Poly r(f.space());
    for (const auto& [d, part] : graded_components(f))
      if (target.degrees.count(d)) r += part;
    return r;
  };
  CyclicReport r;
  r.target_dim = target.basis().size();
  auto xs = acting.basis().elements();
  SpanBuilder span;
  std::deque<Poly> frontier;
  Poly start = keep(v);
  if (span.insert(start)) frontier.push_back(start);
  while (!frontier.empty() && span.rank() < r.target_dim) {
    Poly u = frontier.front();
    frontier.pop_front();
    for (const auto& x : xs) {
      const Poly xp[2] = {x.even_part(), x.odd_part()};
      for (const auto& part : xp) {
        if (part.is_zero()) continue;
        Poly w = keep(bracket(action, part, u));
        if (span.insert(w)) frontier.push_back(w);
      }
    }
  }
  r.generated_dim = span.rank();
  r.generates = r.generated_dim == r.target_dim;
  return r;
}

bool DegreeImageReport::matches_prediction() const {
  std::set<unsigned> got;
  for (const auto& d : reached) {
    got.insert(d.degree);
    if (!d.full()) return false;
  }
  return got == predicted;
}

std::set<unsigned> predicted_bracket_degrees(unsigned l, unsigned m, BracketKind kind) {
  int eps_exp = 0;
  switch (kind) {
    case BracketKind::lie: eps_exp = 0; break;
    case BracketKind::super: eps_exp = static_cast<int>(l * m); break;
    case BracketKind::twisted_lie: eps_exp = static_cast<int>(l); break;
    case BracketKind::twisted_super: eps_exp = static_cast<int>(l * (m + 1)); break;
  }
  // X*Y - eps Y*X = sum_k (1 - eps (-1)^k) C_k(X, Y)
  std::set<unsigned> out;
  for (unsigned k = 0; k <= std::min(l, m); ++k)
    if ((eps_exp + static_cast<int>(k)) % 2 == 1) out.insert(l + m - 2 * k);
  return out;
}

DegreeImageReport bracket_degree_image(unsigned l, unsigned m, BracketKind kind, unsigned n) {
  DegreeImageReport r;
  r.l = l;
  r.m = m;
  r.n = n;
  r.kind = kind;
  r.predicted = predicted_bracket_degrees(l, m, kind);
  Space s = Space::symplectic(n);
  std::vector<Poly> images;
  std::map<unsigned, std::vector<Poly>> by_degree;
  for (const auto& f : homogeneous_basis(s, l))
    for (const auto& g : homogeneous_basis(s, m)) {
      Poly b = bracket(kind, f, g);
      if (b.is_zero()) continue;
      for (auto& [d, part] : graded_components(b)) by_degree[d].push_back(part);
      images.push_back(std::move(b));
    }
  for (auto& [d, parts] : by_degree) {
    DegreeRank dr{d, span_rank(parts), monomials_of_degree(2 * n, d).size()};
    if (dr.rank > 0) r.reached.push_back(dr);
  }
  r.total_rank = span_rank(images);
  for (unsigned d : r.predicted) r.total_dim += monomials_of_degree(2 * n, d).size();
  return r;
}

CkImageReport ck_image_rank(unsigned k, unsigned l, unsigned m, unsigned n) {
  CkImageReport r;
  r.k = k;
  r.l = l;
  r.m = m;
  r.n = n;
  Space s = Space::symplectic(n);
  std::vector<Poly> images;
  for (const auto& f : homogeneous_basis(s, l))
    for (const auto& g : homogeneous_basis(s, m)) images.push_back(ck_coefficient(k, f, g));
  r.rank = span_rank(images);
  if (!r.expect_zero()) r.target_dim = monomials_of_degree(2 * n, l + m - 2 * k).size();
  return r;
}

CgReport clebsch_gordan_n1(unsigned l, unsigned m) {
  CgReport r;
  r.l = l;
  r.m = m;
  r.expected = (l + 1) * (m + 1);
  Space s = Space::symplectic(1);
  std::vector<Poly> images;
  for (const auto& f : homogeneous_basis(s, l))
    for (const auto& g : homogeneous_basis(s, m)) images.push_back(star(f, g));
  r.rank = span_rank(images);
  for (unsigned k = 0; k <= std::min(l, m); ++k) r.target_dim += l + m - 2 * k + 1;
  return r;
}

MussonReport musson_decomposition_check(unsigned max_degree, unsigned n) {
  MussonReport r;
  r.n = n;
  r.max_degree = max_degree;
  r.all_spanned = true;
  r.str_vanishes = true;
  Space s = Space::symplectic(n);
  auto s2 = homogeneous_basis(s, 2);
  for (unsigned k = 1; k <= max_degree; ++k) {
    std::vector<Poly> images;
    for (const auto& x : s2)
      for (const auto& f : homogeneous_basis(s, k)) {
        Poly b = bracket(BracketKind::super, x, f);
        if (!supertrace(b).is_zero()) r.str_vanishes = false;
        images.push_back(std::move(b));
      }
    DegreeRank dr{k, span_rank(images), monomials_of_degree(2 * n, k).size()};
    if (!dr.full()) r.all_spanned = false;
    r.per_degree.push_back(dr);
  }
  return r;
}

Poly cocycle_xi(const Poly& f) {
  require_symplectic(f);
  return bracket(BracketKind::twisted_lie, f, Poly::constant(f.space(), 1));
}

Matrix sp_matrix(const Poly& x) {
  unsigned n = x.space().n;
  MonomialBasis s1(x.space(), {1});
  Matrix m(2 * n, Row(2 * n));
  auto elems = s1.elements();
  for (unsigned j = 0; j < 2 * n; ++j) {
    Row col = s1.coordinates(poisson_bracket(x, elems[j]));
    for (unsigned i = 0; i < 2 * n; ++i) m[i][j] = col[i];
  }
  return m;
}

namespace {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), Row(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

Sp2nReport sp2n_embedding_check(unsigned n) {
  Sp2nReport r;
  r.n = n;
  Space s = Space::symplectic(n);
  auto s2 = homogeneous_basis(s, 2);
  auto s1 = homogeneous_basis(s, 1);
  r.homomorphism = true;
  for (const auto& x : s2)
    for (const auto& y : s2) {
      Poly xy = poisson_bracket(x, y);
      if (bracket(BracketKind::super, x, y) != xy) {
        r.homomorphism = false;
        r.witnesses.push_back("star bracket differs from Poisson on " + pairs_text(x, y));
      }
      Matrix mx = sp_matrix(x), my = sp_matrix(y);
      Matrix lhs = sp_matrix(xy), a = mat_mul(mx, my), b = mat_mul(my, mx);
      for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < lhs.size(); ++j)
          if (lhs[i][j] != a[i][j] - b[i][j]) {
            r.homomorphism = false;
            r.witnesses.push_back("theta not a homomorphism on " + pairs_text(x, y));
            i = lhs.size();
            break;
          }
    }
  // Phi(a, b) = 1/2 {a, b}
  auto phi = [](const Poly& a, const Poly& b) { return eval_zero(poisson_bracket(a, b)) * Scalar::rational(1, 2); };
  r.form_invariant = true;
  Matrix flat;
  for (const auto& x : s2) {
    for (const auto& a : s1)
      for (const auto& b : s1)
        if (!(phi(poisson_bracket(x, a), b) + phi(a, poisson_bracket(x, b))).is_zero()) {
          r.form_invariant = false;
          r.witnesses.push_back("Phi not invariant under " + x.to_string());
        }
    Row row;
    for (const auto& line : sp_matrix(x)) row.insert(row.end(), line.begin(), line.end());
    flat.push_back(std::move(row));
  }
  r.injective = exact_rank(flat) == s2.size();
  return r;
}

ThetaReport theta_check(unsigned n) {
  ThetaReport r;
  r.n = n;
  Space s = Space::symplectic(n);
  Poly one = Poly::constant(s, 1);
  r.theta_one_one = b_form(one, one);
  MonomialBasis v(s, {0, 1});
  auto vb = v.elements();
  auto s1 = homogeneous_basis(s, 1);
  r.half_poisson = true;
  for (const auto& a : s1)
    for (const auto& b : s1)
      if (b_form(a, b) != eval_zero(poisson_bracket(a, b)) * Scalar::rational(1, 2)) {
        r.half_poisson = false;
        r.witnesses.push_back("Theta" + pairs_text(a, b) + " != 1/2{,}");
      }
  r.supersymmetric = true;
  for (const auto& a : vb)
    for (const auto& b : vb)
      if (b_form(a, b) != sign(par(a) * par(b)) * b_form(b, a)) {
        r.supersymmetric = false;
        r.witnesses.push_back("Theta not supersymmetric on " + pairs_text(a, b));
      }
  r.invariant = true;
  for (const auto& x : osp_basis(n))
    for (const auto& a : vb) {
      Poly xa = bracket(BracketKind::twisted_super, x, a);
      if (!v.contains(xa)) {
        r.invariant = false;
        r.witnesses.push_back("ad'" + pairs_text(x, a) + " leaves K + S^1");
        continue;
      }
      for (const auto& b : vb) {
        Poly xb = bracket(BracketKind::twisted_super, x, b);
        Scalar t = b_form(xa, b) + sign(par(x) * par(a)) * b_form(a, xb);
        if (!t.is_zero()) {
          r.invariant = false;
          r.witnesses.push_back("Theta not ad'-invariant: x=" + x.to_string() + " on " + pairs_text(a, b));
        }
      }
    }
  return r;
}

GramReport kappa_gram(unsigned l, unsigned n) {
  GramReport r;
  r.l = l;
  r.n = n;
  auto basis = homogeneous_basis(Space::symplectic(n), l);
  std::size_t d = basis.size();
  r.gram.assign(d, Row(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) r.gram[a][b] = kappa(basis[a], basis[b]);
  r.rank = exact_rank(r.gram);
  r.symmetric = r.antisymmetric = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (r.gram[a][b] != r.gram[b][a]) r.symmetric = false;
      if (r.gram[a][b] != -r.gram[b][a]) r.antisymmetric = false;
    }
  return r;
}

bool kappa_block_zero(unsigned l, unsigned m, unsigned n) {
  Space s = Space::symplectic(n);
  auto bl = homogeneous_basis(s, l), bm = homogeneous_basis(s, m);
  for (const auto& f : bl)
    for (const auto& g : bm)
      if (!kappa(f, g).is_zero()) return false;
  return true;
}

}  // namespace weyl
