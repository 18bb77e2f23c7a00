#include "doctest.h"
#include "random_poly.hpp"
#include "weyl/moyal.hpp"
#include "weyl/operator_calculus.hpp"
#include "weyl/parse.hpp"

using namespace weyl;
using weyl::testing::random_poly;
using weyl::testing::random_scalar;

namespace {

Poly X(unsigned n, const std::string& s) { return parse_expression(s, Space::plain(n)); }

// f(images[0], images[1], ...)
Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  Poly out(images.at(0).space());
  for (const auto& [e, c] : f.terms()) {
    Poly t = Poly::constant(out.space(), c);
    for (unsigned v = 0; v < e.size(); ++v)
      if (e[v]) t = t * images[v].pow(e[v]);
    out += t;
  }
  return out;
}

std::vector<MultiIndex> monomials_up_to(unsigned n, unsigned d) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= d; ++k)
    for (auto& m : monomials_of_degree(n, k)) out.push_back(m);
  return out;
}

LinOp random_finite_rank(std::mt19937_64& rng, unsigned n) {
  PolyTable table;
  auto inputs = monomials_up_to(n, 4);
  unsigned entries = 1 + rng() % 4;
  for (unsigned k = 0; k < entries; ++k) {
    Poly out = random_poly(rng, Space::plain(n), 0, 4, 1 + rng() % 3, true);
    table[inputs[rng() % inputs.size()]] = out;
  }
  return LinOp::finite_rank(n, table);
}

}  // namespace

TEST_CASE("coproduct, antipode and counit examples") {
  CHECK(hopf_coproduct(X(1, "x1^2")) == X(2, "x1^2 + 2*x1*x2 + x2^2"));
  CHECK(hopf_coproduct(X(1, "1")) == X(2, "1"));
  CHECK(hopf_coproduct(X(2, "x1*x2")) == X(4, "x1*x2 + x1*x4 + x3*x2 + x3*x4"));
  CHECK(antipode(X(1, "x1^3")) == X(1, "-x1^3"));
  CHECK(antipode(X(1, "x1^2")) == X(1, "x1^2"));
  CHECK(antipode(X(1, "1 + x1")) == X(1, "1 - x1"));
  CHECK(counit(X(2, "3 + x1 - x2^2")) == Scalar(3));
  CHECK_THROWS(hopf_coproduct(parse_expression("p1", Space::symplectic(1))));
}

TEST_CASE("Hopf axioms on monomials up to degree 6") {
  for (unsigned n = 1; n <= 2; ++n) {
    Space s = Space::plain(n), s3 = Space::plain(3 * n);
    std::vector<Poly> left(2 * n, Poly(s3)), right(2 * n, Poly(s3));
    for (unsigned i = 0; i < n; ++i) {
      Poly a = Poly::x(3 * n, i + 1), b = Poly::x(3 * n, n + i + 1), c = Poly::x(3 * n, 2 * n + i + 1);
      left[i] = a + b;  // (Delta (x) Id): x -> x + x', x' -> x''
      left[n + i] = c;
      right[i] = a;  // (Id (x) Delta): x -> x, x' -> x' + x''
      right[n + i] = b + c;
    }
    auto mono = [s](const MultiIndex& e) { return Poly::monomial(s, e); };
    auto eps = [s](const MultiIndex& e) { return Poly::constant(s, e.total() ? 0 : 1); };
    auto anti = [s](const MultiIndex& e) { return antipode(Poly::monomial(s, e)); };
    for (const auto& m : monomials_up_to(n, 6)) {
      Poly f = Poly::monomial(s, m), d = hopf_coproduct(f);
      CHECK(substitute(d, left) == substitute(d, right));
      CHECK(tensor_apply(d, eps, mono) == f);
      CHECK(tensor_apply(d, mono, eps) == f);
      Poly unit = Poly::constant(s, counit(f));
      CHECK(tensor_apply(d, mono, anti) == unit);
      CHECK(tensor_apply(d, anti, mono) == unit);
      CHECK(antipode(antipode(f)) == f);
    }
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Poly f = random_poly(rng, Space::plain(2), 0, 4, 4), g = random_poly(rng, Space::plain(2), 0, 4, 4);
    CHECK(antipode(f * g) == antipode(f) * antipode(g));
    CHECK(hopf_coproduct(f * g) == hopf_coproduct(f) * hopf_coproduct(g));
  }
}

TEST_CASE("duality pairing") {
  CHECK(duality_pairing(X(1, "x1^2"), X(1, "x1^2")) == Scalar(2));
  CHECK(duality_pairing(X(1, "x1"), X(1, "x1^2")) == Scalar(0));
  CHECK(duality_pairing(X(2, "x1^2*x2^3"), X(2, "x1^2*x2^3")) == Scalar(12));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    Space s = Space::plain(2);
    Poly p = random_poly(rng, s, 0, 6, 5, true), f = random_poly(rng, s, 0, 6, 5, true);
    MultiIndex order{static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3)};
    CHECK(duality_pairing(derivative(p, order), f) ==
          duality_pairing(p, Poly::monomial(s, order) * f));

    std::vector<Scalar> v{random_scalar(rng, true), random_scalar(rng, true)};
    Poly ev = substitute(p, {Poly::constant(Space::plain(1), v[0]), Poly::constant(Space::plain(1), v[1])});
    CHECK(duality_pairing(p, truncated_exponential(v, 6)) == eval_zero(ev));
  }
}

TEST_CASE("reconstruction of the trivially sparse operators") {
  for (unsigned n = 1; n <= 2; ++n) {
    DiffOpSeries id = reconstruct_diffop(LinOp::identity(n), 6);
    REQUIRE(id.coefficients.size() == 1);
    CHECK(id.coefficient(MultiIndex(n)) == Poly::constant(Space::plain(n), 1));

    DiffOpSeries d = reconstruct_diffop(LinOp::derivative(n, 1, 6), 6);
    REQUIRE(d.coefficients.size() == 1);
    CHECK(d.coefficient(MultiIndex::unit(n, 0)) == Poly::constant(Space::plain(n), 1));
  }
  CHECK_THROWS_AS(reconstruct_diffop(LinOp::derivative(1, 1, 3), 4), std::domain_error);
}

TEST_CASE("reconstruction of x^i -> x^j") {
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 3; ++j) {
      DiffOpSeries d = reconstruct_diffop(LinOp::elementary(MultiIndex{j}, MultiIndex{i}), i + 6);
      for (unsigned k = 0; k <= i + 6; ++k) {
        Poly expect(Space::plain(1));
        if (k >= i) {
          unsigned l = k - i;
          Scalar c = Scalar(1) / Scalar(factorial(i) * factorial(l));
          expect = Poly::monomial(Space::plain(1), MultiIndex{j + l}, l % 2 ? -c : c);
        }
        CHECK(d.coefficient(MultiIndex{k}) == expect);
      }
    }
}

TEST_CASE("coefficients agree with m o (T (x) S) o Delta") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    unsigned n = 1 + rng() % 2;
    LinOp op = random_finite_rank(rng, n);
    Space s = Space::plain(n);
    auto apply = [&](const MultiIndex& e) { return op.apply_monomial(e); };
    auto anti = [s](const MultiIndex& e) { return antipode(Poly::monomial(s, e)); };
    for (const auto& order : monomials_up_to(n, 6)) {
      Poly lit = tensor_apply(hopf_coproduct(Poly::monomial(s, order)), apply, anti);
      CHECK(diffop_coefficient(op, order) == lit * (Scalar(1) / Scalar(order.factorial())));
    }
  }
}

TEST_CASE("random finite-rank round trip") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    unsigned n = 1 + rng() % 2;
    LinOp op = random_finite_rank(rng, n);
    DiffOpSeries d = reconstruct_diffop(op, 6);
    for (const auto& m : monomials_up_to(n, 6)) {
      Poly f = Poly::monomial(Space::plain(n), m);
      CHECK(d.apply(f) == op.apply(f));
    }
    CHECK_THROWS_AS(d.apply(Poly::monomial(Space::plain(n), MultiIndex::unit(n, 0, 7))), std::domain_error);
  }
}

TEST_CASE("wmap examples") {
  Space s = Space::plain(1);
  NormalSymbol euler{1, {{MultiIndex{1}, X(1, "x1")}}, std::nullopt};
  for (unsigned k = 0; k <= 6; ++k) {
    Poly f = Poly::monomial(s, MultiIndex{k});
    CHECK(wmap_apply(euler, f) == f * Scalar(static_cast<long>(k)));
  }
  NormalSymbol d{1, {{MultiIndex{1}, X(1, "1")}}, std::nullopt};
  CHECK(wmap_apply(d, X(1, "x1^2")) == X(1, "2*x1"));

  Space w = Space::symplectic(1);
  NormalSymbol pq = normal_symbol_of(star(Poly::p(1, 1), Poly::q(1, 1)));
  NormalSymbol p = normal_symbol_of(Poly::p(1, 1)), q = normal_symbol_of(Poly::q(1, 1));
  for (unsigned k = 0; k <= 6; ++k) {
    Poly f = Poly::monomial(s, MultiIndex{k});
    CHECK(wmap_apply(pq, f) == f * Scalar(static_cast<long>(k + 1)));
    CHECK(wmap_apply(p, wmap_apply(q, f)) == f * Scalar(static_cast<long>(k + 1)));
  }
  CHECK(normal_symbol_of(star(Poly::q(1, 1), Poly::p(1, 1))).alpha(MultiIndex{1}) == X(1, "x1"));
  (void)w;

  NormalSymbol cut = to_normal_symbol(LinOp::identity(1), 3);
  CHECK_THROWS_AS(wmap_apply(cut, X(1, "x1^4")), std::domain_error);
}

TEST_CASE("wmap is an algebra homomorphism") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    unsigned n = 1 + rng() % 2;
    Space w = Space::symplectic(n);
    Poly f = random_poly(rng, w, 0, 4, 3, true), g = random_poly(rng, w, 0, 4, 3, true);
    NormalSymbol fg = normal_symbol_of(star(f, g)), sf = normal_symbol_of(f), sg = normal_symbol_of(g);
    for (const auto& m : monomials_up_to(n, 6)) {
      Poly x = Poly::monomial(Space::plain(n), m);
      CHECK(wmap_apply(fg, x) == wmap_apply(sf, wmap_apply(sg, x)));
    }
  }
}

TEST_CASE("normal symbols of operators") {
  NormalSymbol id = to_normal_symbol(LinOp::identity(2), 5);
  REQUIRE(id.alphas.size() == 1);
  CHECK(id.alpha(MultiIndex(2)) == Poly::constant(Space::plain(2), 1));

  NormalSymbol e00 = to_normal_symbol(LinOp::elementary(MultiIndex{0}, MultiIndex{0}), 8);
  Scalar lambda = Scalar::rational(1, 3) + Scalar::i();
  NormalSymbol sl = to_normal_symbol(LinOp::scaling(1, lambda), 8);
  for (unsigned l = 0; l <= 8; ++l) {
    Scalar c = Scalar(1) / Scalar(factorial(l));
    if (l % 2) c = -c;
    CHECK(e00.alpha(MultiIndex{l}) == Poly::monomial(Space::plain(1), MultiIndex{l}, c));
    CHECK(sl.alpha(MultiIndex{l}) ==
          Poly::monomial(Space::plain(1), MultiIndex{l}, c * (Scalar(1) - lambda).pow(l)));
  }

  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    unsigned n = 1 + rng() % 2;
    LinOp op = random_finite_rank(rng, n);
    NormalSymbol sym = to_normal_symbol(op, 6);
    for (const auto& m : monomials_up_to(n, 6)) {
      Poly x = Poly::monomial(Space::plain(n), m);
      CHECK(wmap_apply(sym, x) == op.apply(x));
    }
  }
}

TEST_CASE("ordered products agree with the star product") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 60; ++t) {
    unsigned n = 1 + rng() % 2;
    Poly a = random_poly(rng, Space::plain(n), 0, 4, 3, true);
    MultiIndex order(n);
    for (unsigned i = 0; i < n; ++i) order[i] = rng() % 4;
    Poly pi = Poly::monomial(Space::symplectic(n), order.concat(MultiIndex(n)));
    Poly full = star(embed_q(a), pi);
    CHECK(ordered_product(a, order) == full);
    unsigned cut = rng() % 6;
    CHECK(ordered_product(a, order, cut) == full.truncated(cut));
  }
  for (int t = 0; t < 40; ++t) {
    unsigned n = 1 + rng() % 2;
    Poly w = random_poly(rng, Space::symplectic(n), 0, 5, 4, true);
    CHECK(weyl_element(normal_symbol_of(w)) == w);
  }
}
