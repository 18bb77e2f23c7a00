#include "doctest.h"
#include "random_poly.hpp"
#include "weyl/linalg.hpp"
#include "weyl/moyal.hpp"
#include "weyl/parse.hpp"

using namespace weyl;
using weyl::testing::random_homogeneous;
using weyl::testing::random_poly;

namespace {

Poly S1(const std::string& s) { return parse_expression(s, Space::symplectic(1)); }
Poly S2(const std::string& s) { return parse_expression(s, Space::symplectic(2)); }

Scalar q(long a, long b) { return Scalar::rational(a, b); }

// Generalized Laguerre coefficients read off the truncated generating function
// (1 - t)^(-a-1) exp(-x t / (1 - t)).
std::vector<Poly> laguerre_by_generating_function(unsigned order, long alpha) {
  Space s = Space::plain(1);
  using Series = std::vector<Poly>;
  auto mul = [&](const Series& a, const Series& b) {
    Series r(order + 1, Poly(s));
    for (unsigned i = 0; i <= order; ++i)
      for (unsigned j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  Series pre(order + 1, Poly(s));
  Scalar a(1);
  for (unsigned j = 0; j <= order; ++j) {
    pre[j] = Poly::constant(s, a);
    a *= Scalar(alpha + 1 + static_cast<long>(j)) / Scalar(static_cast<long>(j + 1));
  }
  Series u(order + 1, Poly(s));  // -x t/(1-t)
  for (unsigned j = 1; j <= order; ++j) u[j] = -Poly::x(1, 1);
  Series ex(order + 1, Poly(s)), power(order + 1, Poly(s));
  power[0] = Poly::constant(s, 1);
  for (unsigned k = 0; k <= order; ++k) {
    Scalar inv = Scalar(1) / Scalar(factorial(k));
    for (unsigned j = 0; j <= order; ++j) ex[j].add_scaled(power[j], inv);
    power = mul(power, u);
  }
  return mul(pre, ex);
}

}  // namespace

TEST_CASE("ck coefficient examples") {
  CHECK(ck_coefficient(1, S1("p1"), S1("q1")) == S1("1/2"));
  CHECK(ck_coefficient(1, S1("p1"), S1("q1")) ==
        poisson_bracket(S1("p1"), S1("q1")) * q(1, 2));
  CHECK(ck_coefficient(2, S1("q1^2"), S1("p1^2")) == S1("1/2"));
  CHECK(ck_coefficient(0, S1("p1"), S1("q1")) == S1("p1*q1"));
  CHECK(ck_coefficient(3, S1("p1^2"), S1("q1^5")).is_zero());
}

TEST_CASE("ck of powers of p1 and q1 follows the binomial closed form") {
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned l = 0; l <= 6; ++l)
      for (unsigned m = 0; m <= 6; ++m)
        for (unsigned k = 0; k <= 7; ++k) {
          Poly f = Poly::p(n, 1).pow(l), g = Poly::q(n, 1).pow(m);
          Poly expect(Space::symplectic(n));
          if (k <= std::min(l, m)) {
            Scalar c = Scalar(factorial(k) * binomial(l, k) * binomial(m, k)) /
                       Scalar(mpz_class(mpz_class(1) << k));
            expect = Poly::p(n, 1).pow(l - k) * Poly::q(n, 1).pow(m - k) * c;
          }
          CHECK(ck_coefficient(k, f, g) == expect);
        }
}

TEST_CASE("C1 is half the Poisson bracket, parity and degree support") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 80; ++it) {
    Space s = weyl::testing::random_symplectic(rng, 2);
    unsigned fd = rng() % 5, gd = rng() % 5;
    Poly f = random_homogeneous(rng, s, fd, 3), g = random_homogeneous(rng, s, gd, 3);
    CHECK(ck_coefficient(1, f, g) == poisson_bracket(f, g) * q(1, 2));
    for (unsigned k = 0; k <= 5; ++k) {
      Poly a = ck_coefficient(k, f, g), b = ck_coefficient(k, g, f);
      CHECK(b == (k % 2 ? -a : a));
      if (!a.is_zero()) {
        CHECK(a.is_homogeneous());
        CHECK(a.degree() == static_cast<int>(fd + gd - 2 * k));
      }
      if (k > std::min(fd, gd)) CHECK(a.is_zero());
    }
    Poly fg = star(f, g);
    for (auto& [d, part] : graded_components(fg)) {
      CHECK(d <= fd + gd);
      CHECK((fd + gd - d) % 2 == 0);
    }
  }
}

TEST_CASE("star product examples") {
  CHECK(star(S1("p1"), S1("q1")) == S1("p1*q1 + 1/2"));
  CHECK(star(S1("q1"), S1("p1")) == S1("p1*q1 - 1/2"));
  CHECK(star(S1("q1^2"), S1("p1^2")) == S1("p1^2*q1^2 - 2*p1*q1 + 1/2"));
  Poly f = S2("p1^2*q2 - 3*q1 + 1/5");
  CHECK(star(f, S2("1")) == f);
  CHECK(star(S2("1"), f) == f);
  DeformationParameter t{q(1, 3)};
  CHECK(star(S1("p1"), S1("q1"), t) == S1("p1*q1 + 1/6"));
  CHECK(star(S1("p1^2"), S1("q1^2"), DeformationParameter{Scalar(0)}) == S1("p1^2*q1^2"));
}

TEST_CASE("star equals the sum of t^k C_k") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 30; ++it) {
    Space s = weyl::testing::random_symplectic(rng, 2);
    Poly f = random_poly(rng, s, 0, 4, 3, true), g = random_poly(rng, s, 0, 4, 3, true);
    Scalar t = weyl::testing::random_scalar(rng, true);
    Poly sum(s);
    for (unsigned k = 0; k <= 4; ++k) sum.add_scaled(ck_coefficient(k, f, g), t.pow(k));
    CHECK(star(f, g, {t}) == sum);
    CHECK(star_truncated(f, g, 2, {t}) == sum.truncated(2));
  }
}

TEST_CASE("star is associative") {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 200; ++it) {
    Space s = weyl::testing::random_symplectic(rng, 2);
    Poly f = random_poly(rng, s, 0, 5, 2), g = random_poly(rng, s, 0, 5, 2),
         h = random_poly(rng, s, 0, 5, 2);
    CHECK(star(star(f, g), h) == star(f, star(g, h)));
  }
}

TEST_CASE("n=1 closed formula agrees with the tensor iteration") {
  CHECK(star_n1_closed(S1("p1"), S1("q1")) == S1("p1*q1 + 1/2"));
  CHECK(star_n1_closed(S1("q1"), S1("p1")) == S1("p1*q1 - 1/2"));
  CHECK_THROWS(star_n1_closed(S2("p1"), S2("q1")));
  std::mt19937_64 rng(4);
  for (int it = 0; it < 100; ++it) {
    Space s = Space::symplectic(1);
    Poly f = random_poly(rng, s, 0, 6, 4, true), g = random_poly(rng, s, 0, 6, 4, true);
    DeformationParameter t{it % 2 ? Scalar(1) : weyl::testing::random_scalar(rng, true)};
    CHECK(star_n1_closed(f, g, t) == star(f, g, t));
  }
}

TEST_CASE("bracket examples") {
  CHECK(bracket(BracketKind::lie, S1("p1"), S1("q1")) == S1("1"));
  CHECK(bracket(BracketKind::super, S1("p1"), S1("q1")) == S1("2*p1*q1"));
  CHECK(bracket(BracketKind::twisted_super, S1("p1"), S1("1")) == S1("2*p1"));
  CHECK(bracket(BracketKind::twisted_lie, S1("p1"), S1("1")) == S1("2*p1"));
  CHECK(bracket(BracketKind::twisted_lie, S1("p1^2"), S1("1")).is_zero());
  CHECK(bracket_kind_from_string("twisted_super") == BracketKind::twisted_super);
  CHECK_THROWS(bracket_kind_from_string("jordan"));
}

TEST_CASE("lie bracket keeps the odd C_k only and is Poisson in low degree") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 60; ++it) {
    Space s = weyl::testing::random_symplectic(rng, 2);
    Poly f = random_poly(rng, s, 0, 4, 3), g = random_poly(rng, s, 0, 4, 3);
    Poly odd(s);
    for (unsigned k = 1; k <= 4; k += 2) odd.add_scaled(ck_coefficient(k, f, g), 2);
    CHECK(bracket(BracketKind::lie, f, g) == odd);
    Poly small = random_poly(rng, s, 0, 2, 3);
    CHECK(bracket(BracketKind::lie, small, g) == poisson_bracket(small, g));
  }
}

TEST_CASE("brackets on mixed parity split into homogeneous parts") {
  Poly f = S1("p1 + p1^2"), g = S1("q1 + 1");
  Poly expect = bracket(BracketKind::super, S1("p1"), S1("q1")) +
                bracket(BracketKind::super, S1("p1"), S1("1")) +
                bracket(BracketKind::super, S1("p1^2"), S1("q1")) +
                bracket(BracketKind::super, S1("p1^2"), S1("1"));
  CHECK(bracket(BracketKind::super, f, g) == expect);
}

TEST_CASE("supertrace") {
  CHECK(supertrace(star(S1("p1^2"), S1("q1^2"))) == q(1, 2));
  CHECK(supertrace(S1("1")) == Scalar(1));
  CHECK(supertrace(S1("p1^3 + q1")).is_zero());
  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    Space s = weyl::testing::random_symplectic(rng, 2);
    Poly f = random_homogeneous(rng, s, rng() % 5, 3, true);
    Poly g = random_homogeneous(rng, s, rng() % 5, 3, true);
    CHECK(supertrace(bracket(BracketKind::super, f, g)).is_zero());
  }
}

TEST_CASE("kappa and B examples") {
  CHECK(kappa(S1("p1"), S1("q1")) == q(1, 2));
  CHECK(kappa(S1("q1"), S1("p1")) == q(-1, 2));
  CHECK(kappa(S1("p1"), S1("q1^2")).is_zero());
  CHECK(b_form(S1("1"), S1("1")) == Scalar(-1));
  CHECK(b_form(S1("p1"), S1("q1")) == q(1, 2));
  CHECK(b_form(S1("p1"), S1("q1")) == eval_zero(poisson_bracket(S1("p1"), S1("q1"))) * q(1, 2));
  CHECK(b_form(S1("p1^2"), S1("q1^2")) == q(-1, 2));
}

TEST_CASE("kappa supersymmetry, block orthogonality and invariance") {
  std::mt19937_64 rng(10);
  for (int it = 0; it < 80; ++it) {
    Space s = weyl::testing::random_symplectic(rng, 2);
    unsigned fd = rng() % 4, gd = rng() % 4, hd = rng() % 4;
    Poly f = random_homogeneous(rng, s, fd, 2), g = random_homogeneous(rng, s, gd, 2),
         h = random_homogeneous(rng, s, hd, 2);
    int fp = fd % 2, gp = gd % 2, hp = hd % 2;
    Scalar kfg = kappa(f, g);
    CHECK(kappa(g, f) == ((fp * gp) % 2 ? -kfg : kfg));
    if (fd != gd) CHECK(kfg.is_zero());

    Scalar inv = kappa(bracket(BracketKind::super, f, g), h);
    Scalar other = kappa(g, bracket(BracketKind::super, f, h));
    CHECK(inv + ((fp * gp) % 2 ? -other : other) == Scalar());

    Scalar bi = b_form(bracket(BracketKind::twisted_super, f, g), h);
    Scalar bo = b_form(g, bracket(BracketKind::twisted_super, f, h));
    CHECK(bi + ((fp * gp) % 2 ? -bo : bo) == Scalar());
    (void)hp;
  }
}

TEST_CASE("kappa Gram matrices are nonsingular with the expected symmetry") {
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned l = 0; l <= 4; ++l) {
      auto basis = homogeneous_basis(Space::symplectic(n), l);
      Matrix g(basis.size(), Row(basis.size()));
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) g[a][b] = kappa(basis[a], basis[b]);
      CHECK(exact_rank(g) == basis.size());
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
          CHECK(g[a][b] == (l % 2 ? -g[b][a] : g[b][a]));
    }
}

TEST_CASE("laguerre polynomials") {
  Poly x = Poly::x(1, 1);
  Space s = Space::plain(1);
  CHECK(laguerre_poly(0, 3, x) == Poly::constant(s, 1));
  CHECK(laguerre_poly(1, 0, x) == parse_expression("1 - x1", s));
  CHECK(laguerre_poly(2, 0, x) == parse_expression("(x1^2 - 4*x1 + 2)/2", s));
  for (long alpha : {-3L, -1L, 0L, 1L, 2L, 5L}) {
    auto gf = laguerre_by_generating_function(8, alpha);
    for (unsigned b = 0; b <= 8; ++b) CHECK(laguerre_poly(b, alpha, x) == gf[b]);
  }
}

TEST_CASE("Laguerre closed form of q^i * p^j") {
  CHECK(star_monomial_closed(1, 1) == S1("p1*q1 - 1/2"));
  for (unsigned l = 0; l <= 6; ++l) {
    Scalar c = Scalar(factorial(l)) / Scalar(mpz_class(mpz_class(1) << l));
    if (l % 2) c = -c;
    CHECK(star_monomial_closed(l, l) == laguerre_poly(l, 0, S1("2*p1*q1")) * c);
  }
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; j <= 6; ++j)
      CHECK(star_monomial_closed(i, j) == star(Poly::q(1, 1).pow(i), Poly::p(1, 1).pow(j)));
}
