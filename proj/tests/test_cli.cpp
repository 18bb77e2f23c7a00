#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "random_poly.hpp"
#include "weyl/cli.hpp"
#include "weyl/io.hpp"
#include "weyl/moyal.hpp"
#include "weyl/parse.hpp"

using namespace weyl;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  auto s = call({"star", "-n", "1", "p1", "q1"});
  CHECK(s.code == 0);
  CHECK(s.out == "p1*q1 + 1/2\n");

  auto r = call({"rstr", "--op", "S", "--lambda", "1", "-n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n");

  auto d = call({"iw", "--op", "S", "--lambda", "-1", "-n", "1", "--max-degree", "6"});
  CHECK(d.code == 3);
  CHECK(d.out.rfind("status: diverged", 0) == 0);
  auto dj = call({"iw", "--op", "S", "--lambda", "-1", "-n", "1", "--max-degree", "6", "--json"});
  CHECK(dj.code == 3);
  CHECK(Json::parse(dj.out).at("status") == "diverged");
}

TEST_CASE("exit codes") {
  CHECK(call({"star", "-n", "2", "p3", "q1"}).code == 2);
  CHECK(call({"star", "p1"}).code == 2);
  CHECK(call({"nosuch"}).code == 2);
  CHECK(call({"bracket", "--kind", "bogus", "p1", "q1"}).code == 1);
  CHECK(call({"iw", "--op", "S", "--lambda", "3", "--closed"}).code == 1);
  CHECK(call({"rstr"}).code == 2);
  CHECK(call({"osp-check", "--check", "nonsense"}).code == 2);
  CHECK(call({"reconstruct", "--from-json", "/nonexistent/op.json"}).code == 1);
  auto h = call({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("iw") != std::string::npos);
}

TEST_CASE("subcommands produce the library values") {
  CHECK(call({"bracket", "--kind", "super", "p1", "q1"}).out == "2*p1*q1\n");
  CHECK(call({"bracket", "--kind", "lie", "p1", "q1"}).out == "1\n");
  CHECK(call({"str", "p1*q1 + 3/4"}).out == "3/4\n");
  CHECK(call({"kappa", "p1", "q1"}).out == kappa(Poly::p(1, 1), Poly::q(1, 1)).to_string() + "\n");
  CHECK(call({"bform", "p1", "q1"}).out == b_form(Poly::p(1, 1), Poly::q(1, 1)).to_string() + "\n");
  CHECK(call({"rho", "p1*q1"}).out == "q1*p1 + 1/2\n");
  CHECK(call({"star", "-t", "0", "p1", "q1"}).out == "p1*q1\n");
  CHECK(call({"star", "--max-degree", "0", "p1^2", "q1^2"}).out == "1/2\n");
  CHECK(call({"wmap", "q1*p1", "x1^3"}).out == "7/2*x1^3\n");
  CHECK(call({"wmap", "--op", "S", "--lambda", "2", "x1^3"}).out == "8*x1^3\n");
  CHECK(call({"reconstruct", "--op", "S", "--lambda", "1", "--max-order", "4"}).out == "(1) [order <= 4]\n");
  CHECK(call({"rstr", "--op", "E", "--I", "1", "--J", "1", "--closed"}).out == "-1\n");
  CHECK(call({"rstr", "--op", "S", "--lambda", "1", "-n", "3", "--closed"}).out == "1/8\n");
  CHECK(call({"strwbar", "--op", "E", "--I", "2", "--J", "1"}).out == "0\n");
  CHECK(call({"ck-image", "-k", "2", "-l", "3", "-m", "2"}).code == 0);
  CHECK(call({"cg", "-l", "3", "-m", "2"}).code == 0);
  CHECK(call({"osp-roots", "-n", "2"}).code == 0);

  auto closed = call({"iw", "--op", "S", "--lambda", "i", "--closed", "--max-degree", "2"});
  CHECK(closed.code == 0);
  CHECK(closed.out == "status: converged\n0: 1-i [converged]\n1: 0 [converged]\n2: (2+2*i)*p1*q1 [converged]\n");
}

TEST_CASE("osp checks") {
  for (std::vector<std::string> args : {std::vector<std::string>{"--check", "structure", "-n", "2"},
                                        {"--check", "stability", "-n", "2", "-k", "2"},
                                        {"--check", "highest-weight", "-k", "4"},
                                        {"--check", "highest-weight", "-n", "2", "--vector", "p1^3"},
                                        {"--check", "musson", "--max-degree", "4"},
                                        {"--check", "sp2n", "-n", "2"},
                                        {"--check", "theta", "-n", "2"},
                                        {"--check", "gram", "-l", "3", "-n", "2"},
                                        {"--check", "degree-image", "-l", "3", "-m", "4", "--kind", "super"}}) {
    args.insert(args.begin(), "osp-check");
    auto r = call(args);
    CHECK_MESSAGE(r.code == 0, args[2] << ": " << r.out << r.err);
    args.push_back("--json");
    auto j = Json::parse(call(args).out);
    CHECK(j.at("status") == "pass");
    CHECK(j.contains("parameters"));
    CHECK(j.contains("witnesses"));
  }
  auto bad = call({"osp-check", "--check", "highest-weight", "--vector", "q1^2", "--json"});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out).at("status") == "fail");
}

TEST_CASE("json output and operator files") {
  auto s = call({"star", "-n", "2", "p1*q2 + i*p2", "q1^2 - 1/3*q2", "--json"});
  REQUIRE(s.code == 0);
  Space w = Space::symplectic(2);
  CHECK(poly_from_json(Json::parse(s.out)) ==
        star(parse_expression("p1*q2 + i*p2", w), parse_expression("q1^2 - 1/3*q2", w)));

  PolyTable table;
  table[MultiIndex{1, 0}] = parse_expression("x1 - 2*x2", Space::plain(2));
  table[MultiIndex{0, 2}] = parse_expression("1/2*x2^2 + i", Space::plain(2));
  LinOp op = LinOp::finite_rank(2, table);
  LinOp back = linop_from_json(to_json(op));
  CHECK(to_json(back) == to_json(op));

  auto path = std::filesystem::temp_directory_path() / "weylcalc_test_op.json";
  { std::ofstream(path) << to_json(op).dump(); }
  auto r = call({"rstr", "--from-json", path.string(), "--json"});
  CHECK(r.code == 0);
  Json rj = Json::parse(r.out);
  CHECK(rj.at("status") == "converged");
  auto rec = call({"reconstruct", "--from-json", path.string(), "--max-order", "3", "--json"});
  CHECK(Json::parse(rec.out).at("truncation") == 3);
  { std::ofstream(path) << "{\"n\": 1, \"kind\": "; }
  CHECK(call({"rstr", "--from-json", path.string()}).code == 2);
  std::filesystem::remove(path);

  for (const LinOp& special : {LinOp::elementary(MultiIndex{2, 1}, MultiIndex{0, 3}), LinOp::scaling(2, Scalar::i()),
                               LinOp::special(1, ExpEulerOp{Scalar::rational(3, 2), 0.405})})
    CHECK(to_json(linop_from_json(to_json(special))) == to_json(special));
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> runs{
      {"star", "-n", "2", "p1^2*q2 + p2", "q1*q2^2 - i*p1"},
      {"iw", "--op", "S", "--lambda", "1/2", "--max-degree", "6"},
      {"iw", "--op", "E", "--I", "1", "--J", "2", "--max-degree", "5", "--json"},
      {"rstr", "--op", "S", "--lambda", "i"},
      {"osp-roots", "-n", "2", "--json"},
      {"reconstruct", "--op", "E", "--I", "1,0", "--J", "0,1", "--max-order", "4"}};
  for (const auto& args : runs) {
    auto a = call(args), b = call(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("print and parse round trip") {
  CHECK(parse_expression("p1*q1 + 1/2", Space::symplectic(1)) ==
        Poly::p(1, 1) * Poly::q(1, 1) + Poly::constant(Space::symplectic(1), Scalar::rational(1, 2)));
  Poly f = parse_expression("x1^3 - i*x2", Space::plain(2));
  CHECK(f.coefficient(MultiIndex{3, 0}) == Scalar(1));
  CHECK(f.coefficient(MultiIndex{0, 1}) == -Scalar::i());
  CHECK_THROWS_AS(parse_expression("p3", Space::symplectic(2)), ParseError);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    Space s = t % 2 ? testing::random_symplectic(rng, 3) : Space::plain(1 + rng() % 3);
    Poly g = testing::random_poly(rng, s, 0, 6, 1 + rng() % 6, true);
    CHECK(parse_expression(g.to_string(), s) == g);
    CHECK(poly_from_json(to_json(g)) == g);
  }
}
