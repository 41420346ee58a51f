#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "commands.hpp"
#include "script.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gi;
using namespace gi::cli;

#ifndef GI_SOURCE_DIR
#error "GI_SOURCE_DIR must point at the source tree"
#endif

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Location error_at(const std::string& text, std::string* msg = nullptr) {
  try {
    Session(parse_script(text));
  } catch (const ScriptError& e) {
    if (msg) *msg = e.detail();
    return e.location();
  }
  FAIL("no diagnostic for: " << text);
  return {};
}

}  // namespace

TEST_CASE("ring declarations") {
  auto s = parse_script("ring A over GF(2) vars x:1, y:1;");
  REQUIRE(s.statements.size() == 1);
  const auto& r = std::get<RingDecl>(s.statements[0]);
  CHECK(r.name == "A");
  CHECK(r.characteristic == 2);
  CHECK(r.vars == std::vector<std::pair<std::string, int>>{{"x", 1}, {"y", 1}});

  auto w = std::get<RingDecl>(parse_script("ring W over QQ vars a:2, b, c:3;").statements[0]);
  CHECK(w.characteristic == 0);
  CHECK(w.vars[1].second == 1);
  CHECK(w.vars[2].second == 3);
}

TEST_CASE("diagnostics carry positions") {
  std::string msg;
  auto l = error_at("ring A over GF(2) vars x:1, y:1;\nideal I in A = z^2 - x*y;", &msg);
  CHECK(msg == "unknown variable z");
  CHECK(l.line == 2);
  CHECK(l.column == 16);

  l = error_at("ring A over GF(6) vars x;", &msg);
  CHECK(msg.find("not a prime") != std::string::npos);
  CHECK(l.column == 16);

  error_at("ring A over QQ vars x:0;", &msg);
  CHECK(msg.find("positive") != std::string::npos);
  error_at("ring A over QQ vars x:-2;", &msg);
  CHECK(msg.find("positive") != std::string::npos);
  error_at("ring A over QQ vars x, x;", &msg);
  CHECK(msg.find("duplicate") != std::string::npos);
  error_at("ring A over QQ vars x, y;\nideal I in A = 2x;", &msg);
  CHECK(msg == "expected '*' between factors");
  error_at("ring A over QQ vars x, y;\nideal I in A = x y;", &msg);
  CHECK(msg == "expected '*' between factors");
  error_at("ring A over QQ vars x, y;\nideal I in A = x^;", &msg);
  CHECK(msg.find("exponent") != std::string::npos);
  error_at("ring A over QQ vars x, y;\nideal I in B = x;", &msg);
  CHECK(msg == "undeclared name B");
  error_at("ring A over QQ vars x;\nring A over QQ vars y;", &msg);
  CHECK(msg.find("already declared") != std::string::npos);
  error_at("ring A over QQ vars x;\nring B over QQ vars y;\nmap f : A -> B = y, y;", &msg);
  CHECK(msg.find("needs 1 images") != std::string::npos);
  error_at("ring A over QQ vars x;\nbetti Z;", &msg);
  CHECK(msg == "undeclared name Z");
  error_at("ring A over QQ vars x;\ncheck nonsense A;", &msg);
  CHECK(msg.find("unknown theorem") != std::string::npos);
  error_at("frobnicate A;", &msg);
  CHECK(msg.find("unknown statement") != std::string::npos);
  error_at("ring A over QQ vars x", &msg);
  CHECK(msg.find("end of input") != std::string::npos);
  error_at("ring A over GF(5) vars x;\nideal I in A = x/5;", &msg);
  error_at("ring A over GF(5) vars x;\nideal I in A = 1/5*x;", &msg);
  CHECK(msg.find("characteristic") != std::string::npos);

  // map images of the wrong degree are rejected when the session is built
  l = error_at("ring A over QQ vars x;\nring B over QQ vars y;\nmap f : A -> B = y^2;", &msg);
  CHECK(l.line == 3);
}

TEST_CASE("polynomials and fractions") {
  Session s(parse_script("ring A over QQ vars x, y;\nideal I in A = 3/2*x^2 - (x + y)^2, -x*y;"));
  const auto& I = s.algebra("I");
  REQUIRE(I.generators().size() == 2);
  auto R = I.ring();
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  auto expect = (x * x).scale(R->field().from_fraction(3, 2)) - (x + y) * (x + y);
  CHECK(I.ideal() == Ideal(R, {expect, -(x * y)}));
}

TEST_CASE("instances") {
  auto text = slurp(std::filesystem::path(GI_SOURCE_DIR) / "scripts" / "quadric.gi");
  Session s(parse_script(text));
  const auto& inst = s.instance("quad");
  CHECK(inst.characteristic == 2);
  CHECK(inst.p_power == 2);
  CHECK(inst.separability == Separability::purely_inseparable);
  CHECK(inst.A.asserted_domain());

  std::string msg;
  error_at("ring P over GF(2) vars x;\nring Q over GF(2) vars x;\nmap f : P -> Q = x;\ninstance i = (P, Q, f) char 3;",
           &msg);
  CHECK(msg.find("characteristic") != std::string::npos);
  error_at("ring P over GF(2) vars x;\nring Q over GF(2) vars x;\nmap f : P -> Q = x;\ninstance i = (Q, P, f);", &msg);
  CHECK(msg.find("goes from") != std::string::npos);
  error_at("ring P over GF(2) vars x;\nring Q over GF(2) vars x;\nmap f : P -> Q = x;\n"
           "instance i = (P, Q, f) separable purely_inseparable;",
           &msg);
  CHECK(msg.find("conflicting") != std::string::npos);
  // toric data contradicting the supplied inseparable degree
  error_at("ring P over GF(2) vars x;\nring Q over GF(2) vars x;\nmap f : P -> Q = x;\n"
           "instance i = (P, Q, f) pe 2 toric [(1)] [(1)];",
           &msg);
  CHECK(msg.find("inseparable degree") != std::string::npos);
}

TEST_CASE("round trip of the shipped scripts") {
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(GI_SOURCE_DIR) / "scripts")) {
    if (entry.path().extension() != ".gi") continue;
    CAPTURE(entry.path().string());
    auto s = parse_script(slurp(entry.path()));
    auto printed = print_script(s);
    auto again = parse_script(printed);
    CHECK(again == s);
    CHECK(print_script(again) == printed);
    ++n;
  }
  CHECK(n >= 2);
}

TEST_CASE("commands produce structured results") {
  Session s(parse_script(slurp(std::filesystem::path(GI_SOURCE_DIR) / "scripts" / "pinchpoint.gi")));
  Options opt;
  opt.format = Format::json;
  Report rep(opt.seed);
  std::ostringstream out;
  run_command({"invariants", {"A"}}, s, opt, rep, out);
  run_command({"check", {"sep", "pinch3"}}, s, opt, rep, out);
  CHECK(out.str().empty());
  const auto& doc = rep.document();
  CHECK(doc["results"][0]["report"]["a-invariant"] == 0);
  CHECK(doc["results"][0]["report"]["multiplicity"] == 3);
  CHECK(doc["results"][0]["report"]["regularity"] == 2);
  CHECK(doc["verdicts"][0]["conclusion"] == "counterexample-consistent");
  CHECK(doc["instances"][0]["name"] == "pinch3");

  opt.format = Format::csv;
  std::ostringstream csv;
  run_command({"invariants", {"B"}}, s, opt, rep, csv);
  CHECK(csv.str() == csv_header() + "\nB,2,2,4,3,1,-1,1,1,1\n");
  CHECK_THROWS_AS(run_command({"invariants", {"nope"}}, s, opt, rep, csv), InputError);
}
