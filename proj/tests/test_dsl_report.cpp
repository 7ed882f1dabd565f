#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "hurwitz/dsl.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/report.hpp"
#include "support.hpp"

using namespace hurwitz;
using Kind = SpecNode::Kind;

namespace {

nlohmann::json golden() {
  std::ifstream f(std::string(HURWITZ_DATA_DIR) + "/golden.json");
  REQUIRE(f.good());
  return nlohmann::json::parse(f);
}

ParseError parse_error(const std::string& text) {
  try {
    parse_ring_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  throw;
}

SpecNode leaf(Kind k, std::vector<std::uint64_t> ints = {}, std::string text = {}) {
  SpecNode n;
  n.kind = k;
  n.ints = std::move(ints);
  n.text = std::move(text);
  return n;
}

SpecNode wrap(Kind k, SpecNode child, std::vector<std::uint64_t> ints = {}) {
  SpecNode n;
  n.kind = k;
  n.children.push_back(std::move(child));
  n.ints = std::move(ints);
  return n;
}

// Small finite base rings, so every generated tree stays cheap to build.
SpecNode random_base(std::mt19937_64& gen) {
  switch (gen() % 4) {
    case 0: return leaf(Kind::zmod, {2 + gen() % 6});
    case 1: return leaf(Kind::gf, {std::vector<std::uint64_t>{2, 3, 5}[gen() % 3]});
    case 2: return leaf(Kind::gf, {2}, "t^2+t+1");
    default: return leaf(Kind::quat, {2 + gen() % 2});
  }
}

SpecNode random_spec(std::mt19937_64& gen) {
  auto zmod = [&](std::uint64_t n) { return leaf(Kind::zmod, {n}); };
  switch (gen() % 14) {
    case 0: return leaf(Kind::integers);
    case 1: {
      SpecNode n;
      n.kind = Kind::prod;
      n.children = {random_base(gen), random_base(gen)};
      if (gen() % 2) n.children.push_back(leaf(Kind::integers));
      return n;
    }
    case 2: return wrap(Kind::mat, zmod(2 + gen() % 2), {1 + gen() % 2});
    case 3: return wrap(Kind::ut, random_base(gen), {1 + gen() % 2});
    case 4: {
      auto n = wrap(Kind::utc, zmod(6), {2 + gen() % 2});
      n.items = {gen() % 2 ? "2" : "3"};
      return n;
    }
    case 5: return wrap(Kind::triv, random_base(gen));
    case 6: {
      auto n = wrap(Kind::trivq, zmod(4));
      n.items = {"2"};
      return n;
    }
    case 7: {
      auto n = wrap(Kind::twist, leaf(Kind::gf, {2}, "t^2+t+1"));
      n.text = gen() % 2 ? "frob" : "id";
      return n;
    }
    case 8: {
      auto n = wrap(Kind::freeq, leaf(Kind::gf, {2 + gen() % 2}), {1 + gen() % 3});
      n.gens = {"a", "b"};
      n.items = {"aa", "b*a"};
      return n;
    }
    case 9: {
      auto n = wrap(Kind::commq, leaf(Kind::gf, {3}));
      n.caps = {{"x", unsigned(1 + gen() % 3)}, {"y", 2}};
      return n;
    }
    case 10: return wrap(Kind::hjet, random_base(gen), {gen() % 3});
    case 11: {
      auto n = wrap(Kind::quot, zmod(12));
      n.items = {std::to_string(std::vector<int>{0, 2, 3, 4, 6}[gen() % 5])};
      return n;
    }
    case 12: {
      auto n = wrap(Kind::corner, zmod(6));
      n.items = {gen() % 2 ? "3" : "4"};
      return n;
    }
    default: return random_base(gen);
  }
}

std::string sprinkle_spaces(const std::string& s, std::mt19937_64& gen) {
  std::string out;
  for (char c : s) {
    out += c;
    if ((c == ',' || c == '(' || c == '[' || c == '{' || c == ':') && gen() % 2) out += "  ";
  }
  return " " + out + "\n";
}

}  // namespace

TEST_CASE("spec parser examples") {
  auto ex = parse_ring_spec("FreeQ(GF(2), [a,b,c], [cc, ac, c*c], 8)");
  CHECK(ex.kind == Kind::freeq);
  CHECK(ex.gens == std::vector<std::string>{"a", "b", "c"});
  CHECK(ex.items == std::vector<std::string>{"cc", "ac", "c*c"});
  CHECK(ex.ints == std::vector<std::uint64_t>{8});
  CHECK(ex.children.at(0) == leaf(Kind::gf, {2}));
  CHECK(print_ring_spec(ex) == "FreeQ(GF(2),[a,b,c],[cc,ac,c*c],8)");

  auto hj = parse_ring_spec("HJet(Zn(4), 1)");
  CHECK(hj == wrap(Kind::hjet, leaf(Kind::zmod, {4}), {1}));
  CHECK(build_ring(hj)->size() == 16u);

  auto e = parse_error("Zn()");
  CHECK(e.kind() == ParseError::Kind::arity);
  CHECK(e.line() == 1);
  CHECK(e.column() == 4);
}

TEST_CASE("diagnostics separate syntax, arity and literal errors") {
  struct Case {
    const char* text;
    ParseError::Kind kind;
    std::size_t column;
  };
  const Case cases[] = {
      {"Zn(4,5)", ParseError::Kind::arity, 5},
      {"Prod(Z)", ParseError::Kind::arity, 7},
      {"Mat(Zn(2))", ParseError::Kind::arity, 10},
      {"Foo(2)", ParseError::Kind::syntax, 1},
      {"Zn(4) x", ParseError::Kind::syntax, 7},
      {"Zn(4", ParseError::Kind::syntax, 5},
      {"Zn[4]", ParseError::Kind::syntax, 3},
      {"Zn(1)", ParseError::Kind::literal, 1},
      {"GF(4)", ParseError::Kind::literal, 1},
      {"GF(2,t^2+1)", ParseError::Kind::literal, 1},
      {"Quot(Zn(4),[7x])", ParseError::Kind::literal, 12},
      {"FreeQ(GF(2),[a,a],[aa],3)", ParseError::Kind::literal, 13},
      {"Corner(Zn(6),2)", ParseError::Kind::literal, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    auto e = parse_error(c.text);
    CHECK(e.kind() == c.kind);
    CHECK(e.column() == c.column);
  }
  auto multi = parse_error("Prod(Zn(2),\n  Zn(0))");
  CHECK(multi.line() == 2);
  CHECK(multi.column() == 3);
  CHECK_FALSE(parse_error("Foo").expected().empty());
}

TEST_CASE("print and parse are inverse on the golden corpus") {
  for (const auto& s : golden()["specs"]) {
    auto text = s.get<std::string>();
    CAPTURE(text);
    auto node = parse_ring_spec(text);
    CHECK(print_ring_spec(node) == text);
    CHECK(build_ring(node)->spec() == text);
  }
}

TEST_CASE("parse inverts print on generated trees") {
  std::mt19937_64 gen(2024);
  for (int t = 0; t < 300; ++t) {
    auto node = random_spec(gen);
    auto text = print_ring_spec(node);
    CAPTURE(text);
    CHECK(parse_ring_spec(text) == node);
    CHECK(parse_ring_spec(sprinkle_spaces(text, gen)) == node);
    CHECK(build_ring(node)->spec() == text);
  }
}

TEST_CASE("element literals are stored canonically") {
  auto n = parse_ring_spec("Quot(Mat(Zn(2),2), [ [[0, 1],[0,0]] ])");
  CHECK(n.items == std::vector<std::string>{"[[0,1],[0,0]]"});
  CHECK(print_ring_spec(n) == "Quot(Mat(Zn(2),2),[[[0,1],[0,0]]])");
  CHECK(print_ring_spec(parse_ring_spec("Quot(Zn(12),[16])")) == "Quot(Zn(12),[4])");
}

TEST_CASE("holds reports carry a null witness") {
  Report r;
  r.ring = "Zn(5)";
  r.add("reduced", check_reduced(ring_from_spec("Zn(5)")));
  auto j = nlohmann::ordered_json::parse(emit_report(r, Format::json));
  CHECK(j["checks"][0]["status"] == "holds");
  CHECK(j["checks"][0]["witness"].is_null());
  CHECK(j["scenario"].is_null());
  CHECK(j["version"] == "0.1.0");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"scenario", "ring", "checks", "timing_ms", "version"});
}

TEST_CASE("the free quotient witness value is the word abc") {
  auto ring = ring_from_spec("FreeQ(GF(2),[a,b,c],[cc,ac,c*c],8)");
  CheckOptions o;
  o.degree = 2;
  Report r;
  r.scenario = "ex2_1";
  r.ring = ring->spec();
  r.add("hurwitz-armendariz", check_hurwitz_armendariz(ring, o));
  auto j = nlohmann::json::parse(emit_report(r, Format::json));
  CHECK(j["checks"][0]["witness"]["value"] == "1*a*b*c");
  CHECK(j["checks"][0]["witness"]["f"] == "<1*a,1*a*b>");
  CHECK(j["checks"][0]["witness"]["g"] == "<1*c,1*b*c>");
}

TEST_CASE("JSON round trip") {
  auto ring = ring_from_spec("Zn(4)");
  Report r;
  r.scenario = "demo";
  r.ring = ring->spec();
  r.timing_ms = 17;
  CheckOptions o;
  o.mode = Mode::random;
  o.samples = 50;
  o.seed = 9;
  o.trunc = 3;
  r.add("hurwitz-armendariz", check_hurwitz_armendariz(ring, o));
  r.add("reduced", check_reduced(ring));
  r.add("semiprime", check_semiprime(ring_from_spec("GF(3)")));
  auto text = emit_report(r, Format::json);
  auto back = parse_report_json(text);
  CHECK(back.scenario == r.scenario);
  CHECK(back.ring == r.ring);
  CHECK(back.timing_ms == 17);
  REQUIRE(back.checks.size() == r.checks.size());
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    auto expect = r.checks[k];
    expect.note.clear();
    CHECK(back.checks[k] == expect);
  }
  CHECK(emit_report(back, Format::json) == text);
  CHECK(schema_problem(text).empty());
}

TEST_CASE("schema violations are reported") {
  CHECK_FALSE(schema_problem("{").empty());
  CHECK_FALSE(schema_problem("[]").empty());
  CHECK_FALSE(
      schema_problem(R"({"scenario":null,"ring":"Z","checks":[],"version":"0.1.0","timing_ms":0})").empty());
  CHECK(schema_problem(R"({"scenario":null,"ring":"Z","checks":[],"timing_ms":0,"version":"0.1.0"})").empty());
  auto bad_status = R"({"scenario":null,"ring":"Z","checks":[{"property":"p","status":"maybe",
    "bounds":{"degree":1,"trunc":0,"mode":"random","samples":1,"seed":0},"witness":null}],"timing_ms":0,"version":"x"})";
  CHECK(schema_problem(bad_status).find("status") != std::string::npos);
  CHECK_THROWS_AS(parse_report_json("nope"), DomainError);
}

TEST_CASE("failing verdicts without a sound witness are refused") {
  auto ring = ring_from_spec("Zn(4)");
  auto fake = Verdict::fails(Bounds{}, nilpotent_witness(ring, ring->parse("1")));
  CHECK_THROWS_AS(make_entry("reduced", fake), InternalError);
  Report r;
  r.add("x", Verdict::unknown(Bounds{}, "budget"));
  CHECK(overall_status(r) == Status::unknown);
  r.add("y", check_reduced(ring));
  CHECK(overall_status(r) == Status::fails);
  CHECK(exit_code(overall_status(r)) == 1);
  CHECK(emit_report(r, Format::text).find("witness") != std::string::npos);
}
