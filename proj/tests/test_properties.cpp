#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/ring_core.hpp"
#include "support.hpp"

using namespace hurwitz;
using testing::el;
using testing::set_of;

namespace {

CheckOptions opts(long degree, Mode mode, std::uint64_t samples = 2000, std::uint64_t seed = 1) {
  CheckOptions o;
  o.degree = degree;
  o.mode = mode;
  o.samples = samples;
  o.seed = seed;
  return o;
}

RingPtr ex21(std::uint64_t p) {
  return make_free_monomial_quotient(make_gf(p), {'a', 'b', 'c'}, {"cc", "ac", "c*c"}, 8);
}

void expect_sound(const Verdict& v) {
  if (v.status != Status::fails) return;
  REQUIRE(v.witness);
  CHECK(revalidate(*v.witness));
}

// Oracle for Baer: every nonempty subset's right annihilator, by brute force
// over all subsets.
bool brute_baer(const RingPtr& r) {
  auto elems = r->elements();
  auto ids = idempotents(*r);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << elems.size()); ++mask) {
    ElementSet s;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (mask >> k & 1) s.push_back(elems[k]);
    normalize(s);
    auto ann = right_annihilator(*r, s);
    bool found = false;
    for (const auto& e : ids) found = found || right_multiples(*r, e) == ann;
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("reduced and semiprime") {
  auto z6 = make_zmod(6);
  CHECK(check_reduced(z6).status == Status::holds);
  CHECK(check_semiprime(z6).status == Status::holds);
  auto m = make_matrix_full(make_zmod(2), 2);
  auto r = check_reduced(m);
  REQUIRE(r.status == Status::fails);
  expect_sound(r);
  CHECK(check_semiprime(m).status == Status::holds);
  auto z4 = make_zmod(4);
  auto a = check_reduced(z4), b = check_semiprime(z4);
  REQUIRE(a.status == Status::fails);
  REQUIRE(b.status == Status::fails);
  CHECK(a.witness->value == "2");
  CHECK(b.witness->value == "2");
  expect_sound(b);
}

TEST_CASE("insertion of factors") {
  auto m = make_matrix_full(make_zmod(2), 2);
  auto v = check_ifp(m);
  REQUIRE(v.status == Status::fails);
  expect_sound(v);
  auto e12 = el(m, "[[0,1],[0,0]]"), e21 = el(m, "[[0,0],[1,0]]");
  CHECK(revalidate(ifp_witness(m, e12, e21, e12)));
  for (std::uint64_t n = 2; n <= 12; ++n) CHECK(check_ifp(make_zmod(n)).status == Status::holds);

  auto f = ex21(2);
  auto w = check_ifp(f);
  REQUIRE(w.status == Status::fails);
  expect_sound(w);
  CHECK(w.bounds.mode == Mode::directed);
  CHECK(w.note.find("8") != std::string::npos);
}

TEST_CASE("Armendariz counterexamples in commutative monomial quotients") {
  auto s = make_comm_monomial_quotient(make_gf(3), {{"x", 2}, {"y", 2}});
  auto known = pair_witness(s, Witness::Kind::ordinary_pair, {el(s, "x"), el(s, "y")}, {el(s, "x"), el(s, "-y")});
  CHECK(revalidate(known));
  CHECK(known.value == s->str(s->mul(el(s, "x"), el(s, "-y"))));
  for (Mode m : {Mode::exhaustive, Mode::directed}) {
    auto v = check_armendariz(s, opts(1, m));
    REQUIRE(v.status == Status::fails);
    expect_sound(v);
  }
  // S = GF(3)[x,y]/(x^3,y^2), m = 2
  auto t = make_comm_monomial_quotient(make_gf(3), {{"x", 3}, {"y", 2}});
  auto x2 = el(t, "x^2"), y = el(t, "y");
  CHECK(revalidate(pair_witness(t, Witness::Kind::ordinary_pair, {x2, y}, {x2, t->neg(y)})));
  auto v = check_armendariz(t, opts(1, Mode::directed));
  REQUIRE(v.status == Status::fails);
  expect_sound(v);

  CHECK(check_armendariz(make_gf(2), opts(2, Mode::exhaustive)).status == Status::holds);
}

TEST_CASE("Hurwitz-Armendariz on the free monomial counterexample") {
  for (std::uint64_t p : {2u, 3u}) {
    CAPTURE(p);
    auto r = ex21(p);
    auto v = check_hurwitz_armendariz(r, opts(2, Mode::directed));
    REQUIRE(v.status == Status::fails);
    expect_sound(v);
    CHECK(v.witness->value == "1*a*b*c");
    CHECK(v.witness->kind == Witness::Kind::hurwitz_pair);
    // the exact product is identically zero
    auto f = HurwitzPoly(r, v.witness->f), g = HurwitzPoly(r, v.witness->g);
    CHECK(hpoly_mul(f, g).is_zero());
    CHECK(r->str(r->mul(v.witness->f[v.witness->i], v.witness->g[v.witness->j])) == "1*a*b*c");
  }
  auto r2 = ex21(2);
  auto w = check_hurwitz_armendariz(r2, opts(2, Mode::directed));
  CHECK(w.witness->f_text == to_string(std::vector<Element>{el(r2, "a"), el(r2, "a*b")}, *r2));
  CHECK(w.witness->g_text == to_string(std::vector<Element>{el(r2, "c"), el(r2, "b*c")}, *r2));
  // the GF(3) witness from the example text
  auto r3 = ex21(3);
  std::vector<Element> f{el(r3, "a"), el(r3, "-a*b")}, g{el(r3, "c"), el(r3, "b*c"), el(r3, "2*b^2*c")};
  CHECK(revalidate(pair_witness(r3, Witness::Kind::hurwitz_pair, f, g)));
}

TEST_CASE("positive characteristic defeats the Hurwitz condition") {
  // oracle: x * 2x = C(2,1) * 2 x^2 = 4x^2 = 0 in Zn(4), while a_1 b_1 = 2
  auto z4 = make_zmod(4);
  auto v = check_hurwitz_armendariz(z4, opts(2, Mode::exhaustive));
  REQUIRE(v.status == Status::fails);
  expect_sound(v);
  CHECK(revalidate(pair_witness(z4, Witness::Kind::hurwitz_pair, {el(z4, "0"), el(z4, "1")},
                                {el(z4, "0"), el(z4, "2")})));
  CHECK(check_hurwitz_armendariz(z4, opts(1, Mode::directed)).status == Status::fails);
  // over GF(p) a zero product x^i x^j needs p | C(i+j, i), so the smallest
  // witness has degree ceil(p/2)
  for (std::uint64_t p : {2u, 3u, 5u}) {
    CAPTURE(p);
    auto f = make_gf(p);
    long first = long((p + 1) / 2);
    if (first > 1) CHECK(check_hurwitz_armendariz(f, opts(first - 1, Mode::exhaustive)).status == Status::holds);
    auto w = check_hurwitz_armendariz(f, opts(first, Mode::exhaustive));
    REQUIRE(w.status == Status::fails);
    expect_sound(w);
    CHECK(check_armendariz(f, opts(first, Mode::exhaustive)).status == Status::holds);
    auto d = check_hurwitz_armendariz(f, opts(first, Mode::directed));
    CHECK(d.status == Status::fails);
    if (first > 1) CHECK(check_hurwitz_armendariz(f, opts(first - 1, Mode::directed)).status == Status::holds);
  }
  // directed mode reaches past degree 1: x * 3x^2 = C(3,1) 3 x^3 = 9x^3 = 0 in Zn(9)
  auto z9 = make_zmod(9);
  CHECK(check_hurwitz_armendariz(z9, opts(1, Mode::exhaustive)).status == Status::holds);
  auto m = check_hurwitz_armendariz(z9, opts(2, Mode::directed));
  REQUIRE(m.status == Status::fails);
  expect_sound(m);
  CHECK(m.witness->value == "3");
  CHECK(check_hurwitz_armendariz(z9, opts(2, Mode::exhaustive)).status == Status::fails);
}

TEST_CASE("truncated Hurwitz rings") {
  auto good = make_hurwitz_truncated(make_gf(2), 1);
  auto h = check_armendariz(good, opts(2, Mode::exhaustive));
  CHECK(h.status == Status::holds);
  CHECK(h.bounds.samples > 0);
  auto bad = make_hurwitz_truncated(make_zmod(4), 1);
  auto v = check_armendariz(bad, opts(1, Mode::directed));
  REQUIRE(v.status == Status::fails);
  expect_sound(v);
  CHECK(v.witness->f.size() <= 2);
  CHECK(v.witness->g.size() <= 2);
}

TEST_CASE("budgets and capabilities") {
  auto o = opts(3, Mode::exhaustive);
  o.budget = 1000;
  auto v = check_armendariz(make_zmod(12), o);
  CHECK(v.status == Status::unknown);
  CHECK(v.note.find("budget") != std::string::npos);
  CHECK_THROWS_AS(check_armendariz(make_integers(), opts(1, Mode::exhaustive)), CapabilityMissing);
  CHECK_THROWS_AS(check_baer(make_integers()), CapabilityMissing);
  auto z = check_hurwitz_armendariz(make_integers(), opts(3, Mode::random, 2000));
  CHECK(z.status == Status::holds);
  CHECK(z.bounds.mode == Mode::random);
}

TEST_CASE("random mode with the jet channel on the integers") {
  auto o = opts(4, Mode::random, 2000);
  o.trunc = 8;
  auto v = check_hurwitz_armendariz(make_integers(), o);
  CHECK(v.status == Status::holds);
  CHECK(v.bounds.trunc == 8);
  CHECK(v.bounds.samples == 4000);
}

TEST_CASE("n-fold products") {
  auto o = opts(2, Mode::directed, 300);
  CHECK(check_nproduct_armendariz(make_gf(5), 2, o).status == Status::holds);
  CHECK(check_nproduct_armendariz(make_gf(5), 4, o).status == Status::holds);
  CHECK(check_nproduct_armendariz(make_trivial_extension(make_zmod(3)), 3, opts(1, Mode::directed, 300)).status ==
        Status::holds);
  CHECK_THROWS_AS(check_nproduct_armendariz(make_zmod(4), 3, o), HypothesisNotEstablished);
  CHECK_THROWS_AS(check_nproduct_armendariz(make_gf(2), 2, o), HypothesisNotEstablished);
  auto loose = o;
  loose.require_hypothesis = false;
  auto bad = check_nproduct_armendariz(make_zmod(4), 3, loose);
  REQUIRE(bad.status == Status::fails);
  expect_sound(bad);
  CHECK_THROWS_AS(check_nproduct_armendariz(make_matrix_full(make_zmod(2), 2), 2, o), HypothesisNotEstablished);
  CHECK_THROWS_AS(check_nproduct_armendariz(make_zmod(4), 1, o), DomainError);
}

TEST_CASE("radical chain") {
  auto z12 = make_zmod(12);
  auto c = check_radical_chain(z12);
  CHECK(c.verdict.status == Status::holds);
  CHECK(c.nilpotents == set_of(z12, {"0", "6"}));
  CHECK(c.jacobson == c.nilpotents);

  auto m = make_matrix_full(make_zmod(2), 2);
  auto d = check_radical_chain(m);
  REQUIRE(d.verdict.status == Status::fails);
  expect_sound(d.verdict);
  CHECK(d.lower.size() == 1);
  CHECK(d.ifp.status == Status::fails);
  CHECK(d.consistent);

  auto ut = make_upper_triangular(make_zmod(3), 2);
  auto u = check_radical_chain(ut);
  CHECK(u.verdict.status == Status::holds);
  CHECK(u.nilpotents.size() == 3);
  CHECK(check_armendariz(ut, opts(1, Mode::directed)).status == Status::fails);
}

TEST_CASE("Baer and p.p.") {
  auto z6 = make_zmod(6);
  CHECK(check_baer(z6).status == Status::holds);
  CHECK(check_pp(z6).status == Status::holds);
  auto z4 = make_zmod(4);
  auto v = check_baer(z4);
  REQUIRE(v.status == Status::fails);
  expect_sound(v);
  CHECK(v.witness->value == "r({2})={0,2}");
  CHECK(check_pp(z4).status == Status::fails);
  CHECK(check_baer(make_gf(5)).status == Status::holds);
  CHECK(check_baer(make_gf(2, "t^2+t+1")).status == Status::holds);

  for (const auto& r : testing::finite_catalog()) {
    if (*r->size() > 16) continue;
    CAPTURE(r->spec());
    auto b = check_baer(r);
    expect_sound(b);
    CHECK((b.status == Status::holds) == brute_baer(r));
    // Baer implies p.p.
    if (b.status == Status::holds) CHECK(check_pp(r).status == Status::holds);
  }
}

TEST_CASE("Baer and p.p. transfer at polynomial level") {
  auto o = opts(2, Mode::directed, 50, 7);
  auto v = check_baer_transfer(make_gf(5), o);
  CHECK(v.status == Status::holds);
  CHECK(v.bounds.samples == 50);
  CHECK(check_pp_transfer(make_gf(5), o).status == Status::holds);
  auto z6 = make_zmod(6);
  CHECK_THROWS_AS(check_baer_transfer(z6, o), HypothesisNotEstablished);
  CHECK_THROWS_AS(check_baer_transfer(make_zmod(4), o), HypothesisNotEstablished);
  // without the Hurwitz condition the conclusion breaks: x * 3x = 6x^2 = 0
  // although r({1}) = 0 in Zn(6)
  auto loose = opts(1, Mode::directed, 200, 7);
  loose.require_hypothesis = false;
  auto bad = check_baer_transfer(z6, loose);
  REQUIRE(bad.status == Status::fails);
  expect_sound(bad);
  auto pp = check_pp_transfer(z6, loose);
  REQUIRE(pp.status == Status::fails);
  expect_sound(pp);
}

TEST_CASE("annihilator maps") {
  auto o = opts(2, Mode::directed, 50);
  CHECK(check_annihilator_maps(make_gf(5), o).status == Status::holds);
  CHECK(check_annihilator_maps(make_gf(7), opts(2, Mode::directed, 20)).status == Status::holds);
  auto z4 = make_zmod(4);
  // oracle: count degree <= 2 polynomials killed by the constant 2
  int killed = 0;
  auto two = el(z4, "2");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) killed += (2 * a % 4 == 0 && 2 * b % 4 == 0 && 2 * c % 4 == 0);
  CHECK(killed == 8);
  CHECK(right_annihilator(*z4, {two}).size() == 2);
  // constants still act termwise, but part (b) needs the Hurwitz condition
  auto bad = check_annihilator_maps(z4, opts(1, Mode::directed, 300));
  REQUIRE(bad.status == Status::fails);
  expect_sound(bad);
  CHECK(bad.note == "equality requires the Hurwitz-Armendariz property");
  auto gf4 = check_annihilator_maps(make_gf(2, "t^2+t+1"), opts(1, Mode::directed, 300));
  CHECK(gf4.status == Status::fails);
}

TEST_CASE("square-zero ideals with regular complement") {
  auto z3 = make_zmod(3);
  auto t = make_trivial_extension(z3);
  auto o = opts(1, Mode::directed);
  auto r = check_square_zero_regular(t, {el(t, "(0|1)")}, o);
  CHECK(r.hypotheses.status == Status::holds);
  CHECK(r.hurwitz_armendariz.status == Status::holds);
  CHECK(r.combined.status == Status::holds);
  // at degree 2 the characteristic takes over: x * x^2 = 3x^3 = 0
  auto r2 = check_square_zero_regular(t, {el(t, "(0|1)")}, opts(2, Mode::exhaustive));
  CHECK(r2.hypotheses.status == Status::holds);
  REQUIRE(r2.combined.status == Status::fails);
  expect_sound(r2.combined);

  auto gf4 = make_gf(2, "t^2+t+1");
  auto tw = make_twisted_extension(gf4, Endomorphism::parse("frob"));
  auto s = check_square_zero_regular(tw, {el(tw, "(0|1)")}, o);
  CHECK(s.hypotheses.status == Status::holds);
  REQUIRE(s.combined.status == Status::fails);
  expect_sound(s.combined);

  auto z4 = make_zmod(4);
  CHECK(check_square_zero_regular(z4, {el(z4, "2")}, o).hypotheses.status == Status::holds);
  auto z8 = make_zmod(8);
  auto bad = check_square_zero_regular(z8, {el(z8, "4")}, o);
  REQUIRE(bad.hypotheses.status == Status::fails);
  expect_sound(bad.hypotheses);
  auto sq = check_square_zero_regular(z8, {el(z8, "2")}, o);
  CHECK(sq.hypotheses.status == Status::fails);
  CHECK(sq.hypotheses.note == "J^2 != 0");
}

TEST_CASE("idempotent splitting") {
  auto z6 = make_zmod(6);
  // 3 Zn(6) = GF(2) and 4 Zn(6) = GF(3) both fail at degree 2, as does Zn(6)
  auto s = check_idempotent_split(z6, el(z6, "3"), opts(2, Mode::exhaustive));
  CHECK(s.ring.status == Status::fails);
  CHECK(s.corner.status == Status::fails);
  CHECK(s.complement.status == Status::fails);
  CHECK(s.consistent);
  expect_sound(s.ring);
  expect_sound(s.corner);
  expect_sound(s.complement);
  auto one = check_idempotent_split(z6, z6->one(), opts(1, Mode::directed));
  CHECK(one.complement.degenerate);
  CHECK(one.consistent);

  auto z = make_integers();
  auto zz = make_product({z, z});
  auto p = check_idempotent_split(zz, el(zz, "(1,0)"), opts(2, Mode::random, 500));
  CHECK(p.ring.status == Status::holds);
  CHECK(p.corner.status == Status::holds);
  CHECK(p.complement.status == Status::holds);

  CHECK_THROWS_AS(check_idempotent_split(z6, el(z6, "2"), {}), NotIdempotent);
  auto ut = make_upper_triangular(make_zmod(2), 2);
  CHECK_THROWS_AS(check_idempotent_split(ut, el(ut, "[[1,0],[0,0]]"), {}), NotAbelian);
}

TEST_CASE("insertion of factors for Hurwitz polynomials") {
  auto o = opts(2, Mode::directed, 300);
  CHECK(check_ifp_hurwitz(make_gf(5), o).status == Status::holds);
  CHECK(check_ifp_hurwitz(make_trivial_extension(make_zmod(3)), opts(1, Mode::directed, 300)).status ==
        Status::holds);
  CHECK_THROWS_AS(check_ifp_hurwitz(make_zmod(4), o), HypothesisNotEstablished);
  auto loose = o;
  loose.require_hypothesis = false;
  expect_sound(check_ifp_hurwitz(make_zmod(4), loose));
}

TEST_CASE("the strictly upper triangular ideal as a rng") {
  auto ut = make_upper_triangular(make_zmod(3), 2);
  auto i = ideal_closure(ut, {el(ut, "[[0,1],[0,0]]")});
  CHECK(i.size() == 3);
  auto o = opts(2, Mode::exhaustive);
  CHECK(check_ideal_armendariz(ut, i.elements, ProductKind::ordinary, o).status == Status::holds);
  CHECK(check_ideal_armendariz(ut, i.elements, ProductKind::hurwitz, o).status == Status::holds);
  auto q = quotient_ring(i);
  CHECK(check_hurwitz_armendariz(q, opts(1, Mode::exhaustive)).status == Status::holds);
  CHECK(check_hurwitz_armendariz(q, opts(1, Mode::directed)).status == Status::holds);
  CHECK(check_hurwitz_armendariz(q, o).status == Status::fails);
  CHECK(check_abelian(ut).status == Status::fails);
}

TEST_CASE("every failing verdict re-validates") {
  for (const auto& r : testing::finite_catalog()) {
    CAPTURE(r->spec());
    expect_sound(check_reduced(r));
    expect_sound(check_semiprime(r));
    expect_sound(check_abelian(r));
    expect_sound(check_ifp(r));
    expect_sound(check_armendariz(r, opts(1, Mode::directed)));
    expect_sound(check_hurwitz_armendariz(r, opts(3, Mode::directed)));
    expect_sound(check_radical_chain(r).verdict);
    expect_sound(check_pp(r));
    if (*r->size() <= 64) expect_sound(check_baer(r));
  }
}

TEST_CASE("random mode never contradicts an exhaustive Holds") {
  for (const auto& r : testing::finite_catalog()) {
    if (*r->size() > 16) continue;
    CAPTURE(r->spec());
    for (auto check : {check_armendariz, check_hurwitz_armendariz}) {
      if (check(r, opts(1, Mode::exhaustive)).status != Status::holds) continue;
      CHECK(check(r, opts(1, Mode::random, 3000, 5)).status != Status::fails);
    }
  }
}

TEST_CASE("the directed degree-1 scan is complete") {
  for (const auto& r : testing::finite_catalog()) {
    if (*r->size() > 32) continue;
    CAPTURE(r->spec());
    for (auto check : {check_armendariz, check_hurwitz_armendariz}) {
      auto full = check(r, opts(1, Mode::exhaustive)).status;
      auto o = opts(1, Mode::directed);
      auto directed = check(r, o).status;
      CHECK(full == directed);
    }
  }
}

TEST_CASE("consistency between the properties across the catalog") {
  for (const auto& r : testing::finite_catalog()) {
    CAPTURE(r->spec());
    bool ha = check_hurwitz_armendariz(r, opts(3, Mode::directed)).status == Status::holds;
    bool ifp = check_ifp(r).status == Status::holds;
    bool abelian = check_abelian(r).status == Status::holds;
    bool semiprime = check_semiprime(r).status == Status::holds;
    bool reduced = check_reduced(r).status == Status::holds;
    auto chain = check_radical_chain(r);
    if (ha) CHECK(ifp);
    if (ifp) CHECK(abelian);
    if (ifp) CHECK(chain.lower == chain.nilpotents);
    CHECK(chain.consistent);
    if (semiprime && ha) CHECK(reduced);
    CHECK((semiprime == reduced || !ifp));
  }
}

TEST_CASE("ordinary and Hurwitz checks agree on domains and odd characteristic") {
  for (std::uint64_t p : {5u, 7u}) {
    auto f = make_gf(p);
    CHECK(check_armendariz(f, opts(2, Mode::exhaustive)).status == Status::holds);
    CHECK(check_hurwitz_armendariz(f, opts(2, Mode::exhaustive)).status == Status::holds);
  }
  auto z = make_integers();
  CHECK(check_armendariz(z, opts(2, Mode::random, 2000)).status == Status::holds);
  CHECK(check_hurwitz_armendariz(z, opts(2, Mode::random, 2000)).status == Status::holds);
  // with 2 invertible the degree-1 systems coincide
  for (const auto& r : testing::finite_catalog()) {
    if (r->characteristic() % 2 == 0) continue;
    CAPTURE(r->spec());
    CHECK(check_armendariz(r, opts(1, Mode::directed)).status ==
          check_hurwitz_armendariz(r, opts(1, Mode::directed)).status);
  }
}

TEST_CASE("property dispatch") {
  auto gf5 = make_gf(5);
  for (const auto& name : property_names()) {
    CAPTURE(name);
    auto o = opts(1, Mode::directed, 20);
    CHECK_NOTHROW(check_property(name, gf5, o));
  }
  auto z6 = make_zmod(6);
  CHECK_THROWS_AS(check_property("noetherian", z6), DomainError);
  CHECK(kempner(2) == 2);
  CHECK(kempner(4) == 4);
  CHECK(kempner(12) == 4);
  CHECK(kempner(9) == 6);
}

TEST_CASE("the hypothesis gate searches directly even when sampling was requested") {
  CheckOptions o;
  o.degree = 4;
  o.mode = Mode::random;
  o.samples = 200;
  o.seed = 9;
  CHECK_THROWS_AS(check_baer_transfer(make_zmod(6), o), HypothesisNotEstablished);
  CHECK_THROWS_AS(check_pp_transfer(make_zmod(6), o), HypothesisNotEstablished);
}
