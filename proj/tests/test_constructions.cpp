#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/ring_core.hpp"
#include "hurwitz/series.hpp"
#include "support.hpp"

using namespace hurwitz;
using testing::el;

TEST_CASE("residue rings and fields") {
  auto z4 = make_zmod(4);
  CHECK(z4->is_zero(z4->mul(el(z4, "2"), el(z4, "2"))));
  CHECK(z4->characteristic() == 4);
  CHECK_THROWS_AS(make_zmod(1), InvalidConstruction);
  auto f2 = make_gf(2);
  CHECK(*f2->size() == 2);
  CHECK_THROWS_AS(make_gf(4), InvalidConstruction);
  CHECK_THROWS_AS(make_gf(2, "t^2+1"), InvalidConstruction);  // (t+1)^2
  auto f4 = make_gf(2, "t^2+t+1");
  CHECK(*f4->size() == 4);
  auto t = el(f4, "t");
  CHECK(f4->mul(t, t) == el(f4, "t+1"));
  CHECK(f4->str(f4->pow(t, 3)) == "1");
  // every nonzero element of a field is a unit
  CHECK(units(*f4).size() == 3);
  auto f9 = make_gf(3, "t^2+1");
  CHECK(units(*f9).size() == 8);
}

TEST_CASE("integers") {
  auto z = make_integers();
  CHECK(z->characteristic() == 0);
  CHECK_FALSE(z->enumerable());
  auto big = el(z, "123456789012345678901234567890");
  CHECK(z->str(z->mul(big, big)) == "15241578753238836750495351562536198787501905199875019052100");
  CHECK(z->str(z->neg(el(z, "7"))) == "-7");
  std::mt19937_64 gen(1);
  for (int k = 0; k < 2000; ++k) {
    auto x = z->sample(gen);
    if (!z->is_zero(x)) CHECK_FALSE(z->is_zero(z->mul(x, x)));
  }
}

TEST_CASE("CRT decomposition") {
  CHECK(crt_decompose(12) == std::vector<std::uint64_t>{4, 3});
  CHECK(crt_decompose(360) == std::vector<std::uint64_t>{8, 9, 5});
  CHECK(crt_decompose(97) == std::vector<std::uint64_t>{97});
  auto z6 = make_zmod(6);
  auto p = make_product({make_zmod(2), make_zmod(3)});
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      auto img = [&](int v) { return el(p, "(" + std::to_string(v % 2) + "," + std::to_string(v % 3) + ")"); };
      CHECK(p->mul(img(x), img(y)) == img(x * y % 6));
      CHECK(p->add(img(x), img(y)) == img((x + y) % 6));
    }
}

TEST_CASE("CRT isomorphism for every modulus up to 1000") {
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    CAPTURE(n);
    REQUIRE(verify_crt_isomorphism(n));
  }
}

TEST_CASE("products") {
  auto zz = make_product({make_integers(), make_integers()});
  auto e = el(zz, "(1,0)");
  CHECK(zz->mul(e, e) == e);
  CHECK(zz->str(zz->mul(e, el(zz, "(5,-3)"))) == "(5,0)");
  CHECK(zz->characteristic() == 0);
}

TEST_CASE("matrix rings") {
  auto m = make_matrix_full(make_zmod(2), 2);
  CHECK(*m->size() == 16);
  CHECK(is_abelian(m).status == Status::fails);
  CHECK(*make_upper_triangular(make_zmod(3), 2)->size() == 27);
  auto m3 = make_matrix_full(make_zmod(3), 2);
  CHECK(m3->mul(el(m3, "[[0,1],[0,0]]"), el(m3, "[[0,0],[1,0]]")) == el(m3, "[[1,0],[0,0]]"));
  auto ut = make_upper_triangular(make_zmod(3), 2);
  CHECK_THROWS_AS(el(ut, "[[1,0],[1,1]]"), LiteralError);
  CHECK(ut->str(el(ut, "[[1,2],[0,1]]")) == "[[1,2],[0,1]]");
}

TEST_CASE("constant-diagonal triangular rings") {
  auto z6 = make_zmod(6);
  auto r = make_const_diag_ut(z6, {el(z6, "2")}, 3);
  // |S| * |S/I|^3 with I = (2) = {0,2,4}, so |S/I| = 2
  auto q = make_quotient_by(z6, {el(z6, "2")});
  CHECK(*q->size() == 2);
  CHECK(*r->size() == 6 * 8);
  auto z2 = make_zmod(2);
  auto r2 = make_const_diag_ut(z2, {}, 3);
  CHECK(*r2->size() == 16);
  // diagonal-zero elements square into strictly upper support, cube to zero
  auto n = el(r2, "[[0,1,1],[0,0,1],[0,0,0]]");
  CHECK(r2->mul(n, n) == el(r2, "[[0,0,1],[0,0,0],[0,0,0]]"));
  CHECK(r2->is_zero(r2->pow(n, 3)));
  CHECK_THROWS_AS(el(r2, "[[1,0,0],[0,0,0],[0,0,1]]"), LiteralError);
  // action through the quotient map
  auto x = el(r, "[[3,1,0],[0,3,1],[0,0,3]]");
  CHECK(r->str(r->mul(x, x)) == "[[3,0,1],[0,3,0],[0,0,3]]");
}

TEST_CASE("trivial and twisted extensions") {
  auto z4 = make_zmod(4);
  auto t = make_trivial_extension(z4);
  CHECK(t->mul(el(t, "(2|1)"), el(t, "(2|0)")) == el(t, "(0|2)"));
  auto t3 = make_trivial_extension(make_zmod(3));
  ElementSet j;
  for (int m = 0; m < 3; ++m) j.push_back(el(t3, "(0|" + std::to_string(m) + ")"));
  normalize(j);
  auto ideal = ideal_from_set(t3, j);
  CHECK(ideal_product(ideal, ideal).is_zero());

  auto tq = make_trivial_extension_quotient(z4, {el(z4, "2")});
  CHECK(*tq->size() == 8);
  CHECK(tq->mul(el(tq, "(3|1)"), el(tq, "(1|1)")) == el(tq, "(3|0)"));

  auto f4 = make_gf(2, "t^2+t+1");
  auto tw = make_twisted_extension(f4, Endomorphism::parse("frob"));
  // (a|m)(b|n) = (ab | a^2 n + b m)
  for (const auto& a : f4->elements())
    for (const auto& b : f4->elements()) {
      auto m = f4->one();
      auto n = el(f4, "t");
      auto lhs = tw->mul(el(tw, "(" + f4->str(a) + "|" + f4->str(m) + ")"),
                         el(tw, "(" + f4->str(b) + "|" + f4->str(n) + ")"));
      auto second = f4->add(f4->mul(f4->mul(a, a), n), f4->mul(b, m));
      CHECK(lhs == el(tw, "(" + f4->str(f4->mul(a, b)) + "|" + f4->str(second) + ")"));
    }
  CHECK(make_twisted_extension(f4, Endomorphism::parse("t->t+1"))->spec() == "Twist(GF(2,t^2+t+1),t->t+1)");
  CHECK_THROWS_AS(make_twisted_extension(f4, Endomorphism::parse("t->0")), InvalidConstruction);
  CHECK_THROWS_AS(make_twisted_extension(f4, Endomorphism::parse("t->1")), InvalidConstruction);
}

TEST_CASE("endomorphism validation is exhaustive") {
  auto f8 = make_gf(2, "t^3+t+1");
  int accepted = 0;
  for (const auto& img : f8->elements()) {
    try {
      make_twisted_extension(f8, Endomorphism::parse("t->" + f8->str(img)));
      ++accepted;
    } catch (const InvalidConstruction&) {
    }
  }
  // the three Galois automorphisms, and nothing else
  CHECK(accepted == 3);
}

TEST_CASE("free monomial quotient of the counterexample ring") {
  auto r = make_free_monomial_quotient(make_gf(2), {'a', 'b', 'c'}, {"cc", "ac", "c*c"}, 8);
  CHECK(r->truncation_bound() == 8);
  CHECK_FALSE(r->enumerable());
  auto a = el(r, "a"), b = el(r, "b"), c = el(r, "c");
  CHECK(r->is_zero(r->mul(a, c)));
  auto abc = r->mul(r->mul(a, b), c);
  CHECK_FALSE(r->is_zero(abc));
  CHECK(r->str(abc) == "1*a*b*c");
  CHECK_FALSE(r->is_zero(el(r, "1*a*b*b*c")));
  CHECK(r->is_zero(el(r, "c*a*b*c")));
  CHECK(r->is_zero(r->mul(c, r->mul(a, r->mul(b, c)))));
  CHECK(r->str(r->add(el(r, "a+b"), el(r, "b"))) == "1*a");
  CHECK_THROWS_AS(make_free_monomial_quotient(make_gf(2), {'a'}, {"ab"}, 4), InvalidConstruction);
}

TEST_CASE("free monomial basis: a word is zero iff it contains a pattern") {
  auto r = make_free_monomial_quotient(make_gf(3), {'a', 'b', 'c'}, {"cc", "ac", "c*c"}, 6);
  // oracle: direct pattern test on strings
  auto forbidden = [](const std::string& w) {
    if (w.find("cc") != std::string::npos || w.find("ac") != std::string::npos) return true;
    auto i = w.find('c');
    return i != std::string::npos && w.find('c', i + 2) != std::string::npos;
  };
  std::vector<std::string> words{""};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      if (w.size() == std::size_t(len - 1))
        for (char g : std::string("abc")) next.push_back(w + g);
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& w : words) {
    if (w.empty()) continue;
    std::string lit = "1";
    for (char ch : w) lit += std::string("*") + ch;
    CAPTURE(w);
    CHECK(r->is_zero(el(r, lit)) == forbidden(w));
  }
  // products of basis words are basis words or zero
  auto pool = r->small_elements(20);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      auto p = r->mul(x, y);
      auto s = r->str(p);
      CHECK((r->is_zero(p) || s.rfind("1*", 0) == 0));
    }
}

TEST_CASE("commutative monomial quotients") {
  auto s = make_comm_monomial_quotient(make_gf(3), {{"x", 2}, {"y", 2}});
  CHECK(*s->size() == 81);
  auto x = el(s, "x"), y = el(s, "y");
  CHECK_FALSE(s->is_zero(s->mul(x, y)));
  CHECK(s->is_zero(s->mul(x, x)));
  CHECK(s->str(s->mul(x, y)) == "1*x*y");
  auto s2 = make_comm_monomial_quotient(make_gf(3), {{"x", 3}, {"y", 2}});
  auto x2 = s2->mul(el(s2, "x"), el(s2, "x"));
  CHECK(s2->is_zero(s2->mul(x2, el(s2, "x"))));
  CHECK_FALSE(s2->is_zero(s2->mul(x2, el(s2, "y"))));
  CHECK(s2->str(s2->mul(x2, el(s2, "y"))) == "1*x^2*y");
  CHECK(s->str(s->one()) == "1");
  CHECK(el(s, "2*x+x") == s->zero());
}

TEST_CASE("quaternions mod n") {
  auto q = make_quaternion_mod(3);
  auto i = el(q, "i"), j = el(q, "j"), k = el(q, "k");
  CHECK(q->is_zero(q->add(q->mul(i, j), q->mul(j, i))));
  CHECK(q->mul(i, j) == k);
  CHECK(q->mul(i, i) == q->neg(q->one()));
  CHECK(is_abelian(q).status == Status::fails);
  auto q2 = make_quaternion_mod(2);
  auto x = el(q2, "1+1*i");
  CHECK(q2->is_zero(q2->mul(x, x)));
}

TEST_CASE("Hurwitz jet rings") {
  auto j = make_hurwitz_truncated(make_gf(2), 1);
  CHECK(*j->size() == 4);
  auto z4 = make_zmod(4);
  auto j2 = make_hurwitz_truncated(z4, 2);
  auto x = el(j2, "<0,1,0>");
  CHECK(j2->str(j2->mul(x, x)) == "<0,0,2>");
  auto j0 = make_hurwitz_truncated(make_zmod(5), 0);
  CHECK(*j0->size() == 5);
  // agreement with jet_mul on random inputs
  std::mt19937_64 gen(5);
  auto j3 = make_hurwitz_truncated(z4, 3);
  for (int t = 0; t < 200; ++t) {
    auto a = j3->sample(gen), b = j3->sample(gen);
    auto ja = parse_jet(z4, 3, j3->str(a)), jb = parse_jet(z4, 3, j3->str(b));
    CHECK(j3->str(j3->mul(a, b)) == to_string(jet_mul(ja, jb)));
  }
}

TEST_CASE("corner rings") {
  auto z6 = make_zmod(6);
  auto e = make_corner(z6, el(z6, "3"));
  CHECK(*e->size() == 2);
  auto f = make_corner(z6, el(z6, "4"));
  CHECK(*f->size() == 3);
  CHECK(f->str(f->one()) == "4");
  CHECK(f->characteristic() == 3);
  CHECK(ring_axioms(f, 1000).status == Status::holds);
  CHECK(*make_corner(z6, z6->zero())->size() == 1);
  CHECK_THROWS_AS(make_corner(z6, el(z6, "2")), NotIdempotent);
  auto zz = make_product({make_integers(), make_integers()});
  auto c = make_corner(zz, el(zz, "(1,0)"));
  CHECK_FALSE(c->enumerable());
  CHECK(c->characteristic() == 0);
  CHECK(ring_axioms(c, 500).status == Status::holds);
}

TEST_CASE("string round trips across the catalog") {
  std::mt19937_64 gen(9);
  for (const auto& r : testing::finite_catalog()) {
    CAPTURE(r->spec());
    for (int t = 0; t < 50; ++t) {
      auto x = r->sample(gen);
      CHECK(r->parse(r->str(x)) == x);
    }
  }
}
