// Registry of reproducible scenarios. Every scenario builds its rings from
// spec strings, runs a fixed check list with fixed bounds, and returns a
// report whose rows are qualified as "property@ring".

#include "hurwitz/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "hurwitz/constructions.hpp"
#include "hurwitz/dsl.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/ring_core.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

CheckOptions opts(long degree, Mode mode, std::uint64_t samples = 0, std::uint64_t seed = 0) {
  CheckOptions o;
  o.degree = degree;
  o.mode = mode;
  o.samples = samples;
  o.seed = seed;
  return o;
}

Bounds exact(std::uint64_t count = 0, long degree = 0) {
  Bounds b;
  b.degree = degree;
  b.mode = Mode::exhaustive;
  b.samples = count;
  return b;
}

std::string at(const std::string& property, const RingPtr& r) { return property + "@" + r->spec(); }

std::string join_specs(const std::vector<RingPtr>& rings) {
  std::string s;
  for (std::size_t k = 0; k < rings.size(); ++k) s += (k ? "; " : "") + rings[k]->spec();
  return s;
}

// --- special-purpose checks -------------------------------------------------

// (1 - r x) * (k! r^k)_k = 1 = (k! r^k)_k * (1 - r x) in the order-N jet ring.
bool inverse_identity_holds(const RingPtr& ring, const Element& r, std::size_t order) {
  const Ring& R = *ring;
  HurwitzJet lin(ring, order, {R.one(), R.neg(r)});
  auto inv = geometric_inverse_jet(ring, r, order);
  auto id = HurwitzJet::identity(ring, order);
  return jet_mul(lin, inv) == id && jet_mul(inv, lin) == id;
}

Verdict inverse_identity(const RingPtr& ring, std::size_t order, std::uint64_t samples, std::uint64_t seed) {
  const Ring& R = *ring;
  std::vector<Element> rs;
  Bounds b = exact(0, long(order));
  if (R.enumerable()) {
    rs = R.elements();
  } else {
    std::mt19937_64 gen(seed);
    for (std::uint64_t t = 0; t < samples; ++t) rs.push_back(R.sample(gen));
    b.mode = Mode::random;
    b.seed = seed;
  }
  b.samples = rs.size();
  b.trunc = long(order);
  for (const auto& r : rs) {
    if (inverse_identity_holds(ring, r, order)) continue;
    auto w = discrepancy_witness(ring, "<1," + R.str(R.neg(r)) + ">", to_string(geometric_inverse_jet(ring, r, order)),
                                 "product is not the identity jet",
                                 [ring, r, order] { return !inverse_identity_holds(ring, r, order); });
    return Verdict::fails(b, w);
  }
  return Verdict::holds(b, "identity checked to order " + std::to_string(order));
}

Verdict constant_idempotent_jets(const RingPtr& ring, std::size_t order) {
  auto jets = idempotent_jets(ring, order);
  Bounds b = exact(jets.size());
  b.trunc = long(order);
  for (const auto& e : jets) {
    if (e.is_constant()) continue;
    auto w = discrepancy_witness(ring, to_string(e), "", "non-constant idempotent jet",
                                 [e] { return jet_mul(e, e) == e && !e.is_constant(); });
    return Verdict::fails(b, w, std::to_string(jets.size()) + " idempotent jets");
  }
  return Verdict::holds(b, std::to_string(jets.size()) + " idempotent jets, all constant");
}

Verdict crt_isomorphism(std::uint64_t n) {
  if (verify_crt_isomorphism(n)) return Verdict::holds(exact(n), "bijective, additive, multiplicative, unital");
  auto w = discrepancy_witness(make_zmod(n), "Zn(" + std::to_string(n) + ")", "", "CRT map is not an isomorphism",
                               [n] { return !verify_crt_isomorphism(n); });
  return Verdict::fails(exact(n), w);
}

std::string nested_text(const NestedPoly& f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + to_string(f[k]);
  return s + "]";
}

bool packing_loses_zero(const RingPtr& ring, const NestedPoly& f, const NestedPoly& g) {
  auto packed = pack_nested(ring, f, g);
  return nested_is_zero(nested_hurwitz_mul(ring, f, g)) && !hpoly_mul(packed.f, packed.g).is_zero();
}

// Every nested pair with T-degree <= 1 and x-degree <= 1: whenever FG = 0 in
// H(hR), does the packed pair still multiply to zero in hR?
Verdict packing_experiment(const RingPtr& ring, std::vector<std::string>& narrative) {
  const Ring& R = *ring;
  auto elems = R.elements();
  std::vector<HurwitzPoly> polys;
  for (const auto& a : elems)
    for (const auto& b : elems) polys.emplace_back(ring, std::vector<Element>{a, b});
  std::vector<NestedPoly> nested;
  for (const auto& p : polys)
    for (const auto& q : polys) nested.push_back({p, q});
  std::uint64_t zero_pairs = 0;
  std::uint64_t kept = 0;
  std::optional<Witness> first;
  for (const auto& f : nested)
    for (const auto& g : nested) {
      if (!nested_is_zero(nested_hurwitz_mul(ring, f, g))) continue;
      ++zero_pairs;
      if (!packing_loses_zero(ring, f, g)) {
        ++kept;
        continue;
      }
      if (!first) {
        auto packed = pack_nested(ring, f, g);
        first = discrepancy_witness(ring, nested_text(f), nested_text(g),
                                    "packed product " + to_string(hpoly_mul(packed.f, packed.g)),
                                    [ring, f, g] { return packing_loses_zero(ring, f, g); });
      }
    }
  narrative.push_back(R.spec() + ": " + std::to_string(zero_pairs) + " zero nested pairs, " + std::to_string(kept) +
                      " stay zero after packing");
  Bounds b = exact(zero_pairs, 1);
  if (first) return Verdict::fails(b, *first, std::to_string(zero_pairs - kept) + " of " +
                                                  std::to_string(zero_pairs) + " zero pairs lose the zero product");
  return Verdict::holds(b, "all " + std::to_string(zero_pairs) + " zero pairs stay zero");
}

// Some power of every sampled element is idempotent (locally finite rings).
Verdict power_idempotent(const RingPtr& ring, std::uint64_t samples, std::uint64_t seed) {
  const Ring& R = *ring;
  std::mt19937_64 gen(seed);
  auto pool = R.small_elements(32);
  for (std::uint64_t t = 0; t < samples; ++t) pool.push_back(R.sample(gen));
  auto has_power = [ring](const Element& r) {
    const Ring& q = *ring;
    Element x = r;
    for (int k = 1; k <= 256; ++k) {
      if (q.mul(x, x) == x) return true;
      x = q.mul(x, r);
    }
    return false;
  };
  Bounds b;
  b.mode = Mode::random;
  b.samples = pool.size();
  b.seed = seed;
  for (const auto& r : pool) {
    if (has_power(r)) continue;
    auto w = discrepancy_witness(ring, R.str(r), "", "no idempotent power up to 256",
                                 [has_power, r] { return !has_power(r); });
    return Verdict::fails(b, w);
  }
  return Verdict::holds(b, "every sampled element has an idempotent power");
}

Verdict jacobson_nilpotency(const RingPtr& ring, std::size_t k) {
  auto j = jacobson_radical(ring);
  Bounds b = exact(j.size(), long(k));
  if (ideal_power_is_zero(j, k)) return Verdict::holds(b, "J^" + std::to_string(k) + " = 0");
  auto w = discrepancy_witness(ring, set_to_string(*ring, j.elements), "", "J^" + std::to_string(k) + " != 0",
                               [j, k] { return !ideal_power_is_zero(j, k); });
  return Verdict::fails(b, w);
}

Verdict fixed_pair(const RingPtr& ring, Witness::Kind kind, const std::vector<std::string>& f,
                   const std::vector<std::string>& g) {
  std::vector<Element> a, b;
  for (const auto& s : f) a.push_back(ring->parse(s));
  for (const auto& s : g) b.push_back(ring->parse(s));
  auto w = pair_witness(ring, kind, a, b);
  if (!revalidate(w)) return Verdict::unknown(exact(1, 1), "the pair does not have a zero product");
  return Verdict::fails(exact(1, 1), w);
}

// --- scenarios ----------------------------------------------------------------

struct Scenario {
  std::string id;
  std::string summary;
  std::uint64_t seed;
  std::function<void(Report&, std::uint64_t)> run;
};

void ex2_1(Report& rep, std::uint64_t) {
  std::vector<RingPtr> rings;
  for (int p : {2, 3}) {
    auto r = ring_from_spec("FreeQ(GF(" + std::to_string(p) + "),[a,b,c],[cc,ac,c*c],8)");
    rings.push_back(r);
    auto v = check_hurwitz_armendariz(r, opts(2, Mode::directed));
    rep.add(at("hurwitz-armendariz", r), v);
    if (v.witness) rep.narrative.push_back(r->spec() + ": violating product " + v.witness->value);
    rep.add(at("ifp", r), check_ifp(r, opts(1, Mode::directed)));
  }
  rep.ring = join_specs(rings);
}

void ex2_2(Report& rep, std::uint64_t seed) {
  auto r = ring_from_spec("FreeQ(GF(2),[a,b,c],[cc,ac,c*c],8)");
  rep.ring = r->spec();
  rep.add(at("hurwitz-armendariz", r), check_hurwitz_armendariz(r, opts(2, Mode::directed)));
  rep.add(at("armendariz", r), check_armendariz(r, opts(1, Mode::directed)));
  rep.add(at("power-idempotent", r), power_idempotent(r, 200, seed));
}

void prop2_4_inverse(Report& rep, std::uint64_t seed) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Zn(4)", "Zn(5)", "GF(2,t^2+t+1)", "Mat(Zn(2),2)", "Triv(Zn(3))", "Z"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    rep.add(at("inverse-jet", r), inverse_identity(r, 8, 100, seed));
  }
  rep.ring = join_specs(rings);
}

void prop2_6_chain(Report& rep, std::uint64_t) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Zn(8)", "Zn(12)", "Triv(Zn(4))", "CommQ(GF(3),{x:2,y:2})", "GF(2,t^2+t+1)", "UT(Zn(2),2)",
                        "Mat(Zn(2),2)"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    auto chain = check_radical_chain(r);
    rep.add(at("radical-chain", r), chain.verdict);
    rep.add(at("ifp", r), chain.ifp);
    rep.narrative.push_back(r->spec() + ": |N| = " + std::to_string(chain.nilpotents.size()) +
                            ", |N_0| = " + std::to_string(chain.lower.size()) +
                            ", |J| = " + std::to_string(chain.jacobson.size()));
  }
  rep.ring = join_specs(rings);
}

void rem2_7_4_quaternions(Report& rep, std::uint64_t) {
  auto r = ring_from_spec("Quat(3)");
  rep.ring = r->spec();
  rep.add(at("abelian", r), check_abelian(r));
  rep.add(at("armendariz", r), check_armendariz(r, opts(1, Mode::directed)));
}

void cor2_9(Report& rep, std::uint64_t seed) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Z", "Zn(6)", "GF(2,t^2+t+1)", "Zn(4)", "UT(Zn(2),2)", "Mat(Zn(2),2)"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    auto o = opts(1, Mode::random, 2000, seed);
    auto red = check_reduced(r, o);
    auto semi = check_semiprime(r, o);
    rep.add(at("reduced", r), red);
    rep.add(at("semiprime", r), semi);
    rep.narrative.push_back(r->spec() + (red.status == semi.status ? ": semiprime iff reduced"
                                                                   : ": semiprime and reduced disagree"));
  }
  auto z = rings.front();
  rep.add(at("hurwitz-armendariz", z), check_hurwitz_armendariz(z, opts(2, Mode::random, 2000, seed)));
  rep.ring = join_specs(rings);
}

void prop2_11_maps(Report& rep, std::uint64_t seed) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Zn(4)", "GF(2,t^2+t+1)", "GF(5)"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    rep.add(at("annihilator-maps", r), check_annihilator_maps(r, opts(2, Mode::random, 50, seed)));
  }
  rep.ring = join_specs(rings);
}

void lem2_12_idempotents(Report& rep, std::uint64_t) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Zn(4)", "Zn(6)", "Zn(8)", "Triv(Zn(3))"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    rep.add(at("constant-idempotent-jets", r), constant_idempotent_jets(r, 4));
  }
  auto ut = ring_from_spec("UT(Zn(2),2)");
  rings.push_back(ut);
  rep.add(at("abelian", ut), check_abelian(ut));
  rep.add(at("constant-idempotent-jets", ut), constant_idempotent_jets(ut, 1));
  rep.ring = join_specs(rings);
}

void transfer(Report& rep, std::uint64_t seed, bool baer) {
  const std::string name = baer ? "baer" : "pp";
  auto z6 = ring_from_spec("Zn(6)");
  auto z4 = ring_from_spec("Zn(4)");
  auto gf5 = ring_from_spec("GF(5)");
  auto base = [&](const RingPtr& r) { return baer ? check_baer(r) : check_pp(r); };
  auto moved = [&](const RingPtr& r, const CheckOptions& o) {
    return baer ? check_baer_transfer(r, o) : check_pp_transfer(r, o);
  };
  rep.add(at(name, z6), base(z6));
  rep.add(at(name, z4), base(z4));
  rep.add(at("hurwitz-armendariz", z6), check_hurwitz_armendariz(z6, opts(1, Mode::directed)));
  rep.add(at(name + "-transfer", gf5), moved(gf5, opts(2, Mode::random, 50, seed)));
  auto loose = opts(4, Mode::random, 200, seed);
  loose.require_hypothesis = false;
  rep.add(at(name + "-transfer-unconditional", z6), moved(z6, loose));
  rep.narrative.push_back("Zn(6) is " + name + " but not Armendariz of Hurwitz series type; the unconditional run "
                          "shows the conclusion failing without that hypothesis");
  rep.ring = join_specs({z6, z4, gf5});
}

void prop3_1_packing(Report& rep, std::uint64_t) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Zn(2)", "Zn(3)", "Zn(4)"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    rep.add(at("packing-preserves-zero", r), packing_experiment(r, rep.narrative));
  }
  rep.ring = join_specs(rings);
}

void prop3_2_crt(Report& rep, std::uint64_t seed) {
  std::vector<RingPtr> rings;
  for (std::uint64_t n : {6, 12, 30, 36, 60}) {
    auto r = make_zmod(n);
    rings.push_back(r);
    rep.add(at("crt-isomorphism", r), crt_isomorphism(n));
  }
  for (const char* s : {"Zn(6)", "Zn(9)", "GF(5)"}) {
    auto r = ring_from_spec(s);
    rep.add(at("hurwitz-armendariz", r), check_hurwitz_armendariz(r, opts(3, Mode::directed)));
  }
  auto z = ring_from_spec("Z");
  rings.push_back(z);
  rep.add(at("hurwitz-armendariz", z), check_hurwitz_armendariz(z, opts(3, Mode::random, 2000, seed)));
  rep.ring = join_specs(rings);
}

void rem3_3(Report& rep, std::uint64_t) {
  auto r = ring_from_spec("CommQ(GF(3),{x:2,y:2})");
  rep.ring = r->spec();
  rep.add(at("armendariz-pair", r), fixed_pair(r, Witness::Kind::ordinary_pair, {"x", "y"}, {"x", "2*y"}));
  rep.add(at("hurwitz-armendariz-pair", r), fixed_pair(r, Witness::Kind::hurwitz_pair, {"x", "y"}, {"x", "2*y"}));
  rep.add(at("armendariz", r), check_armendariz(r, opts(1, Mode::directed)));
}

void ex3_11(Report& rep, std::uint64_t) {
  auto r = ring_from_spec("CommQ(GF(3),{x:2,y:2})");
  auto s = ring_from_spec("CommQ(GF(3),{x:3,y:2})");
  rep.add(at("jacobson-nilpotent", r), jacobson_nilpotency(r, 3));
  rep.add(at("armendariz-pair", r), fixed_pair(r, Witness::Kind::ordinary_pair, {"x", "y"}, {"x", "2*y"}));
  rep.add(at("armendariz", r), check_armendariz(r, opts(1, Mode::directed)));
  rep.add(at("jacobson-nilpotent", s), jacobson_nilpotency(s, 4));
  rep.add(at("armendariz-pair", s), fixed_pair(s, Witness::Kind::ordinary_pair, {"x^2", "y"}, {"x^2", "2*y"}));
  rep.add(at("armendariz", s), check_armendariz(s, opts(1, Mode::directed)));
  rep.ring = join_specs({r, s});
}

void prop3_4_truncation(Report& rep, std::uint64_t) {
  auto good = ring_from_spec("HJet(GF(2),1)");
  auto bad = ring_from_spec("HJet(Zn(4),1)");
  auto gf2 = ring_from_spec("GF(2)");
  auto z4 = ring_from_spec("Zn(4)");
  rep.add(at("reduced", gf2), check_reduced(gf2));
  rep.add(at("armendariz", good), check_armendariz(good, opts(2, Mode::exhaustive)));
  rep.add(at("hurwitz-armendariz", good), check_hurwitz_armendariz(good, opts(1, Mode::directed)));
  rep.add(at("reduced", z4), check_reduced(z4));
  rep.add(at("armendariz", bad), check_armendariz(bad, opts(1, Mode::directed)));
  rep.ring = join_specs({gf2, good, z4, bad});
}

void cor3_7_matrices(Report& rep, std::uint64_t) {
  std::vector<RingPtr> rings;
  for (const char* s : {"UTc(Zn(6),[2],3)", "UTc(Zn(3),[0],3)", "TrivQ(Zn(6),[2])"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    rep.add(at("armendariz", r), check_armendariz(r, opts(1, Mode::directed)));
    rep.add(at("hurwitz-armendariz", r), check_hurwitz_armendariz(r, opts(1, Mode::directed)));
  }
  rep.ring = join_specs(rings);
}

void prop3_9_sqzero(Report& rep, std::uint64_t seed) {
  std::vector<RingPtr> rings;
  for (const char* s : {"Triv(Zn(3))", "Twist(GF(2,t^2+t+1),frob)", "Zn(4)"}) {
    auto r = ring_from_spec(s);
    rings.push_back(r);
    auto j = std::string(s) == "Zn(4)" ? r->parse("2") : r->parse("(0|1)");
    auto o = opts(3, Mode::random, 100000, seed);
    auto sq = check_square_zero_regular(r, {j}, o);
    rep.add(at("square-zero-hypotheses", r), sq.hypotheses);
    rep.add(at("square-zero-regular", r), sq.combined);
  }
  rep.ring = join_specs(rings);
}

void cor3_12_final(Report& rep, std::uint64_t) {
  auto r = ring_from_spec("UT(Zn(3),2)");
  auto q = ring_from_spec("Quot(UT(Zn(3),2),[[[0,1],[0,0]]])");
  auto ideal = ideal_closure(r, {r->parse("[[0,1],[0,0]]")});
  rep.add(at("abelian", r), check_abelian(r));
  rep.add(at("armendariz", r), check_armendariz(r, opts(1, Mode::directed)));
  rep.add("ideal-armendariz@" + r->spec() + ":I",
          check_ideal_armendariz(r, ideal.elements, ProductKind::ordinary, opts(2, Mode::exhaustive)));
  rep.add("ideal-hurwitz-armendariz@" + r->spec() + ":I",
          check_ideal_armendariz(r, ideal.elements, ProductKind::hurwitz, opts(2, Mode::exhaustive)));
  rep.add(at("armendariz", q), check_armendariz(q, opts(2, Mode::exhaustive)));
  rep.add(at("hurwitz-armendariz", q), check_hurwitz_armendariz(q, opts(1, Mode::exhaustive)));
  rep.ring = join_specs({r, q});
}

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> all = {
      {"ex2_1", "free quotient over GF(2) and GF(3): Hurwitz-type witness with product abc", 1, ex2_1},
      {"ex2_2", "second free quotient: not Hurwitz-type, bounded Armendariz scan, idempotent powers", 2, ex2_2},
      {"prop2_4_inverse", "inverse of 1 - rx as (k! r^k) in the order-8 jet ring", 3, prop2_4_inverse},
      {"prop2_6_chain", "nilpotent, lower, upper and Jacobson radicals over a catalog", 4, prop2_6_chain},
      {"rem2_7_4_quaternions", "quaternions mod 3: non-Abelian and not Armendariz", 5, rem2_7_4_quaternions},
      {"cor2_9", "semiprime versus reduced", 6, cor2_9},
      {"prop2_11_maps", "annihilator correspondence between R and hR", 7, prop2_11_maps},
      {"lem2_12_idempotents", "idempotent jets over Abelian and non-Abelian rings", 8, lem2_12_idempotents},
      {"thm2_14_baer", "Baer rings and the polynomial-level transfer", 9,
       [](Report& r, std::uint64_t s) { transfer(r, s, true); }},
      {"thm2_15_pp", "p.p. rings and the polynomial-level transfer", 10,
       [](Report& r, std::uint64_t s) { transfer(r, s, false); }},
      {"prop3_1_packing", "degree packing of nested Hurwitz polynomials (experiment)", 11, prop3_1_packing},
      {"prop3_2_crt", "CRT splitting of Zn(n) and Hurwitz-type checks on PID images", 12, prop3_2_crt},
      {"rem3_3", "k[x,y]/(x^2,y^2) is not Armendariz: (x + yT)(x - yT) = 0", 13, rem3_3},
      {"ex3_11", "k[x,y]/(x^m,y^2) with nilpotent Jacobson radical and non-Armendariz pairs, m = 2 and 3", 14, ex3_11},
      {"prop3_4_truncation", "hR/(x^2) over a reduced and a non-reduced ring", 15, prop3_4_truncation},
      {"cor3_7_matrices", "constant-diagonal 3x3 matrices and T(S, S/I)", 16, cor3_7_matrices},
      {"prop3_9_sqzero", "square-zero ideal with regular complement", 17, prop3_9_sqzero},
      {"cor3_12_final_counterexample", "UT(Zn(3),2) with the ideal of strictly upper matrices", 18, cor3_12_final},
  };
  return all;
}

const Scenario& find(std::string_view id) {
  for (const auto& s : registry())
    if (s.id == id) return s;
  throw UnknownScenario("unknown scenario '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

const std::string& scenario_summary(std::string_view id) { return find(id).summary; }

Report run_scenario(std::string_view id, std::optional<std::uint64_t> seed) {
  const auto& s = find(id);
  Report rep;
  rep.scenario = s.id;
  rep.seed = seed.value_or(s.seed);
  s.run(rep, rep.seed);
  return rep;
}

}  // namespace hurwitz
