// Element-level properties: reduced, semiprime, Abelian, IFP, radicals,
// Baer and p.p., plus the composite checks built on them.

#include <map>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/ring_core.hpp"
#include "search.hpp"

namespace hurwitz {

using namespace detail;

namespace {

Bounds scan_bounds(const CheckOptions& opts, Mode mode, std::uint64_t samples) {
  return Bounds{0, 0, mode, samples, opts.seed};
}

bool is_zero_ring(const Ring& r) { return r.is_zero(r.one()); }

// Elements examined when the ring cannot be enumerated: the directed pool
// followed by opts.samples random draws.
std::vector<Element> probe_elements(const Ring& r, const CheckOptions& opts) {
  auto pool = directed_pool(r);
  if (r.samplable()) {
    std::mt19937_64 gen(opts.seed);
    for (std::uint64_t t = 0; t < opts.samples; ++t) pool.push_back(r.sample(gen));
  }
  return pool;
}

Verdict with_bounds(Verdict v, Bounds b) {
  v.bounds = b;
  return v;
}

}  // namespace

Verdict check_reduced(const RingPtr& ring, const CheckOptions& opts) {
  const Ring& R = *ring;
  if (R.enumerable()) return with_bounds(is_reduced(ring), scan_bounds(opts, Mode::exhaustive, *R.size()));
  auto probe = probe_elements(R, opts);
  auto b = scan_bounds(opts, Mode::random, probe.size());
  if (is_zero_ring(R)) return Verdict::trivial(b);
  for (const auto& x : probe)
    if (!R.is_zero(x) && R.is_zero(R.mul(x, x))) return Verdict::fails(b, nilpotent_witness(ring, x));
  return Verdict::holds(b, truncation_note(R));
}

Verdict check_semiprime(const RingPtr& ring, const CheckOptions& opts) {
  const Ring& R = *ring;
  if (R.enumerable()) {
    auto b = scan_bounds(opts, Mode::exhaustive, *R.size());
    if (is_zero_ring(R)) return Verdict::trivial(b);
    return with_domain(R, [&](const auto& d) {
      using V = typename std::decay_t<decltype(d)>::value_type;
      std::vector<V> vals;
      for (const auto& e : R.elements()) vals.push_back(d.value(e));
      for (const auto& a : vals) {
        if (d.ar.is_zero(a)) continue;
        bool all_zero = true;
        for (const auto& r : vals)
          if (!d.ar.is_zero(d.ar.mul(d.ar.mul(a, r), a))) {
            all_zero = false;
            break;
          }
        if (all_zero) return Verdict::fails(b, semiprime_witness(ring, d.element(a)));
      }
      return Verdict::holds(b);
    });
  }
  auto probe = probe_elements(R, opts);
  auto b = scan_bounds(opts, Mode::random, probe.size());
  if (is_zero_ring(R)) return Verdict::trivial(b);
  for (const auto& a : probe) {
    if (R.is_zero(a)) continue;
    bool shown = false;
    for (const auto& r : probe)
      if (!R.is_zero(R.mul(R.mul(a, r), a))) {
        shown = true;
        break;
      }
    if (!shown) return Verdict::unknown(b, "no r with ara != 0 found for a = " + R.str(a));
  }
  return Verdict::holds(b, truncation_note(R));
}

Verdict check_abelian(const RingPtr& ring, const CheckOptions& opts) {
  const Ring& R = *ring;
  if (R.enumerable()) return with_bounds(is_abelian(ring), scan_bounds(opts, Mode::exhaustive, *R.size()));
  auto probe = probe_elements(R, opts);
  auto b = scan_bounds(opts, Mode::random, probe.size());
  if (is_zero_ring(R)) return Verdict::trivial(b);
  for (const auto& e : probe) {
    if (R.mul(e, e) != e) continue;
    for (const auto& r : probe)
      if (R.mul(e, r) != R.mul(r, e)) return Verdict::fails(b, noncentral_idempotent_witness(ring, e, r));
  }
  return Verdict::holds(b, truncation_note(R));
}

Verdict check_ifp(const RingPtr& ring, const CheckOptions& opts) {
  const Ring& R = *ring;
  const bool full = R.enumerable();
  auto elems = full ? R.elements() : probe_elements(R, opts);
  auto b = scan_bounds(opts, full ? Mode::exhaustive : Mode::directed, elems.size());
  if (is_zero_ring(R)) return Verdict::trivial(b);
  if (full && saturating_pow(elems.size(), 3) > opts.budget)
    return Verdict::unknown(b, "IFP scan exceeds the budget of " + std::to_string(opts.budget) + " operations");
  return with_domain(R, [&](const auto& d) {
    using V = typename std::decay_t<decltype(d)>::value_type;
    std::vector<V> vals;
    for (const auto& e : elems) vals.push_back(d.value(e));
    for (const auto& a : vals) {
      if (d.ar.is_zero(a)) continue;
      for (const auto& bb : vals) {
        if (d.ar.is_zero(bb) || !d.ar.is_zero(d.ar.mul(a, bb))) continue;
        for (const auto& r : vals)
          if (!d.ar.is_zero(d.ar.mul(d.ar.mul(a, r), bb)))
            return Verdict::fails(b, ifp_witness(ring, d.element(a), d.element(r), d.element(bb)),
                                  truncation_note(R));
      }
    }
    return Verdict::holds(b, truncation_note(R));
  });
}

RadicalChain check_radical_chain(const RingPtr& ring) {
  const Ring& R = *ring;
  if (!R.enumerable()) throw CapabilityMissing("radical chain needs an enumerable ring; " + R.spec() + " is not");
  RadicalChain out;
  out.nilpotents = nilpotents(R);
  out.lower = lower_nilradical(ring).elements;
  out.upper = upper_nilradical(ring).elements;
  out.jacobson = jacobson_radical(ring).elements;
  out.ifp = check_ifp(ring);
  Bounds b{0, 0, Mode::exhaustive, *R.size(), 0};
  if (is_zero_ring(R)) {
    out.verdict = Verdict::trivial(b);
    return out;
  }
  bool chain = out.nilpotents == out.lower && out.lower == out.upper && out.upper == out.jacobson;
  out.consistent = !(out.ifp.status == Status::holds && out.lower != out.nilpotents);
  if (chain) {
    out.verdict = Verdict::holds(b, "N = N_0 = N_* = N^* = J");
    return out;
  }
  for (const auto& x : out.nilpotents) {
    if (contains(out.lower, x)) continue;
    auto recheck = [ring, x]() {
      const Ring& r = *ring;
      return r.is_zero(r.pow(x, *r.size())) && !contains(lower_nilradical(ring).elements, x);
    };
    auto w = discrepancy_witness(ring, R.str(x), set_to_string(R, out.lower), R.str(x), recheck);
    out.verdict = Verdict::fails(b, std::move(w), "nilpotent element outside the prime radical");
    return out;
  }
  throw InternalError("radical chain differs without a nilpotent outside N_0");
}

namespace {

// Right ideal eR for some idempotent e equal to `s`, if any.
bool idempotent_generated(const Ring& R, const ElementSet& s, const ElementSet& ids, bool right) {
  for (const auto& e : ids)
    if ((right ? right_multiples(R, e) : left_multiples(R, e)) == s) return true;
  return false;
}

void require_finite(const Ring& R, const char* what) {
  if (!R.enumerable()) throw CapabilityMissing(std::string(what) + " needs an enumerable ring; " + R.spec() + " is not");
}

}  // namespace

Verdict check_baer(const RingPtr& ring) {
  const Ring& R = *ring;
  require_finite(R, "the Baer check");
  Bounds b{0, 0, Mode::exhaustive, *R.size(), 0};
  if (is_zero_ring(R)) return Verdict::trivial(b);
  auto ids = idempotents(R);
  // annihilator -> smallest generating subset found
  std::map<ElementSet, ElementSet> lattice;
  std::vector<ElementSet> order;
  for (const auto& a : R.elements()) {
    auto ann = right_annihilator(R, {a});
    if (lattice.emplace(ann, ElementSet{a}).second) order.push_back(ann);
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet meet;
      std::set_intersection(order[i].begin(), order[i].end(), order[j].begin(), order[j].end(),
                            std::back_inserter(meet));
      if (lattice.count(meet)) continue;
      ElementSet gens = lattice[order[i]];
      const auto& more = lattice[order[j]];
      gens.insert(gens.end(), more.begin(), more.end());
      normalize(gens);
      lattice.emplace(meet, gens);
      order.push_back(meet);
    }
  for (const auto& ann : order)
    if (!idempotent_generated(R, ann, ids, true))
      return Verdict::fails(b, annihilator_witness(ring, lattice[ann], ann));
  return Verdict::holds(b, std::to_string(order.size()) + " distinct right annihilators");
}

Verdict check_pp(const RingPtr& ring) {
  const Ring& R = *ring;
  require_finite(R, "the p.p. check");
  Bounds b{0, 0, Mode::exhaustive, *R.size(), 0};
  if (is_zero_ring(R)) return Verdict::trivial(b);
  auto ids = idempotents(R);
  for (const auto& a : R.elements()) {
    auto r = right_annihilator(R, {a});
    if (!idempotent_generated(R, r, ids, true)) return Verdict::fails(b, annihilator_witness(ring, {a}, r));
    auto l = left_annihilator(R, {a});
    if (!idempotent_generated(R, l, ids, false)) {
      auto recheck = [ring, a, l]() {
        const Ring& q = *ring;
        return left_annihilator(q, {a}) == l && !idempotent_generated(q, l, idempotents(q), false);
      };
      auto w = discrepancy_witness(ring, "{" + R.str(a) + "}", set_to_string(R, l),
                                   "l({" + R.str(a) + "})=" + set_to_string(R, l), recheck,
                                   Witness::Kind::discrepancy);
      return Verdict::fails(b, std::move(w), "left annihilator not of the form Re");
    }
  }
  return Verdict::holds(b);
}

SquareZeroReport check_square_zero_regular(const RingPtr& ring, const std::vector<Element>& j_gens,
                                           const CheckOptions& opts) {
  const Ring& R = *ring;
  require_finite(R, "the square-zero check");
  SquareZeroReport out;
  Bounds b{0, 0, Mode::exhaustive, *R.size(), opts.seed};
  auto j = ideal_closure(ring, j_gens);
  const std::string reading = "elements outside J are required to be regular in R";
  auto fail = [&](Witness w, std::string note) {
    out.hypotheses = Verdict::fails(b, std::move(w), std::move(note));
    out.combined = out.hypotheses;
    return out;
  };
  for (const auto& x : j.elements)
    for (const auto& y : j.elements)
      if (!R.is_zero(R.mul(x, y))) {
        auto recheck = [ring, j_gens, x, y]() {
          auto jj = ideal_closure(ring, j_gens);
          return contains(jj.elements, x) && contains(jj.elements, y) && !ring->is_zero(ring->mul(x, y));
        };
        return fail(discrepancy_witness(ring, R.str(x), R.str(y), R.str(R.mul(x, y)), recheck), "J^2 != 0");
      }
  for (const auto& x : R.elements()) {
    if (contains(j.elements, x) || is_regular(R, x)) continue;
    auto recheck = [ring, j_gens, x]() {
      return !contains(ideal_closure(ring, j_gens).elements, x) && !is_regular(*ring, x);
    };
    return fail(discrepancy_witness(ring, R.str(x), set_to_string(R, j.elements), R.str(x), recheck),
                "zero divisor outside J; " + reading);
  }
  out.hypotheses = Verdict::holds(b, "J^2 = 0; " + reading);
  out.hurwitz_armendariz = check_hurwitz_armendariz(ring, opts);
  out.combined = out.hurwitz_armendariz;
  out.combined.note = out.combined.note.empty() ? "hypotheses verified" : "hypotheses verified; " + out.combined.note;
  return out;
}

IdempotentSplit check_idempotent_split(const RingPtr& ring, const Element& e, const CheckOptions& opts) {
  const Ring& R = *ring;
  R.check(e);
  if (R.mul(e, e) != e) throw NotIdempotent(R.str(e) + " is not idempotent");
  if (check_abelian(ring, opts).status == Status::fails) throw NotAbelian(R.spec() + " is not Abelian");
  IdempotentSplit out;
  out.ring = check_hurwitz_armendariz(ring, opts);
  out.corner = check_hurwitz_armendariz(make_corner(ring, e), opts);
  out.complement = check_hurwitz_armendariz(make_corner(ring, R.sub(R.one(), e)), opts);
  auto ok = [](const Verdict& v) { return v.status == Status::holds || v.degenerate; };
  auto bad = [](const Verdict& v) { return v.status == Status::fails; };
  if (bad(out.ring) && ok(out.corner) && ok(out.complement)) out.consistent = false;
  if (ok(out.ring) && (bad(out.corner) || bad(out.complement))) out.consistent = false;
  return out;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "reduced", "semiprime", "abelian", "ifp",          "armendariz",    "hurwitz-armendariz",
      "baer",    "pp",        "radical-chain", "baer-transfer", "pp-transfer", "annihilator-maps",
      "ifp-hurwitz"};
  return names;
}

Verdict check_property(std::string_view name, const RingPtr& ring, const CheckOptions& opts) {
  if (name == "reduced") return check_reduced(ring, opts);
  if (name == "semiprime") return check_semiprime(ring, opts);
  if (name == "abelian") return check_abelian(ring, opts);
  if (name == "ifp") return check_ifp(ring, opts);
  if (name == "armendariz") return check_armendariz(ring, opts);
  if (name == "hurwitz-armendariz") return check_hurwitz_armendariz(ring, opts);
  if (name == "baer") return check_baer(ring);
  if (name == "pp") return check_pp(ring);
  if (name == "radical-chain") return check_radical_chain(ring).verdict;
  if (name == "baer-transfer") return check_baer_transfer(ring, opts);
  if (name == "pp-transfer") return check_pp_transfer(ring, opts);
  if (name == "annihilator-maps") return check_annihilator_maps(ring, opts);
  if (name == "ifp-hurwitz") return check_ifp_hurwitz(ring, opts);
  throw DomainError("unknown property '" + std::string(name) + "'");
}

}  // namespace hurwitz
