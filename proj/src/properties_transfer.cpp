// Polynomial-level annihilator checks: Baer and p.p. transfer, and the
// correspondence between annihilators in R and in hR.

#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/ring_core.hpp"
#include "search.hpp"

namespace hurwitz {

using namespace detail;

namespace {

using Poly = std::vector<Element>;

void require_finite(const Ring& R, const char* what) {
  if (!R.enumerable()) throw CapabilityMissing(std::string(what) + " needs an enumerable ring; " + R.spec() + " is not");
}

ElementSet coeffs_of(const Ring& R, const std::vector<Poly>& polys) {
  ElementSet s;
  for (const auto& f : polys)
    for (const auto& c : f)
      if (!R.is_zero(c)) s.push_back(c);
  normalize(s);
  return s;
}

bool hvanishes(const Ring& R, const Poly& f, const Poly& g) {
  ElementArith ar(R);
  return product_vanishes(ar, ProductKind::hurwitz, std::span<const Element>(f), std::span<const Element>(g));
}

std::string polys_text(const Ring& R, const std::vector<Poly>& polys) {
  std::string s = "{";
  for (std::size_t k = 0; k < polys.size(); ++k) s += (k ? "," : "") + to_string(polys[k], R);
  return s + "}";
}

// Random polynomial whose coefficients come from a random source: zero
// divisors, a random right ideal eR, or the whole ring.
Poly sample_poly(const Ring& R, const std::vector<Element>& zdiv, const ElementSet& ids, std::mt19937_64& gen,
                 std::size_t max_len) {
  switch (gen() % 3) {
    case 0: return random_poly(R, zdiv, gen, max_len);
    case 1: {
      auto e = ids[gen() % ids.size()];
      std::size_t len = 1 + gen() % max_len;
      Poly f;
      for (std::size_t k = 0; k < len; ++k) f.push_back(R.mul(e, R.sample(gen)));
      return f;
    }
    default: return random_poly(R, {}, gen, max_len);
  }
}

// Side-aware membership: g = e g (right) or g = g e (left) coefficientwise.
bool absorbed(const Ring& R, const Element& e, const Poly& g, bool right) {
  for (const auto& c : g)
    if ((right ? R.mul(e, c) : R.mul(c, e)) != c) return false;
  return true;
}

Element generator_of(const Ring& R, const ElementSet& ann, const ElementSet& ids, bool right) {
  for (const auto& e : ids)
    if ((right ? right_multiples(R, e) : left_multiples(R, e)) == ann) return e;
  throw InternalError("annihilator has no idempotent generator in a ring that passed the check");
}

struct TransferCase {
  std::vector<Poly> a;
  bool right = true;
};

// Transfer on the degree-bounded polynomial subring: the
// polynomials g with A g = 0 (resp. g A = 0) are exactly those with g = e0 g
// (resp. g = g e0).
std::optional<Witness> transfer_discrepancy(const RingPtr& ring, const TransferCase& tc,
                                            const std::vector<Poly>& all, const ElementSet& ids) {
  const Ring& R = *ring;
  auto b = coeffs_of(R, tc.a);
  auto ann = tc.right ? right_annihilator(R, b) : left_annihilator(R, b);
  Element e0 = generator_of(R, ann, ids, tc.right);
  for (const auto& g : all) {
    bool kills = true;
    for (const auto& f : tc.a) kills = kills && (tc.right ? hvanishes(R, f, g) : hvanishes(R, g, f));
    if (kills == absorbed(R, e0, g, tc.right)) continue;
    auto recheck = [ring, tc, g, e0]() {
      const Ring& q = *ring;
      bool k = true;
      for (const auto& f : tc.a) k = k && (tc.right ? hvanishes(q, f, g) : hvanishes(q, g, f));
      return k != absorbed(q, e0, g, tc.right);
    };
    return discrepancy_witness(ring, polys_text(R, tc.a), to_string(g, R),
                               std::string(tc.right ? "e0=" : "e1=") + R.str(e0), recheck);
  }
  return std::nullopt;
}

Verdict transfer_check(const RingPtr& ring, const CheckOptions& opts, bool baer) {
  const Ring& R = *ring;
  const char* what = baer ? "the Baer transfer check" : "the p.p. transfer check";
  require_finite(R, what);
  CheckOptions o = opts;
  o.mode = Mode::random;
  if (R.is_zero(R.one())) return Verdict::trivial(bounds_of(o, 0));
  auto hyp = baer ? check_baer(ring) : check_pp(ring);
  if (hyp.status != Status::holds)
    throw HypothesisNotEstablished(std::string(what) + " needs a " + (baer ? "Baer" : "p.p.") + " ring");
  require_hurwitz_armendariz(ring, opts, what);
  const std::size_t len = std::size_t(std::max(opts.degree, 0L)) + 1;
  auto all = all_polys(R.elements(), len, opts.budget);
  if (saturating_mul(saturating_mul(all.size(), opts.samples), len * len) > opts.budget)
    return Verdict::unknown(bounds_of(o, 0), "g-scan exceeds the budget of " + std::to_string(opts.budget));
  auto ids = idempotents(R);
  auto zdiv = zero_divisors(R);
  std::mt19937_64 gen(opts.seed);
  for (std::uint64_t t = 0; t < opts.samples; ++t) {
    TransferCase tc;
    std::size_t count = baer ? 1 + gen() % 3 : 1;
    for (std::size_t k = 0; k < count; ++k) tc.a.push_back(sample_poly(R, zdiv, ids, gen, len));
    for (bool right : {true, false}) {
      if (baer && !right) continue;
      tc.right = right;
      if (auto w = transfer_discrepancy(ring, tc, all, ids)) return Verdict::fails(bounds_of(o, t + 1), *w);
    }
  }
  return Verdict::holds(bounds_of(o, opts.samples), "exhaustive g-scan to degree " + std::to_string(opts.degree));
}

}  // namespace

Verdict check_baer_transfer(const RingPtr& ring, const CheckOptions& opts) { return transfer_check(ring, opts, true); }

Verdict check_pp_transfer(const RingPtr& ring, const CheckOptions& opts) { return transfer_check(ring, opts, false); }

Verdict check_annihilator_maps(const RingPtr& ring, const CheckOptions& opts) {
  const Ring& R = *ring;
  require_finite(R, "the annihilator-map check");
  CheckOptions o = opts;
  o.mode = Mode::random;
  if (R.is_zero(R.one())) return Verdict::trivial(bounds_of(o, 0));
  const std::size_t len = std::size_t(std::max(opts.degree, 0L)) + 1;
  auto elems = R.elements();
  auto all = all_polys(elems, len, opts.budget);
  if (saturating_mul(saturating_mul(all.size(), opts.samples + elems.size()), len * len) > opts.budget)
    return Verdict::unknown(bounds_of(o, 0), "scan exceeds the budget of " + std::to_string(opts.budget));

  auto within = [&](const Poly& g, const ElementSet& s) {
    for (const auto& c : g)
      if (!contains(s, c)) return false;
    return true;
  };
  auto mismatch = [&](std::vector<Poly> v, const Poly& g, const ElementSet& allowed, const char* part) {
    auto recheck = [ring, v, g, allowed]() {
      const Ring& q = *ring;
      bool kills = true;
      for (const auto& f : v) kills = kills && hvanishes(q, f, g);
      bool inside = true;
      for (const auto& c : g) inside = inside && contains(allowed, c);
      return kills != inside;
    };
    return discrepancy_witness(ring, polys_text(R, v), to_string(g, R), part + set_to_string(R, allowed), recheck);
  };

  // (a) constants act termwise.
  std::mt19937_64 gen(opts.seed);
  std::vector<ElementSet> us;
  for (const auto& u : elems) us.push_back({u});
  for (std::size_t t = 0; t < 16; ++t) {
    ElementSet u{elems[gen() % elems.size()], elems[gen() % elems.size()]};
    normalize(u);
    us.push_back(u);
  }
  std::uint64_t examined = 0;
  for (const auto& u : us) {
    auto allowed = right_annihilator(R, u);
    std::vector<Poly> v;
    for (const auto& c : u) v.push_back({c});
    for (const auto& g : all) {
      ++examined;
      bool kills = true;
      for (const auto& f : v) kills = kills && hvanishes(R, f, g);
      if (kills != within(g, allowed)) return Verdict::fails(bounds_of(o, examined), mismatch(v, g, allowed, "r(U)="));
    }
  }

  // (b) sampled finite sets of polynomials.
  auto zdiv = zero_divisors(R);
  for (std::uint64_t t = 0; t < opts.samples; ++t) {
    std::vector<Poly> v;
    std::size_t count = 1 + gen() % 2;
    for (std::size_t k = 0; k < count; ++k) v.push_back(random_poly(R, zdiv, gen, len));
    auto allowed = right_annihilator(R, coeffs_of(R, v));
    for (const auto& g : all) {
      ++examined;
      bool kills = true;
      for (const auto& f : v) kills = kills && hvanishes(R, f, g);
      if (kills != within(g, allowed))
        return Verdict::fails(bounds_of(o, t + 1), mismatch(v, g, allowed, "r(C_V)="),
                              "equality requires the Hurwitz-Armendariz property");
    }
  }
  return Verdict::holds(bounds_of(o, opts.samples),
                        std::to_string(us.size()) + " constant sets and every g to degree " +
                            std::to_string(opts.degree));
}

}  // namespace hurwitz
