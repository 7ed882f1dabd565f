// Polynomial-pair searches: Armendariz, Hurwitz-Armendariz and the checks
// that build zero products from annihilators.

#include <optional>

#include "hurwitz/bigint.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/ring_core.hpp"
#include "search.hpp"

namespace hurwitz {

namespace detail {

std::vector<Element> zero_divisors(const Ring& r) {
  std::vector<Element> out;
  if (!r.enumerable()) return out;
  auto elems = r.elements();
  for (const auto& a : elems) {
    if (r.is_zero(a)) continue;
    for (const auto& b : elems)
      if (!r.is_zero(b) && (r.is_zero(r.mul(a, b)) || r.is_zero(r.mul(b, a)))) {
        out.push_back(a);
        break;
      }
  }
  return out;
}

std::vector<Element> directed_pool(const Ring& r, std::size_t limit) {
  if (r.enumerable()) return r.elements();
  std::vector<Element> pool{r.zero(), r.one()};
  for (auto& x : r.small_elements(limit))
    if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(std::move(x));
  return pool;
}

Element biased_sample(const Ring& r, const std::vector<Element>& biased, std::mt19937_64& gen) {
  if (!biased.empty() && (gen() & 1)) return biased[gen() % biased.size()];
  return r.sample(gen);
}

std::vector<Element> random_poly(const Ring& r, const std::vector<Element>& biased, std::mt19937_64& gen,
                                 std::size_t max_len) {
  std::size_t len = 1 + gen() % max_len;
  std::vector<Element> f;
  for (std::size_t k = 0; k < len; ++k) f.push_back(biased_sample(r, biased, gen));
  return f;
}

Bounds bounds_of(const CheckOptions& opts, std::uint64_t samples) {
  return Bounds{opts.degree, opts.trunc, opts.mode, samples, opts.seed};
}

std::string truncation_note(const Ring& r) {
  if (auto t = r.truncation_bound()) return "words longer than " + std::to_string(*t) + " are cut to zero";
  return {};
}

void require_hurwitz_armendariz(const RingPtr& ring, const CheckOptions& opts, const char* what) {
  if (!opts.require_hypothesis) return;
  auto o = opts;
  if (o.mode == Mode::random) o.mode = Mode::directed;
  auto v = check_hurwitz_armendariz(ring, o);
  if (v.status == Status::fails)
    throw HypothesisNotEstablished(std::string(what) + " needs a ring that is Armendariz of the Hurwitz series "
                                   "type; the check fails at the given bounds");
}

std::vector<std::vector<Element>> all_polys(const std::vector<Element>& values, std::size_t len, std::uint64_t cap) {
  if (saturating_pow(values.size(), len) > cap)
    throw BudgetExceeded("polynomial space " + std::to_string(values.size()) + "^" + std::to_string(len) +
                         " exceeds the budget");
  std::vector<std::vector<Element>> out;
  Odometer od(len, values.size());
  do {
    std::vector<Element> f;
    for (auto d : od.digits()) f.push_back(values[d]);
    out.push_back(std::move(f));
  } while (od.next());
  return out;
}

}  // namespace detail

using namespace detail;

std::uint64_t kempner(std::uint64_t c) {
  if (c == 0) return 0;
  if (c == 1) return 1;
  unsigned __int128 f = 1;
  for (std::uint64_t k = 1;; ++k) {
    f = f * k % c;
    if (f == 0) return k;
  }
}

namespace {

const char* property_of(ProductKind kind) {
  return kind == ProductKind::hurwitz ? "hurwitz-armendariz" : "armendariz";
}

Witness::Kind witness_kind(ProductKind kind) {
  return kind == ProductKind::hurwitz ? Witness::Kind::hurwitz_pair : Witness::Kind::ordinary_pair;
}

std::string join_notes(std::string a, const std::string& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  return a + "; " + b;
}

template <class D>
class PairSearch {
 public:
  using V = typename D::value_type;

  PairSearch(const RingPtr& ring, const D& d, ProductKind kind) : ring_(ring), d_(d), kind_(kind) {}

  bool is_witness(std::span<const V> f, std::span<const V> g) const {
    return product_vanishes(d_.ar, kind_, f, g) && some_coeff_product_nonzero(d_.ar, f, g);
  }

  Witness witness(std::span<const V> f, std::span<const V> g) const {
    return pair_witness(ring_, witness_kind(kind_), elements(f), elements(g));
  }

  std::vector<Element> elements(std::span<const V> f) const {
    std::vector<Element> out;
    for (const auto& v : f) out.push_back(d_.element(v));
    return out;
  }

  std::vector<V> values(const std::vector<Element>& f) const {
    std::vector<V> out;
    for (const auto& e : f) out.push_back(d_.value(e));
    return out;
  }

  const D& domain() const { return d_; }
  ProductKind kind() const { return kind_; }

 private:
  const RingPtr& ring_;
  const D& d_;
  ProductKind kind_;
};

// For each pool entry a: indices of pool entries b with w*ab = 0.
template <class D>
std::vector<std::vector<std::size_t>> zero_lists(const D& d, const std::vector<typename D::value_type>& pool,
                                                 std::size_t weight) {
  std::vector<std::vector<std::size_t>> out(pool.size());
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b) {
      auto p = d.ar.mul(pool[a], pool[b]);
      if (weight != 1) p = d.ar.binomial_scale(weight, 1, p);
      if (d.ar.is_zero(p)) out[a].push_back(b);
    }
  return out;
}

struct Outcome {
  std::optional<Witness> witness;
  std::uint64_t examined = 0;
  bool over_budget = false;
};

template <class D>
Outcome exhaustive_scan(const PairSearch<D>& s, const Ring& ring, std::size_t len, std::uint64_t budget) {
  using V = typename D::value_type;
  const auto& d = s.domain();
  std::vector<V> vals;
  for (const auto& e : ring.elements()) vals.push_back(d.value(e));
  auto rz = zero_lists(d, vals, 1);
  std::uint64_t heads = 0;
  for (const auto& l : rz) heads += l.size();
  std::uint64_t tail = saturating_pow(vals.size(), len - 1);
  std::uint64_t pairs = saturating_mul(saturating_mul(heads, tail), tail);
  Outcome out;
  if (saturating_mul(pairs, len) > budget) {
    out.over_budget = true;
    return out;
  }
  std::vector<V> f(len), g(len);
  Odometer fo(len, vals.size());
  do {
    for (std::size_t k = 0; k < len; ++k) f[k] = vals[fo.digits()[k]];
    for (std::size_t b0 : rz[fo.digits()[0]]) {
      g[0] = vals[b0];
      Odometer go(len - 1, vals.size());
      do {
        for (std::size_t k = 1; k < len; ++k) g[k] = vals[go.digits()[k - 1]];
        ++out.examined;
        if (s.is_witness(f, g)) {
          out.witness = s.witness(f, g);
          return out;
        }
      } while (go.next());
    }
  } while (fo.next());
  return out;
}

// Complete over the pool at degree 1: f = (a0, a1), g = (b0, b1).
template <class D>
Outcome degree_one_scan(const PairSearch<D>& s, const std::vector<Element>& pool_elems, std::uint64_t budget) {
  using V = typename D::value_type;
  const auto& d = s.domain();
  auto pool = s.values(pool_elems);
  auto rz = zero_lists(d, pool, 1);
  auto rt = s.kind() == ProductKind::hurwitz ? zero_lists(d, pool, 2) : rz;
  std::uint64_t a = 0, b = 0;
  for (const auto& l : rz) a += l.size();
  for (const auto& l : rt) b += l.size();
  Outcome out;
  if (saturating_mul(a, b) > budget) {
    out.over_budget = true;
    return out;
  }
  std::vector<V> f(2), g(2);
  for (std::size_t a0 = 0; a0 < pool.size(); ++a0)
    for (std::size_t a1 = 0; a1 < pool.size(); ++a1) {
      f[0] = pool[a0];
      f[1] = pool[a1];
      for (std::size_t b0 : rz[a0])
        for (std::size_t b1 : rt[a1]) {
          ++out.examined;
          g[0] = pool[b0];
          g[1] = pool[b1];
          auto mid = d.ar.add(d.ar.mul(f[0], g[1]), d.ar.mul(f[1], g[0]));
          if (!d.ar.is_zero(mid) || !some_coeff_product_nonzero(d.ar, std::span<const V>(f), std::span<const V>(g)))
            continue;
          out.witness = s.witness(f, g);
          return out;
        }
    }
  return out;
}

// Lift of an IFP failure ab = 0, arb != 0 in characteristic c:
// f = (a, -ar), g = (k! r^k b) for k < kempner(c).
template <class D>
Outcome ifp_lift_scan(const PairSearch<D>& s, const Ring& ring, const std::vector<Element>& pool_elems,
                      std::size_t max_len, std::uint64_t budget) {
  Outcome out;
  const std::uint64_t c = ring.characteristic();
  const std::uint64_t len = kempner(c);
  if (c < 2 || len < 2 || len > max_len) return out;
  const auto& d = s.domain();
  auto pool = s.values(pool_elems);
  auto rz = zero_lists(d, pool, 1);
  std::uint64_t pairs = 0;
  for (const auto& l : rz) pairs += l.size();
  if (saturating_mul(pairs, pool.size()) > budget) {
    out.over_budget = true;
    return out;
  }
  for (std::size_t ai = 0; ai < pool.size(); ++ai) {
    if (d.ar.is_zero(pool[ai])) continue;
    for (std::size_t bi : rz[ai]) {
      if (d.ar.is_zero(pool[bi])) continue;
      for (std::size_t ri = 0; ri < pool.size(); ++ri) {
        ++out.examined;
        if (d.ar.is_zero(d.ar.mul(d.ar.mul(pool[ai], pool[ri]), pool[bi]))) continue;
        const Element a = pool_elems[ai], b = pool_elems[bi], r = pool_elems[ri];
        std::vector<Element> f{a, ring.neg(ring.mul(a, r))};
        std::vector<Element> g;
        BigInt fact = 1;
        Element rk = ring.one();
        for (std::uint64_t k = 0; k < len; ++k) {
          if (k > 0) {
            fact *= k;
            rk = ring.mul(rk, r);
          }
          g.push_back(ring.scale(fact, ring.mul(rk, b)));
        }
        while (g.size() > 1 && ring.is_zero(g.back())) g.pop_back();
        auto fv = s.values(f), gv = s.values(g);
        if (s.is_witness(fv, gv)) {
          out.witness = s.witness(fv, gv);
          return out;
        }
      }
    }
  }
  return out;
}

// Monomial pairs f = a x^i, g = b x^j with ab != 0 but C(i+j, i) ab = 0.
template <class D>
Outcome monomial_scan(const PairSearch<D>& s, const std::vector<Element>& pool_elems, std::size_t len,
                      std::uint64_t budget) {
  using V = typename D::value_type;
  const auto& d = s.domain();
  auto pool = s.values(pool_elems);
  Outcome out;
  if (saturating_mul(saturating_mul(pool.size(), pool.size()), len * len) > budget) {
    out.over_budget = true;
    return out;
  }
  for (std::size_t ai = 0; ai < pool.size(); ++ai)
    for (std::size_t bi = 0; bi < pool.size(); ++bi) {
      auto p = d.ar.mul(pool[ai], pool[bi]);
      if (d.ar.is_zero(p)) continue;
      for (std::size_t i = 1; i < len; ++i)
        for (std::size_t j = 1; j < len; ++j) {
          ++out.examined;
          if (!d.ar.is_zero(d.ar.binomial_scale(i + j, i, p))) continue;
          std::vector<V> f(i + 1, d.ar.zero()), g(j + 1, d.ar.zero());
          f[i] = pool[ai];
          g[j] = pool[bi];
          out.witness = s.witness(f, g);
          return out;
        }
    }
  return out;
}

std::size_t effective_length(const Ring& r, const std::vector<Element>& f) {
  std::size_t n = f.size();
  while (n > 0 && r.is_zero(f[n - 1])) --n;
  return n;
}

template <class D>
Verdict random_scan(const RingPtr& ring, const PairSearch<D>& s, const CheckOptions& opts) {
  using V = typename D::value_type;
  const Ring& R = *ring;
  if (!R.samplable()) throw CapabilityMissing(R.spec() + " cannot be sampled");
  std::mt19937_64 gen(opts.seed);
  auto biased = zero_divisors(R);
  const std::size_t len = std::size_t(opts.degree) + 1;
  std::uint64_t examined = 0, candidates = 0;
  for (std::uint64_t t = 0; t < opts.samples; ++t) {
    auto f = s.values(random_poly(R, biased, gen, len));
    auto g = s.values(random_poly(R, biased, gen, len));
    ++examined;
    if (s.is_witness(f, g)) return Verdict::fails(bounds_of(opts, examined), s.witness(f, g), truncation_note(R));
  }
  if (opts.trunc > 0) {
    const std::size_t jlen = std::size_t(opts.trunc) + 1;
    const auto& d = s.domain();
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
      std::vector<Element> fe, ge;
      for (std::size_t k = 0; k < jlen; ++k) fe.push_back(biased_sample(R, biased, gen));
      for (std::size_t k = 0; k < jlen; ++k) ge.push_back(biased_sample(R, biased, gen));
      auto f = s.values(fe), g = s.values(ge);
      ++examined;
      if (!product_vanishes(d.ar, s.kind(), std::span<const V>(f), std::span<const V>(g), jlen) ||
          !some_coeff_product_nonzero(d.ar, std::span<const V>(f), std::span<const V>(g)))
        continue;
      std::size_t lf = effective_length(R, fe), lg = effective_length(R, ge);
      if (lf + lg - 2 <= std::size_t(opts.trunc)) {
        fe.resize(lf);
        ge.resize(lg);
        auto fv = s.values(fe), gv = s.values(ge);
        if (s.is_witness(fv, gv))
          return Verdict::fails(bounds_of(opts, examined), s.witness(fv, gv), "promoted from the jet channel");
      }
      ++candidates;
    }
  }
  if (candidates > 0)
    return Verdict::unknown(bounds_of(opts, examined),
                            std::to_string(candidates) + " jet candidates at order " + std::to_string(opts.trunc) +
                                " could not be promoted to exact witnesses");
  return Verdict::holds(bounds_of(opts, examined), truncation_note(R));
}

template <class D>
Verdict pair_check(const RingPtr& ring, const D& d, ProductKind kind, const CheckOptions& opts) {
  const Ring& R = *ring;
  PairSearch<D> s(ring, d, kind);
  const std::size_t len = std::size_t(opts.degree) + 1;
  auto budget_note = [&](const char* what) {
    return std::string(what) + " exceeds the budget of " + std::to_string(opts.budget) + " operations";
  };
  switch (opts.mode) {
    case Mode::exhaustive: {
      if (!R.enumerable()) throw CapabilityMissing(R.spec() + " cannot be enumerated for an exhaustive scan");
      auto o = exhaustive_scan(s, R, len, opts.budget);
      if (o.over_budget) return Verdict::unknown(bounds_of(opts, 0), budget_note("exhaustive scan"));
      if (o.witness) return Verdict::fails(bounds_of(opts, o.examined), std::move(*o.witness));
      return Verdict::holds(bounds_of(opts, o.examined));
    }
    case Mode::random:
      return random_scan(ring, s, opts);
    case Mode::directed: {
      auto pool = directed_pool(R);
      std::uint64_t examined = 0;
      std::string note = R.enumerable() ? "degree-1 scan complete" : "degree-1 scan over a pool of " +
                                                                         std::to_string(pool.size()) + " elements";
      note = join_notes(note, truncation_note(R));
      bool partial = false;
      if (kind == ProductKind::hurwitz) {
        auto o = ifp_lift_scan(s, R, pool, len, opts.budget);
        examined += o.examined;
        if (o.witness) return Verdict::fails(bounds_of(opts, examined), std::move(*o.witness), "lifted IFP failure");
        partial = partial || o.over_budget;
      }
      auto o = degree_one_scan(s, pool, opts.budget);
      examined += o.examined;
      if (o.witness) return Verdict::fails(bounds_of(opts, examined), std::move(*o.witness), note);
      partial = partial || o.over_budget;
      if (kind == ProductKind::hurwitz && len > 2) {
        auto m = monomial_scan(s, pool, len, opts.budget);
        examined += m.examined;
        if (m.witness)
          return Verdict::fails(bounds_of(opts, examined), std::move(*m.witness),
                                join_notes("binomial monomial pair", truncation_note(R)));
        partial = partial || m.over_budget;
        note = join_notes(note, "monomial pairs to degree " + std::to_string(opts.degree));
      }
      if (partial) return Verdict::unknown(bounds_of(opts, examined), budget_note("directed scan"));
      return Verdict::holds(bounds_of(opts, examined), note);
    }
  }
  return Verdict::unknown(bounds_of(opts, 0));
}

Verdict armendariz_kind(const RingPtr& ring, ProductKind kind, const CheckOptions& opts) {
  if (opts.degree < 0) throw DomainError("degree must be nonnegative");
  if (ring->is_zero(ring->one())) return Verdict::trivial(bounds_of(opts, 0));
  if (opts.degree == 0) return Verdict::holds(bounds_of(opts, 0), "constant polynomials");
  return with_domain(*ring, [&](const auto& d) { return pair_check(ring, d, kind, opts); });
}

}  // namespace

Verdict check_armendariz(const RingPtr& ring, const CheckOptions& opts) {
  return armendariz_kind(ring, ProductKind::ordinary, opts);
}

Verdict check_hurwitz_armendariz(const RingPtr& ring, const CheckOptions& opts) {
  return armendariz_kind(ring, ProductKind::hurwitz, opts);
}

namespace {

std::vector<Element> hmul(const Ring& r, const std::vector<Element>& f, const std::vector<Element>& g) {
  ElementArith ar(r);
  return hurwitz_product(ar, std::span<const Element>(f), std::span<const Element>(g));
}

bool vanishes(const Ring& r, const std::vector<Element>& f) {
  for (const auto& c : f)
    if (!r.is_zero(c)) return false;
  return true;
}

ElementSet coeff_set(const Ring& r, const std::vector<Element>& f) {
  ElementSet s;
  for (const auto& c : f)
    if (!r.is_zero(c)) s.push_back(c);
  normalize(s);
  return s;
}

std::vector<Element> poly_from(const Ring& r, const ElementSet& allowed, std::mt19937_64& gen, std::size_t max_len) {
  std::size_t len = 1 + gen() % max_len;
  std::vector<Element> f;
  for (std::size_t k = 0; k < len; ++k) f.push_back(allowed.empty() ? r.zero() : allowed[gen() % allowed.size()]);
  return f;
}

void require_enumerable(const Ring& r, const char* what) {
  if (!r.enumerable()) throw CapabilityMissing(std::string(what) + " needs an enumerable ring; " + r.spec() + " is not");
}

}  // namespace

Verdict check_nproduct_armendariz(const RingPtr& ring, std::size_t n, const CheckOptions& opts) {
  if (n < 2) throw DomainError("n-product check needs n >= 2");
  const Ring& R = *ring;
  require_enumerable(R, "the n-product check");
  if (R.is_zero(R.one())) return Verdict::trivial(bounds_of(opts, 0));
  require_hurwitz_armendariz(ring, opts, "the n-product check");
  CheckOptions o = opts;
  o.mode = Mode::random;
  std::mt19937_64 gen(opts.seed);
  auto biased = zero_divisors(R);
  const std::size_t len = std::size_t(std::max(opts.degree, 0L)) + 1;
  for (std::uint64_t t = 0; t < opts.samples; ++t) {
    std::vector<std::vector<Element>> fs;
    std::vector<Element> p{R.one()};
    for (std::size_t k = 0; k + 1 < n; ++k) {
      fs.push_back(random_poly(R, biased, gen, len));
      p = hmul(R, p, fs.back());
    }
    fs.push_back(poly_from(R, right_annihilator(R, coeff_set(R, p)), gen, len));
    if (!vanishes(R, hmul(R, p, fs.back()))) throw InternalError("constructed n-tuple has a nonzero product");
    Odometer od(n, len);
    std::vector<std::size_t> sizes;
    for (const auto& f : fs) sizes.push_back(f.size());
    do {
      bool in_range = true;
      for (std::size_t k = 0; k < n; ++k) in_range = in_range && od.digits()[k] < sizes[k];
      if (!in_range) continue;
      Element prod = R.one();
      for (std::size_t k = 0; k < n; ++k) prod = R.mul(prod, fs[k][od.digits()[k]]);
      if (R.is_zero(prod)) continue;
      std::string texts;
      for (std::size_t k = 0; k < n; ++k) texts += (k ? ";" : "") + to_string(fs[k], R);
      auto idx = od.digits();
      auto recheck = [ring, fs, idx]() {
        const Ring& r = *ring;
        std::vector<Element> q{r.one()};
        Element c = r.one();
        for (std::size_t k = 0; k < fs.size(); ++k) {
          q = hmul(r, q, fs[k]);
          c = r.mul(c, fs[k][idx[k]]);
        }
        return vanishes(r, q) && !r.is_zero(c);
      };
      auto w = discrepancy_witness(ring, texts, "", R.str(prod), recheck);
      return Verdict::fails(bounds_of(o, t + 1), std::move(w), "inconsistent with the bounded hypothesis");
    } while (od.next());
  }
  return Verdict::holds(bounds_of(o, opts.samples));
}

Verdict check_ifp_hurwitz(const RingPtr& ring, const CheckOptions& opts) {
  const Ring& R = *ring;
  require_enumerable(R, "the Hurwitz IFP check");
  if (R.is_zero(R.one())) return Verdict::trivial(bounds_of(opts, 0));
  require_hurwitz_armendariz(ring, opts, "the Hurwitz IFP check");
  CheckOptions o = opts;
  o.mode = Mode::random;
  std::mt19937_64 gen(opts.seed);
  auto biased = zero_divisors(R);
  const std::size_t len = std::size_t(std::max(opts.degree, 0L)) + 1;
  for (std::uint64_t t = 0; t < opts.samples; ++t) {
    auto f = random_poly(R, biased, gen, len);
    auto g = poly_from(R, right_annihilator(R, coeff_set(R, f)), gen, len);
    auto h = random_poly(R, biased, gen, len);
    if (!vanishes(R, hmul(R, f, g))) throw InternalError("constructed pair has a nonzero product");
    auto fhg = hmul(R, hmul(R, f, h), g);
    if (vanishes(R, fhg)) continue;
    auto recheck = [ring, f, g, h]() {
      const Ring& r = *ring;
      return vanishes(r, hmul(r, f, g)) && !vanishes(r, hmul(r, hmul(r, f, h), g));
    };
    auto w = discrepancy_witness(ring, to_string(f, R), to_string(g, R), "h=" + to_string(h, R), recheck);
    return Verdict::fails(bounds_of(o, t + 1), std::move(w), "inconsistent with the bounded hypothesis");
  }
  return Verdict::holds(bounds_of(o, opts.samples));
}

Verdict check_ideal_armendariz(const RingPtr& ring, const ElementSet& ideal, ProductKind kind,
                               const CheckOptions& opts) {
  const Ring& R = *ring;
  CheckOptions o = opts;
  o.mode = Mode::exhaustive;
  const std::size_t len = std::size_t(std::max(opts.degree, 0L)) + 1;
  std::uint64_t space = saturating_pow(ideal.size(), 2 * len);
  if (saturating_mul(space, len) > opts.budget)
    return Verdict::unknown(bounds_of(o, 0), "exhaustive scan exceeds the budget");
  auto polys = all_polys(ideal, len, opts.budget);
  std::uint64_t examined = 0;
  return with_domain(R, [&](const auto& d) {
    PairSearch s(ring, d, kind);
    for (const auto& fe : polys) {
      auto f = s.values(fe);
      for (const auto& ge : polys) {
        auto g = s.values(ge);
        ++examined;
        if (s.is_witness(f, g)) return Verdict::fails(bounds_of(o, examined), s.witness(f, g));
      }
    }
    return Verdict::holds(bounds_of(o, examined), std::string("coefficients in an ideal, ") + property_of(kind));
  });
}

}  // namespace hurwitz
