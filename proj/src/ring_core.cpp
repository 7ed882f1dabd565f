#include "hurwitz/ring_core.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "internal.hpp"

namespace hurwitz {
namespace {

/// Index-level arithmetic on an enumerable ring: table lookups when the
/// Cayley tables fit, element arithmetic otherwise.
class IndexView {
 public:
  explicit IndexView(const Ring& r) : ring_(r) {
    if (!r.enumerable()) throw CapabilityMissing("ring " + r.spec() + " is not enumerable");
    n_ = *r.size();
    if (r.has_tables()) {
      t_ = &r.tables();
    } else {
      if (n_ > (std::uint64_t(1) << 22)) throw BudgetExceeded("ring " + r.spec() + " is too large to enumerate");
      elems_ = r.elements();
    }
  }

  std::uint64_t n() const { return n_; }
  std::uint64_t zero() const { return t_ ? t_->zero : ring_.index_of(ring_.zero()); }
  std::uint64_t one() const { return t_ ? t_->one : ring_.index_of(ring_.one()); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return t_ ? t_->plus(std::uint32_t(a), std::uint32_t(b)) : ring_.index_of(ring_.add(elems_[a], elems_[b]));
  }
  std::uint64_t neg(std::uint64_t a) const {
    return t_ ? t_->neg[a] : ring_.index_of(ring_.neg(elems_[a]));
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return t_ ? t_->times(std::uint32_t(a), std::uint32_t(b)) : ring_.index_of(ring_.mul(elems_[a], elems_[b]));
  }
  Element element(std::uint64_t i) const { return t_ ? ring_.at(i) : elems_[i]; }
  std::uint64_t index(const Element& x) const { return ring_.index_of(x); }

  ElementSet to_set(const std::vector<std::uint64_t>& idx) const {
    ElementSet s;
    s.reserve(idx.size());
    for (auto i : idx) s.push_back(element(i));
    normalize(s);
    return s;
  }
  std::vector<std::uint64_t> to_indices(const ElementSet& s) const {
    std::vector<std::uint64_t> v;
    for (const auto& x : s) v.push_back(index(x));
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  const Ring& ring_;
  std::uint64_t n_ = 0;
  const FiniteTables* t_ = nullptr;
  std::vector<Element> elems_;
};

/// Additive subgroup grown one generator at a time: H + <g> is the union of
/// the cosets kg + H for k = 0, 1, ... until kg lands in H.
class Subgroup {
 public:
  explicit Subgroup(const IndexView& v) : v_(v), in_(v.n(), 0) { insert(v.zero()); }

  bool contains(std::uint64_t x) const { return in_[x] != 0; }
  const std::vector<std::uint64_t>& members() const { return members_; }

  /// Adds g; calls `fresh` on every newly added element.
  template <class F>
  void extend(std::uint64_t g, F&& fresh) {
    if (contains(g)) return;
    const std::vector<std::uint64_t> base = members_;
    std::uint64_t coset = g;
    while (!contains(coset)) {
      for (auto h : base) {
        auto y = v_.add(coset, h);
        if (!in_[y]) {
          insert(y);
          fresh(y);
        }
      }
      coset = v_.add(coset, g);
    }
  }
  void extend(std::uint64_t g) {
    extend(g, [](std::uint64_t) {});
  }

  std::vector<std::uint64_t> sorted() const {
    auto s = members_;
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  void insert(std::uint64_t x) {
    in_[x] = 1;
    members_.push_back(x);
  }

  const IndexView& v_;
  std::vector<char> in_;
  std::vector<std::uint64_t> members_;
};

std::vector<std::uint64_t> closure(const IndexView& v, const std::vector<std::uint64_t>& gens) {
  Subgroup h(v);
  std::deque<std::uint64_t> todo;
  auto fresh = [&](std::uint64_t y) { todo.push_back(y); };
  for (auto g : gens) h.extend(g, fresh);
  while (!todo.empty()) {
    auto x = todo.front();
    todo.pop_front();
    for (std::uint64_t r = 0; r < v.n(); ++r) {
      h.extend(v.mul(r, x), fresh);
      h.extend(v.mul(x, r), fresh);
    }
  }
  return h.sorted();
}

std::vector<std::uint64_t> product(const IndexView& v, const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) {
  Subgroup h(v);
  for (auto x : a)
    for (auto y : b) h.extend(v.mul(x, y));
  return h.sorted();
}

bool power_is_zero(const IndexView& v, const std::vector<std::uint64_t>& ideal, std::size_t m) {
  auto p = ideal;
  for (std::size_t k = 1; k <= m; ++k) {
    if (p.size() == 1) return true;
    auto next = product(v, p, ideal);
    if (next == p) return false;
    p = std::move(next);
  }
  return p.size() == 1;
}

bool is_nilpotent_index(const IndexView& v, std::uint64_t x) {
  // nilpotency index is at most n, so x^(2^k) with 2^k >= n decides it
  std::uint64_t p = x;
  for (std::uint64_t e = 1; e < v.n(); e *= 2) {
    if (p == v.zero()) return true;
    p = v.mul(p, p);
  }
  return p == v.zero();
}

std::vector<std::uint64_t> nilpotent_indices(const IndexView& v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < v.n(); ++x)
    if (is_nilpotent_index(v, x)) out.push_back(x);
  return out;
}

Bounds exhaustive_bounds() { return Bounds{0, 0, Mode::exhaustive, 0, 0}; }

IdealHandle handle(const RingPtr& ring, const IndexView& v, const std::vector<std::uint64_t>& idx,
                   std::vector<Element> gens) {
  return IdealHandle{ring, std::move(gens), v.to_set(idx)};
}

}  // namespace

namespace detail {

std::vector<std::uint64_t> ideal_closure_indices(const Ring& ring, const std::vector<Element>& gens) {
  IndexView v(ring);
  std::vector<std::uint64_t> g;
  for (const auto& x : gens) g.push_back(v.index(x));
  return closure(v, g);
}

}  // namespace detail

Verdict ring_axioms(const RingPtr& ring, std::uint64_t budget, std::uint64_t seed) {
  const Ring& R = *ring;
  if (!R.enumerable() && !R.samplable())
    throw CapabilityMissing("ring " + R.spec() + " is neither enumerable nor samplable");

  Element zero = R.zero();
  Element one = R.one();
  auto violation = [&](const Element& a, const Element& b, const Element& c) -> std::string {
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) return "addition is not associative";
    if (R.add(a, b) != R.add(b, a)) return "addition is not commutative";
    if (R.add(a, zero) != a) return "zero is not an additive identity";
    if (!R.is_zero(R.add(a, R.neg(a)))) return "negation is not an additive inverse";
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) return "multiplication is not associative";
    if (R.mul(a, one) != a || R.mul(one, a) != a) return "one is not a multiplicative identity";
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) return "left distributivity fails";
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c))) return "right distributivity fails";
    return {};
  };
  auto fail = [&](const Bounds& bounds, const Element& a, const Element& b, const Element& c,
                  const std::string& what) {
    Witness w = discrepancy_witness(
        ring, "(" + R.str(a) + "," + R.str(b) + "," + R.str(c) + ")", "", what,
        [ring, a, b, c, violation]() { return !violation(a, b, c).empty(); }, Witness::Kind::axiom);
    w.extra = {a, b, c};
    return Verdict::fails(bounds, std::move(w));
  };

  const auto n = R.size();
  if (R.enumerable() && *n <= 1000000 && (*n) * (*n) * (*n) <= budget) {
    Bounds bounds{0, 0, Mode::exhaustive, (*n) * (*n) * (*n), seed};
    auto elems = R.elements();
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems)
          if (auto what = violation(a, b, c); !what.empty()) return fail(bounds, a, b, c, what);
    Verdict v = Verdict::holds(bounds);
    v.degenerate = *n == 1;
    return v;
  }
  if (!R.samplable()) throw CapabilityMissing("ring " + R.spec() + " is not samplable");
  Bounds bounds{0, 0, Mode::random, budget, seed};
  std::mt19937_64 gen(seed);
  for (std::uint64_t k = 0; k < budget; ++k) {
    Element a = R.sample(gen), b = R.sample(gen), c = R.sample(gen);
    if (auto what = violation(a, b, c); !what.empty()) return fail(bounds, a, b, c, what);
  }
  return Verdict::holds(bounds);
}

ElementSet right_annihilator(const Ring& ring, const ElementSet& s) {
  IndexView v(ring);
  auto si = v.to_indices(s);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < v.n(); ++a)
    if (std::all_of(si.begin(), si.end(), [&](std::uint64_t x) { return v.mul(x, a) == v.zero(); }))
      out.push_back(a);
  return v.to_set(out);
}

ElementSet left_annihilator(const Ring& ring, const ElementSet& s) {
  IndexView v(ring);
  auto si = v.to_indices(s);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < v.n(); ++a)
    if (std::all_of(si.begin(), si.end(), [&](std::uint64_t x) { return v.mul(a, x) == v.zero(); }))
      out.push_back(a);
  return v.to_set(out);
}

ElementSet idempotents(const Ring& ring) {
  IndexView v(ring);
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 0; e < v.n(); ++e)
    if (v.mul(e, e) == e) out.push_back(e);
  return v.to_set(out);
}

Verdict is_abelian(const RingPtr& ring) {
  IndexView v(*ring);
  Bounds b = exhaustive_bounds();
  b.samples = v.n();
  if (v.n() == 1) return Verdict::trivial(b);
  for (std::uint64_t e = 0; e < v.n(); ++e) {
    if (v.mul(e, e) != e) continue;
    for (std::uint64_t r = 0; r < v.n(); ++r)
      if (v.mul(e, r) != v.mul(r, e))
        return Verdict::fails(b, noncentral_idempotent_witness(ring, v.element(e), v.element(r)));
  }
  return Verdict::holds(b);
}

ElementSet nilpotents(const Ring& ring) {
  IndexView v(ring);
  return v.to_set(nilpotent_indices(v));
}

Verdict is_reduced(const RingPtr& ring) {
  IndexView v(*ring);
  Bounds b = exhaustive_bounds();
  b.samples = v.n();
  if (v.n() == 1) return Verdict::trivial(b);
  for (std::uint64_t x = 0; x < v.n(); ++x)
    if (x != v.zero() && v.mul(x, x) == v.zero()) return Verdict::fails(b, nilpotent_witness(ring, v.element(x)));
  return Verdict::holds(b);
}

IdealHandle ideal_closure(const RingPtr& ring, std::vector<Element> gens) {
  IndexView v(*ring);
  std::vector<std::uint64_t> g;
  for (const auto& x : gens) g.push_back(v.index(x));
  return handle(ring, v, closure(v, g), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& i, const IdealHandle& j) {
  if (i.ring != j.ring) throw RingMismatch("ideal product across different rings");
  IndexView v(*i.ring);
  auto p = product(v, v.to_indices(i.elements), v.to_indices(j.elements));
  std::vector<Element> gens;
  for (auto x : p) gens.push_back(v.element(x));
  return handle(i.ring, v, p, std::move(gens));
}

bool ideal_power_is_zero(const IdealHandle& i, std::size_t m) {
  IndexView v(*i.ring);
  return power_is_zero(v, v.to_indices(i.elements), m);
}

bool is_right_ideal(const Ring& ring, const ElementSet& s) {
  IndexView v(ring);
  auto idx = v.to_indices(s);
  std::vector<char> in(v.n(), 0);
  for (auto x : idx) in[x] = 1;
  if (!in[v.zero()]) return false;
  for (auto x : idx) {
    for (auto y : idx)
      if (!in[v.add(x, y)]) return false;
    for (std::uint64_t r = 0; r < v.n(); ++r)
      if (!in[v.mul(x, r)]) return false;
  }
  return true;
}

bool is_left_ideal(const Ring& ring, const ElementSet& s) {
  IndexView v(ring);
  auto idx = v.to_indices(s);
  std::vector<char> in(v.n(), 0);
  for (auto x : idx) in[x] = 1;
  if (!in[v.zero()]) return false;
  for (auto x : idx) {
    for (auto y : idx)
      if (!in[v.add(x, y)]) return false;
    for (std::uint64_t r = 0; r < v.n(); ++r)
      if (!in[v.mul(r, x)]) return false;
  }
  return true;
}

IdealHandle ideal_from_set(const RingPtr& ring, ElementSet elements) {
  normalize(elements);
  if (!is_right_ideal(*ring, elements) || !is_left_ideal(*ring, elements))
    throw InvalidIdeal("element set is not a two-sided ideal of " + ring->spec());
  return IdealHandle{ring, elements, elements};
}

IdealHandle lower_nilradical(const RingPtr& ring) {
  IndexView v(*ring);
  const auto n = v.n();
  Subgroup sum(v);
  std::vector<std::uint64_t> gens;
  for (auto x : nilpotent_indices(v)) {
    if (sum.contains(x)) continue;
    auto principal = closure(v, {x});
    if (!power_is_zero(v, principal, n)) continue;
    gens.push_back(x);
    for (auto y : principal) sum.extend(y);
  }
  auto result = closure(v, sum.sorted());
  if (!power_is_zero(v, result, n)) throw InternalError("sum of nilpotent ideals is not nilpotent");
  std::vector<Element> g;
  for (auto x : gens) g.push_back(v.element(x));
  return handle(ring, v, result, std::move(g));
}

IdealHandle upper_nilradical(const RingPtr& ring) {
  IndexView v(*ring);
  auto nil = nilpotent_indices(v);
  std::vector<char> is_nil(v.n(), 0);
  for (auto x : nil) is_nil[x] = 1;
  std::vector<std::uint64_t> members;
  for (auto x : nil) {
    auto principal = closure(v, {x});
    if (std::all_of(principal.begin(), principal.end(), [&](std::uint64_t y) { return is_nil[y] != 0; }))
      members.push_back(x);
  }
  IdealHandle upper = handle(ring, v, members, {});
  upper.generators = upper.elements;
  IdealHandle lower = lower_nilradical(ring);
  if (upper.elements != lower.elements)
    throw InternalError("upper and lower nilradicals differ on finite ring " + ring->spec());
  return upper;
}

ElementSet units(const Ring& ring) {
  IndexView v(ring);
  std::vector<std::uint64_t> out;
  const auto one = v.one();
  for (std::uint64_t a = 0; a < v.n(); ++a)
    for (std::uint64_t b = 0; b < v.n(); ++b)
      if (v.mul(a, b) == one && v.mul(b, a) == one) {
        out.push_back(a);
        break;
      }
  return v.to_set(out);
}

IdealHandle jacobson_radical(const RingPtr& ring) {
  IndexView v(*ring);
  std::vector<char> unit(v.n(), 0);
  for (const auto& u : units(*ring)) unit[v.index(u)] = 1;
  const auto one = v.one();
  std::vector<std::uint64_t> members;
  for (std::uint64_t x = 0; x < v.n(); ++x) {
    bool ok = true;
    for (std::uint64_t r = 0; r < v.n() && ok; ++r)
      ok = unit[v.add(one, v.neg(v.mul(r, x)))] != 0;
    if (ok) members.push_back(x);
  }
  IdealHandle j = handle(ring, v, members, {});
  j.generators = j.elements;
  IdealHandle lower = lower_nilradical(ring);
  if (j.elements != lower.elements)
    throw InternalError("Jacobson radical differs from the nilradical on finite ring " + ring->spec());
  return j;
}

RingPtr quotient_ring(const IdealHandle& ideal) {
  if (!is_right_ideal(*ideal.ring, ideal.elements) || !is_left_ideal(*ideal.ring, ideal.elements))
    throw InvalidIdeal("element set is not a two-sided ideal");
  return make_quotient(ideal.ring, ideal.elements);
}

bool is_regular(const Ring& ring, const Element& a) {
  ElementSet s{a};
  return right_annihilator(ring, s).size() == 1 && left_annihilator(ring, s).size() == 1;
}

ElementSet right_multiples(const Ring& ring, const Element& e) {
  IndexView v(ring);
  auto ei = v.index(e);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < v.n(); ++r) out.push_back(v.mul(ei, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return v.to_set(out);
}

ElementSet left_multiples(const Ring& ring, const Element& e) {
  IndexView v(ring);
  auto ei = v.index(e);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < v.n(); ++r) out.push_back(v.mul(r, ei));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return v.to_set(out);
}

std::string set_to_string(const Ring& ring, const ElementSet& s) {
  std::vector<Element> v(s.begin(), s.end());
  if (ring.enumerable())
    std::sort(v.begin(), v.end(),
              [&](const Element& a, const Element& b) { return ring.index_of(a) < ring.index_of(b); });
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + ring.str(v[i]);
  return out + "}";
}

ElementSet parse_set(const Ring& ring, std::string_view text) {
  std::string t = strip_spaces(text);
  if (!t.empty() && t.front() == '{') t = detail::unwrap(t, '{', '}');
  ElementSet s;
  if (!t.empty())
    for (const auto& item : split_top_level(t, ',')) s.push_back(ring.parse(item));
  normalize(s);
  return s;
}

}  // namespace hurwitz
