#ifndef HURWITZ_SRC_SEARCH_HPP
#define HURWITZ_SRC_SEARCH_HPP

// Shared machinery for the property checkers: a coefficient domain that runs
// on Cayley-table indices when the ring is small enough and on Elements
// otherwise, plus allocation-free product tests.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/properties.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz::detail {

struct TableDomain {
  using value_type = std::uint32_t;
  TableDomain(const Ring& r) : ring(r), ar(r.tables()) {}
  const Ring& ring;
  TableArith ar;
  Element element(std::uint32_t v) const { return ring.at(v); }
  std::uint32_t value(const Element& e) const { return std::uint32_t(ring.index_of(e)); }
};

struct ElementDomain {
  using value_type = Element;
  explicit ElementDomain(const Ring& r) : ring(r), ar(r) {}
  const Ring& ring;
  ElementArith ar;
  Element element(const Element& v) const { return v; }
  Element value(const Element& e) const { return e; }
};

inline bool tabulable(const Ring& r) { return r.enumerable() && *r.size() <= Ring::kTableLimit; }

/// Calls fn with a TableDomain when the ring has (or may build) Cayley
/// tables, else with an ElementDomain.
template <class Fn>
auto with_domain(const Ring& r, Fn&& fn) {
  if (tabulable(r)) return fn(TableDomain(r));
  return fn(ElementDomain(r));
}

/// Coefficient n of the product, computed without allocating.
template <class Arith, class V = typename Arith::value_type>
V product_coeff(const Arith& ar, ProductKind kind, std::span<const V> f, std::span<const V> g, std::size_t n) {
  V c = ar.zero();
  std::size_t lo = n >= g.size() ? n - g.size() + 1 : 0;
  for (std::size_t i = lo; i < f.size() && i <= n; ++i) {
    if (ar.is_zero(f[i]) || ar.is_zero(g[n - i])) continue;
    V p = ar.mul(f[i], g[n - i]);
    c = ar.add(c, kind == ProductKind::hurwitz ? ar.binomial_scale(n, i, p) : p);
  }
  return c;
}

template <class Arith, class V = typename Arith::value_type>
bool product_vanishes(const Arith& ar, ProductKind kind, std::span<const V> f, std::span<const V> g,
                      std::size_t limit = kNoLimit) {
  if (f.empty() || g.empty()) return true;
  std::size_t len = std::min(f.size() + g.size() - 1, limit);
  for (std::size_t n = 0; n < len; ++n)
    if (!ar.is_zero(product_coeff(ar, kind, f, g, n))) return false;
  return true;
}

template <class Arith, class V = typename Arith::value_type>
bool some_coeff_product_nonzero(const Arith& ar, std::span<const V> f, std::span<const V> g) {
  for (const auto& a : f) {
    if (ar.is_zero(a)) continue;
    for (const auto& b : g)
      if (!ar.is_zero(b) && !ar.is_zero(ar.mul(a, b))) return true;
  }
  return false;
}

/// Odometer over all vectors in pool^len, first coordinate fastest.
class Odometer {
 public:
  Odometer(std::size_t len, std::size_t base) : digits_(len, 0), base_(base) {}
  const std::vector<std::size_t>& digits() const { return digits_; }
  bool next() {
    for (auto& d : digits_) {
      if (++d < base_) return true;
      d = 0;
    }
    return false;
  }

 private:
  std::vector<std::size_t> digits_;
  std::size_t base_;
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r = saturating_mul(r, b);
  return r;
}

/// Elements with a nonzero left or right annihilator, used to bias random
/// sampling toward zero products. Empty for rings that cannot be enumerated.
std::vector<Element> zero_divisors(const Ring& r);

/// Coefficient pool for directed scans: every element when enumerable,
/// otherwise 0, 1 and the ring's small elements.
std::vector<Element> directed_pool(const Ring& r, std::size_t limit = 32);

/// Random coefficient: from `biased` with probability 1/2 when nonempty.
Element biased_sample(const Ring& r, const std::vector<Element>& biased, std::mt19937_64& gen);

/// Random coefficient vector of length in [1, max_len].
std::vector<Element> random_poly(const Ring& r, const std::vector<Element>& biased, std::mt19937_64& gen,
                                 std::size_t max_len);

Bounds bounds_of(const CheckOptions& opts, std::uint64_t samples);

/// Note appended to verdicts on rings that cut words at a finite length.
std::string truncation_note(const Ring& r);

/// Throws HypothesisNotEstablished unless the bounded Hurwitz check holds.
void require_hurwitz_armendariz(const RingPtr& ring, const CheckOptions& opts, const char* what);

/// Every vector in values^len, as element vectors; throws BudgetExceeded past
/// `cap` vectors.
std::vector<std::vector<Element>> all_polys(const std::vector<Element>& values, std::size_t len, std::uint64_t cap);

}  // namespace hurwitz::detail

#endif  // HURWITZ_SRC_SEARCH_HPP
