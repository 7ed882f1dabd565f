#ifndef HURWITZ_SERIES_HPP
#define HURWITZ_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// Coefficient arithmetic back-ends. Both expose the same interface so the
// product kernels below are written once: ElementArith works on any ring,
// TableArith on the Cayley tables of a finite ring (used by exhaustive scans).
// ---------------------------------------------------------------------------

class ElementArith {
 public:
  using value_type = Element;

  explicit ElementArith(const Ring& ring) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  Element zero() const { return ring_.zero(); }
  Element add(const Element& a, const Element& b) const { return ring_.add(a, b); }
  Element mul(const Element& a, const Element& b) const { return ring_.mul(a, b); }
  bool is_zero(const Element& a) const { return ring_.is_zero(a); }
  /// C(n, k) * x.
  Element binomial_scale(std::size_t n, std::size_t k, const Element& x) const;

 private:
  const std::vector<BigInt>& row(std::size_t n) const;

  const Ring& ring_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

class TableArith {
 public:
  using value_type = std::uint32_t;

  explicit TableArith(const FiniteTables& t) : t_(t) {}

  const FiniteTables& tables() const { return t_; }
  std::uint32_t zero() const { return t_.zero; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return t_.plus(a, b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return t_.times(a, b); }
  bool is_zero(std::uint32_t a) const { return a == t_.zero; }
  std::uint32_t binomial_scale(std::size_t n, std::size_t k, std::uint32_t x) const;

 private:
  const std::vector<std::uint64_t>& row(std::size_t n) const;

  const FiniteTables& t_;
  mutable std::vector<std::vector<std::uint64_t>> rows_;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// c_n = sum_k C(n,k) a_k b_{n-k} for n < min(len a + len b - 1, limit).
template <class Arith>
std::vector<typename Arith::value_type> hurwitz_product(
    const Arith& ar, std::span<const typename Arith::value_type> a,
    std::span<const typename Arith::value_type> b, std::size_t limit = kNoLimit) {
  using V = typename Arith::value_type;
  if (a.empty() || b.empty()) return {};
  std::size_t len = std::min(a.size() + b.size() - 1, limit);
  std::vector<V> c(len, ar.zero());
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (ar.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (ar.is_zero(b[j])) continue;
      c[i + j] = ar.add(c[i + j], ar.binomial_scale(i + j, i, ar.mul(a[i], b[j])));
    }
  }
  return c;
}

/// Plain convolution c_n = sum_k a_k b_{n-k}.
template <class Arith>
std::vector<typename Arith::value_type> ordinary_product(
    const Arith& ar, std::span<const typename Arith::value_type> a,
    std::span<const typename Arith::value_type> b, std::size_t limit = kNoLimit) {
  using V = typename Arith::value_type;
  if (a.empty() || b.empty()) return {};
  std::size_t len = std::min(a.size() + b.size() - 1, limit);
  std::vector<V> c(len, ar.zero());
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (ar.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      c[i + j] = ar.add(c[i + j], ar.mul(a[i], b[j]));
  }
  return c;
}

template <class Arith>
bool all_zero(const Arith& ar, std::span<const typename Arith::value_type> c) {
  for (const auto& x : c)
    if (!ar.is_zero(x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial and jet value types.
// ---------------------------------------------------------------------------

enum class ProductKind { hurwitz, ordinary };

/// Finite coefficient vector over a ring; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
template <ProductKind K>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(RingPtr ring, std::vector<Element> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Element coeff(std::size_t n) const;

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.ring_ == b.ring_ || a.coeffs_.empty());
  }

 private:
  RingPtr ring_;
  std::vector<Element> coeffs_;
};

using HurwitzPoly = BasicPoly<ProductKind::hurwitz>;
using OrdinaryPoly = BasicPoly<ProductKind::ordinary>;

/// Truncated Hurwitz series: exactly order()+1 coefficients.
class HurwitzJet {
 public:
  HurwitzJet() = default;
  HurwitzJet(RingPtr ring, std::size_t order, std::vector<Element> coeffs);

  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return order_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_constant() const;

  static HurwitzJet identity(RingPtr ring, std::size_t order);

  friend bool operator==(const HurwitzJet& a, const HurwitzJet& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingPtr ring_;
  std::size_t order_ = 0;
  std::vector<Element> coeffs_;
};

HurwitzPoly hpoly_mul(const HurwitzPoly& f, const HurwitzPoly& g);
HurwitzPoly hpoly_add(const HurwitzPoly& f, const HurwitzPoly& g);
HurwitzPoly hpoly_neg(const HurwitzPoly& f);
/// c * f, termwise on the left.
HurwitzPoly hpoly_scale_left(const Element& c, const HurwitzPoly& f);

OrdinaryPoly opoly_mul(const OrdinaryPoly& f, const OrdinaryPoly& g);
OrdinaryPoly opoly_add(const OrdinaryPoly& f, const OrdinaryPoly& g);

HurwitzJet jet_mul(const HurwitzJet& f, const HurwitzJet& g);
HurwitzJet jet_add(const HurwitzJet& f, const HurwitzJet& g);

/// Image of f in the order-N jet ring.
HurwitzJet truncate(const HurwitzPoly& f, std::size_t order);
HurwitzPoly to_poly(const HurwitzJet& j);

/// (k! r^k)_{k=0..N}: the Hurwitz inverse of 1 - r x to order N.
HurwitzJet geometric_inverse_jet(RingPtr ring, const Element& r, std::size_t order);

/// Every jet e of order N with e*e = e, solved degree by degree: e_0 ranges
/// over the idempotents of R and e_n over the solutions of
/// sum_k C(n,k) e_k e_{n-k} = e_n given e_0..e_{n-1}. Exhaustive; requires an
/// enumerable ring.
std::vector<HurwitzJet> idempotent_jets(RingPtr ring, std::size_t order);

/// Polynomial in T whose coefficients are Hurwitz polynomials in x.
using NestedPoly = std::vector<HurwitzPoly>;

/// Hurwitz product in T with coefficients multiplied in hR.
NestedPoly nested_hurwitz_mul(RingPtr ring, const NestedPoly& f, const NestedPoly& g);
bool nested_is_zero(const NestedPoly& f);

struct PackResult {
  HurwitzPoly f;
  HurwitzPoly g;
  /// k_n for n = 0 .. max(len F, len G) - 1.
  std::vector<std::size_t> schedule;
};

/// Degree-packing of a nested pair: f_n is placed at x^(n k_n) with
/// k_n = deg f_0 + ... + deg f_n + deg g_0 + ... + deg g_n + 1 (deg 0 := 0).
/// Throws DomainError when a placed coefficient would exceed max_degree.
PackResult pack_nested(RingPtr ring, const NestedPoly& f, const NestedPoly& g,
                       std::size_t max_degree = 4096);

ElementSet coefficient_set(const HurwitzPoly& f);
ElementSet coefficient_set(const std::vector<HurwitzPoly>& v);

/// "<c0,c1,...>" with ring-canonical coefficient strings; "<0>" for zero.
std::string to_string(const std::vector<Element>& coeffs, const Ring& ring);
template <ProductKind K>
std::string to_string(const BasicPoly<K>& f) {
  return f.ring() ? to_string(f.coeffs(), *f.ring()) : std::string("<0>");
}
std::string to_string(const HurwitzJet& j);

/// Parses "<c0,c1,...>" (or a single coefficient) into a coefficient list.
std::vector<Element> parse_coeffs(const Ring& ring, std::string_view text);
HurwitzPoly parse_hpoly(RingPtr ring, std::string_view text);
HurwitzJet parse_jet(RingPtr ring, std::size_t order, std::string_view text);

}  // namespace hurwitz

#endif  // HURWITZ_SERIES_HPP
