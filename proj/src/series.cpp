#include "hurwitz/series.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

// --- arithmetic back-ends ---------------------------------------------------

const std::vector<BigInt>& ElementArith::row(std::size_t n) const {
  while (rows_.size() <= n) {
    auto r = binomial_row(rows_.size());
    if (auto c = ring_.characteristic(); c != 0)
      for (auto& v : r) v = mod_reduce(v, c);
    rows_.push_back(std::move(r));
  }
  return rows_[n];
}

Element ElementArith::binomial_scale(std::size_t n, std::size_t k, const Element& x) const {
  if (k == 0 || k == n) return x;
  const BigInt& w = row(n)[k];
  if (w == 1) return x;
  return ring_.scale(w, x);
}

const std::vector<std::uint64_t>& TableArith::row(std::size_t n) const {
  const std::uint64_t c = t_.characteristic;
  while (rows_.size() <= n) {
    std::size_t m = rows_.size();
    std::vector<std::uint64_t> r(m + 1, 1 % c);
    for (std::size_t k = 1; k < m; ++k) r[k] = (rows_[m - 1][k - 1] + rows_[m - 1][k]) % c;
    rows_.push_back(std::move(r));
  }
  return rows_[n];
}

std::uint32_t TableArith::binomial_scale(std::size_t n, std::size_t k, std::uint32_t x) const {
  if (k == 0 || k == n) return x;
  return t_.scale(row(n)[k], x);
}

// --- value types ------------------------------------------------------------

namespace {

void trim(const Ring& ring, std::vector<Element>& c) {
  while (!c.empty() && ring.is_zero(c.back())) c.pop_back();
}

void require_same(const RingPtr& a, const RingPtr& b) {
  if (a && b && a->id() != b->id()) throw RingMismatch("polynomials over different rings");
}

RingPtr pick(const RingPtr& a, const RingPtr& b) { return a ? a : b; }

}  // namespace

template <ProductKind K>
BasicPoly<K>::BasicPoly(RingPtr ring, std::vector<Element> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) ring_->check(c);
  trim(*ring_, coeffs_);
}

template <ProductKind K>
Element BasicPoly<K>::coeff(std::size_t n) const {
  if (n < coeffs_.size()) return coeffs_[n];
  return ring_->zero();
}

template class BasicPoly<ProductKind::hurwitz>;
template class BasicPoly<ProductKind::ordinary>;

HurwitzJet::HurwitzJet(RingPtr ring, std::size_t order, std::vector<Element> coeffs)
    : ring_(std::move(ring)), order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order_ + 1)
    throw DomainError("jet has more coefficients than its order allows");
  for (const auto& c : coeffs_) ring_->check(c);
  coeffs_.resize(order_ + 1, ring_->zero());
}

bool HurwitzJet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Element& c) { return ring_->is_zero(c); });
}

bool HurwitzJet::is_constant() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [&](const Element& c) { return ring_->is_zero(c); });
}

HurwitzJet HurwitzJet::identity(RingPtr ring, std::size_t order) {
  std::vector<Element> c{ring->one()};
  return HurwitzJet(ring, order, std::move(c));
}

// --- products ---------------------------------------------------------------

HurwitzPoly hpoly_mul(const HurwitzPoly& f, const HurwitzPoly& g) {
  require_same(f.ring(), g.ring());
  RingPtr r = pick(f.ring(), g.ring());
  if (!r || f.is_zero() || g.is_zero()) return HurwitzPoly(r ? r : nullptr, {});
  ElementArith ar(*r);
  return HurwitzPoly(r, hurwitz_product(ar, std::span<const Element>(f.coeffs()),
                                        std::span<const Element>(g.coeffs())));
}

template <class P>
static P poly_add(const P& f, const P& g) {
  require_same(f.ring(), g.ring());
  RingPtr r = pick(f.ring(), g.ring());
  std::vector<Element> c(std::max(f.coeffs().size(), g.coeffs().size()), r->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r->add(f.coeff(i), g.coeff(i));
  return P(r, std::move(c));
}

HurwitzPoly hpoly_add(const HurwitzPoly& f, const HurwitzPoly& g) { return poly_add(f, g); }

HurwitzPoly hpoly_neg(const HurwitzPoly& f) {
  std::vector<Element> c;
  for (const auto& x : f.coeffs()) c.push_back(f.ring()->neg(x));
  return HurwitzPoly(f.ring(), std::move(c));
}

HurwitzPoly hpoly_scale_left(const Element& c, const HurwitzPoly& f) {
  std::vector<Element> out;
  for (const auto& x : f.coeffs()) out.push_back(f.ring()->mul(c, x));
  return HurwitzPoly(f.ring(), std::move(out));
}

OrdinaryPoly opoly_mul(const OrdinaryPoly& f, const OrdinaryPoly& g) {
  require_same(f.ring(), g.ring());
  RingPtr r = pick(f.ring(), g.ring());
  if (!r || f.is_zero() || g.is_zero()) return OrdinaryPoly(r, {});
  ElementArith ar(*r);
  return OrdinaryPoly(r, ordinary_product(ar, std::span<const Element>(f.coeffs()),
                                          std::span<const Element>(g.coeffs())));
}

OrdinaryPoly opoly_add(const OrdinaryPoly& f, const OrdinaryPoly& g) { return poly_add(f, g); }

HurwitzJet jet_mul(const HurwitzJet& f, const HurwitzJet& g) {
  require_same(f.ring(), g.ring());
  if (f.order() != g.order()) throw DomainError("jet orders differ; truncate explicitly");
  ElementArith ar(*f.ring());
  auto c = hurwitz_product(ar, std::span<const Element>(f.coeffs()),
                           std::span<const Element>(g.coeffs()), f.order() + 1);
  return HurwitzJet(f.ring(), f.order(), std::move(c));
}

HurwitzJet jet_add(const HurwitzJet& f, const HurwitzJet& g) {
  require_same(f.ring(), g.ring());
  if (f.order() != g.order()) throw DomainError("jet orders differ; truncate explicitly");
  std::vector<Element> c(f.order() + 1);
  for (std::size_t i = 0; i <= f.order(); ++i) c[i] = f.ring()->add(f.coeffs()[i], g.coeffs()[i]);
  return HurwitzJet(f.ring(), f.order(), std::move(c));
}

HurwitzJet truncate(const HurwitzPoly& f, std::size_t order) {
  std::vector<Element> c(f.coeffs().begin(),
                         f.coeffs().begin() + std::min(f.coeffs().size(), order + 1));
  return HurwitzJet(f.ring(), order, std::move(c));
}

HurwitzPoly to_poly(const HurwitzJet& j) { return HurwitzPoly(j.ring(), j.coeffs()); }

HurwitzJet geometric_inverse_jet(RingPtr ring, const Element& r, std::size_t order) {
  ring->check(r);
  std::vector<Element> c;
  c.reserve(order + 1);
  BigInt fact = 1;
  Element power = ring->one();
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) {
      fact *= k;
      power = ring->mul(power, r);
    }
    c.push_back(ring->scale(fact, power));
  }
  return HurwitzJet(ring, order, std::move(c));
}

std::vector<HurwitzJet> idempotent_jets(RingPtr ring, std::size_t order) {
  const FiniteTables& t = ring->tables();
  TableArith ar(t);
  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> cur;

  // depth-first over degrees; cur holds e_0 .. e_{n-1}
  auto solve = [&](auto&& self) -> void {
    const std::size_t n = cur.size();
    if (n == order + 1) {
      found.push_back(cur);
      return;
    }
    std::uint32_t middle = t.zero;
    for (std::size_t k = 1; k + 1 <= n && k < n; ++k)
      middle = t.plus(middle, ar.binomial_scale(n, k, t.times(cur[k], cur[n - k])));
    for (std::uint32_t x = 0; x < t.n; ++x) {
      std::uint32_t lhs;
      if (n == 0) {
        lhs = t.times(x, x);
      } else {
        lhs = t.plus(t.plus(t.times(cur[0], x), t.times(x, cur[0])), middle);
      }
      if (lhs != x) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  solve(solve);

  std::vector<HurwitzJet> out;
  out.reserve(found.size());
  for (const auto& f : found) {
    std::vector<Element> c;
    for (auto v : f) c.push_back(ring->at(v));
    out.emplace_back(ring, order, std::move(c));
  }
  return out;
}

// --- nested pairs and packing -----------------------------------------------

NestedPoly nested_hurwitz_mul(RingPtr ring, const NestedPoly& f, const NestedPoly& g) {
  if (f.empty() || g.empty()) return {};
  NestedPoly c(f.size() + g.size() - 1, HurwitzPoly(ring, {}));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      HurwitzPoly p = hpoly_mul(f[i], g[j]);
      BigInt w = binomial(i + j, i);
      std::vector<Element> scaled;
      for (const auto& x : p.coeffs()) scaled.push_back(ring->scale(w, x));
      c[i + j] = hpoly_add(c[i + j], HurwitzPoly(ring, std::move(scaled)));
    }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

bool nested_is_zero(const NestedPoly& f) {
  return std::all_of(f.begin(), f.end(), [](const HurwitzPoly& p) { return p.is_zero(); });
}

PackResult pack_nested(RingPtr ring, const NestedPoly& f, const NestedPoly& g,
                       std::size_t max_degree) {
  const std::size_t len = std::max(f.size(), g.size());
  auto deg = [](const NestedPoly& v, std::size_t i) -> std::size_t {
    if (i >= v.size() || v[i].is_zero()) return 0;
    return static_cast<std::size_t>(v[i].degree());
  };
  PackResult out;
  std::size_t running = 0;
  for (std::size_t n = 0; n < len; ++n) {
    running += deg(f, n) + deg(g, n);
    out.schedule.push_back(running + 1);
  }
  auto place = [&](const NestedPoly& v) {
    std::vector<Element> c;
    for (std::size_t n = 0; n < v.size(); ++n) {
      const std::size_t base = n * out.schedule[n];
      const auto& coeffs = v[n].coeffs();
      if (coeffs.empty()) continue;
      if (base + coeffs.size() - 1 > max_degree)
        throw DomainError("packing schedule exceeds the configured maximum degree");
      if (c.size() < base + coeffs.size()) c.resize(base + coeffs.size(), ring->zero());
      for (std::size_t i = 0; i < coeffs.size(); ++i) c[base + i] = coeffs[i];
    }
    return HurwitzPoly(ring, std::move(c));
  };
  out.f = place(f);
  out.g = place(g);
  return out;
}

// --- coefficient sets and text ----------------------------------------------

ElementSet coefficient_set(const HurwitzPoly& f) {
  ElementSet s(f.coeffs().begin(), f.coeffs().end());
  normalize(s);
  return s;
}

ElementSet coefficient_set(const std::vector<HurwitzPoly>& v) {
  ElementSet s;
  for (const auto& f : v) s.insert(s.end(), f.coeffs().begin(), f.coeffs().end());
  normalize(s);
  return s;
}

std::string to_string(const std::vector<Element>& coeffs, const Ring& ring) {
  if (coeffs.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += ring.str(coeffs[i]);
  }
  return out + ">";
}

std::string to_string(const HurwitzJet& j) { return to_string(j.coeffs(), *j.ring()); }

std::vector<Element> parse_coeffs(const Ring& ring, std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
    std::vector<Element> out;
    std::string inner = s.substr(1, s.size() - 2);
    if (inner.empty()) return out;
    for (const auto& part : split_top_level(inner, ',')) out.push_back(ring.parse(part));
    return out;
  }
  return {ring.parse(s)};
}

HurwitzPoly parse_hpoly(RingPtr ring, std::string_view text) {
  auto c = parse_coeffs(*ring, text);
  return HurwitzPoly(std::move(ring), std::move(c));
}

HurwitzJet parse_jet(RingPtr ring, std::size_t order, std::string_view text) {
  auto c = parse_coeffs(*ring, text);
  if (c.size() > order + 1) throw LiteralError("jet literal longer than order + 1");
  return HurwitzJet(std::move(ring), order, std::move(c));
}

}  // namespace hurwitz
