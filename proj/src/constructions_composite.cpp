#include <algorithm>
#include <functional>
#include <map>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"
#include "internal.hpp"

namespace hurwitz {
namespace detail {

// --- CompositeRing ----------------------------------------------------------

CompositeRing::CompositeRing(std::vector<RingPtr> rings) : rings_(std::move(rings)) {
  constexpr std::uint64_t kMax = std::uint64_t(1) << 62;
  for (const auto& r : rings_) {
    if (!r->is_finite()) finite_ = false;
    if (!r->enumerable()) indexed_ = false;
  }
  if (indexed_) {
    for (const auto& r : rings_) {
      std::uint64_t n = *r->size();
      stride_.push_back(size_);
      if (size_ > kMax / n) {
        indexed_ = false;
        break;
      }
      size_ *= n;
    }
  }
  if (indexed_) set_index_payload();
}

std::uint64_t CompositeRing::characteristic() const {
  std::uint64_t c = 1;
  for (const auto& r : rings_) c = lcm_char(c, r->characteristic());
  return c;
}

std::optional<std::uint64_t> CompositeRing::size() const {
  if (!indexed_) return std::nullopt;
  return size_;
}

bool CompositeRing::samplable() const {
  return std::all_of(rings_.begin(), rings_.end(), [](const RingPtr& r) { return r->samplable(); });
}

CompositeRing::Parts CompositeRing::decode(const Payload& p) const {
  Parts parts;
  parts.reserve(rings_.size());
  if (indexed_) {
    std::uint64_t idx = std::uint64_t(p[0]);
    for (const auto& r : rings_) {
      std::uint64_t n = *r->size();
      parts.push_back(r->at(idx % n));
      idx /= n;
    }
    return parts;
  }
  std::size_t pos = 0;
  for (const auto& r : rings_) {
    std::size_t len = std::size_t(p[pos++]);
    Payload sub(p.begin() + pos, p.begin() + pos + len);
    pos += len;
    parts.push_back(r->make(std::move(sub)));
  }
  return parts;
}

Payload CompositeRing::encode(const Parts& parts) const {
  if (parts.size() != rings_.size()) throw InternalError("composite arity mismatch");
  if (indexed_) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < rings_.size(); ++i) idx += rings_[i]->index_of(parts[i]) * stride_[i];
    return {std::int64_t(idx)};
  }
  Payload p;
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    rings_[i]->check(parts[i]);
    p.push_back(std::int64_t(parts[i].data().size()));
    p.insert(p.end(), parts[i].data().begin(), parts[i].data().end());
  }
  return p;
}

CompositeRing::Parts CompositeRing::decompose(const Element& x) const {
  check(x);
  return decode(x.data());
}

Element CompositeRing::compose(const Parts& parts) const { return make(encode(parts)); }

CompositeRing::Parts CompositeRing::zero_parts() const {
  Parts p;
  for (const auto& r : rings_) p.push_back(r->zero());
  return p;
}

CompositeRing::Parts CompositeRing::add_parts(const Parts& a, const Parts& b) const {
  Parts p;
  for (std::size_t i = 0; i < rings_.size(); ++i) p.push_back(rings_[i]->add(a[i], b[i]));
  return p;
}

CompositeRing::Parts CompositeRing::neg_parts(const Parts& a) const {
  Parts p;
  for (std::size_t i = 0; i < rings_.size(); ++i) p.push_back(rings_[i]->neg(a[i]));
  return p;
}

const std::vector<const FiniteTables*>* CompositeRing::digit_tables() const {
  if (!indexed_) return nullptr;
  std::call_once(digit_once_, [this] {
    std::vector<const FiniteTables*> t;
    for (const auto& r : rings_) {
      if (*r->size() > kAutoTableLimit) return;
      t.push_back(&r->tables());
    }
    digit_tables_ = std::move(t);
  });
  return digit_tables_.size() == rings_.size() ? &digit_tables_ : nullptr;
}

CompositeRing::Digits CompositeRing::digits(std::int64_t index) const {
  Digits d(rings_.size());
  auto idx = std::uint64_t(index);
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    const std::uint64_t n = digit_tables_[i]->n;
    d[i] = std::uint32_t(idx % n);
    idx /= n;
  }
  return d;
}

std::int64_t CompositeRing::undigits(const Digits& d) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < rings_.size(); ++i) idx += d[i] * stride_[i];
  return std::int64_t(idx);
}

Payload CompositeRing::do_add(const Payload& a, const Payload& b) const {
  if (auto* t = digit_tables()) {
    auto x = digits(a[0]), y = digits(b[0]);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (*t)[i]->plus(x[i], y[i]);
    return {undigits(x)};
  }
  return encode(add_parts(decode(a), decode(b)));
}

Payload CompositeRing::do_neg(const Payload& a) const {
  if (auto* t = digit_tables()) {
    auto x = digits(a[0]);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (*t)[i]->neg[x[i]];
    return {undigits(x)};
  }
  return encode(neg_parts(decode(a)));
}

Payload CompositeRing::do_sample(std::mt19937_64& gen) const {
  Parts p;
  for (const auto& r : rings_) p.push_back(r->sample(gen));
  return encode(p);
}

}  // namespace detail

namespace {

using detail::CompositeRing;
using Parts = CompositeRing::Parts;

std::vector<RingPtr> repeat(const RingPtr& r, std::size_t n) { return std::vector<RingPtr>(n, r); }

// --- direct products --------------------------------------------------------

class ProductRing final : public CompositeRing {
 public:
  explicit ProductRing(std::vector<RingPtr> f) : CompositeRing(std::move(f)) {}

  std::string spec() const override {
    std::string s = "Prod(";
    for (std::size_t i = 0; i < rings_.size(); ++i) s += (i ? "," : "") + rings_[i]->spec();
    return s + ")";
  }

 protected:
  Payload do_mul(const Payload& a, const Payload& b) const override {
    if (auto* t = digit_tables()) {
      auto x = digits(a[0]), y = digits(b[0]);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (*t)[i]->times(x[i], y[i]);
      return {undigits(x)};
    }
    return CompositeRing::do_mul(a, b);
  }
  Parts one_parts() const override {
    Parts p;
    for (const auto& r : rings_) p.push_back(r->one());
    return p;
  }
  Parts mul_parts(const Parts& a, const Parts& b) const override {
    Parts p;
    for (std::size_t i = 0; i < rings_.size(); ++i) p.push_back(rings_[i]->mul(a[i], b[i]));
    return p;
  }
  std::string format_parts(const Parts& a) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + rings_[i]->str(a[i]);
    return s + ")";
  }
  Parts parse_parts(std::string_view text) const override {
    auto items = split_top_level(detail::unwrap(text, '(', ')'), ',');
    if (items.size() != rings_.size()) throw LiteralError("product literal has wrong arity");
    Parts p;
    for (std::size_t i = 0; i < items.size(); ++i) p.push_back(rings_[i]->parse(items[i]));
    return p;
  }
};

// --- full and triangular matrices -------------------------------------------

class MatrixRing final : public CompositeRing {
 public:
  MatrixRing(RingPtr base, std::size_t k, bool upper)
      : CompositeRing(repeat(base, upper ? k * (k + 1) / 2 : k * k)),
        base_(std::move(base)),
        k_(k),
        upper_(upper) {
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        slot_.push_back(!upper_ ? long(i * k_ + j) : (j >= i ? long(slots_before(i) + (j - i)) : -1));
  }

  std::string spec() const override {
    return std::string(upper_ ? "UT(" : "Mat(") + base_->spec() + "," + std::to_string(k_) + ")";
  }

 protected:
  Parts one_parts() const override {
    Parts p = zero_parts();
    for (std::size_t i = 0; i < k_; ++i) p[slot(i, i)] = base_->one();
    return p;
  }
  Parts mul_parts(const Parts& a, const Parts& b) const override {
    Parts p = zero_parts();
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        if (upper_ && j < i) continue;
        Element acc = base_->zero();
        for (std::size_t l = 0; l < k_; ++l) {
          if (upper_ && (l < i || j < l)) continue;
          acc = base_->add(acc, base_->mul(a[slot(i, l)], b[slot(l, j)]));
        }
        p[slot(i, j)] = acc;
      }
    return p;
  }
  std::string format_parts(const Parts& a) const override {
    std::vector<std::vector<std::string>> rows(k_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        rows[i].push_back(slot_[i * k_ + j] < 0 ? base_->str(base_->zero()) : base_->str(a[slot(i, j)]));
    return detail::format_matrix(rows);
  }
  Parts parse_parts(std::string_view text) const override {
    auto cells = detail::parse_matrix(text, k_);
    Parts p = zero_parts();
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        Element v = base_->parse(cells[i][j]);
        if (slot_[i * k_ + j] < 0) {
          if (!base_->is_zero(v)) throw LiteralError("nonzero entry below the diagonal");
          continue;
        }
        p[slot(i, j)] = v;
      }
    return p;
  }

 private:
  std::size_t slots_before(std::size_t row) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < row; ++r) n += k_ - r;
    return n;
  }
  std::size_t slot(std::size_t i, std::size_t j) const { return std::size_t(slot_[i * k_ + j]); }

  RingPtr base_;
  std::size_t k_;
  bool upper_;
  std::vector<long> slot_;
};

// --- constant-diagonal triangular matrices ----------------------------------

class ConstDiagRing final : public CompositeRing {
 public:
  ConstDiagRing(RingPtr base, RingPtr quotient, std::vector<Element> gens, std::size_t k)
      : CompositeRing(with_quotient(base, quotient, k)),
        base_(std::move(base)),
        quot_(std::move(quotient)),
        gens_(std::move(gens)),
        k_(k) {
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = i + 1; j < k_; ++j) pos_[{i, j}] = 1 + pos_.size();
  }

  std::string spec() const override {
    std::string s = "UTc(" + base_->spec() + ",[";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + base_->str(gens_[i]);
    return s + "]," + std::to_string(k_) + ")";
  }

 protected:
  Parts one_parts() const override {
    Parts p = zero_parts();
    p[0] = base_->one();
    return p;
  }
  Parts mul_parts(const Parts& a, const Parts& b) const override {
    Parts p = zero_parts();
    p[0] = base_->mul(a[0], b[0]);
    Element pa = quotient_map(*quot_, a[0]);
    Element pb = quotient_map(*quot_, b[0]);
    for (const auto& [ij, slot] : pos_) {
      auto [i, j] = ij;
      Element acc = quot_->add(quot_->mul(pa, b[slot]), quot_->mul(a[slot], pb));
      for (std::size_t l = i + 1; l < j; ++l)
        acc = quot_->add(acc, quot_->mul(a[pos_.at({i, l})], b[pos_.at({l, j})]));
      p[slot] = acc;
    }
    return p;
  }
  std::string format_parts(const Parts& a) const override {
    std::vector<std::vector<std::string>> rows(k_, std::vector<std::string>(k_, base_->str(base_->zero())));
    for (std::size_t i = 0; i < k_; ++i) rows[i][i] = base_->str(a[0]);
    for (const auto& [ij, slot] : pos_) rows[ij.first][ij.second] = quot_->str(a[slot]);
    return detail::format_matrix(rows);
  }
  Parts parse_parts(std::string_view text) const override {
    auto cells = detail::parse_matrix(text, k_);
    Parts p = zero_parts();
    p[0] = base_->parse(cells[0][0]);
    for (std::size_t i = 0; i < k_; ++i) {
      if (base_->parse(cells[i][i]) != p[0]) throw LiteralError("diagonal entries must agree");
      for (std::size_t j = 0; j < i; ++j)
        if (!base_->is_zero(base_->parse(cells[i][j])))
          throw LiteralError("nonzero entry below the diagonal");
    }
    for (const auto& [ij, slot] : pos_) p[slot] = quot_->parse(cells[ij.first][ij.second]);
    return p;
  }

 private:
  static std::vector<RingPtr> with_quotient(const RingPtr& base, const RingPtr& q, std::size_t k) {
    std::vector<RingPtr> r{base};
    for (std::size_t i = 0; i < k * (k - 1) / 2; ++i) r.push_back(q);
    return r;
  }

  RingPtr base_;
  RingPtr quot_;
  std::vector<Element> gens_;
  std::size_t k_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos_;
};

// --- pair extensions: T(R,R), T(S,S/I), K(+)_h K ----------------------------

class PairExtension final : public CompositeRing {
 public:
  using Action = std::function<Element(const Element&)>;

  PairExtension(RingPtr base, RingPtr module, Action left, Action right, bool twisted,
                std::string spec)
      : CompositeRing({base, module}),
        base_(std::move(base)),
        module_(std::move(module)),
        left_(std::move(left)),
        right_(std::move(right)),
        twisted_(twisted),
        spec_(std::move(spec)) {}

  std::string spec() const override { return spec_; }

 protected:
  Parts one_parts() const override { return {base_->one(), module_->zero()}; }
  Parts mul_parts(const Parts& a, const Parts& b) const override {
    Element first = base_->mul(a[0], b[0]);
    Element second = twisted_
                         // h(a) n + b m
                         ? module_->add(module_->mul(left_(a[0]), b[1]), module_->mul(right_(b[0]), a[1]))
                         // a n + m b
                         : module_->add(module_->mul(left_(a[0]), b[1]), module_->mul(a[1], right_(b[0])));
    return {first, second};
  }
  std::string format_parts(const Parts& a) const override {
    return "(" + base_->str(a[0]) + "|" + module_->str(a[1]) + ")";
  }
  Parts parse_parts(std::string_view text) const override {
    auto items = split_top_level(detail::unwrap(text, '(', ')'), '|');
    if (items.size() != 2) throw LiteralError("pair literal must look like (a|m)");
    return {base_->parse(items[0]), module_->parse(items[1])};
  }

 private:
  RingPtr base_;
  RingPtr module_;
  Action left_;
  Action right_;
  bool twisted_;
  std::string spec_;
};

// --- commutative monomial quotients -----------------------------------------

class CommMonomialRing final : public CompositeRing {
 public:
  using Monomial = std::vector<unsigned>;

  CommMonomialRing(RingPtr field, std::vector<std::pair<std::string, unsigned>> caps,
                   std::vector<Monomial> basis)
      : CompositeRing(repeat(field, basis.size())),
        field_(std::move(field)),
        caps_(std::move(caps)),
        basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  std::string spec() const override {
    std::string s = "CommQ(" + field_->spec() + ",{";
    for (std::size_t i = 0; i < caps_.size(); ++i)
      s += (i ? "," : "") + caps_[i].first + ":" + std::to_string(caps_[i].second);
    return s + "})";
  }

 protected:
  Parts one_parts() const override {
    Parts p = zero_parts();
    p[0] = field_->one();
    return p;
  }
  Parts mul_parts(const Parts& a, const Parts& b) const override {
    Parts p = zero_parts();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (field_->is_zero(a[i])) continue;
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (field_->is_zero(b[j])) continue;
        Monomial m(caps_.size());
        bool dead = false;
        for (std::size_t v = 0; v < caps_.size(); ++v) {
          m[v] = basis_[i][v] + basis_[j][v];
          if (m[v] >= caps_[v].second) dead = true;
        }
        if (dead) continue;
        std::size_t k = index_.at(m);
        p[k] = field_->add(p[k], field_->mul(a[i], b[j]));
      }
    }
    return p;
  }
  std::string format_parts(const Parts& a) const override {
    std::string s;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (field_->is_zero(a[i])) continue;
      if (!s.empty()) s += '+';
      s += detail::coefficient_text(field_->str(a[i]));
      for (std::size_t v = 0; v < caps_.size(); ++v) {
        if (basis_[i][v] == 0) continue;
        s += "*" + caps_[v].first;
        if (basis_[i][v] > 1) s += "^" + std::to_string(basis_[i][v]);
      }
    }
    return s.empty() ? "0" : s;
  }
  Parts parse_parts(std::string_view text) const override {
    auto terms = detail::parse_terms(text);
    if (!terms) throw LiteralError("malformed element of " + spec() + ": '" + std::string(text) + "'");
    Parts p = zero_parts();
    for (const auto& t : *terms) {
      Element c = field_->one();
      for (const auto& cs : t.coefficients) c = field_->mul(c, field_->parse(cs));
      if (t.negative) c = field_->neg(c);
      Monomial m(caps_.size(), 0);
      for (const auto& [name, e] : t.factors) {
        auto it = std::find_if(caps_.begin(), caps_.end(), [&](const auto& cv) { return cv.first == name; });
        if (it == caps_.end()) throw LiteralError("unknown variable '" + name + "'");
        m[std::size_t(it - caps_.begin())] += e;
      }
      bool dead = false;
      for (std::size_t v = 0; v < caps_.size(); ++v)
        if (m[v] >= caps_[v].second) dead = true;
      if (dead) continue;
      std::size_t k = index_.at(m);
      p[k] = field_->add(p[k], c);
    }
    return p;
  }

 private:
  RingPtr field_;
  std::vector<std::pair<std::string, unsigned>> caps_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// --- quaternions mod n ------------------------------------------------------

class QuaternionRing final : public CompositeRing {
 public:
  QuaternionRing(RingPtr base, std::uint64_t n) : CompositeRing(repeat(base, 4)), base_(std::move(base)), n_(n) {}

  std::string spec() const override { return "Quat(" + std::to_string(n_) + ")"; }

 protected:
  Parts one_parts() const override {
    Parts p = zero_parts();
    p[0] = base_->one();
    return p;
  }
  Parts mul_parts(const Parts& x, const Parts& y) const override {
    const Ring& R = *base_;
    auto m = [&](std::size_t i, std::size_t j) { return R.mul(x[i], y[j]); };
    auto sum = [&](std::initializer_list<std::pair<int, Element>> terms) {
      Element acc = R.zero();
      for (const auto& [s, v] : terms) acc = s > 0 ? R.add(acc, v) : R.sub(acc, v);
      return acc;
    };
    return {sum({{1, m(0, 0)}, {-1, m(1, 1)}, {-1, m(2, 2)}, {-1, m(3, 3)}}),
            sum({{1, m(0, 1)}, {1, m(1, 0)}, {1, m(2, 3)}, {-1, m(3, 2)}}),
            sum({{1, m(0, 2)}, {-1, m(1, 3)}, {1, m(2, 0)}, {1, m(3, 1)}}),
            sum({{1, m(0, 3)}, {1, m(1, 2)}, {-1, m(2, 1)}, {1, m(3, 0)}})};
  }
  std::string format_parts(const Parts& a) const override {
    static const char* units[] = {"", "i", "j", "k"};
    std::string s;
    for (std::size_t u = 0; u < 4; ++u) {
      if (base_->is_zero(a[u])) continue;
      if (!s.empty()) s += '+';
      s += base_->str(a[u]);
      if (u) s += std::string("*") + units[u];
    }
    return s.empty() ? "0" : s;
  }
  Parts parse_parts(std::string_view text) const override {
    auto terms = detail::parse_terms(text);
    if (!terms) throw LiteralError("malformed quaternion '" + std::string(text) + "'");
    Parts p = zero_parts();
    for (const auto& t : *terms) {
      Element c = base_->one();
      for (const auto& cs : t.coefficients) c = base_->mul(c, base_->parse(cs));
      if (t.negative) c = base_->neg(c);
      if (t.factors.size() > 1 || (t.factors.size() == 1 && t.factors[0].second != 1))
        throw LiteralError("quaternion terms are c, c*i, c*j or c*k");
      std::size_t u = 0;
      if (!t.factors.empty()) {
        const auto& name = t.factors[0].first;
        if (name == "i") u = 1;
        else if (name == "j") u = 2;
        else if (name == "k") u = 3;
        else throw LiteralError("unknown quaternion unit '" + name + "'");
      }
      p[u] = base_->add(p[u], c);
    }
    return p;
  }

 private:
  RingPtr base_;
  std::uint64_t n_;
};

// --- Hurwitz jets -----------------------------------------------------------

class HurwitzJetRing final : public CompositeRing {
 public:
  HurwitzJetRing(RingPtr base, std::size_t order)
      : CompositeRing(repeat(base, order + 1)), base_(std::move(base)), order_(order) {}

  std::string spec() const override { return "HJet(" + base_->spec() + "," + std::to_string(order_) + ")"; }

 protected:
  Parts one_parts() const override {
    Parts p = zero_parts();
    p[0] = base_->one();
    return p;
  }
  Parts mul_parts(const Parts& a, const Parts& b) const override {
    HurwitzJet prod = jet_mul(HurwitzJet(base_, order_, a), HurwitzJet(base_, order_, b));
    return prod.coeffs();
  }
  std::string format_parts(const Parts& a) const override {
    std::string s = "<";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + base_->str(a[i]);
    return s + ">";
  }
  Parts parse_parts(std::string_view text) const override {
    auto items = split_top_level(detail::unwrap(text, '<', '>'), ',');
    if (items.size() > order_ + 1) throw LiteralError("jet literal longer than order + 1");
    Parts p = zero_parts();
    for (std::size_t i = 0; i < items.size(); ++i) p[i] = base_->parse(items[i]);
    return p;
  }

 private:
  RingPtr base_;
  std::size_t order_;
};

}  // namespace

// --- factories --------------------------------------------------------------

RingPtr make_product(std::vector<RingPtr> factors) {
  if (factors.empty()) throw InvalidConstruction("Prod needs at least one factor");
  return std::make_shared<ProductRing>(std::move(factors));
}

RingPtr make_matrix_full(RingPtr base, std::size_t k) {
  if (k < 1) throw InvalidConstruction("Mat needs k >= 1");
  return std::make_shared<MatrixRing>(std::move(base), k, false);
}

RingPtr make_upper_triangular(RingPtr base, std::size_t k) {
  if (k < 1) throw InvalidConstruction("UT needs k >= 1");
  return std::make_shared<MatrixRing>(std::move(base), k, true);
}

RingPtr make_const_diag_ut(RingPtr base, std::vector<Element> ideal_gens, std::size_t k) {
  if (k < 2) throw InvalidConstruction("UTc needs k >= 2");
  if (!base->enumerable()) throw CapabilityMissing("UTc needs a finite enumerable base ring");
  RingPtr q = make_quotient_by(base, ideal_gens);
  return std::make_shared<ConstDiagRing>(std::move(base), std::move(q), std::move(ideal_gens), k);
}

RingPtr make_trivial_extension(RingPtr base) {
  auto id = [](const Element& x) { return x; };
  std::string spec = "Triv(" + base->spec() + ")";
  return std::make_shared<PairExtension>(base, base, id, id, false, std::move(spec));
}

RingPtr make_trivial_extension_quotient(RingPtr base, std::vector<Element> ideal_gens) {
  if (!base->enumerable()) throw CapabilityMissing("TrivQ needs a finite enumerable base ring");
  RingPtr q = make_quotient_by(base, ideal_gens);
  auto pi = [q](const Element& x) { return quotient_map(*q, x); };
  std::string spec = "TrivQ(" + base->spec() + ",[";
  for (std::size_t i = 0; i < ideal_gens.size(); ++i) spec += (i ? "," : "") + base->str(ideal_gens[i]);
  spec += "])";
  return std::make_shared<PairExtension>(base, q, pi, pi, false, std::move(spec));
}

Endomorphism Endomorphism::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s == "id") return {Kind::identity, ""};
  if (s == "frob") return {Kind::frobenius, ""};
  if (s.rfind("t->", 0) == 0 && s.size() > 3) return {Kind::generator_image, s.substr(3)};
  throw LiteralError("endomorphism must be id, frob or t->IMAGE, got '" + s + "'");
}

std::string Endomorphism::str() const {
  switch (kind) {
    case Kind::identity: return "id";
    case Kind::frobenius: return "frob";
    case Kind::generator_image: return "t->" + image;
  }
  return "id";
}

RingPtr make_twisted_extension(RingPtr field, const Endomorphism& h) {
  if (!field->enumerable()) throw CapabilityMissing("Twist needs a finite field");
  const std::uint64_t p = field->characteristic();
  std::function<Element(const Element&)> map;
  switch (h.kind) {
    case Endomorphism::Kind::identity:
      map = [](const Element& x) { return x; };
      break;
    case Endomorphism::Kind::frobenius:
      map = [field, p](const Element& x) { return field->pow(x, p); };
      break;
    case Endomorphism::Kind::generator_image: {
      Element gen;
      try {
        gen = field->parse("t");
      } catch (const Error&) {
        throw InvalidConstruction("field " + field->spec() + " has no generator t");
      }
      Element image = field->parse(h.image);
      // h(sum c_i t^i) = sum c_i h(t)^i, tabulated over the enumeration
      std::map<Element, Element> table;
      for (const auto& x : field->elements()) {
        auto coeffs = detail::parse_poly_t(field->str(x), p);
        Element acc = field->zero();
        for (std::size_t i = 0; i < coeffs->size(); ++i)
          acc = field->add(acc, field->scale(BigInt((*coeffs)[i]), field->pow(image, i)));
        table[x] = acc;
      }
      map = [table](const Element& x) { return table.at(x); };
      break;
    }
  }
  // exhaustive validation: h(1) = 1, additive, multiplicative
  auto elems = field->elements();
  if (map(field->one()) != field->one()) throw InvalidConstruction("endomorphism does not fix 1");
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (map(field->add(x, y)) != field->add(map(x), map(y)))
        throw InvalidConstruction("endomorphism is not additive");
      if (map(field->mul(x, y)) != field->mul(map(x), map(y)))
        throw InvalidConstruction("endomorphism is not multiplicative");
    }
  auto id = [](const Element& x) { return x; };
  std::string spec = "Twist(" + field->spec() + "," + h.str() + ")";
  return std::make_shared<PairExtension>(field, field, map, id, true, std::move(spec));
}

RingPtr make_comm_monomial_quotient(RingPtr field, std::vector<std::pair<std::string, unsigned>> caps) {
  if (caps.empty()) throw InvalidConstruction("CommQ needs at least one variable");
  for (const auto& [name, cap] : caps) {
    if (cap < 1) throw InvalidConstruction("CommQ exponent caps must be >= 1");
    if (name.empty() || name == "t") throw InvalidConstruction("invalid CommQ variable name '" + name + "'");
  }
  for (std::size_t i = 0; i < caps.size(); ++i)
    for (std::size_t j = i + 1; j < caps.size(); ++j)
      if (caps[i].first == caps[j].first) throw InvalidConstruction("duplicate CommQ variable");
  std::vector<std::vector<unsigned>> basis{{}};
  for (const auto& [name, cap] : caps) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& m : basis)
      for (unsigned e = 0; e < cap; ++e) {
        auto n = m;
        n.push_back(e);
        next.push_back(n);
      }
    basis = std::move(next);
  }
  std::stable_sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a > b;  // x before y within a degree
  });
  return std::make_shared<CommMonomialRing>(std::move(field), std::move(caps), std::move(basis));
}

RingPtr make_quaternion_mod(std::uint64_t n) {
  return std::make_shared<QuaternionRing>(make_zmod(n), n);
}

RingPtr make_hurwitz_truncated(RingPtr base, std::size_t order) {
  return std::make_shared<HurwitzJetRing>(std::move(base), order);
}

}  // namespace hurwitz
