#include <algorithm>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "internal.hpp"

namespace hurwitz {

namespace {

class QuotientRing final : public Ring {
 public:
  QuotientRing(RingPtr base, std::vector<std::uint64_t> coset_of, std::vector<std::uint64_t> reps,
               std::string gens_text)
      : base_(std::move(base)),
        coset_of_(std::move(coset_of)),
        reps_(std::move(reps)),
        gens_text_(std::move(gens_text)) {
    set_index_payload();
    // additive order of the identity coset
    Element one = base_->one();
    Element x = one;
    std::uint64_t m = 1;
    while (coset(x) != coset(base_->zero())) {
      x = base_->add(x, one);
      ++m;
    }
    char_ = m;
  }

  std::string spec() const override { return "Quot(" + base_->spec() + "," + gens_text_ + ")"; }
  std::uint64_t characteristic() const override { return char_; }
  std::optional<std::uint64_t> size() const override { return reps_.size(); }

  const RingPtr& base() const { return base_; }
  std::uint64_t coset(const Element& x) const { return coset_of_[base_->index_of(x)]; }
  Element rep(std::uint64_t c) const { return base_->at(reps_[c]); }

 protected:
  Payload do_zero() const override { return {std::int64_t(coset(base_->zero()))}; }
  Payload do_one() const override { return {std::int64_t(coset(base_->one()))}; }
  Payload do_add(const Payload& a, const Payload& b) const override {
    return {std::int64_t(coset(base_->add(rep(a[0]), rep(b[0]))))};
  }
  Payload do_neg(const Payload& a) const override { return {std::int64_t(coset(base_->neg(rep(a[0]))))}; }
  Payload do_mul(const Payload& a, const Payload& b) const override {
    return {std::int64_t(coset(base_->mul(rep(a[0]), rep(b[0]))))};
  }
  std::string do_str(const Payload& a) const override { return base_->str(rep(a[0])); }
  Payload do_parse(std::string_view text) const override { return {std::int64_t(coset(base_->parse(text)))}; }

 private:
  RingPtr base_;
  std::vector<std::uint64_t> coset_of_;
  std::vector<std::uint64_t> reps_;
  std::string gens_text_;
  std::uint64_t char_ = 1;
};

class CornerRing final : public Ring {
 public:
  CornerRing(RingPtr base, Element e) : base_(std::move(base)), e_(std::move(e)) {
    if (base_->enumerable()) {
      std::vector<std::uint64_t> idx;
      for (const auto& x : base_->elements()) idx.push_back(base_->index_of(project(x)));
      std::sort(idx.begin(), idx.end());
      idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
      members_ = std::move(idx);
      set_index_payload();
    }
    // additive order of e
    Element x = e_;
    std::uint64_t m = 1;
    const std::uint64_t cap = members_ ? members_->size() : 100000;
    while (!base_->is_zero(x) && m <= cap) {
      x = base_->add(x, e_);
      ++m;
    }
    char_ = base_->is_zero(x) ? m : 0;
  }

  std::string spec() const override { return "Corner(" + base_->spec() + "," + base_->str(e_) + ")"; }
  std::uint64_t characteristic() const override { return char_; }
  std::optional<std::uint64_t> size() const override {
    if (!members_) return std::nullopt;
    return members_->size();
  }
  bool samplable() const override { return base_->samplable(); }

  std::vector<Element> small_elements(std::size_t limit) const override {
    if (members_) return Ring::small_elements(limit);
    std::vector<Element> out;
    for (const auto& x : base_->small_elements(limit)) {
      Element y = project(x);
      if (base_->is_zero(y)) continue;
      Element z = lift(y);
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    }
    return out;
  }

 protected:
  Payload do_zero() const override { return wrap(base_->zero()); }
  Payload do_one() const override { return wrap(e_); }
  Payload do_add(const Payload& a, const Payload& b) const override { return wrap(base_->add(unwrap(a), unwrap(b))); }
  Payload do_neg(const Payload& a) const override { return wrap(base_->neg(unwrap(a))); }
  Payload do_mul(const Payload& a, const Payload& b) const override { return wrap(base_->mul(unwrap(a), unwrap(b))); }
  std::string do_str(const Payload& a) const override { return base_->str(unwrap(a)); }
  Payload do_parse(std::string_view text) const override {
    Element x = base_->parse(text);
    if (project(x) != x) throw LiteralError("'" + std::string(text) + "' is not in the corner ring");
    return wrap(x);
  }
  Payload do_sample(std::mt19937_64& gen) const override {
    if (members_) return Ring::do_sample(gen);
    return wrap(project(base_->sample(gen)));
  }

 private:
  Element project(const Element& x) const { return base_->mul(base_->mul(e_, x), e_); }
  Element lift(const Element& y) const { return make(wrap(y)); }
  Payload wrap(const Element& x) const {
    if (!members_) return x.data();
    auto i = base_->index_of(x);
    auto it = std::lower_bound(members_->begin(), members_->end(), i);
    if (it == members_->end() || *it != i) throw InternalError("corner element escaped eRe");
    return {std::int64_t(it - members_->begin())};
  }
  Element unwrap(const Payload& p) const {
    if (!members_) return base_->make(p);
    return base_->at((*members_)[std::size_t(p[0])]);
  }

  RingPtr base_;
  Element e_;
  std::optional<std::vector<std::uint64_t>> members_;
  std::uint64_t char_ = 0;
};

std::string gens_literal(const Ring& base, const std::vector<Element>& gens) {
  std::string s = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + base.str(gens[i]);
  return s + "]";
}

RingPtr build_quotient(RingPtr base, const std::vector<std::uint64_t>& ideal, std::string gens_text) {
  const auto n = *base->size();
  std::vector<std::uint64_t> coset_of(n, std::uint64_t(-1));
  std::vector<std::uint64_t> reps;
  auto elems = base->elements();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (coset_of[i] != std::uint64_t(-1)) continue;
    const std::uint64_t c = reps.size();
    reps.push_back(i);
    for (auto j : ideal) coset_of[base->index_of(base->add(elems[i], elems[j]))] = c;
  }
  return std::make_shared<QuotientRing>(std::move(base), std::move(coset_of), std::move(reps),
                                        std::move(gens_text));
}

const QuotientRing& as_quotient(const Ring& q) {
  auto* p = dynamic_cast<const QuotientRing*>(&q);
  if (!p) throw RingMismatch("ring " + q.spec() + " is not a quotient ring");
  return *p;
}

}  // namespace

RingPtr make_quotient(RingPtr base, const ElementSet& ideal) {
  if (!base->enumerable()) throw CapabilityMissing("Quot needs a finite enumerable ring");
  std::vector<Element> gens(ideal.begin(), ideal.end());
  auto closed = detail::ideal_closure_indices(*base, gens);
  std::vector<std::uint64_t> given;
  for (const auto& x : ideal) given.push_back(base->index_of(x));
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != closed) throw InvalidIdeal("element set is not a closed two-sided ideal");
  std::string text = gens_literal(*base, gens);
  return build_quotient(std::move(base), closed, std::move(text));
}

RingPtr make_quotient_by(RingPtr base, const std::vector<Element>& gens) {
  if (!base->enumerable()) throw CapabilityMissing("Quot needs a finite enumerable ring");
  for (const auto& g : gens) base->check(g);
  auto closed = detail::ideal_closure_indices(*base, gens);
  std::string text = gens_literal(*base, gens);
  return build_quotient(std::move(base), closed, std::move(text));
}

RingPtr make_corner(RingPtr base, const Element& e) {
  base->check(e);
  if (base->mul(e, e) != e) throw NotIdempotent(base->str(e) + " is not idempotent");
  return std::make_shared<CornerRing>(std::move(base), e);
}

Element quotient_map(const Ring& quotient, const Element& x) {
  const auto& q = as_quotient(quotient);
  q.base()->check(x);
  return q.make({std::int64_t(q.coset(x))});
}

Element quotient_lift(const Ring& quotient, const Element& coset) {
  const auto& q = as_quotient(quotient);
  q.check(coset);
  return q.rep(std::uint64_t(coset.data()[0]));
}

}  // namespace hurwitz
