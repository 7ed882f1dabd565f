#include <algorithm>
#include <map>
#include <unordered_map>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "internal.hpp"

namespace hurwitz {
namespace {

struct Pattern {
  std::string head;
  std::string tail;
  bool wildcard = false;
};

bool contains_pattern(const std::string& w, const Pattern& p) {
  if (!p.wildcard) return w.find(p.head) != std::string::npos;
  auto i = w.find(p.head);
  if (i == std::string::npos) return false;
  // one nonempty gap between head and tail
  auto j = w.find(p.tail, i + p.head.size() + 1);
  return j != std::string::npos;
}

/// Elements are sparse: sorted (word id, coefficient index) pairs with
/// nonzero coefficients. Word 0 is the empty word.
class FreeMonomialRing final : public Ring {
 public:
  FreeMonomialRing(RingPtr field, std::vector<char> gens, std::vector<std::string> patterns,
                   std::size_t max_len, std::vector<std::string> words)
      : field_(std::move(field)),
        gens_(std::move(gens)),
        patterns_(std::move(patterns)),
        max_len_(max_len),
        words_(std::move(words)) {
    for (std::size_t i = 0; i < words_.size(); ++i) id_of_.emplace(words_[i], i);
    const std::uint64_t q = *field_->size();
    std::uint64_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < words_.size() && fits; ++i) {
      if (total > (std::uint64_t(1) << 62) / q) fits = false;
      else total *= q;
    }
    if (fits) size_ = total;
  }

  std::string spec() const override {
    std::string s = "FreeQ(" + field_->spec() + ",[";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::string(1, gens_[i]);
    s += "],[";
    for (std::size_t i = 0; i < patterns_.size(); ++i) s += (i ? "," : "") + patterns_[i];
    return s + "]," + std::to_string(max_len_) + ")";
  }
  std::uint64_t characteristic() const override { return field_->characteristic(); }
  std::optional<std::uint64_t> size() const override { return size_; }
  std::optional<std::size_t> truncation_bound() const override { return max_len_; }

  std::vector<Element> small_elements(std::size_t limit) const override {
    std::vector<Element> out;
    const auto one = std::int64_t(field_->index_of(field_->one()));
    for (std::size_t w = 1; w < words_.size() && out.size() < limit; ++w)
      if (words_[w].size() <= 2) out.push_back(make({std::int64_t(w), one}));
    return out;
  }

 protected:
  Payload do_zero() const override { return {}; }
  Payload do_one() const override { return {0, std::int64_t(field_->index_of(field_->one()))}; }

  Payload do_add(const Payload& a, const Payload& b) const override {
    Terms t = terms(a);
    for (std::size_t k = 0; k + 1 < b.size(); k += 2) accumulate(t, std::size_t(b[k]), coef(b[k + 1]));
    return pack(t);
  }
  Payload do_neg(const Payload& a) const override {
    Payload out;
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) {
      out.push_back(a[k]);
      out.push_back(std::int64_t(field_->index_of(field_->neg(coef(a[k + 1])))));
    }
    return out;
  }
  Payload do_mul(const Payload& a, const Payload& b) const override {
    Terms t;
    for (std::size_t i = 0; i + 1 < a.size(); i += 2)
      for (std::size_t j = 0; j + 1 < b.size(); j += 2) {
        const auto& u = words_[std::size_t(a[i])];
        const auto& v = words_[std::size_t(b[j])];
        if (u.size() + v.size() > max_len_) continue;
        auto it = id_of_.find(u + v);
        if (it == id_of_.end()) continue;
        accumulate(t, it->second, field_->mul(coef(a[i + 1]), coef(b[j + 1])));
      }
    return pack(t);
  }

  std::string do_str(const Payload& a) const override {
    if (a.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) {
      if (!s.empty()) s += '+';
      s += detail::coefficient_text(field_->str(coef(a[k + 1])));
      for (char c : words_[std::size_t(a[k])]) s += std::string("*") + c;
    }
    return s;
  }

  Payload do_parse(std::string_view text) const override {
    auto parsed = detail::parse_terms(text);
    if (!parsed) throw LiteralError("malformed element of " + spec() + ": '" + std::string(text) + "'");
    Terms t;
    for (const auto& term : *parsed) {
      Element c = field_->one();
      for (const auto& cs : term.coefficients) c = field_->mul(c, field_->parse(cs));
      if (term.negative) c = field_->neg(c);
      std::string word;
      for (const auto& [name, e] : term.factors) {
        for (char g : name)
          if (std::find(gens_.begin(), gens_.end(), g) == gens_.end())
            throw LiteralError("unknown generator '" + std::string(1, g) + "'");
        for (unsigned r = 0; r < e; ++r) word += name;
      }
      if (word.size() > max_len_) continue;
      auto it = id_of_.find(word);
      if (it == id_of_.end()) continue;
      accumulate(t, it->second, c);
    }
    return pack(t);
  }

  Payload do_at(std::uint64_t index) const override {
    if (!size_) return Ring::do_at(index);
    const std::uint64_t q = *field_->size();
    Terms t;
    for (std::size_t w = 0; w < words_.size() && index; ++w, index /= q)
      if (index % q) t[w] = field_->at(index % q);
    return pack(t);
  }
  std::uint64_t do_index_of(const Payload& x) const override {
    if (!size_) return Ring::do_index_of(x);
    const std::uint64_t q = *field_->size();
    std::uint64_t idx = 0;
    std::vector<std::uint64_t> digit(words_.size(), 0);
    for (std::size_t k = 0; k + 1 < x.size(); k += 2) digit[std::size_t(x[k])] = std::uint64_t(x[k + 1]);
    for (std::size_t w = words_.size(); w-- > 0;) idx = idx * q + digit[w];
    return idx;
  }

  /// Sparse sample: up to three terms on uniformly chosen basis words.
  Payload do_sample(std::mt19937_64& gen) const override {
    std::uniform_int_distribution<std::size_t> nterms(0, 3);
    std::uniform_int_distribution<std::size_t> word(0, words_.size() - 1);
    std::uniform_int_distribution<std::uint64_t> c(1, *field_->size() - 1);
    Terms t;
    for (std::size_t k = nterms(gen); k > 0; --k) accumulate(t, word(gen), field_->at(c(gen)));
    return pack(t);
  }

 private:
  using Terms = std::map<std::size_t, Element>;

  Element coef(std::int64_t i) const { return field_->at(std::uint64_t(i)); }

  Terms terms(const Payload& a) const {
    Terms t;
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) t[std::size_t(a[k])] = coef(a[k + 1]);
    return t;
  }
  void accumulate(Terms& t, std::size_t w, const Element& c) const {
    auto it = t.find(w);
    if (it == t.end()) t.emplace(w, c);
    else it->second = field_->add(it->second, c);
  }
  Payload pack(const Terms& t) const {
    Payload out;
    for (const auto& [w, c] : t) {
      if (field_->is_zero(c)) continue;
      out.push_back(std::int64_t(w));
      out.push_back(std::int64_t(field_->index_of(c)));
    }
    return out;
  }

  RingPtr field_;
  std::vector<char> gens_;
  std::vector<std::string> patterns_;
  std::size_t max_len_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> id_of_;
  std::optional<std::uint64_t> size_;
};

}  // namespace

RingPtr make_free_monomial_quotient(RingPtr field, std::vector<char> generators,
                                    std::vector<std::string> patterns, std::size_t max_len) {
  if (!field->enumerable()) throw InvalidConstruction("FreeQ needs a finite coefficient field");
  if (max_len < 1) throw InvalidConstruction("FreeQ word-length cap must be >= 1");
  if (generators.empty()) throw InvalidConstruction("FreeQ needs at least one generator");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    char g = generators[i];
    if (!(g >= 'a' && g <= 'z') || g == 't')
      throw InvalidConstruction("FreeQ generators are single lowercase letters other than t");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j] == g) throw InvalidConstruction("duplicate FreeQ generator");
  }
  std::vector<Pattern> compiled;
  for (const auto& p : patterns) {
    Pattern c;
    auto star = p.find('*');
    if (star == std::string::npos) {
      c.head = p;
    } else {
      if (p.find('*', star + 1) != std::string::npos)
        throw InvalidConstruction("pattern '" + p + "' has more than one wildcard");
      c.head = p.substr(0, star);
      c.tail = p.substr(star + 1);
      c.wildcard = true;
    }
    if (c.head.empty() && c.tail.empty()) throw InvalidConstruction("empty pattern");
    for (char ch : c.head + c.tail)
      if (std::find(generators.begin(), generators.end(), ch) == generators.end())
        throw InvalidConstruction("pattern '" + p + "' references unknown generator '" + ch + "'");
    compiled.push_back(c);
  }
  // basis words by length, then lexicographic in generator order
  std::vector<std::string> words{""};
  std::vector<std::string> layer{""};
  constexpr std::size_t kMaxBasis = 200000;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char g : generators) {
        std::string v = w + g;
        bool dead = std::any_of(compiled.begin(), compiled.end(),
                                [&](const Pattern& p) { return contains_pattern(v, p); });
        if (!dead) next.push_back(std::move(v));
      }
    words.insert(words.end(), next.begin(), next.end());
    if (words.size() > kMaxBasis) throw InvalidConstruction("FreeQ basis exceeds 200000 words");
    layer = std::move(next);
  }
  return std::make_shared<FreeMonomialRing>(std::move(field), std::move(generators), std::move(patterns),
                                            max_len, std::move(words));
}

}  // namespace hurwitz
