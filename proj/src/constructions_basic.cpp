#include <algorithm>
#include <cctype>
#include <string>

#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"
#include "internal.hpp"

namespace hurwitz {

// --- Z ----------------------------------------------------------------------

namespace {

Payload encode_big(const BigInt& v) {
  if (v == 0) return {0};
  Payload p;
  p.push_back(v < 0 ? -1 : 1);
  BigInt mag = abs(v);
  std::vector<std::uint64_t> limbs;
  export_bits(mag, std::back_inserter(limbs), 64, false);
  for (auto l : limbs) p.push_back(static_cast<std::int64_t>(l));
  return p;
}

BigInt decode_big(const Payload& p) {
  if (p[0] == 0) return 0;
  std::vector<std::uint64_t> limbs;
  for (std::size_t i = 1; i < p.size(); ++i) limbs.push_back(static_cast<std::uint64_t>(p[i]));
  BigInt mag;
  import_bits(mag, limbs.begin(), limbs.end(), 64, false);
  return p[0] < 0 ? BigInt(-mag) : mag;
}

class IntegerRing final : public Ring {
 public:
  explicit IntegerRing(std::uint64_t bound) : bound_(bound) {}

  std::string spec() const override { return "Z"; }
  std::uint64_t characteristic() const override { return 0; }
  std::optional<std::uint64_t> size() const override { return std::nullopt; }
  bool is_finite() const override { return false; }
  bool enumerable() const override { return false; }

  std::vector<Element> small_elements(std::size_t limit) const override {
    std::vector<Element> out;
    for (std::int64_t v = 1; out.size() < limit; ++v) {
      out.push_back(make(encode_big(v)));
      if (out.size() < limit) out.push_back(make(encode_big(-v)));
    }
    return out;
  }

 protected:
  Payload do_zero() const override { return {0}; }
  Payload do_one() const override { return encode_big(1); }
  Payload do_add(const Payload& a, const Payload& b) const override {
    return encode_big(decode_big(a) + decode_big(b));
  }
  Payload do_neg(const Payload& a) const override { return encode_big(-decode_big(a)); }
  Payload do_mul(const Payload& a, const Payload& b) const override {
    return encode_big(decode_big(a) * decode_big(b));
  }
  Payload do_scale(const BigInt& k, const Payload& x) const override {
    return encode_big(k * decode_big(x));
  }
  std::string do_str(const Payload& a) const override { return decode_big(a).str(); }
  Payload do_parse(std::string_view text) const override {
    auto v = parse_integer(text);
    if (!v) throw LiteralError("not an integer: '" + std::string(text) + "'");
    return encode_big(*v);
  }
  Payload do_sample(std::mt19937_64& gen) const override {
    std::uniform_int_distribution<std::int64_t> d(-std::int64_t(bound_), std::int64_t(bound_));
    return encode_big(d(gen));
  }

 private:
  std::uint64_t bound_;
};

// --- Zn ---------------------------------------------------------------------

class ZmodRing final : public Ring {
 public:
  explicit ZmodRing(std::uint64_t n) : n_(n) { set_index_payload(); }

  std::string spec() const override { return "Zn(" + std::to_string(n_) + ")"; }
  std::uint64_t characteristic() const override { return n_; }
  std::optional<std::uint64_t> size() const override { return n_; }

 protected:
  Payload do_zero() const override { return {0}; }
  Payload do_one() const override { return {1 % std::int64_t(n_)}; }
  Payload do_add(const Payload& a, const Payload& b) const override {
    return {std::int64_t((std::uint64_t(a[0]) + std::uint64_t(b[0])) % n_)};
  }
  Payload do_neg(const Payload& a) const override {
    return {std::int64_t((n_ - std::uint64_t(a[0])) % n_)};
  }
  Payload do_mul(const Payload& a, const Payload& b) const override {
    unsigned __int128 prod = (unsigned __int128)std::uint64_t(a[0]) * std::uint64_t(b[0]);
    return {std::int64_t(std::uint64_t(prod % n_))};
  }
  std::string do_str(const Payload& a) const override { return std::to_string(a[0]); }
  Payload do_parse(std::string_view text) const override {
    auto v = parse_integer(text);
    if (!v) throw LiteralError("not a residue of " + spec() + ": '" + std::string(text) + "'");
    return {std::int64_t(mod_reduce(*v, n_))};
  }

 private:
  std::uint64_t n_;
};

// --- GF(p^k) ----------------------------------------------------------------

class GaloisField final : public Ring {
 public:
  GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus)
      : p_(p), modulus_(std::move(modulus)) {
    degree_ = modulus_.size() - 1;
    size_ = 1;
    for (std::size_t i = 0; i < degree_; ++i) size_ *= p_;
    set_index_payload();
  }

  std::string spec() const override {
    if (degree_ == 1 && modulus_[0] == 0) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "," + detail::format_poly_t(modulus_) + ")";
  }
  std::uint64_t characteristic() const override { return p_; }
  std::optional<std::uint64_t> size() const override { return size_; }

  std::uint64_t prime() const { return p_; }
  std::size_t degree() const { return degree_; }

  std::vector<std::uint64_t> digits(std::uint64_t idx) const {
    std::vector<std::uint64_t> c(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    return c;
  }
  std::uint64_t undigits(const std::vector<std::uint64_t>& c) const {
    std::uint64_t idx = 0;
    for (std::size_t i = degree_; i-- > 0;) idx = idx * p_ + (i < c.size() ? c[i] % p_ : 0);
    return idx;
  }
  /// Reduces an arbitrary polynomial in t (low-to-high) to an element index.
  std::uint64_t reduce(std::vector<std::uint64_t> c) const {
    for (auto& x : c) x %= p_;
    for (std::size_t top = c.size(); top-- > degree_;) {
      std::uint64_t lead = c[top];
      if (lead == 0) continue;
      // modulus is monic
      for (std::size_t i = 0; i <= degree_; ++i) {
        std::size_t pos = top - degree_ + i;
        c[pos] = (c[pos] + (p_ - lead) * modulus_[i]) % p_;
      }
    }
    c.resize(degree_);
    return undigits(c);
  }

 protected:
  Payload do_zero() const override { return {0}; }
  Payload do_one() const override { return {1}; }
  Payload do_add(const Payload& a, const Payload& b) const override {
    auto x = digits(a[0]), y = digits(b[0]);
    for (std::size_t i = 0; i < degree_; ++i) x[i] = (x[i] + y[i]) % p_;
    return {std::int64_t(undigits(x))};
  }
  Payload do_neg(const Payload& a) const override {
    auto x = digits(a[0]);
    for (auto& v : x) v = (p_ - v) % p_;
    return {std::int64_t(undigits(x))};
  }
  Payload do_mul(const Payload& a, const Payload& b) const override {
    auto x = digits(a[0]), y = digits(b[0]);
    std::vector<std::uint64_t> prod(2 * degree_, 0);
    for (std::size_t i = 0; i < degree_; ++i)
      for (std::size_t j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    return {std::int64_t(reduce(prod))};
  }
  std::string do_str(const Payload& a) const override {
    if (degree_ == 1) return std::to_string(a[0]);
    return detail::format_poly_t(digits(a[0]));
  }
  Payload do_parse(std::string_view text) const override {
    auto c = detail::parse_poly_t(text, p_);
    if (!c) throw LiteralError("not an element of " + spec() + ": '" + std::string(text) + "'");
    return {std::int64_t(reduce(*c))};
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> modulus_;
  std::size_t degree_ = 1;
  std::uint64_t size_ = 0;
};

// --- explicit tables --------------------------------------------------------

class TableRing final : public Ring {
 public:
  TableRing(std::uint32_t n, std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
            std::uint32_t one, std::string name)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), one_(one), name_(std::move(name)) {
    if (add_.size() != std::size_t(n) * n || mul_.size() != std::size_t(n) * n || one >= n)
      throw InvalidConstruction("table ring: inconsistent table sizes");
    // additive order of one
    std::uint32_t x = one_;
    char_ = 1;
    while (x != 0 && char_ <= n_) {
      x = add_[std::size_t(x) * n_ + one_];
      ++char_;
    }
    if (x != 0) char_ = 0;
    set_index_payload();
  }

  std::string spec() const override { return name_; }
  std::uint64_t characteristic() const override { return char_; }
  std::optional<std::uint64_t> size() const override { return n_; }

 protected:
  Payload do_zero() const override { return {0}; }
  Payload do_one() const override { return {one_}; }
  Payload do_add(const Payload& a, const Payload& b) const override {
    return {add_[std::size_t(a[0]) * n_ + b[0]]};
  }
  Payload do_neg(const Payload& a) const override {
    for (std::uint32_t y = 0; y < n_; ++y)
      if (add_[std::size_t(a[0]) * n_ + y] == 0) return {y};
    throw InternalError("table ring: element without additive inverse");
  }
  Payload do_mul(const Payload& a, const Payload& b) const override {
    return {mul_[std::size_t(a[0]) * n_ + b[0]]};
  }
  std::string do_str(const Payload& a) const override { return "#" + std::to_string(a[0]); }
  Payload do_parse(std::string_view text) const override {
    std::string s = strip_spaces(text);
    if (!s.empty() && s[0] == '#') s.erase(0, 1);
    auto v = parse_integer(s);
    if (!v || *v < 0 || *v >= n_) throw LiteralError("bad table element '" + s + "'");
    return {v->convert_to<std::int64_t>()};
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> add_, mul_;
  std::uint32_t one_;
  std::string name_;
  std::uint64_t char_ = 0;
};

}  // namespace

// --- polynomial-in-t text ---------------------------------------------------

namespace detail {

std::string format_poly_t(const std::vector<std::uint64_t>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::optional<std::vector<std::uint64_t>> parse_poly_t(std::string_view text, std::uint64_t p) {
  std::string s = strip_spaces(text);
  if (s.empty()) return std::nullopt;
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  auto add_term = [&](BigInt coef, std::size_t exp) {
    if (out.size() <= exp) out.resize(exp + 1, 0);
    out[exp] = (out[exp] + mod_reduce(coef, p)) % p;
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      return std::nullopt;
    }
    first = false;
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) return std::nullopt;
    BigInt coef = 1;
    std::size_t exp = 0;
    auto tpos = term.find('t');
    if (tpos == std::string::npos) {
      auto v = parse_integer(term);
      if (!v) return std::nullopt;
      coef = *v;
    } else {
      std::string cpart = term.substr(0, tpos);
      if (!cpart.empty()) {
        if (cpart.back() != '*') return std::nullopt;
        cpart.pop_back();
        auto v = parse_integer(cpart);
        if (!v) return std::nullopt;
        coef = *v;
      }
      std::string epart = term.substr(tpos + 1);
      if (epart.empty()) {
        exp = 1;
      } else {
        if (epart[0] != '^') return std::nullopt;
        auto v = parse_integer(epart.substr(1));
        if (!v || *v < 0 || *v > 64) return std::nullopt;
        exp = v->convert_to<std::size_t>();
      }
    }
    add_term(sign * coef, exp);
  }
  if (out.empty()) out.push_back(0);
  return out;
}

}  // namespace detail

// --- factories --------------------------------------------------------------

RingPtr make_integers(std::uint64_t sample_bound) {
  return std::make_shared<IntegerRing>(sample_bound);
}

RingPtr make_zmod(std::uint64_t n) {
  if (n < 2) throw InvalidConstruction("Zn requires n >= 2");
  if (n > (std::uint64_t(1) << 62)) throw InvalidConstruction("Zn modulus too large");
  return std::make_shared<ZmodRing>(n);
}

namespace {

// remainder of a by monic b over GF(p), both low-to-high
std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                    std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        std::size_t pos = a.size() - 1 - db + i;
        a[pos] = (a[pos] + (p - lead) * b[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint64_t>& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  // try every monic divisor of degree 1..deg/2
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> f(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[d] = 1;
      auto r = poly_mod(m, f, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 0; })) return false;
    }
  }
  return true;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1u) r = (unsigned __int128)r * b % p;
    b = (unsigned __int128)b * b % p;
    e >>= 1u;
  }
  return r;
}

}  // namespace

RingPtr make_gf(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw InvalidConstruction("GF requires a prime, got " + std::to_string(p));
  if (modulus.empty()) return std::make_shared<GaloisField>(p, std::vector<std::uint64_t>{0, 1});
  for (auto& c : modulus) c %= p;
  while (modulus.size() > 1 && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw InvalidConstruction("GF modulus must have degree >= 1");
  std::uint64_t inv = inv_mod(modulus.back(), p);
  for (auto& c : modulus) c = (unsigned __int128)c * inv % p;
  if (!is_irreducible(modulus, p))
    throw InvalidConstruction("GF modulus " + detail::format_poly_t(modulus) +
                              " is reducible over GF(" + std::to_string(p) + ")");
  std::uint64_t size = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    if (size > (std::uint64_t(1) << 40) / p) throw InvalidConstruction("GF too large");
    size *= p;
  }
  return std::make_shared<GaloisField>(p, std::move(modulus));
}

RingPtr make_gf(std::uint64_t p, std::string_view modulus) {
  if (!is_prime(p)) throw InvalidConstruction("GF requires a prime, got " + std::to_string(p));
  auto c = detail::parse_poly_t(modulus, p);
  if (!c) throw InvalidConstruction("malformed GF modulus '" + std::string(modulus) + "'");
  return make_gf(p, *c);
}

RingPtr make_table_ring(std::uint32_t n, std::vector<std::uint32_t> add,
                        std::vector<std::uint32_t> mul, std::uint32_t one, std::string name) {
  return std::make_shared<TableRing>(n, std::move(add), std::move(mul), one, std::move(name));
}

std::vector<std::uint64_t> crt_decompose(std::uint64_t n) {
  if (n < 2) throw DomainError("crt_decompose requires n >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint64_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool verify_crt_isomorphism(std::uint64_t n) {
  auto source = make_zmod(n);
  auto parts = crt_decompose(n);
  std::vector<RingPtr> factors;
  for (auto q : parts) factors.push_back(make_zmod(q));
  auto target = make_product(factors);
  auto phi = [&](std::uint64_t x) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(x % parts[i]);
    }
    return target->parse(s + ")");
  };
  std::vector<Element> image(n);
  std::vector<bool> hit(n, false);
  for (std::uint64_t x = 0; x < n; ++x) {
    image[x] = phi(x);
    auto idx = target->index_of(image[x]);
    if (hit[idx]) return false;
    hit[idx] = true;
  }
  if (image[1 % n] != target->one()) return false;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      if (target->add(image[x], image[y]) != image[(x + y) % n]) return false;
      if (target->mul(image[x], image[y]) != image[(x * y) % n]) return false;
    }
  return true;
}

}  // namespace hurwitz
