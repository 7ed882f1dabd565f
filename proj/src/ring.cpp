#include "hurwitz/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error([&] {
        std::ostringstream os;
        os << (kind == Kind::syntax  ? "syntax error"
               : kind == Kind::arity ? "arity error"
                                     : "literal error")
           << " at line " << line << ", column " << column << ": " << message;
        if (!expected.empty()) {
          os << " (expected one of:";
          for (const auto& e : expected) os << ' ' << e;
          os << ')';
        }
        return os.str();
      }()),
      kind_(kind),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

// --- BigInt helpers -------------------------------------------------------

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw DomainError("binomial: k > n");
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::vector<BigInt> binomial_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

std::uint64_t mod_reduce(const BigInt& k, std::uint64_t m) {
  BigInt r = k % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_char(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- sets and text --------------------------------------------------------

void normalize(ElementSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const ElementSet& s, const Element& x) {
  return std::binary_search(s.begin(), s.end(), x);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '}' || c == '>') depth = std::max(0, depth - 1);
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::optional<BigInt> parse_integer(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) return std::nullopt;
  BigInt v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
    v = v * 10 + (s[pos] - '0');
  }
  return negative ? BigInt(-v) : v;
}

// --- FiniteTables ---------------------------------------------------------

std::uint32_t FiniteTables::scale(std::uint64_t k, std::uint32_t x) const {
  if (characteristic != 0) k %= characteristic;
  std::uint32_t acc = zero;
  std::uint32_t base = x;
  while (k != 0) {
    if (k & 1u) acc = plus(acc, base);
    base = plus(base, base);
    k >>= 1u;
  }
  return acc;
}

// --- Ring -----------------------------------------------------------------

namespace {
std::atomic<RingId> next_ring_id{1};
}

Ring::Ring() : id_(next_ring_id.fetch_add(1)) {}

void Ring::check(const Element& x) const {
  if (x.owner() != id_)
    throw RingMismatch("element does not belong to ring " + spec());
}

const FiniteTables* Ring::fast_tables() const {
  if (!index_payload_) return nullptr;
  auto n = size();
  if (!n || *n > kAutoTableLimit) return nullptr;
  std::call_once(tables_once_, [this] { build_tables(); });
  return tables_.get();
}

void Ring::build_tables() const {
  try {
    auto n = size();
    if (!enumerable() || !n) throw CapabilityMissing("ring " + spec() + " is not enumerable");
    if (*n > kTableLimit)
      throw CapabilityMissing("ring " + spec() + " exceeds the Cayley table limit");
    auto t = std::make_unique<FiniteTables>();
    t->n = static_cast<std::uint32_t>(*n);
    t->characteristic = characteristic();
    std::vector<Payload> elems(t->n);
    for (std::uint32_t i = 0; i < t->n; ++i) elems[i] = do_at(i);
    t->zero = static_cast<std::uint32_t>(do_index_of(do_zero()));
    t->one = static_cast<std::uint32_t>(do_index_of(do_one()));
    t->add.resize(std::size_t(t->n) * t->n);
    t->mul.resize(std::size_t(t->n) * t->n);
    t->neg.resize(t->n);
    for (std::uint32_t i = 0; i < t->n; ++i) {
      t->neg[i] = static_cast<std::uint32_t>(do_index_of(do_neg(elems[i])));
      for (std::uint32_t j = 0; j < t->n; ++j) {
        t->add[std::size_t(i) * t->n + j] =
            static_cast<std::uint32_t>(do_index_of(do_add(elems[i], elems[j])));
        t->mul[std::size_t(i) * t->n + j] =
            static_cast<std::uint32_t>(do_index_of(do_mul(elems[i], elems[j])));
      }
    }
    tables_ = std::move(t);
  } catch (const Error& e) {
    tables_error_ = e.what();
  }
}

const FiniteTables& Ring::tables() const {
  std::call_once(tables_once_, [this] { build_tables(); });
  if (!tables_) throw CapabilityMissing(tables_error_);
  return *tables_;
}

bool Ring::has_tables() const {
  auto n = size();
  return enumerable() && n && *n <= kTableLimit;
}

Element Ring::zero() const { return make(do_zero()); }
Element Ring::one() const { return make(do_one()); }

Element Ring::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (auto* t = fast_tables()) return make({std::int64_t(t->plus(a.data()[0], b.data()[0]))});
  return make(do_add(a.data(), b.data()));
}

Element Ring::neg(const Element& a) const {
  check(a);
  if (auto* t = fast_tables()) return make({std::int64_t(t->neg[a.data()[0]])});
  return make(do_neg(a.data()));
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (auto* t = fast_tables()) return make({std::int64_t(t->times(a.data()[0], b.data()[0]))});
  return make(do_mul(a.data(), b.data()));
}

Element Ring::scale(const BigInt& k, const Element& x) const {
  check(x);
  if (auto* t = fast_tables()) {
    std::uint64_t c = t->characteristic;
    std::uint64_t kk = c != 0 ? mod_reduce(k, c) : mod_reduce(k, t->n);
    return make({std::int64_t(t->scale(kk, std::uint32_t(x.data()[0])))});
  }
  return make(do_scale(k, x.data()));
}

Payload Ring::do_scale(const BigInt& k, const Payload& x) const {
  BigInt kk = k;
  std::uint64_t c = characteristic();
  Payload base = x;
  if (c != 0) {
    kk = mod_reduce(k, c);
  } else if (kk < 0) {
    kk = -kk;
    base = do_neg(x);
  }
  Payload acc = do_zero();
  while (kk != 0) {
    if (bit_test(kk, 0)) acc = do_add(acc, base);
    base = do_add(base, base);
    kk >>= 1;
  }
  return acc;
}

Element Ring::pow(const Element& x, std::uint64_t e) const {
  Element acc = one();
  Element base = x;
  while (e != 0) {
    if (e & 1u) acc = mul(acc, base);
    e >>= 1u;
    if (e != 0) base = mul(base, base);
  }
  return acc;
}

bool Ring::is_zero(const Element& a) const {
  check(a);
  return a.data() == do_zero();
}

bool Ring::is_one(const Element& a) const {
  check(a);
  return a.data() == do_one();
}

std::string Ring::str(const Element& a) const {
  check(a);
  return do_str(a.data());
}

Element Ring::parse(std::string_view text) const { return make(do_parse(text)); }

Element Ring::at(std::uint64_t index) const {
  if (!enumerable()) throw CapabilityMissing("ring " + spec() + " is not enumerable");
  if (index >= *size()) throw DomainError("element index out of range");
  return make(do_at(index));
}

std::uint64_t Ring::index_of(const Element& x) const {
  check(x);
  if (!enumerable()) throw CapabilityMissing("ring " + spec() + " is not enumerable");
  return do_index_of(x.data());
}

std::vector<Element> Ring::elements() const {
  if (!enumerable()) throw CapabilityMissing("ring " + spec() + " is not enumerable");
  std::vector<Element> out;
  const std::uint64_t n = *size();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(make(do_at(i)));
  return out;
}

Element Ring::sample(std::mt19937_64& gen) const {
  if (!samplable()) throw CapabilityMissing("ring " + spec() + " is not samplable");
  return make(do_sample(gen));
}

Payload Ring::do_at(std::uint64_t index) const {
  if (index_payload_) return {std::int64_t(index)};
  throw CapabilityMissing("ring " + spec() + " does not support enumeration");
}

std::uint64_t Ring::do_index_of(const Payload& x) const {
  if (index_payload_) return std::uint64_t(x[0]);
  throw CapabilityMissing("ring " + spec() + " does not support enumeration");
}

Payload Ring::do_sample(std::mt19937_64& gen) const {
  if (!enumerable()) throw CapabilityMissing("ring " + spec() + " is not samplable");
  std::uniform_int_distribution<std::uint64_t> d(0, *size() - 1);
  return do_at(d(gen));
}

}  // namespace hurwitz

namespace hurwitz {

std::vector<Element> Ring::small_elements(std::size_t limit) const {
  std::vector<Element> out;
  if (enumerable()) {
    const std::uint64_t n = *size();
    for (std::uint64_t i = 0; i < n && out.size() < limit; ++i) {
      Element x = at(i);
      if (!is_zero(x)) out.push_back(x);
    }
    return out;
  }
  std::mt19937_64 gen(0);
  for (std::size_t tries = 0; tries < 8 * limit && out.size() < limit; ++tries) {
    Element x = sample(gen);
    if (!is_zero(x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace hurwitz
