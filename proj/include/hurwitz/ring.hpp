#ifndef HURWITZ_RING_HPP
#define HURWITZ_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hurwitz/bigint.hpp"

namespace hurwitz {

using RingId = std::uint64_t;

/// Construction-specific canonical encoding of an element. Finite rings that
/// support indexing store a single word: the element's enumeration index.
using Payload = boost::container::small_vector<std::int64_t, 2>;

/// Immutable value tagged with the id of the ring that owns it.
class Element {
 public:
  Element() = default;
  Element(RingId owner, Payload data) : owner_(owner), data_(std::move(data)) {}

  RingId owner() const noexcept { return owner_; }
  const Payload& data() const noexcept { return data_; }
  bool valid() const noexcept { return owner_ != 0; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ && a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.owner_ <=> b.owner_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(),
                                                  b.data_.begin(), b.data_.end());
  }

 private:
  RingId owner_ = 0;
  Payload data_;
};

/// Sorted, duplicate-free list of elements of one ring.
using ElementSet = std::vector<Element>;

void normalize(ElementSet& s);
bool contains(const ElementSet& s, const Element& x);

/// Dense Cayley tables of a finite ring, indexed by enumeration order.
struct FiniteTables {
  std::uint32_t n = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::uint64_t characteristic = 0;
  std::vector<std::uint32_t> add;  // n*n
  std::vector<std::uint32_t> mul;  // n*n
  std::vector<std::uint32_t> neg;  // n

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[std::size_t(a) * n + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[std::size_t(a) * n + b]; }
  std::uint32_t minus(std::uint32_t a, std::uint32_t b) const { return plus(a, neg[b]); }
  /// k-fold sum; k is reduced modulo the characteristic first.
  std::uint32_t scale(std::uint64_t k, std::uint32_t x) const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// An effective ring: arithmetic, equality, canonical strings and, where
/// available, enumeration and sampling. Descriptors are immutable once built
/// and may be shared across threads; the only lazily-initialised state is the
/// Cayley-table cache, guarded by std::call_once.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  /// Rings at most this large get Cayley tables built on first use.
  static constexpr std::uint64_t kAutoTableLimit = 1024;
  /// Hard ceiling for explicit tables() requests.
  static constexpr std::uint64_t kTableLimit = 4096;

  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  RingId id() const noexcept { return id_; }

  /// Ring-spec DSL text that rebuilds this ring.
  virtual std::string spec() const = 0;
  /// 0 means characteristic zero.
  virtual std::uint64_t characteristic() const = 0;
  /// Number of elements when finite and representable; nullopt otherwise.
  virtual std::optional<std::uint64_t> size() const = 0;
  virtual bool is_finite() const { return size().has_value(); }
  virtual bool enumerable() const { return size().has_value(); }
  virtual bool samplable() const { return true; }

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const BigInt& k, const Element& x) const;
  Element scale(std::int64_t k, const Element& x) const { return scale(BigInt(k), x); }
  Element pow(const Element& x, std::uint64_t e) const;
  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;

  std::string str(const Element& a) const;
  /// Parses a canonical (or lenient) element literal; throws LiteralError.
  Element parse(std::string_view text) const;

  /// Enumeration (requires enumerable()). Order is deterministic and
  /// documented per construction; index 0 is always zero.
  Element at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& x) const;
  std::vector<Element> elements() const;

  Element sample(std::mt19937_64& gen) const;

  /// Small deterministic pool of nonzero elements used to seed directed
  /// searches on rings that cannot be enumerated.
  virtual std::vector<Element> small_elements(std::size_t limit) const;

  /// Word-length cap for truncated constructions; verdicts on such rings
  /// carry it as a bound.
  virtual std::optional<std::size_t> truncation_bound() const { return std::nullopt; }

  /// Cayley tables; throws CapabilityMissing when not enumerable or larger
  /// than kTableLimit.
  const FiniteTables& tables() const;
  bool has_tables() const;

  /// Throws RingMismatch unless x belongs to this ring.
  void check(const Element& x) const;
  Element make(Payload p) const { return Element(id_, std::move(p)); }

 protected:
  Ring();

  /// True when payloads are a single enumeration index, enabling table
  /// lookups in the hot arithmetic path.
  void set_index_payload() { index_payload_ = true; }

  virtual Payload do_zero() const = 0;
  virtual Payload do_one() const = 0;
  virtual Payload do_add(const Payload& a, const Payload& b) const = 0;
  virtual Payload do_neg(const Payload& a) const = 0;
  virtual Payload do_mul(const Payload& a, const Payload& b) const = 0;
  virtual Payload do_scale(const BigInt& k, const Payload& x) const;
  virtual std::string do_str(const Payload& a) const = 0;
  virtual Payload do_parse(std::string_view text) const = 0;
  virtual Payload do_at(std::uint64_t index) const;
  virtual std::uint64_t do_index_of(const Payload& x) const;
  virtual Payload do_sample(std::mt19937_64& gen) const;

 private:
  const FiniteTables* fast_tables() const;
  void build_tables() const;

  RingId id_;
  bool index_payload_ = false;
  mutable std::once_flag tables_once_;
  mutable std::unique_ptr<FiniteTables> tables_;
  mutable std::string tables_error_;
};

/// Splits `text` at top-level occurrences of `sep`, honouring (), [], {}, <>.
std::vector<std::string> split_top_level(std::string_view text, char sep);
/// Removes all whitespace.
std::string strip_spaces(std::string_view text);
/// Parses a (possibly signed) decimal integer; nullopt if malformed.
std::optional<BigInt> parse_integer(std::string_view text);

}  // namespace hurwitz

#endif  // HURWITZ_RING_HPP
