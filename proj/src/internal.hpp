// Shared machinery for the construction implementations. Not installed.
#ifndef HURWITZ_SRC_INTERNAL_HPP
#define HURWITZ_SRC_INTERNAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz::detail {

std::string format_poly_t(const std::vector<std::uint64_t>& coeffs);
std::optional<std::vector<std::uint64_t>> parse_poly_t(std::string_view text, std::uint64_t p);

/// "[[a,b],[c,d]]" from row strings.
std::string format_matrix(const std::vector<std::vector<std::string>>& rows);
/// Inverse of format_matrix; throws LiteralError on malformed text.
std::vector<std::vector<std::string>> parse_matrix(std::string_view text, std::size_t k);

/// One additive term of a sum-of-monomials literal such as "2*x^2*y" or
/// "(t+1)*a*b". Coefficient factors start with a digit or '('.
struct Term {
  bool negative = false;
  std::vector<std::string> coefficients;
  std::vector<std::pair<std::string, unsigned>> factors;  // name, exponent
};
/// Splits at top-level '+'/'-' and '*'. Returns nullopt when malformed.
std::optional<std::vector<Term>> parse_terms(std::string_view text);

/// Wraps a coefficient string in parentheses when it contains '+' or '-'.
std::string coefficient_text(const std::string& c);

/// Strips one pair of enclosing delimiters, throwing LiteralError otherwise.
std::string unwrap(std::string_view text, char open, char close);

/// Smallest two-sided ideal containing `gens` in an enumerable ring: the
/// additive subgroup closed under left and right multiplication. Returned as
/// sorted enumeration indices.
std::vector<std::uint64_t> ideal_closure_indices(const Ring& ring, const std::vector<Element>& gens);

/// A ring whose elements are tuples of elements of component rings. When
/// every component is enumerable and the total size fits in 62 bits the
/// payload is the mixed-radix enumeration index (first component least
/// significant); otherwise it is the length-prefixed concatenation of the
/// component payloads.
class CompositeRing : public Ring {
 public:
  using Parts = std::vector<Element>;
  using Digits = boost::container::small_vector<std::uint32_t, 8>;

  std::uint64_t characteristic() const override;
  std::optional<std::uint64_t> size() const override;
  bool is_finite() const override { return finite_; }
  bool enumerable() const override { return indexed_; }
  bool samplable() const override;

  const std::vector<RingPtr>& component_rings() const { return rings_; }
  Parts decompose(const Element& x) const;
  Element compose(const Parts& parts) const;

 protected:
  explicit CompositeRing(std::vector<RingPtr> rings);

  virtual Parts zero_parts() const;
  virtual Parts one_parts() const = 0;
  virtual Parts add_parts(const Parts& a, const Parts& b) const;
  virtual Parts neg_parts(const Parts& a) const;
  virtual Parts mul_parts(const Parts& a, const Parts& b) const = 0;
  virtual std::string format_parts(const Parts& a) const = 0;
  virtual Parts parse_parts(std::string_view text) const = 0;

  Parts decode(const Payload& p) const;
  Payload encode(const Parts& parts) const;

  Payload do_zero() const override { return encode(zero_parts()); }
  Payload do_one() const override { return encode(one_parts()); }
  Payload do_add(const Payload& a, const Payload& b) const override;
  Payload do_neg(const Payload& a) const override;
  Payload do_mul(const Payload& a, const Payload& b) const override {
    return encode(mul_parts(decode(a), decode(b)));
  }
  std::string do_str(const Payload& a) const override { return format_parts(decode(a)); }
  Payload do_parse(std::string_view text) const override { return encode(parse_parts(text)); }
  Payload do_sample(std::mt19937_64& gen) const override;

  /// Component Cayley tables when the payload is a mixed-radix index and
  /// every component is small enough; nullptr otherwise. Lets componentwise
  /// operations run on digits without materialising component elements.
  const std::vector<const FiniteTables*>* digit_tables() const;
  Digits digits(std::int64_t index) const;
  std::int64_t undigits(const Digits& d) const;

  std::vector<RingPtr> rings_;

 private:
  mutable std::once_flag digit_once_;
  mutable std::vector<const FiniteTables*> digit_tables_;

  bool finite_ = true;
  bool indexed_ = true;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> stride_;
};

}  // namespace hurwitz::detail

#endif  // HURWITZ_SRC_INTERNAL_HPP
