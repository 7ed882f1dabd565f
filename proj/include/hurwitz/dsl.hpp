#ifndef HURWITZ_DSL_HPP
#define HURWITZ_DSL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz {

/// Parsed ring spec. Which fields are used depends on `kind`:
///   Z                     -
///   Zn(n), Quat(n)        ints = {n}
///   GF(p [, poly])        ints = {p}, text = poly (may be empty)
///   Prod(s, s, ...)       children
///   Mat/UT(s, k)          children = {s}, ints = {k}
///   UTc(s, [e..], k)      children = {s}, items = elems, ints = {k}
///   Triv(s)               children = {s}
///   TrivQ(s, [e..])       children = {s}, items = elems
///   Twist(s, endo)        children = {s}, text = endo
///   FreeQ(s, [g..], [p..], len)  children = {s}, gens, items = patterns, ints = {len}
///   CommQ(s, {x:k, ..})   children = {s}, caps
///   HJet(s, N)            children = {s}, ints = {N}
///   Quot(s, [e..])        children = {s}, items = elems
///   Corner(s, e)          children = {s}, items = {e}
struct SpecNode {
  enum class Kind { integers, zmod, gf, prod, mat, ut, utc, triv, trivq, twist, freeq, commq, quat, hjet, quot, corner };

  Kind kind = Kind::integers;
  std::vector<SpecNode> children;
  std::vector<std::uint64_t> ints;
  std::vector<std::string> items;
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, unsigned>> caps;
  std::string text;
  /// 1-based position of the constructor name; ignored by ==.
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SpecNode& a, const SpecNode& b) {
    return a.kind == b.kind && a.children == b.children && a.ints == b.ints && a.items == b.items &&
           a.gens == b.gens && a.caps == b.caps && a.text == b.text;
  }
};

/// Recursive descent over the grammar; throws ParseError (syntax, arity or
/// literal) with line, column and the expected-token set. Element literals
/// are validated against the ring they belong to and stored canonically.
SpecNode parse_ring_spec(std::string_view text);

/// Canonical text, equal to build_ring(node)->spec().
std::string print_ring_spec(const SpecNode& node);

RingPtr build_ring(const SpecNode& node);

/// parse then build.
RingPtr ring_from_spec(std::string_view text);

}  // namespace hurwitz

#endif  // HURWITZ_DSL_HPP
