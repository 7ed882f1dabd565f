#ifndef HURWITZ_RING_CORE_HPP
#define HURWITZ_RING_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hurwitz/ring.hpp"
#include "hurwitz/verdict.hpp"

namespace hurwitz {

/// Two-sided ideal of a finite ring, stored as its full element set.
struct IdealHandle {
  RingPtr ring;
  std::vector<Element> generators;
  ElementSet elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Element& x) const { return hurwitz::contains(elements, x); }
  bool is_zero() const { return elements.size() == 1; }
};

/// Ring axioms on every triple when enumerable and size^3 <= budget, else on
/// `budget` random triples.
Verdict ring_axioms(const RingPtr& ring, std::uint64_t budget, std::uint64_t seed = 0);

/// {a : Sa = 0}; the empty set gives the whole ring.
ElementSet right_annihilator(const Ring& ring, const ElementSet& s);
/// {a : aS = 0}.
ElementSet left_annihilator(const Ring& ring, const ElementSet& s);

ElementSet idempotents(const Ring& ring);
/// Fails with (e, r), e idempotent and er != re.
Verdict is_abelian(const RingPtr& ring);

ElementSet nilpotents(const Ring& ring);
/// Fails with a nonzero x, x^2 = 0.
Verdict is_reduced(const RingPtr& ring);

/// Smallest two-sided ideal containing gens.
IdealHandle ideal_closure(const RingPtr& ring, std::vector<Element> gens);
/// Ideal generated by the products ab, a in I, b in J.
IdealHandle ideal_product(const IdealHandle& i, const IdealHandle& j);
/// True when I^k = 0 for some 1 <= k <= m.
bool ideal_power_is_zero(const IdealHandle& i, std::size_t m);
/// Throws InvalidIdeal unless the set is a two-sided ideal.
IdealHandle ideal_from_set(const RingPtr& ring, ElementSet elements);

bool is_right_ideal(const Ring& ring, const ElementSet& s);
bool is_left_ideal(const Ring& ring, const ElementSet& s);

/// Sum of the nilpotent principal ideals; verified nilpotent.
IdealHandle lower_nilradical(const RingPtr& ring);
/// Sum of the nil principal ideals; asserted equal to lower_nilradical
/// (InternalError otherwise).
IdealHandle upper_nilradical(const RingPtr& ring);
/// {x : 1 - rx is a unit for all r}; asserted equal to lower_nilradical.
IdealHandle jacobson_radical(const RingPtr& ring);

ElementSet units(const Ring& ring);

RingPtr quotient_ring(const IdealHandle& ideal);

/// r(a) = 0 = l(a).
bool is_regular(const Ring& ring, const Element& a);

/// eR as a set.
ElementSet right_multiples(const Ring& ring, const Element& e);
/// Re as a set.
ElementSet left_multiples(const Ring& ring, const Element& e);

/// "{x,y,...}" in enumeration order.
std::string set_to_string(const Ring& ring, const ElementSet& s);
/// Parses "{x,y,...}" (braces optional).
ElementSet parse_set(const Ring& ring, std::string_view text);

}  // namespace hurwitz

#endif  // HURWITZ_RING_CORE_HPP
