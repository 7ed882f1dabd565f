// Shared fixtures for the unit tests.
#ifndef HURWITZ_TESTS_SUPPORT_HPP
#define HURWITZ_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "hurwitz/constructions.hpp"
#include "hurwitz/ring.hpp"

namespace testing {

using namespace hurwitz;

/// Small finite rings covering every enumerable construction.
inline std::vector<RingPtr> finite_catalog() {
  auto z2 = make_zmod(2), z3 = make_zmod(3), z4 = make_zmod(4);
  auto z12 = make_zmod(12);
  auto gf4 = make_gf(2, "t^2+t+1");
  return {
      make_zmod(4),
      make_zmod(6),
      make_zmod(8),
      make_zmod(12),
      make_gf(5),
      gf4,
      make_product({z2, z3}),
      make_matrix_full(z2, 2),
      make_upper_triangular(z2, 2),
      make_upper_triangular(z3, 2),
      make_const_diag_ut(z2, {}, 3),
      make_const_diag_ut(z4, {z4->parse("2")}, 3),
      make_trivial_extension(z3),
      make_trivial_extension(z4),
      make_trivial_extension_quotient(z4, {z4->parse("2")}),
      make_twisted_extension(gf4, Endomorphism::parse("frob")),
      make_comm_monomial_quotient(make_gf(3), {{"x", 2}, {"y", 2}}),
      make_quaternion_mod(2),
      make_hurwitz_truncated(z4, 1),
      make_hurwitz_truncated(make_gf(2), 2),
      make_free_monomial_quotient(make_gf(2), {'a', 'b'}, {"aa", "ba"}, 2),
      make_quotient_by(z12, {z12->parse("4")}),
  };
}

inline Element el(const RingPtr& r, const std::string& text) { return r->parse(text); }

inline ElementSet set_of(const RingPtr& r, std::initializer_list<const char*> items) {
  ElementSet s;
  for (const char* t : items) s.push_back(r->parse(t));
  normalize(s);
  return s;
}

}  // namespace testing

#endif
