#ifndef HURWITZ_CONSTRUCTIONS_HPP
#define HURWITZ_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz {

// Enumeration orders (index 0 is always zero):
//   Zn(n)      residues 0..n-1
//   GF(p,m)    index = sum c_i p^i for the polynomial sum c_i t^i
//   composite  mixed radix over the component indices, first component
//              least significant (Prod, Mat row-major, UT upper entries
//              row-major, UTc diagonal then upper entries, pairs (a|m),
//              CommQ monomials in graded lex order, Quat 1,i,j,k, HJet c0..cN)
//   Quot       cosets ordered by their smallest-index representative
//   corner     members of eRe in parent order

/// Ring of integers: arbitrary precision, characteristic zero, samplable
/// (uniform in [-sample_bound, sample_bound]), not enumerable.
RingPtr make_integers(std::uint64_t sample_bound = 20);

/// Z/nZ, n >= 2.
RingPtr make_zmod(std::uint64_t n);

/// GF(p) when `modulus` is empty, else GF(p^k) = GF(p)[t]/(modulus) with the
/// modulus given low-to-high. The modulus must be irreducible of degree >= 1.
RingPtr make_gf(std::uint64_t p, std::vector<std::uint64_t> modulus = {});
/// Same, with the modulus as text such as "t^2+t+1".
RingPtr make_gf(std::uint64_t p, std::string_view modulus);

RingPtr make_product(std::vector<RingPtr> factors);

/// Prime-power factors of n in increasing order of prime.
std::vector<std::uint64_t> crt_decompose(std::uint64_t n);

/// Checks that x -> (x mod q_i) is a bijection Zn(n) -> prod Zn(q_i)
/// preserving +, * and 1, where q_i = crt_decompose(n).
bool verify_crt_isomorphism(std::uint64_t n);

RingPtr make_matrix_full(RingPtr base, std::size_t k);
RingPtr make_upper_triangular(RingPtr base, std::size_t k);

/// k x k upper triangular matrices with constant diagonal a in S and strictly
/// upper entries in S/I, I the ideal generated by `ideal_gens`.
RingPtr make_const_diag_ut(RingPtr base, std::vector<Element> ideal_gens, std::size_t k);

/// T(R, R): pairs (a|m) with (a|m)(b|n) = (ab | an + mb).
RingPtr make_trivial_extension(RingPtr base);
/// T(S, S/I) with the module action through the quotient map.
RingPtr make_trivial_extension_quotient(RingPtr base, std::vector<Element> ideal_gens);

/// Ring endomorphism of a finite field, named by the image of its generator.
struct Endomorphism {
  enum class Kind { identity, frobenius, generator_image };
  Kind kind = Kind::identity;
  std::string image;  // element literal, for generator_image

  static Endomorphism parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

/// K(+)_h K with (a|m)(b|n) = (ab | h(a)n + bm). Throws InvalidConstruction
/// when h fails to preserve 1, + or *.
RingPtr make_twisted_extension(RingPtr field, const Endomorphism& h);

/// F + A/I with A the free algebra on single-letter generators and I spanned
/// by the words containing a forbidden pattern. Patterns are words over the
/// generators, optionally with one `*` matching any nonempty word. Words longer
/// than max_len are also sent to zero (recorded as truncation_bound()).
RingPtr make_free_monomial_quotient(RingPtr field, std::vector<char> generators,
                                    std::vector<std::string> patterns, std::size_t max_len);

/// F[x, y, ...]/(x^cap_x, y^cap_y, ...).
RingPtr make_comm_monomial_quotient(RingPtr field,
                                    std::vector<std::pair<std::string, unsigned>> caps);

/// Integer quaternions reduced mod n: basis 1, i, j, k over Zn(n).
RingPtr make_quaternion_mod(std::uint64_t n);

/// hR/(x^(N+1)): jets c0..cN under the truncated Hurwitz product.
RingPtr make_hurwitz_truncated(RingPtr base, std::size_t order);

/// R/I for a finite ring and a closed two-sided ideal (element list).
/// Throws InvalidIdeal when `ideal` is not closed.
RingPtr make_quotient(RingPtr base, const ElementSet& ideal);

/// Quotient by the ideal generated by `gens`.
RingPtr make_quotient_by(RingPtr base, const std::vector<Element>& gens);

/// Corner ring eRe with identity e (for central e this is eR).
RingPtr make_corner(RingPtr base, const Element& e);

/// Structure given by explicit tables over indices 0..n-1. No axiom checking;
/// used for negative controls of ring_axioms.
RingPtr make_table_ring(std::uint32_t n, std::vector<std::uint32_t> add,
                        std::vector<std::uint32_t> mul, std::uint32_t one,
                        std::string name = "Table");

/// Canonical image of an element of R in R/I (R/I built by make_quotient*).
Element quotient_map(const Ring& quotient, const Element& x);
/// Smallest-index representative in R of a coset.
Element quotient_lift(const Ring& quotient, const Element& coset);

}  // namespace hurwitz

#endif  // HURWITZ_CONSTRUCTIONS_HPP
