#ifndef HURWITZ_PROPERTIES_HPP
#define HURWITZ_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/ring.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/verdict.hpp"

namespace hurwitz {

/// Default cap on coefficient multiplications per search.
inline constexpr std::uint64_t kDefaultBudget = 500'000'000;

/// Search parameters shared by the checkers. `degree` bounds deg f and deg g;
/// `trunc` > 0 enables the jet channel at that order.
struct CheckOptions {
  long degree = 1;
  long trunc = 0;
  Mode mode = Mode::directed;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  /// When false, checks whose conclusion assumes the Hurwitz-Armendariz
  /// property run without first establishing it.
  bool require_hypothesis = true;
};

/// Smallest k with c | k!, so k! r^k vanishes from there on in characteristic c.
std::uint64_t kempner(std::uint64_t c);

Verdict check_reduced(const RingPtr& ring, const CheckOptions& opts = {});
Verdict check_semiprime(const RingPtr& ring, const CheckOptions& opts = {});
Verdict check_abelian(const RingPtr& ring, const CheckOptions& opts = {});

/// ab = 0 implies aRb = 0. Fails carries the triple (a, r, b).
Verdict check_ifp(const RingPtr& ring, const CheckOptions& opts = {});

/// fg = 0 in R[x] implies a_i b_j = 0.
Verdict check_armendariz(const RingPtr& ring, const CheckOptions& opts = {});

/// fg = 0 under the Hurwitz product implies a_i b_j = 0. In directed mode
/// over characteristic c > 0 the search first tries the lift f = (a, -ar),
/// g = (k! r^k b)_k of an IFP failure, then the complete degree-1 scan.
Verdict check_hurwitz_armendariz(const RingPtr& ring, const CheckOptions& opts = {});

/// f_1 ... f_n = 0 implies every coefficient product a_1 ... a_n = 0.
/// Throws HypothesisNotEstablished unless the Hurwitz check holds at opts.
Verdict check_nproduct_armendariz(const RingPtr& ring, std::size_t n, const CheckOptions& opts = {});

struct RadicalChain {
  ElementSet nilpotents;  // N(R)
  ElementSet lower;       // N_0 = N_* for finite rings
  ElementSet upper;       // N^*
  ElementSet jacobson;
  Verdict ifp;
  /// False when IFP holds but N_* != N.
  bool consistent = true;
  /// Holds iff all four sets coincide.
  Verdict verdict;
};
RadicalChain check_radical_chain(const RingPtr& ring);

/// Every right annihilator of a nonempty subset is eR for an idempotent e.
Verdict check_baer(const RingPtr& ring);
/// r(a) = eR and l(a) = Re for every a.
Verdict check_pp(const RingPtr& ring);

/// Polynomial-level transfer: for sampled sets A of Hurwitz polynomials the
/// degree-bounded right annihilator of A is exactly e0 hR, where r(C_A) = e0 R.
Verdict check_baer_transfer(const RingPtr& ring, const CheckOptions& opts = {});
/// Same for single polynomials, on both sides.
Verdict check_pp_transfer(const RingPtr& ring, const CheckOptions& opts = {});

/// Annihilation by constants is coefficientwise, and for sampled V the
/// bounded annihilator r(V) equals {g : C_g in r(C_V)}.
Verdict check_annihilator_maps(const RingPtr& ring, const CheckOptions& opts = {});

struct SquareZeroReport {
  /// J^2 = 0 and every element outside J is regular in R.
  Verdict hypotheses;
  Verdict hurwitz_armendariz;
  Verdict combined;
};
SquareZeroReport check_square_zero_regular(const RingPtr& ring, const std::vector<Element>& j_gens,
                                           const CheckOptions& opts = {});

struct IdempotentSplit {
  Verdict ring;
  Verdict corner;      // eR
  Verdict complement;  // (1 - e)R
  /// False when the three verdicts contradict "R iff both corners".
  bool consistent = true;
};
/// Throws NotAbelian or NotIdempotent when the preconditions fail.
IdempotentSplit check_idempotent_split(const RingPtr& ring, const Element& e, const CheckOptions& opts = {});

/// fg = 0 implies fhg = 0 on exact polynomials.
Verdict check_ifp_hurwitz(const RingPtr& ring, const CheckOptions& opts = {});

/// Armendariz-type check on the rng I inside R: polynomials with all
/// coefficients in I, exhaustively up to opts.degree.
Verdict check_ideal_armendariz(const RingPtr& ring, const ElementSet& ideal, ProductKind kind,
                               const CheckOptions& opts = {});

/// Property names accepted by check_property.
const std::vector<std::string>& property_names();
/// Dispatch by name; throws DomainError for an unknown property.
Verdict check_property(std::string_view name, const RingPtr& ring, const CheckOptions& opts = {});

}  // namespace hurwitz

#endif  // HURWITZ_PROPERTIES_HPP
