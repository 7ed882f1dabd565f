#ifndef HURWITZ_VERDICT_HPP
#define HURWITZ_VERDICT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz {

enum class Status { holds, fails, unknown };
enum class Mode { exhaustive, random, directed };

std::string to_string(Status s);
std::string to_string(Mode m);
Status parse_status(std::string_view text);
/// Throws DomainError for anything but exhaustive|random|directed.
Mode parse_mode(std::string_view text);

/// Search effort behind a verdict.
struct Bounds {
  long degree = 0;
  long trunc = 0;
  Mode mode = Mode::exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Concrete certificate of a property failure. Element fields hold the
/// algebraic data; the *_text fields are the canonical strings written to
/// reports.
struct Witness {
  enum class Kind {
    nilpotent,              // f = {x}: x != 0, x^2 = 0
    semiprime,              // f = {a}: a != 0, aRa = 0
    noncentral_idempotent,  // f = {e}, g = {r}: e^2 = e, er != re
    ifp_triple,             // f = {a}, g = {b}, extra = {r}: ab = 0, arb != 0
    ordinary_pair,          // f, g coefficients: fg = 0 in R[x], a_i b_j != 0
    hurwitz_pair,           // f, g coefficients: fg = 0 in hR, a_i b_j != 0
    annihilator,            // f = S, g = r(S): no idempotent e with r(S) = eR
    axiom,                  // extra = {a, b, c}; recheck reproduces the failure
    discrepancy,            // recheck reproduces the failure
  };

  Kind kind = Kind::discrepancy;
  RingPtr ring;
  std::vector<Element> f;
  std::vector<Element> g;
  std::vector<Element> extra;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string f_text;
  std::string g_text;
  std::string value;
  /// Used by the axiom and discrepancy kinds.
  std::function<bool()> recheck;
};

Witness nilpotent_witness(RingPtr ring, const Element& x);
Witness semiprime_witness(RingPtr ring, const Element& a);
Witness noncentral_idempotent_witness(RingPtr ring, const Element& e, const Element& r);
Witness ifp_witness(RingPtr ring, const Element& a, const Element& r, const Element& b);
/// Picks the first (i, j) in lexicographic order with a_i b_j != 0.
Witness pair_witness(RingPtr ring, Witness::Kind kind, std::vector<Element> f, std::vector<Element> g);
Witness annihilator_witness(RingPtr ring, ElementSet s, ElementSet ann);
Witness discrepancy_witness(RingPtr ring, std::string f_text, std::string g_text, std::string value,
                            std::function<bool()> recheck, Witness::Kind kind = Witness::Kind::discrepancy);

/// Recomputes the defining equations from the witness data; true when the
/// violation is reproduced exactly.
bool revalidate(const Witness& w);

struct Verdict {
  Status status = Status::unknown;
  Bounds bounds;
  std::optional<Witness> witness;
  std::string note;
  /// Set for the zero ring, which every checker reports as a trivial case.
  bool degenerate = false;

  static Verdict holds(Bounds b, std::string note = {});
  static Verdict fails(Bounds b, Witness w, std::string note = {});
  static Verdict unknown(Bounds b, std::string note = {});
  static Verdict trivial(Bounds b);
};

/// Fails > Unknown > Holds; ties keep the first argument.
Verdict merge(Verdict a, Verdict b);

}  // namespace hurwitz

#endif  // HURWITZ_VERDICT_HPP
