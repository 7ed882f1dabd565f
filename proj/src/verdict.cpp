#include "hurwitz/verdict.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/ring_core.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

std::string to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::exhaustive: return "exhaustive";
    case Mode::random: return "random";
    case Mode::directed: return "directed";
  }
  return "exhaustive";
}

Status parse_status(std::string_view text) {
  if (text == "holds") return Status::holds;
  if (text == "fails") return Status::fails;
  if (text == "unknown") return Status::unknown;
  throw DomainError("unknown status '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "exhaustive") return Mode::exhaustive;
  if (text == "random") return Mode::random;
  if (text == "directed") return Mode::directed;
  throw DomainError("mode must be exhaustive, random or directed, got '" + std::string(text) + "'");
}

Witness nilpotent_witness(RingPtr ring, const Element& x) {
  Witness w;
  w.kind = Witness::Kind::nilpotent;
  w.f_text = w.g_text = ring->str(x);
  w.value = ring->str(x);
  w.f = {x};
  w.ring = std::move(ring);
  return w;
}

Witness semiprime_witness(RingPtr ring, const Element& a) {
  Witness w;
  w.kind = Witness::Kind::semiprime;
  w.f_text = w.g_text = ring->str(a);
  w.value = ring->str(a);
  w.f = {a};
  w.ring = std::move(ring);
  return w;
}

Witness noncentral_idempotent_witness(RingPtr ring, const Element& e, const Element& r) {
  Witness w;
  w.kind = Witness::Kind::noncentral_idempotent;
  w.f_text = ring->str(e);
  w.g_text = ring->str(r);
  w.value = "er=" + ring->str(ring->mul(e, r)) + "; re=" + ring->str(ring->mul(r, e));
  w.f = {e};
  w.g = {r};
  w.ring = std::move(ring);
  return w;
}

Witness ifp_witness(RingPtr ring, const Element& a, const Element& r, const Element& b) {
  Witness w;
  w.kind = Witness::Kind::ifp_triple;
  w.f_text = ring->str(a);
  w.g_text = ring->str(b);
  w.value = "r=" + ring->str(r) + "; arb=" + ring->str(ring->mul(ring->mul(a, r), b));
  w.f = {a};
  w.g = {b};
  w.extra = {r};
  w.ring = std::move(ring);
  return w;
}

Witness pair_witness(RingPtr ring, Witness::Kind kind, std::vector<Element> f, std::vector<Element> g) {
  Witness w;
  w.kind = kind;
  bool found = false;
  for (std::size_t i = 0; i < f.size() && !found; ++i)
    for (std::size_t j = 0; j < g.size() && !found; ++j)
      if (!ring->is_zero(ring->mul(f[i], g[j]))) {
        w.i = i;
        w.j = j;
        found = true;
      }
  if (!found) throw InternalError("pair witness without a nonzero coefficient product");
  w.value = ring->str(ring->mul(f[w.i], g[w.j]));
  w.f_text = to_string(f, *ring);
  w.g_text = to_string(g, *ring);
  w.f = std::move(f);
  w.g = std::move(g);
  w.ring = std::move(ring);
  return w;
}

Witness annihilator_witness(RingPtr ring, ElementSet s, ElementSet ann) {
  Witness w;
  w.kind = Witness::Kind::annihilator;
  w.f_text = set_to_string(*ring, s);
  w.g_text = set_to_string(*ring, ann);
  w.value = "r(" + w.f_text + ")=" + w.g_text;
  w.f = std::move(s);
  w.g = std::move(ann);
  w.ring = std::move(ring);
  return w;
}

Witness discrepancy_witness(RingPtr ring, std::string f_text, std::string g_text, std::string value,
                            std::function<bool()> recheck, Witness::Kind kind) {
  Witness w;
  w.kind = kind;
  w.ring = std::move(ring);
  w.f_text = std::move(f_text);
  w.g_text = std::move(g_text);
  w.value = std::move(value);
  w.recheck = std::move(recheck);
  return w;
}

bool revalidate(const Witness& w) {
  if (!w.ring) return false;
  const Ring& R = *w.ring;
  switch (w.kind) {
    case Witness::Kind::nilpotent:
      return w.f.size() == 1 && !R.is_zero(w.f[0]) && R.is_zero(R.mul(w.f[0], w.f[0]));
    case Witness::Kind::semiprime: {
      if (w.f.size() != 1 || R.is_zero(w.f[0])) return false;
      for (const auto& r : R.elements())
        if (!R.is_zero(R.mul(R.mul(w.f[0], r), w.f[0]))) return false;
      return true;
    }
    case Witness::Kind::noncentral_idempotent: {
      if (w.f.size() != 1 || w.g.size() != 1) return false;
      const auto& e = w.f[0];
      const auto& r = w.g[0];
      return R.mul(e, e) == e && R.mul(e, r) != R.mul(r, e);
    }
    case Witness::Kind::ifp_triple: {
      if (w.f.size() != 1 || w.g.size() != 1 || w.extra.size() != 1) return false;
      const auto& a = w.f[0];
      const auto& b = w.g[0];
      return R.is_zero(R.mul(a, b)) && !R.is_zero(R.mul(R.mul(a, w.extra[0]), b));
    }
    case Witness::Kind::ordinary_pair:
    case Witness::Kind::hurwitz_pair: {
      if (w.i >= w.f.size() || w.j >= w.g.size()) return false;
      if (R.is_zero(R.mul(w.f[w.i], w.g[w.j]))) return false;
      ElementArith ar(R);
      auto c = w.kind == Witness::Kind::hurwitz_pair
                   ? hurwitz_product(ar, std::span<const Element>(w.f), std::span<const Element>(w.g))
                   : ordinary_product(ar, std::span<const Element>(w.f), std::span<const Element>(w.g));
      return all_zero(ar, std::span<const Element>(c));
    }
    case Witness::Kind::annihilator: {
      ElementSet s(w.f.begin(), w.f.end());
      ElementSet ann = right_annihilator(R, s);
      if (ann != ElementSet(w.g.begin(), w.g.end())) return false;
      for (const auto& e : idempotents(R))
        if (right_multiples(R, e) == ann) return false;
      return true;
    }
    case Witness::Kind::axiom:
    case Witness::Kind::discrepancy:
      return w.recheck && w.recheck();
  }
  return false;
}

Verdict Verdict::holds(Bounds b, std::string note) {
  return Verdict{Status::holds, b, std::nullopt, std::move(note), false};
}

Verdict Verdict::fails(Bounds b, Witness w, std::string note) {
  return Verdict{Status::fails, b, std::move(w), std::move(note), false};
}

Verdict Verdict::unknown(Bounds b, std::string note) {
  return Verdict{Status::unknown, b, std::nullopt, std::move(note), false};
}

Verdict Verdict::trivial(Bounds b) {
  return Verdict{Status::unknown, b, std::nullopt, "zero ring: trivial case", true};
}

Verdict merge(Verdict a, Verdict b) {
  auto rank = [](Status s) { return s == Status::fails ? 2 : s == Status::unknown ? 1 : 0; };
  return rank(b.status) > rank(a.status) ? b : a;
}

}  // namespace hurwitz
