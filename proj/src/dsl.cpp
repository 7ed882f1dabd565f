// Ring-spec DSL: recursive descent with one character of lookahead. Each node
// is built as soon as it is parsed so literals are validated in place.

#include "hurwitz/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hurwitz/bigint.hpp"
#include "hurwitz/constructions.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

using Kind = SpecNode::Kind;

struct Keyword {
  const char* name;
  Kind kind;
};

constexpr Keyword kKeywords[] = {
    {"Z", Kind::integers}, {"Zn", Kind::zmod},       {"GF", Kind::gf},       {"Prod", Kind::prod},
    {"Mat", Kind::mat},    {"UT", Kind::ut},         {"UTc", Kind::utc},     {"Triv", Kind::triv},
    {"TrivQ", Kind::trivq}, {"Twist", Kind::twist},  {"FreeQ", Kind::freeq}, {"CommQ", Kind::commq},
    {"Quat", Kind::quat},  {"HJet", Kind::hjet},     {"Quot", Kind::quot},   {"Corner", Kind::corner},
};

const char* name_of(Kind k) {
  for (const auto& kw : kKeywords)
    if (kw.kind == k) return kw.name;
  return "?";
}

std::vector<std::string> keyword_names() {
  std::vector<std::string> v;
  for (const auto& kw : kKeywords) v.emplace_back(kw.name);
  return v;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

std::string after_first_comma(const std::string& spec) {
  auto open = spec.find(',');
  return spec.substr(open + 1, spec.size() - open - 2);
}

struct Built {
  SpecNode node;
  RingPtr ring;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) {}

  Built parse_all() {
    auto b = spec();
    skip_ws();
    if (pos_ < src_.size()) syntax("unexpected trailing input", {"end of input"});
    return b;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  [[noreturn]] void fail(ParseError::Kind kind, std::string msg, std::vector<std::string> expected = {}) {
    throw ParseError(kind, line_, col_, std::move(msg), std::move(expected));
  }
  [[noreturn]] void syntax(std::string msg, std::vector<std::string> expected) {
    fail(ParseError::Kind::syntax, std::move(msg), std::move(expected));
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string found() {
    char c = peek();
    return c ? std::string("'") + c + "'" : std::string("end of input");
  }

  void expect(char c) {
    if (peek() != c) syntax("found " + found(), {std::string("'") + c + "'"});
    advance();
  }

  // Separator between fixed arguments of `k`.
  void comma(Kind k) {
    if (peek() == ')') fail(ParseError::Kind::arity, std::string(name_of(k)) + " needs more arguments", {"','"});
    expect(',');
  }

  void close(Kind k) {
    if (peek() == ',') fail(ParseError::Kind::arity, std::string(name_of(k)) + " has too many arguments", {"')'"});
    expect(')');
  }

  void argument(Kind k, const char* what) {
    char c = peek();
    if (c == ')' || c == ',')
      fail(ParseError::Kind::arity, std::string(name_of(k)) + " is missing its " + what + " argument", {what});
  }

  std::string ident() {
    skip_ws();
    std::string s;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      if (s.empty() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) break;
      s += src_[pos_];
      advance();
    }
    if (s.empty()) syntax("found " + found(), {"identifier"});
    return s;
  }

  std::uint64_t integer(Kind k, const char* what) {
    argument(k, what);
    skip_ws();
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      s += src_[pos_];
      advance();
    }
    if (s.empty()) syntax("found " + found(), {what});
    if (s.size() > 18) fail(ParseError::Kind::literal, "integer " + s + " is too large");
    return std::stoull(s);
  }

  // Balanced raw text up to a top-level character from `stops`.
  std::string raw(std::string_view stops, const char* what) {
    skip_ws();
    std::string s;
    int depth = 0;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') {
        if (depth == 0) break;
        --depth;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
      advance();
    }
    if (s.empty()) syntax("found " + found(), {what});
    return s;
  }

  std::vector<std::string> raw_list(const char* what) {
    expect('[');
    std::vector<std::string> v;
    if (peek() == ']') {
      advance();
      return v;
    }
    for (;;) {
      v.push_back(raw(",]", what));
      if (peek() == ']') break;
      expect(',');
    }
    expect(']');
    return v;
  }

  // Canonical element strings, validated against `base`.
  std::vector<std::string> elements(const RingPtr& base) {
    auto at_line = line_;
    auto at_col = col_;
    auto raw_items = raw_list("element");
    std::vector<std::string> out;
    for (const auto& s : raw_items) {
      try {
        out.push_back(base->str(base->parse(s)));
      } catch (const Error& e) {
        throw ParseError(ParseError::Kind::literal, at_line, at_col,
                         "'" + s + "' is not an element of " + base->spec() + ": " + e.what());
      }
    }
    return out;
  }

  Built spec() {
    skip_ws();
    const auto line = line_;
    const auto col = col_;
    if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
      syntax("found " + found(), keyword_names());
    auto name = ident();
    auto kw = std::find_if(std::begin(kKeywords), std::end(kKeywords), [&](const Keyword& k) { return name == k.name; });
    if (kw == std::end(kKeywords)) {
      line_ = line;
      col_ = col;
      syntax("unknown constructor '" + name + "'", keyword_names());
    }
    SpecNode node;
    node.kind = kw->kind;
    node.line = line;
    node.column = col;
    std::vector<RingPtr> kids;
    auto child = [&] {
      auto b = spec();
      node.children.push_back(std::move(b.node));
      kids.push_back(b.ring);
      return b.ring;
    };

    if (node.kind != Kind::integers) expect('(');
    switch (node.kind) {
      case Kind::integers: break;
      case Kind::zmod:
      case Kind::quat: node.ints.push_back(integer(node.kind, "integer")); break;
      case Kind::gf:
        node.ints.push_back(integer(node.kind, "integer"));
        if (peek() == ',') {
          advance();
          node.text = raw(")", "modulus");
        }
        break;
      case Kind::prod:
        argument(node.kind, "ring");
        child();
        if (peek() == ')') fail(ParseError::Kind::arity, "Prod needs at least two factors", {"','"});
        while (peek() == ',') {
          advance();
          argument(node.kind, "ring");
          child();
        }
        break;
      case Kind::mat:
      case Kind::ut:
      case Kind::hjet:
        argument(node.kind, "ring");
        child();
        comma(node.kind);
        node.ints.push_back(integer(node.kind, "integer"));
        break;
      case Kind::utc: {
        argument(node.kind, "ring");
        auto base = child();
        comma(node.kind);
        argument(node.kind, "'['");
        node.items = elements(base);
        comma(node.kind);
        node.ints.push_back(integer(node.kind, "integer"));
        break;
      }
      case Kind::triv:
        argument(node.kind, "ring");
        child();
        break;
      case Kind::trivq:
      case Kind::quot: {
        argument(node.kind, "ring");
        auto base = child();
        comma(node.kind);
        argument(node.kind, "'['");
        node.items = elements(base);
        break;
      }
      case Kind::twist:
        argument(node.kind, "ring");
        child();
        comma(node.kind);
        argument(node.kind, "endomorphism");
        node.text = raw(",)", "endomorphism");
        break;
      case Kind::freeq: {
        argument(node.kind, "ring");
        child();
        comma(node.kind);
        argument(node.kind, "'['");
        auto gl = line_, gc = col_;
        node.gens = raw_list("generator");
        std::set<std::string> seen;
        for (const auto& g : node.gens)
          if (g.size() != 1 || !std::isalpha(static_cast<unsigned char>(g[0])) || !seen.insert(g).second)
            throw ParseError(ParseError::Kind::literal, gl, gc,
                             "generators must be distinct single letters, got '" + g + "'");
        comma(node.kind);
        argument(node.kind, "'['");
        auto pl = line_, pc = col_;
        node.items = raw_list("pattern");
        for (const auto& p : node.items) {
          bool ok = std::count(p.begin(), p.end(), '*') <= 1 && p.front() != '*' && p.back() != '*';
          for (char c : p) ok = ok && (c == '*' || seen.count(std::string(1, c)));
          if (!ok)
            throw ParseError(ParseError::Kind::literal, pl, pc,
                             "pattern '" + p + "' must be a word over the generators with at most one inner '*'");
        }
        comma(node.kind);
        node.ints.push_back(integer(node.kind, "integer"));
        break;
      }
      case Kind::commq: {
        argument(node.kind, "ring");
        child();
        comma(node.kind);
        argument(node.kind, "'{'");
        expect('{');
        for (;;) {
          auto cl = line_, cc = col_;
          auto var = ident();
          expect(':');
          auto cap = integer(node.kind, "integer");
          if (cap == 0 || cap > 64) throw ParseError(ParseError::Kind::literal, cl, cc, "exponent cap must be 1..64");
          node.caps.emplace_back(var, unsigned(cap));
          if (peek() == '}') break;
          expect(',');
        }
        expect('}');
        break;
      }
      case Kind::corner: {
        argument(node.kind, "ring");
        auto base = child();
        comma(node.kind);
        argument(node.kind, "element");
        auto el = line_, ec = col_;
        auto s = raw(",)", "element");
        try {
          node.items.push_back(base->str(base->parse(s)));
        } catch (const Error& e) {
          throw ParseError(ParseError::Kind::literal, el, ec,
                           "'" + s + "' is not an element of " + base->spec() + ": " + e.what());
        }
        break;
      }
    }
    if (node.kind != Kind::integers) close(node.kind);

    RingPtr ring;
    try {
      ring = build_from(node, kids);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(ParseError::Kind::literal, line, col, e.what());
    }
    if (node.kind == Kind::gf && !node.text.empty()) node.text = after_first_comma(ring->spec());
    if (node.kind == Kind::twist) node.text = Endomorphism::parse(node.text).str();
    return {std::move(node), ring};
  }

 public:
  static RingPtr build_from(const SpecNode& n, const std::vector<RingPtr>& kids) {
    auto elems = [&](const RingPtr& base) {
      std::vector<Element> v;
      for (const auto& s : n.items) v.push_back(base->parse(s));
      return v;
    };
    switch (n.kind) {
      case Kind::integers: return make_integers();
      case Kind::zmod:
        if (n.ints[0] < 2) throw LiteralError("Zn needs n >= 2");
        return make_zmod(n.ints[0]);
      case Kind::gf:
        if (!is_prime(n.ints[0])) throw LiteralError("GF needs a prime characteristic, got " + std::to_string(n.ints[0]));
        return n.text.empty() ? make_gf(n.ints[0]) : make_gf(n.ints[0], std::string_view(n.text));
      case Kind::prod: return make_product(kids);
      case Kind::mat:
        if (n.ints[0] < 1) throw LiteralError("Mat needs size >= 1");
        return make_matrix_full(kids[0], n.ints[0]);
      case Kind::ut:
        if (n.ints[0] < 1) throw LiteralError("UT needs size >= 1");
        return make_upper_triangular(kids[0], n.ints[0]);
      case Kind::utc:
        if (n.ints[0] < 1) throw LiteralError("UTc needs size >= 1");
        return make_const_diag_ut(kids[0], elems(kids[0]), n.ints[0]);
      case Kind::triv: return make_trivial_extension(kids[0]);
      case Kind::trivq: return make_trivial_extension_quotient(kids[0], elems(kids[0]));
      case Kind::twist: return make_twisted_extension(kids[0], Endomorphism::parse(n.text));
      case Kind::freeq: {
        std::vector<char> g;
        for (const auto& s : n.gens) g.push_back(s[0]);
        if (n.ints[0] < 1) throw LiteralError("FreeQ needs a word-length cap >= 1");
        return make_free_monomial_quotient(kids[0], g, n.items, n.ints[0]);
      }
      case Kind::commq: return make_comm_monomial_quotient(kids[0], n.caps);
      case Kind::quat:
        if (n.ints[0] < 2) throw LiteralError("Quat needs n >= 2");
        return make_quaternion_mod(n.ints[0]);
      case Kind::hjet: return make_hurwitz_truncated(kids[0], n.ints[0]);
      case Kind::quot: return make_quotient_by(kids[0], elems(kids[0]));
      case Kind::corner: return make_corner(kids[0], kids[0]->parse(n.items[0]));
    }
    throw InternalError("unhandled spec kind");
  }
};

}  // namespace

SpecNode parse_ring_spec(std::string_view text) { return Parser(text).parse_all().node; }

RingPtr ring_from_spec(std::string_view text) { return Parser(text).parse_all().ring; }

RingPtr build_ring(const SpecNode& node) {
  std::vector<RingPtr> kids;
  for (const auto& c : node.children) kids.push_back(build_ring(c));
  return Parser::build_from(node, kids);
}

std::string print_ring_spec(const SpecNode& n) {
  auto kid = [&](std::size_t k) { return print_ring_spec(n.children.at(k)); };
  auto list = [](const std::vector<std::string>& v) { return "[" + join(v, ",") + "]"; };
  std::string head = std::string(name_of(n.kind)) + "(";
  switch (n.kind) {
    case Kind::integers: return "Z";
    case Kind::zmod:
    case Kind::quat: return head + std::to_string(n.ints.at(0)) + ")";
    case Kind::gf: return head + std::to_string(n.ints.at(0)) + (n.text.empty() ? "" : "," + n.text) + ")";
    case Kind::prod: {
      std::vector<std::string> v;
      for (const auto& c : n.children) v.push_back(print_ring_spec(c));
      return head + join(v, ",") + ")";
    }
    case Kind::mat:
    case Kind::ut:
    case Kind::hjet: return head + kid(0) + "," + std::to_string(n.ints.at(0)) + ")";
    case Kind::utc: return head + kid(0) + "," + list(n.items) + "," + std::to_string(n.ints.at(0)) + ")";
    case Kind::triv: return head + kid(0) + ")";
    case Kind::trivq:
    case Kind::quot: return head + kid(0) + "," + list(n.items) + ")";
    case Kind::twist: return head + kid(0) + "," + n.text + ")";
    case Kind::freeq:
      return head + kid(0) + "," + list(n.gens) + "," + list(n.items) + "," + std::to_string(n.ints.at(0)) + ")";
    case Kind::commq: {
      std::vector<std::string> v;
      for (const auto& [x, k] : n.caps) v.push_back(x + ":" + std::to_string(k));
      return head + kid(0) + ",{" + join(v, ",") + "})";
    }
    case Kind::corner: return head + kid(0) + "," + n.items.at(0) + ")";
  }
  return "?";
}

}  // namespace hurwitz
