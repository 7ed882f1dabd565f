#include <cctype>

#include "hurwitz/errors.hpp"
#include "internal.hpp"

namespace hurwitz::detail {

std::string format_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ',';
      out += rows[i][j];
    }
    out += ']';
  }
  return out + "]";
}

std::string unwrap(std::string_view text, char open, char close) {
  std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw LiteralError(std::string("expected ") + open + "..." + close + " around '" + s + "'");
  return s.substr(1, s.size() - 2);
}

std::vector<std::vector<std::string>> parse_matrix(std::string_view text, std::size_t k) {
  auto rows = split_top_level(unwrap(text, '[', ']'), ',');
  if (rows.size() != k) throw LiteralError("matrix literal must have " + std::to_string(k) + " rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    auto cells = split_top_level(unwrap(r, '[', ']'), ',');
    if (cells.size() != k)
      throw LiteralError("matrix row must have " + std::to_string(k) + " entries");
    out.push_back(cells);
  }
  return out;
}

std::string coefficient_text(const std::string& c) {
  if (c.find_first_of("+-") != std::string::npos && !(c.size() > 1 && c[0] == '-' &&
                                                       c.find_first_of("+-", 1) == std::string::npos))
    return "(" + c + ")";
  return c;
}

std::optional<std::vector<Term>> parse_terms(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) return std::nullopt;
  // split into signed chunks at depth-0 '+' / '-'
  std::vector<std::pair<bool, std::string>> chunks;
  int depth = 0;
  bool negative = false;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      bool after_caret = !cur.empty() && cur.back() == '^';
      if (!after_caret) {
        if (!cur.empty()) chunks.emplace_back(negative, cur);
        else if (i != 0) return std::nullopt;
        negative = c == '-';
        cur.clear();
        continue;
      }
    }
    cur.push_back(c);
  }
  if (cur.empty()) return std::nullopt;
  chunks.emplace_back(negative, cur);

  std::vector<Term> out;
  for (auto& [neg, chunk] : chunks) {
    Term t;
    t.negative = neg;
    for (const auto& f : split_top_level(chunk, '*')) {
      if (f.empty()) return std::nullopt;
      if (std::isdigit(static_cast<unsigned char>(f[0])) || f[0] == '(') {
        std::string c = f;
        if (c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
        t.coefficients.push_back(c);
        continue;
      }
      std::string name = f;
      unsigned exp = 1;
      if (auto caret = f.find('^'); caret != std::string::npos) {
        name = f.substr(0, caret);
        auto v = parse_integer(f.substr(caret + 1));
        if (!v || *v < 0 || *v > 1000) return std::nullopt;
        exp = v->convert_to<unsigned>();
      }
      if (name.empty()) return std::nullopt;
      for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return std::nullopt;
      t.factors.emplace_back(name, exp);
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hurwitz::detail
