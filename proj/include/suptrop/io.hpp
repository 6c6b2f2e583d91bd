#pragma once

// Plain-text formats: matrices (one row per line, whitespace-separated scalar
// tokens) and elementary words (one generator per line, 1-based indices).
// Blank lines and '#' comments are ignored in both.

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "suptrop/elementary.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/semiring.hpp"

namespace suptrop {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) l.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!l.tokens.empty()) lines.push_back(std::move(l));
    if (text.empty()) break;
  }
  return lines;
}

inline TropElem scalar_at(const Token& t, std::size_t line) {
  auto v = try_parse_scalar(t.text);
  if (!v) throw ParseError("bad scalar token '" + std::string(t.text) + "'", line, t.column);
  return *v;
}

inline std::size_t index_at(const Token& t, std::size_t line) {
  std::size_t v = 0;
  const auto* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v == 0)
    throw ParseError("bad index '" + std::string(t.text) + "' (indices are 1-based)", line, t.column);
  return v - 1;
}

}  // namespace detail

/// Square matrix from whitespace-separated rows.
inline Matrix parse_matrix(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty matrix", 1, 1);
  const std::size_t n = lines.front().tokens.size();
  for (const auto& l : lines)
    if (l.tokens.size() != n) {
      const std::size_t col = l.tokens.size() < n ? (l.tokens.back().column + l.tokens.back().text.size())
                                                  : l.tokens[n].column;
      throw ParseError("row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(n),
                       l.number, col);
    }
  if (lines.size() != n)
    throw ParseError("matrix has " + std::to_string(lines.size()) + " rows and " + std::to_string(n) + " columns",
                     lines.back().number, 1);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = detail::scalar_at(lines[i].tokens[j], lines[i].number);
  return m;
}

inline std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

/// `T i j`, `D i a` or `G i j a` per line.
inline ElemWord parse_word(std::string_view text) {
  ElemWord w;
  for (const auto& l : detail::tokenize(text)) {
    const auto& t = l.tokens;
    auto expect = [&](std::size_t count) {
      if (t.size() != count)
        throw ParseError("generator '" + std::string(t[0].text) + "' takes " + std::to_string(count - 1) +
                             " arguments",
                         l.number, t[0].column);
    };
    if (t[0].text == "T") {
      expect(3);
      w.push_back(Transposition{detail::index_at(t[1], l.number), detail::index_at(t[2], l.number)});
    } else if (t[0].text == "D") {
      expect(3);
      const TropElem a = detail::scalar_at(t[2], l.number);
      if (!a.is_tangible()) throw ParseError("diagonal multiplier must be tangible", l.number, t[2].column);
      w.push_back(DiagMult{detail::index_at(t[1], l.number), a});
    } else if (t[0].text == "G") {
      expect(4);
      const std::size_t i = detail::index_at(t[1], l.number), j = detail::index_at(t[2], l.number);
      if (i == j) throw ParseError("Gaussian generator needs i != j", l.number, t[2].column);
      w.push_back(Gaussian{i, j, detail::scalar_at(t[3], l.number)});
    } else {
      throw ParseError("unknown generator '" + std::string(t[0].text) + "' (expected T, D or G)", l.number,
                       t[0].column);
    }
  }
  return w;
}

inline std::string format_gen(const ElemGen& g) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Transposition>)
          return "T " + std::to_string(x.i + 1) + " " + std::to_string(x.j + 1);
        else if constexpr (std::is_same_v<T, DiagMult>)
          return "D " + std::to_string(x.i + 1) + " " + to_string(x.a);
        else
          return "G " + std::to_string(x.i + 1) + " " + std::to_string(x.j + 1) + " " + to_string(x.a);
      },
      g);
}

inline std::string format_word(const ElemWord& w) {
  std::string out;
  for (const auto& g : w) out += format_gen(g) + "\n";
  return out;
}

}  // namespace suptrop
