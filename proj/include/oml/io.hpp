#pragma once

// Line-oriented text formats for lattices and context hypergraphs, plus DOT
// emission of Hasse diagrams.
//
// Lattice document:                 Hypergraph document:
//   format 1                          format 1
//   elements 0 a b 1                  atoms a b c d e
//   cover 0 a                         block a b c
//   ortho a b                         block c d e
//
// `#` starts a comment. Declarations may span several `elements` / `atoms`
// lines; indices follow declaration order.

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oml/error.hpp"
#include "oml/hypergraph.hpp"
#include "oml/lattice.hpp"

namespace oml {

inline constexpr int kFormatVersion = 1;

namespace detail {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] inline void syntax(const Line& line, const Token& tok, const std::string& msg) {
  throw ParseError(ErrorKind::SyntaxError, line.number, tok.column, msg);
}

[[noreturn]] inline void semantic(const Line& line, const Token& tok, const std::string& msg) {
  throw ParseError(ErrorKind::SemanticError, line.number, tok.column, msg);
}

inline void check_format(const Line& line) {
  if (line.tokens.size() != 2) syntax(line, line.tokens[0], "expected 'format <version>'");
  if (line.tokens[1].text != std::to_string(kFormatVersion))
    syntax(line, line.tokens[1], "unsupported format version '" + line.tokens[1].text + "'");
}

}  // namespace detail

inline FiniteOrtholattice parse_lattice(std::string_view text) {
  using namespace detail;
  std::vector<std::string> names;
  std::unordered_map<std::string, Element> index;
  std::vector<std::pair<Element, Element>> covers, orthos;
  std::size_t last_line = 1;

  auto lookup = [&](const Line& line, const Token& tok) {
    auto it = index.find(tok.text);
    if (it == index.end()) semantic(line, tok, "undeclared element '" + tok.text + "'");
    return it->second;
  };

  for (const auto& line : tokenize(text)) {
    last_line = line.number;
    const auto& head = line.tokens[0];
    if (head.text == "format") {
      check_format(line);
    } else if (head.text == "elements" || head.text == "element") {
      if (line.tokens.size() < 2) syntax(line, head, "expected at least one element name");
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& tok = line.tokens[i];
        if (!index.emplace(tok.text, static_cast<Element>(names.size())).second)
          semantic(line, tok, "element '" + tok.text + "' declared twice");
        names.push_back(tok.text);
      }
    } else if (head.text == "cover" || head.text == "ortho") {
      if (line.tokens.size() != 3) syntax(line, head, "expected '" + head.text + " <x> <y>'");
      const Element x = lookup(line, line.tokens[1]);
      const Element y = lookup(line, line.tokens[2]);
      if (head.text == "cover") {
        if (x == y) semantic(line, line.tokens[2], "an element cannot cover itself");
        covers.emplace_back(x, y);
      } else {
        if (x == y) semantic(line, line.tokens[2], "'" + names[x] + "' paired with itself violates x ∧ ¬x = 0");
        orthos.emplace_back(x, y);
      }
    } else {
      syntax(line, head, "unknown directive '" + head.text + "'");
    }
  }
  try {
    return build_from_covers(covers, orthos, names);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ErrorKind::SemanticError, last_line, 1, e.what());
  }
}

/// Canonical text: declarations in index order, covers and ortho pairs sorted.
inline std::string emit_lattice(const FiniteOrtholattice& L) {
  std::ostringstream out;
  out << "format " << kFormatVersion << "\nelements";
  for (const auto& name : L.labels()) out << ' ' << name;
  out << '\n';
  for (auto [x, y] : L.covers()) out << "cover " << L.label(x) << ' ' << L.label(y) << '\n';
  for (auto [x, y] : L.ortho_pairs()) out << "ortho " << L.label(x) << ' ' << L.label(y) << '\n';
  return out.str();
}

inline ContextHypergraph parse_hypergraph(std::string_view text) {
  using namespace detail;
  ContextHypergraph H;
  std::unordered_map<std::string, Atom> index;
  std::size_t last_line = 1;
  for (const auto& line : tokenize(text)) {
    last_line = line.number;
    const auto& head = line.tokens[0];
    if (head.text == "format") {
      check_format(line);
    } else if (head.text == "atoms" || head.text == "atom") {
      if (line.tokens.size() < 2) syntax(line, head, "expected at least one atom name");
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& tok = line.tokens[i];
        if (!index.emplace(tok.text, static_cast<Atom>(H.labels.size())).second)
          semantic(line, tok, "atom '" + tok.text + "' declared twice");
        H.labels.push_back(tok.text);
      }
    } else if (head.text == "block") {
      if (line.tokens.size() < 3) syntax(line, head, "a block needs at least two atoms");
      std::vector<Atom> block;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& tok = line.tokens[i];
        auto it = index.find(tok.text);
        if (it == index.end()) semantic(line, tok, "undeclared atom '" + tok.text + "'");
        if (std::find(block.begin(), block.end(), it->second) != block.end())
          semantic(line, tok, "atom '" + tok.text + "' repeated within a block");
        block.push_back(it->second);
      }
      std::sort(block.begin(), block.end());
      H.blocks.push_back(std::move(block));
    } else {
      syntax(line, head, "unknown directive '" + head.text + "'");
    }
  }
  H.atom_count = H.labels.size();
  try {
    validate(H);
  } catch (const Error& e) {
    throw ParseError(ErrorKind::SemanticError, last_line, 1, e.what());
  }
  return H;
}

inline std::string emit_hypergraph(const ContextHypergraph& H) {
  std::ostringstream out;
  out << "format " << kFormatVersion << "\natoms";
  for (Atom a = 0; a < H.atom_count; ++a) out << ' ' << H.label(a);
  out << '\n';
  for (const auto& b : H.blocks) {
    out << "block";
    for (Atom a : b) out << ' ' << H.label(a);
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Hasse diagram: one node per element, one edge per cover pair, bottom up.
inline std::string to_dot(const FiniteOrtholattice& L, const std::string& name = "lattice") {
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Element x = 0; x < L.size(); ++x) out << "  n" << x << " [label=\"" << detail::dot_escape(L.label(x)) << "\"];\n";
  for (auto [x, y] : L.covers()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace oml
