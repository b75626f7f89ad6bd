// Plain-text polynomial expressions and ideal generator lists.
//
//   ideal   := poly ("," poly)*  |  "(" poly ("," poly)* ")"
//   poly    := sign? term (sign term)*
//   sign    := "+" | "-"
//   term    := factor ("*" factor)*
//   factor  := primary ("^" integer)?
//   primary := integer | identifier | "(" poly ")"
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]*, so a product must be written
// with "*" ("x*y", not "xy"). Whitespace is ignored.
#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorext/multipoly.hpp"

namespace gorext {

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

struct ParsedIdeal {
  std::vector<std::string> variables;
  std::vector<MultiPoly> generators;
};

namespace detail {

struct Token {
  enum Kind { Int, Ident, Op, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*^(),").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
public:
  Parser(const std::vector<Token>& toks, PrimeField field, const std::vector<std::string>& vars)
      : t_(toks), F_(field), vars_(vars) {}

  std::vector<MultiPoly> ideal() {
    std::vector<MultiPoly> gens;
    bool wrapped = false;
    if (peek_op("(") && outer_parens_wrap_list()) {
      ++k_;
      wrapped = true;
    }
    gens.push_back(poly());
    while (peek_op(",")) {
      ++k_;
      gens.push_back(poly());
    }
    if (wrapped) expect(")");
    if (t_[k_].kind != Token::End) throw ParseError("unexpected '" + t_[k_].text + "'", t_[k_].pos);
    return gens;
  }

private:
  bool peek_op(const char* op) const { return t_[k_].kind == Token::Op && t_[k_].text == op; }
  void expect(const char* op) {
    if (!peek_op(op)) throw ParseError(std::string("expected '") + op + "'", t_[k_].pos);
    ++k_;
  }

  // True when the leading "(" closes at the final token and encloses a top-level comma.
  bool outer_parens_wrap_list() const {
    int depth = 0;
    bool comma = false;
    for (std::size_t j = k_; j < t_.size(); ++j) {
      if (t_[j].kind != Token::Op) continue;
      if (t_[j].text == "(") ++depth;
      else if (t_[j].text == ")") {
        if (--depth == 0) return comma && t_[j + 1].kind == Token::End;
      } else if (t_[j].text == "," && depth == 1) {
        comma = true;
      }
    }
    return false;
  }

  MultiPoly poly() {
    MultiPoly acc(F_, vars_.size());
    bool negate = false;
    if (peek_op("+") || peek_op("-")) {
      negate = t_[k_].text == "-";
      ++k_;
    }
    acc = acc.add_scaled(term(), negate ? F_.neg(1) : 1);
    while (peek_op("+") || peek_op("-")) {
      negate = t_[k_].text == "-";
      ++k_;
      acc = acc.add_scaled(term(), negate ? F_.neg(1) : 1);
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (peek_op("*")) {
      ++k_;
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (peek_op("^")) {
      ++k_;
      if (t_[k_].kind != Token::Int) throw ParseError("expected exponent", t_[k_].pos);
      if (t_[k_].text.size() > 4) throw ParseError("exponent too large", t_[k_].pos);
      const unsigned e = static_cast<unsigned>(std::stoul(t_[k_].text));
      ++k_;
      return base.pow(e);
    }
    return base;
  }

  MultiPoly primary() {
    const Token& tk = t_[k_];
    if (tk.kind == Token::Int) {
      ++k_;
      std::uint64_t v = 0;
      for (char ch : tk.text) v = (v * 10 + static_cast<unsigned>(ch - '0')) % F_.characteristic();
      return MultiPoly::constant(F_, vars_.size(), static_cast<Scalar>(v));
    }
    if (tk.kind == Token::Ident) {
      ++k_;
      auto it = std::find(vars_.begin(), vars_.end(), tk.text);
      if (it == vars_.end()) throw ParseError("unknown variable '" + tk.text + "'", tk.pos);
      return MultiPoly::term(F_, Monomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin())), 1);
    }
    if (peek_op("(")) {
      ++k_;
      MultiPoly p = poly();
      expect(")");
      return p;
    }
    throw ParseError(tk.kind == Token::End ? "unexpected end of input" : "unexpected '" + tk.text + "'", tk.pos);
  }

  const std::vector<Token>& t_;
  std::size_t k_ = 0;
  PrimeField F_;
  const std::vector<std::string>& vars_;
};

}  // namespace detail

/// Parses a generator list. Without `variables`, the identifiers that occur
/// are taken as the variables in alphabetical order.
inline ParsedIdeal parse_ideal(const std::string& text, PrimeField field,
                               std::optional<std::vector<std::string>> variables = std::nullopt) {
  auto toks = detail::tokenize(text);
  ParsedIdeal out;
  if (variables) {
    out.variables = *variables;
  } else {
    std::set<std::string> names;
    for (const auto& t : toks)
      if (t.kind == detail::Token::Ident) names.insert(t.text);
    out.variables.assign(names.begin(), names.end());
  }
  detail::Parser p(toks, field, out.variables);
  out.generators = p.ideal();
  return out;
}

inline MultiPoly parse_poly(const std::string& text, PrimeField field, const std::vector<std::string>& variables) {
  auto parsed = parse_ideal(text, field, variables);
  if (parsed.generators.size() != 1) throw ParseError("expected a single polynomial", 0);
  return parsed.generators.front();
}

}  // namespace gorext
