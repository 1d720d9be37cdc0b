#ifndef MICROLOG_SYNTAX_HPP
#define MICROLOG_SYNTAX_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "microlog/formula.hpp"
#include "microlog/sequent.hpp"

// Concrete syntax, loosest to tightest binding:
//
//   iff   := imp ("<->" imp)*      left-assoc
//   imp   := or ("->" imp)?        right-assoc
//   or    := and ("|" and)*        left-assoc
//   and   := unary ("&" unary)*    left-assoc
//   unary := "~" unary | "false" | "true" | ident | "(" iff ")"
//
// Unicode aliases: ¬ ∧ ∨ → ↔ ⊤ ⊥.
namespace microlog {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : std::runtime_error("at position " + std::to_string(position) + ": expected " + expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

namespace syntax_detail {

// Bounds parser recursion on inputs like "((((...".
inline constexpr std::size_t kMaxParenDepth = 1000;

enum class Tok { ident, kw_true, kw_false, neg, conj, disj, implies, iff, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "identifier '" + std::string(t.text) + "'";
    default: return "'" + std::string(t.text) + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) return {Tok::end, start, {}};

    struct Alias {
      std::string_view spelling;
      Tok kind;
    };
    static constexpr Alias kSymbols[] = {
        {"<->", Tok::iff},       {"->", Tok::implies},       {"~", Tok::neg},
        {"&", Tok::conj},        {"|", Tok::disj},           {"(", Tok::lparen},
        {")", Tok::rparen},      {"¬", Tok::neg},       {"∧", Tok::conj},
        {"∨", Tok::disj},   {"→", Tok::implies},   {"↔", Tok::iff},
        {"⊤", Tok::kw_true}, {"⊥", Tok::kw_false},
    };
    for (const Alias& a : kSymbols) {
      if (text_.substr(pos_).starts_with(a.spelling)) {
        pos_ += a.spelling.size();
        return {a.kind, start, text_.substr(start, a.spelling.size())};
      }
    }

    if (is_ident_start(text_[pos_])) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      Tok kind = word == "true" ? Tok::kw_true : word == "false" ? Tok::kw_false : Tok::ident;
      return {kind, start, word};
    }

    std::size_t len = utf8_length(static_cast<unsigned char>(text_[pos_]));
    std::string_view bad = text_.substr(start, std::min(len, text_.size() - start));
    throw ParseError(start, "a formula", "'" + std::string(bad) + "'");
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
  static std::size_t utf8_length(unsigned char lead) {
    if (lead >= 0xF0) return 4;
    if (lead >= 0xE0) return 3;
    if (lead >= 0xC0) return 2;
    return 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ExtFormula parse_all() {
    if (current_.kind == Tok::end) throw ParseError(current_.pos, "a formula", "end of input");
    ExtFormula e = parse_iff();
    if (current_.kind != Tok::end) throw ParseError(current_.pos, "an operator or end of input", describe(current_));
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  ExtFormula parse_iff() {
    ExtFormula lhs = parse_imp();
    while (current_.kind == Tok::iff) {
      advance();
      lhs = ExtFormula::iff(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  ExtFormula parse_imp() {
    std::vector<ExtFormula> chain{parse_or()};
    while (current_.kind == Tok::implies) {
      advance();
      chain.push_back(parse_or());
    }
    ExtFormula out = std::move(chain.back());
    for (std::size_t k = chain.size() - 1; k-- > 0;) out = ExtFormula::implies(std::move(chain[k]), std::move(out));
    return out;
  }

  ExtFormula parse_or() {
    ExtFormula lhs = parse_and();
    while (current_.kind == Tok::disj) {
      advance();
      lhs = ExtFormula::disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  ExtFormula parse_and() {
    ExtFormula lhs = parse_unary();
    while (current_.kind == Tok::conj) {
      advance();
      lhs = ExtFormula::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  ExtFormula parse_unary() {
    std::size_t negations = 0;
    while (current_.kind == Tok::neg) {
      ++negations;
      advance();
    }
    ExtFormula e = parse_primary();
    while (negations-- > 0) e = ExtFormula::negation(std::move(e));
    return e;
  }

  ExtFormula parse_primary() {
    Token t = current_;
    switch (t.kind) {
      case Tok::kw_false:
        advance();
        return ExtFormula::bottom();
      case Tok::kw_true:
        advance();
        return ExtFormula::top();
      case Tok::ident:
        advance();
        return ExtFormula::atom(std::string(t.text));
      case Tok::lparen: {
        if (depth_ == kMaxParenDepth)
          throw ParseError(t.pos, "at most " + std::to_string(kMaxParenDepth) + " nested parentheses", "'('");
        ++depth_;
        advance();
        ExtFormula inner = parse_iff();
        if (current_.kind != Tok::rparen) throw ParseError(current_.pos, "')'", describe(current_));
        advance();
        --depth_;
        return inner;
      }
      default:
        throw ParseError(t.pos, "a proposition, 'true', 'false', '~' or '('", describe(t));
    }
  }

  Lexer lexer_;
  Token current_{Tok::end, 0, {}};
  std::size_t depth_ = 0;
};

inline int precedence(const ExtFormula& e) {
  if (const auto* b = std::get_if<ExtFormula::Binary>(&e.node())) {
    switch (b->op) {
      case Connective::iff: return 1;
      case Connective::implies: return 2;
      case Connective::disj: return 3;
      case Connective::conj: return 4;
    }
  }
  return 5;
}

inline std::string_view spelling(Connective op) {
  switch (op) {
    case Connective::conj: return " & ";
    case Connective::disj: return " | ";
    case Connective::implies: return " -> ";
    case Connective::iff: return " <-> ";
  }
  return " ? ";
}

inline void print(const ExtFormula& e, std::string& out);

inline void print_operand(const ExtFormula& e, bool parens, std::string& out) {
  if (parens) out += '(';
  print(e, out);
  if (parens) out += ')';
}

inline void print(const ExtFormula& e, std::string& out) {
  e.visit(overloaded{
      [&](const ExtFormula::Atom& a) { out += a.id.name(); },
      [&](const ExtFormula::Bottom&) { out += "false"; },
      [&](const ExtFormula::Top&) { out += "true"; },
      [&](const ExtFormula::Not& n) {
        out += '~';
        print_operand(n.operand, precedence(n.operand) < 5, out);
      },
      [&](const ExtFormula::Binary& b) {
        const int p = precedence(e);
        const bool right_assoc = b.op == Connective::implies;
        print_operand(b.lhs, right_assoc ? precedence(b.lhs) <= p : precedence(b.lhs) < p, out);
        out += spelling(b.op);
        print_operand(b.rhs, right_assoc ? precedence(b.rhs) < p : precedence(b.rhs) <= p, out);
      },
  });
}

}  // namespace syntax_detail

inline ExtFormula parse(std::string_view text) { return syntax_detail::Parser(text).parse_all(); }

// Minimal parenthesization; parse(pretty(e)) == e.
inline std::string pretty(const ExtFormula& e) {
  std::string out;
  syntax_detail::print(e, out);
  return out;
}

inline std::string pretty(const Formula& f) { return pretty(to_ext(f)); }

inline std::ostream& operator<<(std::ostream& os, const PropId& id) { return os << id.name(); }
inline std::ostream& operator<<(std::ostream& os, const ExtFormula& e) { return os << pretty(e); }
inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << pretty(f); }

// "p=true q=false" over the given atoms.
inline std::string describe_assignment(const Interpretation& i, const std::set<PropId>& atom_set) {
  std::string out;
  for (const PropId& a : atom_set) {
    if (!out.empty()) out += ' ';
    out += a.name();
    out += i.holds(a) ? "=true" : "=false";
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Interpretation& i) {
  os << '{';
  bool first = true;
  for (const PropId& a : i.true_props()) {
    os << (first ? "" : ", ") << a.name();
    first = false;
  }
  return os << '}';
}

namespace syntax_detail {
template <typename Range>
std::string join(const Range& items) {
  std::string out;
  for (const auto& x : items) {
    if (!out.empty()) out += ", ";
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PropId>)
      out += x.name();
    else
      out += pretty(x);
  }
  return out;
}
}  // namespace syntax_detail

// "a=[p] c=[q -> p] |- b=[] d=[p]"
inline std::string to_string(const Sequent& s) {
  using syntax_detail::join;
  return "a=[" + join(s.a) + "] c=[" + join(s.c) + "] |- b=[" + join(s.b) + "] d=[" + join(s.d) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << to_string(s); }

}  // namespace microlog

#endif  // MICROLOG_SYNTAX_HPP
