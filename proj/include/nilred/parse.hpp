#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilred/polynomial.hpp"

namespace nilred {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

namespace detail {

enum class Tok { ident, integer, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  Lexer(std::string_view src, int line0 = 1) : src_(src), line_(line0) {}

  Token next() {
    skip_ws();
    int l = line_, c = col_;
    if (pos_ >= src_.size()) return {Tok::end, "", l, c};
    char ch = src_[pos_];
    auto one = [&](Tok k) {
      advance();
      return Token{k, std::string(1, ch), l, c};
    };
    switch (ch) {
      case '+': return one(Tok::plus);
      case '-': return one(Tok::minus);
      case '*': return one(Tok::star);
      case '/': return one(Tok::slash);
      case '^': return one(Tok::caret);
      case '(': return one(Tok::lparen);
      case ')': return one(Tok::rparen);
      default: break;
    }
    if (ch >= '0' && ch <= '9') {
      std::string t;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
        t.push_back(src_[pos_]);
        advance();
      }
      return {Tok::integer, t, l, c};
    }
    if (is_ident_start(ch)) {
      std::string t;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
        t.push_back(src_[pos_]);
        advance();
      }
      return {Tok::ident, t, l, c};
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
  }

private:
  std::string_view src_;
  size_t pos_ = 0;
  int line_, col_ = 1;

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

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
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' || src_[pos_] == '\n'))
      advance();
  }
};

template <class K>
class PolyParser {
public:
  PolyParser(std::string_view src, RingPtr ring, int line0)
      : lex_(src, line0), ring_(std::move(ring)) {
    cur_ = lex_.next();
  }

  Polynomial<K> parse() {
    auto p = expr();
    if (cur_.kind != Tok::end) throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.line, cur_.col);
    return p;
  }

private:
  Lexer lex_;
  Token cur_;
  RingPtr ring_;

  void bump() { cur_ = lex_.next(); }

  Polynomial<K> expr() {
    bool neg = false;
    if (cur_.kind == Tok::minus) {
      neg = true;
      bump();
    }
    Polynomial<K> acc = term();
    if (neg) acc = -acc;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool sub = cur_.kind == Tok::minus;
      bump();
      Polynomial<K> t = term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
      bool div = cur_.kind == Tok::slash;
      Token op = cur_;
      bump();
      Polynomial<K> f = factor();
      if (div) {
        // division only by a nonzero constant; this is how fractional
        // coefficients are written, e.g. 1/2*x
        if (!f.is_constant())
          throw ParseError("division is only defined by constants", op.line, op.col);
        K c = f.constant_value();
        if (c.is_zero())
          throw ParseError(ring_->field.kind == FieldSpec::Kind::prime_field
                               ? "coefficient not reducible mod " + std::to_string(ring_->field.p)
                               : "division by zero",
                           op.line, op.col);
        acc = acc * (K(1) / c);
      } else {
        acc = acc * f;
      }
    }
    return acc;
  }

  Polynomial<K> factor() {
    if (cur_.kind == Tok::minus) {
      bump();
      return -factor();
    }
    Polynomial<K> a = atom();
    if (cur_.kind == Tok::caret) {
      bump();
      if (cur_.kind != Tok::integer)
        throw ParseError("'^' requires a non-negative integer exponent", cur_.line, cur_.col);
      BigInt e = BigInt::from_decimal(cur_.text);
      if (!e.fits_int64() || e.to_int64() > 0xffff)
        throw ParseError("exponent too large", cur_.line, cur_.col);
      bump();
      return a.pow(static_cast<unsigned>(e.to_int64()));
    }
    return a;
  }

  Polynomial<K> atom() {
    switch (cur_.kind) {
      case Tok::ident: {
        size_t idx = ring_->var_index(cur_.text);
        if (idx == Ring::npos)
          throw ParseError("unknown identifier '" + cur_.text + "'", cur_.line, cur_.col);
        bump();
        return Polynomial<K>::variable(ring_, idx);
      }
      case Tok::integer: {
        BigInt v = BigInt::from_decimal(cur_.text);
        bump();
        return Polynomial<K>::constant(ring_, FieldTraits<K>::from_bigint(v, ring_->field));
      }
      case Tok::lparen: {
        bump();
        Polynomial<K> p = expr();
        if (cur_.kind != Tok::rparen) throw ParseError("expected ')'", cur_.line, cur_.col);
        bump();
        return p;
      }
      default:
        throw ParseError("expected identifier, integer, or '('", cur_.line, cur_.col);
    }
  }
};

}  // namespace detail

/// Parses one polynomial in the ring's variables. line0 sets the reported
/// line number (useful when parsing a line inside a larger file).
template <class K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr& ring, int line0 = 1) {
  if (FieldTraits<K>::kind != ring->field.kind)
    throw std::logic_error("parse_poly: scalar type does not match ring field");
  detail::PolyParser<K> p(text, ring, line0);
  return p.parse();
}

/// Header line of the ideal file format: "ring: <var> <var> ... over Q|Fp:<p>".
inline std::pair<std::vector<std::string>, FieldSpec> parse_ring_header(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string word;
  if (!(in >> word) || word != "ring:")
    throw std::invalid_argument("ideal file: expected header 'ring: <vars> over <field>'");
  std::vector<std::string> vars;
  bool saw_over = false;
  while (in >> word) {
    if (word == "over") {
      saw_over = true;
      break;
    }
    vars.push_back(word);
  }
  if (!saw_over || vars.empty()) throw std::invalid_argument("ideal file: malformed header");
  if (!(in >> word)) throw std::invalid_argument("ideal file: missing field after 'over'");
  return {vars, FieldSpec::parse(word)};
}

/// Body of an ideal file: one generator per line, '#' starts a comment.
template <class K>
std::vector<Polynomial<K>> parse_ideal_body(std::string_view text, const RingPtr& ring, int first_line) {
  std::vector<Polynomial<K>> gens;
  size_t pos = 0;
  int line_no = first_line;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string_view::npos) {
      size_t b = line.find_last_not_of(" \t\r");
      gens.push_back(parse_poly<K>(line.substr(a, b - a + 1), ring, line_no));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++line_no;
  }
  return gens;
}

template <class K>
std::string write_ideal_text(const RingPtr& ring, const std::vector<Polynomial<K>>& gens) {
  std::string out = "ring:";
  for (auto& v : ring->vars) out += " " + v;
  out += " over " + ring->field.to_string() + "\n";
  for (auto& g : gens) out += g.to_string() + "\n";
  return out;
}

}  // namespace nilred
