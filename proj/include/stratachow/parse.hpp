#pragma once
// Expression parsing and canonical printing.
//
// Grammar (whitespace insignificant):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | identifier | '(' expr ')'
//   rational := int ('/' nat)?

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "stratachow/poly.hpp"

namespace stratachow {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        Polynomial t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::size_t start = pos_;
      unsigned long n = natural();
      if (n > 256) throw ParseError("exponent too large", start);
      return b.pow(static_cast<unsigned>(n));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      get();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string id = identifier();
      auto idx = ring_->index_of(id);
      if (!idx) throw ParseError("unknown variable '" + id + "'", start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(*idx));
    }
    throw ParseError(std::string("unexpected character '") + (c ? std::string(1, c) : "<end>") + "'", pos_);
  }

  Polynomial rational_literal() {
    std::string num = digits();
    skip_ws();
    if (peek() == '/') {
      // Lookahead: "a/b" is a rational only when b is a bare natural; the
      // grammar never places '/' elsewhere, so consume it.
      get();
      skip_ws();
      std::size_t start = pos_;
      std::string den = digits();
      if (den.empty()) throw ParseError("expected denominator", start);
      Rational r = Rational::from_string(num + "/" + den);
      return Polynomial::constant(ring_, r);
    }
    return Polynomial::constant(ring_, Rational::from_string(num));
  }

  std::string digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += text_[pos_++];
    if (s.empty()) throw ParseError("expected digits", pos_);
    return s;
  }
  unsigned long natural() { return std::stoul(digits()); }
  std::string identifier() {
    std::string s;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      s += text_[pos_++];
    return s;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return detail::ExprParser(text, ring).parse();
}

// Deterministic canonical form: terms in descending weighted-grevlex order,
// reduced fractional coefficients, explicit '*' and '^'. Round-trips through
// parse_polynomial bit-exactly.
inline std::string print_canonical(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) { out << "-"; mag = -c; }
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    std::string mono;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.ring()->name(i);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty()) {
      out << mag.str();
    } else if (mag.is_one()) {
      out << mono;
    } else {
      out << mag.str() << "*" << mono;
    }
    first = false;
  }
  return out.str();
}

}  // namespace stratachow
