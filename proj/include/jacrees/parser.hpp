#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "jacrees/polynomial.hpp"

namespace jacrees {

// Grammar (explicit `*` required, `^` binds tightest, then `*`, then `+`/`-`):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] factor | atom ['^' INT]
//   atom   := '(' expr ')' | IDENT | INT ['/' INT]
// INT is an unsigned decimal literal; INT '/' INT is a rational coefficient.

namespace detail {

template <class F>
class ExprParser {
 public:
  ExprParser(const std::string& text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Polynomial<F> run() {
    skip_ws();
    Polynomial<F> p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  const std::string& text_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial<F> parse_expr() {
    bool negate = accept('-');
    Polynomial<F> p = parse_term();
    if (negate) p = neg(p);
    for (;;) {
      if (accept('+'))
        p = add(p, parse_term());
      else if (accept('-'))
        p = sub(p, parse_term());
      else
        return p;
    }
  }

  Polynomial<F> parse_term() {
    Polynomial<F> p = parse_factor();
    while (accept('*')) p = mul(p, parse_factor());
    return p;
  }

  Polynomial<F> parse_factor() {
    if (accept('-')) return neg(parse_factor());
    Polynomial<F> base = parse_atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      unsigned long e = parse_uint("exponent");
      if (e > 60000) throw ParseError("exponent too large", at);
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial<F> parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> p = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  unsigned long parse_uint(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(std::string("expected ") + what, pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::stoul(text_.substr(start, pos_ - start));
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial<F> parse_number() {
    std::string num = parse_digits();
    std::string den = "1";
    if (peek('/')) {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected denominator digits", at);
      den = parse_digits();
      if (den == "0") throw ParseError("zero denominator", at);
    }
    mpq_class q(mpz_class(num), mpz_class(den));
    q.canonicalize();
    return poly_const(ring_, ring_->field.from_rational(q));
  }

  Polynomial<F> parse_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    int idx = ring_->var_index(name);
    if (idx < 0) throw ParseError("unknown identifier '" + name + "'", start);
    return poly_var(ring_, idx);
  }
};

}  // namespace detail

/// Total on valid input; throws ParseError with a position otherwise.
template <class F>
Polynomial<F> parse_polynomial(const std::string& text, const RingPtr<F>& ring) {
  return detail::ExprParser<F>(text, ring).run();
}

}  // namespace jacrees
