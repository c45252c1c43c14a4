#include "eqsing/parse.hpp"

#include <cctype>
#include <map>

namespace eqsing {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MPoly run() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    skip();
    MPoly acc = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MPoly factor() {
    MPoly b = base();
    if (accept('^')) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-')
        throw ParseError(ParseError::Kind::NegativeExponent, pos_, "negative exponent");
      mpz_class e = natural();
      if (e > 10000) fail("exponent too large");
      b = pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  MPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num = natural();
      mpz_class den = 1;
      if (accept('/')) {
        den = natural();
        if (den == 0) fail("zero denominator");
      }
      return MPoly(mpq_class(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return MPoly::symbol(static_cast<Var>(i));
      throw ParseError(ParseError::Kind::UnknownVariable, start, "unknown variable '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

BiPoly to_bipoly(const MPoly& p) {
  BiPoly r;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors())
      if (v > 1) throw std::invalid_argument("to_bipoly: polynomial mentions more than two variables");
    r += BiPoly::monomial(Scalar(c), m.degree(0), m.degree(1));
  }
  return r;
}

BiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  if (variables.size() != 2) throw std::invalid_argument("parse_poly: expected two variable names");
  return to_bipoly(parse_expression(text, variables));
}

BiPoly compose_ambient(const MPoly& p, const std::vector<BiPoly>& values) {
  BiPoly r;
  std::map<std::pair<Var, unsigned>, BiPoly> cache;
  for (const auto& [m, c] : p.terms()) {
    BiPoly t{Scalar(c)};
    for (const auto& [v, e] : m.factors()) {
      if (v >= values.size()) throw std::invalid_argument("compose_ambient: variable out of range");
      auto key = std::pair(v, e);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, pow(values[v], e)).first;
      t = t * it->second;
    }
    r += t;
  }
  return r;
}

}  // namespace eqsing
