#include "weyl/parse.hpp"

#include <cctype>

namespace weyl {

namespace {

class Parser {
 public:
  Parser(const std::string& s, Space space) : s_(s), space_(space) {}

  Poly run() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

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

  Poly expr() {
    Poly r = term();
    for (;;) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  Poly term() {
    Poly r = factor();
    for (;;) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = factor();
        if (d.degree() > 0) throw ParseError("division by a non-constant", at);
        Scalar c = eval_zero(d);
        if (c.is_zero()) throw ParseError("division by zero", at);
        r *= Scalar(1) / c;
      } else {
        return r;
      }
    }
  }

  Poly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      if (e > 10000) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Poly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(s_.substr(start, pos_ - start));
      return Poly::constant(space_, Scalar(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return Poly::constant(space_, Scalar::i());
      for (unsigned v = 0; v < space_.nvars(); ++v)
        if (space_.var_name(v) == name) return Poly::variable(space_, v);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  Space space_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expression(const std::string& text, Space space) { return Parser(text, space).run(); }

Scalar parse_scalar(const std::string& text) {
  Poly p = parse_expression(text, Space::plain(1));
  if (p.degree() > 0) throw ParseError("expected a constant", 0);
  return eval_zero(p);
}

}  // namespace weyl
