#include "qres/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace qres {

namespace {

class Parser {
public:
  Parser(const std::string &src, RingPtr ring)
      : src_(src), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_ws();
    Polynomial f = expr();
    skip_ws();
    if (pos_ != src_.size())
      error("end of input");
    return f;
  }

private:
  const std::string &src_;
  RingPtr ring_;
  size_t pos_ = 0;

  [[noreturn]] void error(const std::string &expected) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string found =
        pos_ < src_.size() ? std::string("'") + src_[pos_] + "'" : "end of input";
    fail(ErrorCategory::parse, "line " + std::to_string(line) + ", column " +
                                   std::to_string(col) + ": expected " +
                                   expected + ", found " + found);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial f = term();
    while (true) {
      if (eat('+'))
        f = f + term();
      else if (eat('-'))
        f = f - term();
      else
        return f;
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (eat('*'))
      f = f * factor();
    return f;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        error("a natural-number exponent");
      return base.pow(natural());
    }
    return base;
  }

  uint64_t natural() {
    uint64_t value = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      uint64_t digit = uint64_t(src_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10)
        error("a smaller number");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!eat(')'))
        error("')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t n = natural();
      return Polynomial::constant(ring_,
                                  int64_t(n % uint64_t(ring_->p())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
            d == '\'')
          ++pos_;
        else
          break;
      }
      std::string name = src_.substr(start, pos_ - start);
      size_t idx = ring_->var_index(name);
      if (idx == Ring::npos) {
        pos_ = start;
        error("a declared variable (got '" + name + "')");
      }
      return Polynomial::variable(ring_, idx);
    }
    error("a number, variable, '(' or '-'");
  }
};

} // namespace

Polynomial parse_poly(const std::string &src, const RingPtr &ring) {
  return Parser(src, ring).parse();
}

} // namespace qres
