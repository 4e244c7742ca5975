#include "nijkit/parser.hpp"

#include <cctype>

#include "nijkit/error.hpp"

namespace nijkit {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Chart& chart) : src_(src), chart_(chart) {}

  ScalarField parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError(ErrorCode::Parse, "empty expression", pos_);
    ScalarField v = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError(ErrorCode::Parse, std::string("unexpected '") + src_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ScalarField expr() {
    ScalarField acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  ScalarField term() {
    ScalarField acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        ScalarField d = unary();
        if (d.is_zero()) throw ParseError(ErrorCode::DivisionByZero, "division by the zero polynomial", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  ScalarField unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ScalarField power() {
    ScalarField base = primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    ScalarField e = unary();
    if (!e.is_constant()) throw ParseError(ErrorCode::Parse, "exponent must be a constant", at);
    Rational q = e.constant_value();
    if (q.get_den() != 1 || q < 0)
      throw ParseError(ErrorCode::Parse, "exponent must be a non-negative integer", at);
    if (q > 65535) throw ParseError(ErrorCode::DegreeOverflow, "exponent too large", at);
    return base.pow(static_cast<unsigned>(q.get_num().get_ui()));
  }

  ScalarField primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(ErrorCode::Parse, "unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarField v = expr();
      if (!accept(')')) throw ParseError(ErrorCode::Parse, "expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return ScalarField(chart_, Rational(mpz_class(std::string(src_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      auto idx = chart_.index_of(name);
      if (!idx)
        throw ParseError(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(name) + "'", start);
      return ScalarField::variable(chart_, *idx);
    }
    throw ParseError(ErrorCode::Parse, std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view src_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarField parse_scalar(std::string_view src, const Chart& chart) { return Parser(src, chart).parse(); }

}  // namespace nijkit
