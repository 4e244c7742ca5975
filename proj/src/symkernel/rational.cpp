#include "nijkit/rational.hpp"

#include <cctype>

#include "nijkit/error.hpp"

namespace nijkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view p = body.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(p) || !all_digits(q))
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class num{std::string(p)}, den{std::string(q)};
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string rational_to_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace nijkit
