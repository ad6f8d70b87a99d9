#include "rectrep/rational.hpp"

#include <cctype>
#include <string>

#include "rectrep/error.hpp"

namespace rectrep {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool is_dyadic(const Rational& value) {
  const mpz_class& den = value.get_den();
  // A positive integer is a power of two iff it has exactly one set bit.
  return mpz_popcount(den.get_mpz_t()) == 1;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace rectrep
