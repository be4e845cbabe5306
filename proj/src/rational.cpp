#include "ncmorse/rational.hpp"

#include "ncmorse/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ncmorse {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw_invalid_input("not an integer: \"" + std::string(text) + "\"");
  const Integer value{std::string(body)};
  return (!text.empty() && text.front() == '-') ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) throw_invalid_input("bad rational denominator: \"" + std::string(text) + "\"");
  const Integer q = parse_integer(den);
  if (q == 0) throw_invalid_input("zero denominator: \"" + std::string(text) + "\"");
  return Rational(parse_integer(num), q);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ncmorse
