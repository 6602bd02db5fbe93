#include "pwpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pwpoly {

std::string to_string(const Rational& q)
{
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+'))
    pos = 1;
  if (pos == text.size())
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(text);
  if (digits[0] == '+')
    digits.erase(0, 1);
  return BigInt(digits);
}

} // namespace

Rational parse_rational(std::string_view text)
{
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_integer(const Rational& q)
{
  return boost::multiprecision::denominator(q) == 1;
}

std::string to_string(const RVec& v)
{
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

} // namespace pwpoly
