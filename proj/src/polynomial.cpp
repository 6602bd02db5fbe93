#include "pwpoly/polynomial.hpp"

#include <limits>
#include <stdexcept>

namespace pwpoly {

GradedIntPolynomial::GradedIntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
  trim();
}

GradedIntPolynomial::GradedIntPolynomial(std::initializer_list<long long> coeffs)
{
  for (auto c : coeffs)
    coeffs_.emplace_back(c);
  trim();
}

GradedIntPolynomial GradedIntPolynomial::monomial(int degree, BigInt coeff)
{
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return GradedIntPolynomial(std::move(c));
}

void GradedIntPolynomial::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigInt GradedIntPolynomial::coeff(int i) const
{
  if (i < 0 || i >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt GradedIntPolynomial::eval(const BigInt& t) const
{
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

bool GradedIntPolynomial::is_palindromic() const
{
  const std::size_t m = coeffs_.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    if (coeffs_[i] != coeffs_[m - 1 - i])
      return false;
  }
  return true;
}

GradedIntPolynomial GradedIntPolynomial::divided_exactly_by(const BigInt& d) const
{
  if (d == 0)
    throw std::domain_error("division by zero");
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c % d != 0)
      throw std::domain_error("coefficient " + c.str() + " not divisible by " + d.str());
    out.push_back(c / d);
  }
  return GradedIntPolynomial(std::move(out));
}

GradedIntPolynomial& GradedIntPolynomial::operator+=(const GradedIntPolynomial& o)
{
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

GradedIntPolynomial operator*(const GradedIntPolynomial& a, const GradedIntPolynomial& b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GradedIntPolynomial(std::move(out));
}

GradedIntPolynomial operator*(GradedIntPolynomial a, const BigInt& s)
{
  for (auto& c : a.coeffs_)
    c *= s;
  a.trim();
  return a;
}

std::vector<std::int64_t> GradedIntPolynomial::to_int64() const
{
  std::vector<std::int64_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("coefficient does not fit in 64 bits: " + c.str());
    out.push_back(c.convert_to<std::int64_t>());
  }
  return out;
}

std::string GradedIntPolynomial::to_string() const
{
  if (coeffs_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0)
      continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0)
      out += mag.str();
    if (i >= 1)
      out += "t";
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out;
}

std::string GradedIntPolynomial::to_list() const
{
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i)
      out += ",";
    out += coeffs_[i].str();
  }
  return out + "]";
}

} // namespace pwpoly
