#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pwpoly/rational.hpp"

namespace pwpoly {

/// Integer polynomial in one variable t; coeffs[i] is the coefficient of t^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class GradedIntPolynomial {
public:
  GradedIntPolynomial() = default;
  explicit GradedIntPolynomial(std::vector<BigInt> coeffs);
  GradedIntPolynomial(std::initializer_list<long long> coeffs);

  static GradedIntPolynomial monomial(int degree, BigInt coeff = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;

  BigInt eval(const BigInt& t) const;
  bool is_palindromic() const;

  /// Exact division of every coefficient; throws std::domain_error if some
  /// coefficient is not divisible.
  GradedIntPolynomial divided_exactly_by(const BigInt& d) const;

  GradedIntPolynomial& operator+=(const GradedIntPolynomial& o);
  friend GradedIntPolynomial operator+(GradedIntPolynomial a, const GradedIntPolynomial& b) { return a += b; }
  friend GradedIntPolynomial operator*(const GradedIntPolynomial& a, const GradedIntPolynomial& b);
  friend GradedIntPolynomial operator*(GradedIntPolynomial a, const BigInt& s);
  friend bool operator==(const GradedIntPolynomial&, const GradedIntPolynomial&) = default;

  /// Coefficients as int64 values; throws std::overflow_error if one does not fit.
  std::vector<std::int64_t> to_int64() const;

  /// "1 + 9t + 17t^2".
  std::string to_string() const;
  /// "[1,9,17]".
  std::string to_list() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

} // namespace pwpoly
