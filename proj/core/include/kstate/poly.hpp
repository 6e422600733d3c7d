#pragma once

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kstate {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer Laurent polynomial in one variable t. Zero coefficients are
/// never stored.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long long constant) { set(0, BigInt(constant)); } // NOLINT(google-explicit-constructor)
  static LaurentPolynomial term(int exponent, BigInt coefficient);

  bool is_zero() const { return coefficients_.empty(); }
  int lowest_exponent() const;
  int highest_exponent() const;
  BigInt coefficient(int exponent) const;
  const std::map<int, BigInt>& coefficients() const { return coefficients_; }
  void set(int exponent, BigInt coefficient);

  LaurentPolynomial operator+(const LaurentPolynomial& other) const;
  LaurentPolynomial operator-(const LaurentPolynomial& other) const;
  LaurentPolynomial operator*(const LaurentPolynomial& other) const;
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial& other) const = default;

  /// Exact division; the remainder must vanish.
  LaurentPolynomial divided_exactly_by(const LaurentPolynomial& divisor) const;

  /// Multiplied by +-t^k so the lowest exponent is 0 and the leading
  /// coefficient is positive.
  LaurentPolynomial normalized() const;
  /// Leading coefficient 1 after normalization.
  bool monic() const;
  /// t -> 1/t.
  LaurentPolynomial reciprocal() const;
  BigInt evaluate(const BigInt& t) const;

  /// "e:c" pairs in increasing exponent order joined with ';', e.g.
  /// "0:1;1:-1;2:1". The zero polynomial serializes as "0:0".
  std::string serialize() const;
  static LaurentPolynomial parse(std::string_view text);
  /// Human form like "t^2 - t + 1".
  std::string pretty() const;

private:
  std::map<int, BigInt> coefficients_;
};

} // namespace kstate
