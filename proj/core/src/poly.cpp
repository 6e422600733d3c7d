#include "kstate/poly.hpp"

#include <sstream>

#include "kstate/errors.hpp"

namespace kstate {

LaurentPolynomial LaurentPolynomial::term(int exponent, BigInt coefficient) {
  LaurentPolynomial p;
  p.set(exponent, std::move(coefficient));
  return p;
}

int LaurentPolynomial::lowest_exponent() const {
  if (is_zero()) fail(ErrorKind::Internal, "zero polynomial has no exponents");
  return coefficients_.begin()->first;
}

int LaurentPolynomial::highest_exponent() const {
  if (is_zero()) fail(ErrorKind::Internal, "zero polynomial has no exponents");
  return coefficients_.rbegin()->first;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::set(int exponent, BigInt coefficient) {
  if (coefficient == 0)
    coefficients_.erase(exponent);
  else
    coefficients_[exponent] = std::move(coefficient);
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
  LaurentPolynomial result = *this;
  for (const auto& [e, c] : other.coefficients_) result.set(e, result.coefficient(e) + c);
  return result;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
  LaurentPolynomial result = *this;
  for (const auto& [e, c] : other.coefficients_) result.set(e, result.coefficient(e) - c);
  return result;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial result;
  for (const auto& [e, c] : coefficients_) result.coefficients_[e] = -c;
  return result;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
  LaurentPolynomial result;
  for (const auto& [e1, c1] : coefficients_)
    for (const auto& [e2, c2] : other.coefficients_)
      result.set(e1 + e2, result.coefficient(e1 + e2) + c1 * c2);
  return result;
}

LaurentPolynomial LaurentPolynomial::divided_exactly_by(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::Internal, "division by the zero polynomial");
  if (is_zero()) return {};
  LaurentPolynomial remainder = *this;
  LaurentPolynomial quotient;
  const int divisor_high = divisor.highest_exponent();
  const BigInt& lead = divisor.coefficients_.rbegin()->second;
  // An exact quotient has at most span(dividend)+1 terms; more iterations
  // mean the division is not exact.
  int guard = highest_exponent() - lowest_exponent() + 2;
  while (!remainder.is_zero() && guard-- > 0) {
    const int e = remainder.highest_exponent();
    const BigInt& c = remainder.coefficients_.rbegin()->second;
    if (c % lead != 0) break;
    LaurentPolynomial t = term(e - divisor_high, c / lead);
    quotient = quotient + t;
    remainder = remainder - t * divisor;
  }
  if (!remainder.is_zero()) fail(ErrorKind::Internal, "polynomial division was not exact");
  return quotient;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return {};
  const int shift = -lowest_exponent();
  const bool flip = coefficients_.rbegin()->second < 0;
  LaurentPolynomial result;
  for (const auto& [e, c] : coefficients_) result.coefficients_[e + shift] = flip ? -c : c;
  return result;
}

bool LaurentPolynomial::monic() const {
  if (is_zero()) return false;
  const LaurentPolynomial n = normalized();
  return n.coefficients_.rbegin()->second == 1;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial result;
  for (const auto& [e, c] : coefficients_) result.coefficients_[-e] = c;
  return result;
}

BigInt LaurentPolynomial::evaluate(const BigInt& t) const {
  // Laurent evaluation needs t != 0 when negative exponents are present;
  // callers evaluate normalized polynomials, so clear the offset first.
  const LaurentPolynomial n = is_zero() ? *this : normalized();
  BigInt result = 0;
  for (const auto& [e, c] : n.coefficients_) {
    BigInt power = 1;
    for (int i = 0; i < e; ++i) power *= t;
    result += c * power;
  }
  return result;
}

std::string LaurentPolynomial::serialize() const {
  if (is_zero()) return "0:0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coefficients_) {
    if (!first) out << ';';
    out << e << ':' << c;
    first = false;
  }
  return out.str();
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  LaurentPolynomial result;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view pair = text.substr(pos, end - pos);
    const size_t colon = pair.find(':');
    if (colon == std::string_view::npos)
      fail(ErrorKind::SyntaxError, "polynomial term without ':' separator");
    try {
      const int exponent = std::stoi(std::string(pair.substr(0, colon)));
      const BigInt coefficient(std::string(pair.substr(colon + 1)));
      result.set(exponent, result.coefficient(exponent) + coefficient);
    } catch (const std::exception&) {
      fail(ErrorKind::SyntaxError, "bad polynomial term '" + std::string(pair) + "'");
    }
    pos = end + 1;
  }
  return result;
}

std::string LaurentPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto& [e, c] = *it;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool show_coefficient = magnitude != 1 || e == 0;
    if (show_coefficient) out << magnitude;
    if (e != 0) {
      if (show_coefficient) out << '*';
      out << 't';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

} // namespace kstate
