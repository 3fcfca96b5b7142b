#pragma once

// Exact arithmetic used throughout the library. Every position, cost and
// ratio is an arbitrary-precision rational; irrational bounds such as 1+sqrt(2)
// are represented symbolically and compared exactly.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace polarline {

using Scalar = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "p", and finite decimals such as "-0.25". The result is
// canonical (reduced, positive denominator).
Scalar parse_scalar(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_exact_string(const Scalar& value);

// Decimal rendering truncated (toward zero) to 12 significant digits.
std::string to_decimal_string(const Scalar& value);

// num/den in canonical form. Throws PreconditionViolated when den is zero.
Scalar fraction(const Integer& num, const Integer& den);

Integer floor_of(const Scalar& value);
Integer ceil_of(const Scalar& value);

double to_double(const Scalar& value);

// u + v * sqrt(r) with rational u, v and rational r >= 0.
struct QuadraticSurd {
  Scalar rational;
  Scalar coefficient;
  Scalar radicand;

  static QuadraticSurd of(const Scalar& value) { return {value, 0, 0}; }

  double approx() const;
  std::string to_string() const;
};

QuadraticSurd one_plus_sqrt2();

// Twelve significant digits, truncated exactly like the rational version.
std::string to_decimal_string(const QuadraticSurd& s);

QuadraticSurd operator-(const QuadraticSurd& s);
QuadraticSurd operator+(const QuadraticSurd& s, const Scalar& x);
QuadraticSurd operator*(const QuadraticSurd& s, const Scalar& x);
// 1/s. Throws PreconditionViolated when s is zero.
QuadraticSurd reciprocal(const QuadraticSurd& s);
// Products of surds sharing a radicand (or with a rational factor).
QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);

// Mathematical floor and ceiling, decided exactly.
Integer floor_of(const QuadraticSurd& s);
Integer ceil_of(const QuadraticSurd& s);

// Sign of (x - s): negative, zero or positive. Exact for every input.
int compare(const Scalar& x, const QuadraticSurd& s);

// Sign of (a - b), also exact when the radicands differ.
int compare(const QuadraticSurd& a, const QuadraticSurd& b);

// A nonnegative rational or +infinity. Used for ratios whose denominator
// may vanish.
class ExtendedScalar {
 public:
  ExtendedScalar() = default;
  ExtendedScalar(Scalar value) : value_(std::move(value)) {}  // NOLINT

  static ExtendedScalar infinity() {
    ExtendedScalar r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  // Precondition: !is_infinite().
  const Scalar& value() const { return value_; }

  std::string to_exact_string() const;
  std::string to_decimal_string() const;
  double approx() const;

  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b);
  friend std::strong_ordering operator<=>(const ExtendedScalar& a,
                                          const ExtendedScalar& b);

 private:
  Scalar value_{0};
  bool infinite_ = false;
};

// Sign of (x - s) with x possibly infinite.
int compare(const ExtendedScalar& x, const QuadraticSurd& s);

}  // namespace polarline
