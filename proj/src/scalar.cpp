#include "polarline/scalar.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "polarline/error.hpp"

namespace polarline {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

// floor(log10(a)) for a > 0.
long decimal_exponent(const Scalar& a) {
  const long num_digits =
      static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10));
  const long den_digits =
      static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  long e = num_digits - den_digits;  // within +-1 of the answer
  auto ten_to = [](long k) {
    Scalar p(pow10(static_cast<unsigned long>(k < 0 ? -k : k)));
    return k < 0 ? Scalar(1 / p) : p;
  };
  while (ten_to(e) > a) --e;
  while (ten_to(e + 1) <= a) ++e;
  return e;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::SyntaxError,
                 "not a rational number: '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    Integer d{std::string(den)};
    if (d == 0) throw fail();
    result = Scalar(Integer(std::string(num)), d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw fail();
    }
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Integer scale = pow10(frac.size());
    result = Scalar(w * scale + f, scale);
    result.canonicalize();
  } else {
    if (!all_digits(body)) throw fail();
    result = Scalar(Integer(std::string(body)));
  }
  if (negative) result = -result;
  return result;
}

std::string to_exact_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string to_decimal_string(const Scalar& value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Scalar a = abs(value);
  const long e = decimal_exponent(a);

  constexpr long kDigits = 12;
  const long shift = kDigits - 1 - e;
  Scalar scaled = a;
  if (shift >= 0) {
    scaled *= Scalar(pow10(static_cast<unsigned long>(shift)));
  } else {
    scaled /= Scalar(pow10(static_cast<unsigned long>(-shift)));
  }
  Integer truncated;
  mpz_tdiv_q(truncated.get_mpz_t(), scaled.get_num_mpz_t(),
             scaled.get_den_mpz_t());
  std::string digits = truncated.get_str();

  std::string out;
  if (e > 20 || e < -7) {
    out = digits.substr(0, 1) + "." + digits.substr(1);
    while (!out.empty() && out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  } else if (e >= kDigits - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - (kDigits - 1)), '0');
  } else {
    if (e >= 0) {
      out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
            digits.substr(static_cast<std::size_t>(e + 1));
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

Scalar fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::PreconditionViolated, "zero denominator");
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Scalar& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Scalar& value) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

double to_double(const Scalar& value) { return value.get_d(); }

double QuadraticSurd::approx() const {
  return rational.get_d() + coefficient.get_d() * std::sqrt(radicand.get_d());
}

std::string QuadraticSurd::to_string() const {
  if (coefficient == 0 || radicand == 0) return to_exact_string(rational);
  std::string s;
  if (rational != 0) s = to_exact_string(rational) + "+";
  if (coefficient != 1) s += to_exact_string(coefficient) + "*";
  s += "sqrt(" + to_exact_string(radicand) + ")";
  return s;
}

std::string to_decimal_string(const QuadraticSurd& s) {
  if (s.coefficient == 0 || s.radicand == 0) return to_decimal_string(s.rational);
  const int sign = compare(Scalar(0), s) < 0 ? 1 : -1;
  const QuadraticSurd a = sign > 0 ? s : -s;
  if (compare(Scalar(0), a) == 0) return "0";
  // Truncate well below the twelfth significant digit, then let the rational
  // formatter truncate again; both steps round toward zero.
  const long shift = 20 - static_cast<long>(std::floor(std::log10(a.approx())));
  const Scalar scale = shift >= 0
                           ? Scalar(pow10(static_cast<unsigned long>(shift)))
                           : Scalar(1) / pow10(static_cast<unsigned long>(-shift));
  const Scalar truncated = Scalar(floor_of(a * scale)) / scale;
  return (sign < 0 ? "-" : "") + to_decimal_string(truncated);
}

QuadraticSurd one_plus_sqrt2() { return {1, 1, 2}; }

QuadraticSurd operator-(const QuadraticSurd& s) {
  return {-s.rational, -s.coefficient, s.radicand};
}

QuadraticSurd operator+(const QuadraticSurd& s, const Scalar& x) {
  return {s.rational + x, s.coefficient, s.radicand};
}

QuadraticSurd operator*(const QuadraticSurd& s, const Scalar& x) {
  return {s.rational * x, s.coefficient * x, s.radicand};
}

QuadraticSurd reciprocal(const QuadraticSurd& s) {
  const Scalar norm =
      s.rational * s.rational - s.coefficient * s.coefficient * s.radicand;
  if (norm == 0) {
    // Here v sqrt(r) = +-u, so s is either 2u or zero.
    if (s.rational == 0 || sgn(s.rational) != sgn(s.coefficient)) {
      throw Error(ErrorCode::PreconditionViolated, "reciprocal of zero");
    }
    return QuadraticSurd::of(1 / (2 * s.rational));
  }
  return {s.rational / norm, -s.coefficient / norm, s.radicand};
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const bool a_rational = a.coefficient == 0 || a.radicand == 0;
  const bool b_rational = b.coefficient == 0 || b.radicand == 0;
  if (a_rational) return b * a.rational;
  if (b_rational) return a * b.rational;
  if (a.radicand != b.radicand) {
    throw Error(ErrorCode::PreconditionViolated,
                "cannot multiply " + a.to_string() + " by " + b.to_string());
  }
  return {a.rational * b.rational + a.coefficient * b.coefficient * a.radicand,
          a.rational * b.coefficient + a.coefficient * b.rational, a.radicand};
}

Integer floor_of(const QuadraticSurd& s) {
  Integer z(std::floor(s.approx()));
  while (compare(Scalar(z), s) > 0) --z;
  while (compare(Scalar(z + 1), s) <= 0) ++z;
  return z;
}

Integer ceil_of(const QuadraticSurd& s) { return -floor_of(-s); }

int compare(const Scalar& x, const QuadraticSurd& s) {
  const Scalar w = x - s.rational;
  const int sw = sgn(w);
  const int st = s.radicand == 0 ? 0 : sgn(s.coefficient);
  if (sw >= 0 && st <= 0) return (sw == 0 && st == 0) ? 0 : 1;
  if (sw <= 0 && st >= 0) return (sw == 0 && st == 0) ? 0 : -1;
  const Scalar w2 = w * w;
  const Scalar t2 = s.coefficient * s.coefficient * s.radicand;
  const int c = cmp(w2, t2);
  return sw > 0 ? (c > 0) - (c < 0) : (c < 0) - (c > 0);
}

namespace {

// Sign of b sqrt(r1) + c sqrt(r2) for nonnegative radicands.
int surd_pair_sign(const Scalar& b, const Scalar& r1, const Scalar& c,
                   const Scalar& r2) {
  const int sb = r1 == 0 ? 0 : sgn(b);
  const int sc = r2 == 0 ? 0 : sgn(c);
  if (sb == 0 || sb == sc) return sb == 0 ? sc : sb;
  if (sc == 0) return sb;
  const int c2 = cmp(Scalar(b * b * r1), Scalar(c * c * r2));
  return c2 == 0 ? 0 : (c2 > 0 ? sb : sc);
}

}  // namespace

int compare(const QuadraticSurd& a, const QuadraticSurd& b) {
  const bool a_rational = a.coefficient == 0 || a.radicand == 0;
  const bool b_rational = b.coefficient == 0 || b.radicand == 0;
  if (a_rational || b_rational || a.radicand == b.radicand) {
    const Scalar radicand = a_rational ? b.radicand : a.radicand;
    const Scalar va = a_rational ? Scalar(0) : a.coefficient;
    const Scalar vb = b_rational ? Scalar(0) : b.coefficient;
    return compare(Scalar(a.rational - b.rational),
                   QuadraticSurd{0, vb - va, radicand});
  }
  // Sign of w + p with w = u_a - u_b and p = v_a sqrt(r_a) - v_b sqrt(r_b).
  const Scalar w = a.rational - b.rational;
  const int sp = surd_pair_sign(a.coefficient, a.radicand, -b.coefficient,
                                b.radicand);
  const int sw = sgn(w);
  if (sp == 0 || sw == 0 || sp == sw) return sp == 0 ? sw : sp;
  // Opposite signs: compare p^2 with w^2, where
  // p^2 = v_a^2 r_a + v_b^2 r_b - 2 v_a v_b sqrt(r_a r_b).
  const Scalar base = a.coefficient * a.coefficient * a.radicand +
                      b.coefficient * b.coefficient * b.radicand;
  const int c = -compare(Scalar(w * w - base),
                         QuadraticSurd{0, -2 * a.coefficient * b.coefficient,
                                       a.radicand * b.radicand});
  // c is the sign of p^2 - w^2; the larger magnitude decides.
  return c == 0 ? 0 : (c > 0 ? sp : sw);
}

std::string ExtendedScalar::to_exact_string() const {
  return infinite_ ? "inf" : polarline::to_exact_string(value_);
}

std::string ExtendedScalar::to_decimal_string() const {
  return infinite_ ? "inf" : polarline::to_decimal_string(value_);
}

double ExtendedScalar::approx() const {
  return infinite_ ? HUGE_VAL : value_.get_d();
}

bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedScalar& a,
                                 const ExtendedScalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

int compare(const ExtendedScalar& x, const QuadraticSurd& s) {
  return x.is_infinite() ? 1 : compare(x.value(), s);
}

}  // namespace polarline
