#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace charlab {

// Exact arithmetic carriers. mpq_class keeps itself canonical (reduced,
// positive denominator) after every arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q" text form; integers print without a denominator.
std::string to_text(const Rational& q);
std::string to_text(const BigInt& z);

// Accepts "p/q", "-p/q" or a plain integer. Decimals are rejected so that
// nothing inexact can leak into an exact computation.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// C(n,2) as a plain integer; used all over the moment identities.
constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

Rational pow(const Rational& base, unsigned exponent);

// |q| (mpq abs helper returns an expression template).
// Nearest double (ties to even); mpq_class::get_d truncates instead.
double to_double(const Rational& q);

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// The Jack deformation parameter. The exact value drives every
/// verification path; the double image is used only by the samplers.
class AlphaParam {
public:
  AlphaParam() : AlphaParam(Rational(1)) {}
  explicit AlphaParam(Rational value);
  explicit AlphaParam(long value) : AlphaParam(Rational(value)) {}

  static AlphaParam parse(std::string_view text) { return AlphaParam(parse_rational(text)); }

  const Rational& value() const { return value_; }
  double as_double() const { return float_view_; }
  bool is_one() const { return value_ == 1; }
  AlphaParam reciprocal() const { return AlphaParam(Rational(1 / value_)); }

  friend bool operator==(const AlphaParam& a, const AlphaParam& b) { return a.value_ == b.value_; }

private:
  Rational value_;
  double float_view_;
};

}  // namespace charlab
