#include "charlab/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace charlab {

std::string to_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_text(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_text(den_text) || den_text.front() == '-') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num_text), den);
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  const BigInt num = abs(q.get_num());
  const BigInt& den = q.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
    // Both operands are exact doubles, so IEEE division rounds correctly.
    const double v = num.get_d() / den.get_d();
    return q < 0 ? -v : v;
  }
  // Take a quotient with at least 64 significant bits, fold the remainder
  // into a sticky bit and let the uint64 -> double conversion round.
  const long shift = 64 + static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  BigInt scaled = num;
  if (shift > 0) mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  BigInt scaled_den = den;
  if (shift < 0) mpz_mul_2exp(scaled_den.get_mpz_t(), scaled_den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  BigInt quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), scaled_den.get_mpz_t());
  // quot now has 64 or 65 bits; keep the top 63 and make the rest sticky.
  const std::size_t bits = mpz_sizeinbase(quot.get_mpz_t(), 2);
  const std::size_t drop = bits - 63;
  bool sticky = rem != 0 || mpz_scan1(quot.get_mpz_t(), 0) < drop;
  mpz_tdiv_q_2exp(quot.get_mpz_t(), quot.get_mpz_t(), drop);
  std::uint64_t top = 0;
  mpz_export(&top, nullptr, -1, sizeof top, 0, 0, quot.get_mpz_t());
  top = (top << 1) | (sticky ? 1u : 0u);
  const double v = std::ldexp(static_cast<double>(top), static_cast<int>(drop) - 1 - static_cast<int>(shift));
  return q < 0 ? -v : v;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

AlphaParam::AlphaParam(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0) throw std::invalid_argument("alpha must be strictly positive, got " + to_text(value_));
  float_view_ = to_double(value_);
}

}  // namespace charlab
