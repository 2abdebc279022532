#include "charlab/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace charlab {

namespace {

void require_size(const Partition& lambda, int min_size, const char* what) {
  if (lambda.size() < min_size) {
    throw std::domain_error(std::string(what) + " requires |lambda| >= " + std::to_string(min_size) +
                            ", got " + lambda.to_string());
  }
}

}  // namespace

Rational plancherel_prob(const Partition& lambda) {
  require_size(lambda, 1, "plancherel_prob");
  const BigInt d = dimension(lambda);
  Rational p(d * d, factorial(static_cast<unsigned>(lambda.size())));
  p.canonicalize();
  return p;
}

Rational jack_prob(const Partition& lambda, const AlphaParam& alpha) {
  require_size(lambda, 1, "jack_prob");
  const auto [c, c_prime] = hook_products(lambda, alpha);
  const unsigned n = static_cast<unsigned>(lambda.size());
  return pow(alpha.value(), n) * Rational(factorial(n)) / (c * c_prime);
}

Rational row_column_statistic(const Partition& lambda, const AlphaParam& alpha) {
  std::int64_t rows = 0;
  for (int len : lambda.parts()) rows += choose2(len);
  std::int64_t cols = 0;
  const Partition conj = lambda.conjugate();
  for (int len : conj.parts()) cols += choose2(len);
  return alpha.value() * Rational(static_cast<long>(rows)) - Rational(static_cast<long>(cols));
}

Rational char_ratio(const Partition& lambda) {
  require_size(lambda, 2, "char_ratio");
  return row_column_statistic(lambda, AlphaParam()) / Rational(static_cast<long>(choose2(lambda.size())));
}

double t_from_s(const Rational& s, int n, const AlphaParam& alpha) {
  return to_double(s) / std::sqrt(alpha.as_double() * static_cast<double>(choose2(n)));
}

TStat t_statistic(const Partition& lambda, const AlphaParam& alpha) {
  require_size(lambda, 2, "t_statistic");
  TStat t;
  t.n = lambda.size();
  t.alpha = alpha;
  t.s_value = row_column_statistic(lambda, alpha);
  t.t_float = t_from_s(t.s_value, t.n, alpha);
  return t;
}

Rational content_elementary(const Partition& lambda, int r, const AlphaParam& alpha) {
  if (r < 1 || r > lambda.size()) {
    throw std::out_of_range("content_elementary: r=" + std::to_string(r) + " outside [1, " +
                            std::to_string(lambda.size()) + "]");
  }
  // e_0..e_r of the multiset, updated one content at a time.
  std::vector<Rational> e(static_cast<std::size_t>(r) + 1, Rational(0));
  e[0] = 1;
  for (const auto& s : box_stats(lambda, alpha)) {
    for (int k = r; k >= 1; --k) e[k] += e[k - 1] * s.alpha_content;
  }
  return e[r];
}

Rational content_product(const Partition& lambda, int m, const AlphaParam& alpha) {
  if (m < 1) throw std::out_of_range("content_product: m must be >= 1");
  Rational out(1);
  for (const auto& s : box_stats(lambda, alpha)) out *= m + s.alpha_content;
  return out;
}

}  // namespace charlab
