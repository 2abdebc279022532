#include "charlab/symfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace charlab {

BigInt z_factor(const Partition& rho) {
  BigInt z = 1;
  const auto parts = rho.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

namespace {

void pour(std::span<const int> parts, std::size_t next, std::vector<int>& room, BigInt& count) {
  if (next == parts.size()) {
    if (std::all_of(room.begin(), room.end(), [](int r) { return r == 0; })) ++count;
    return;
  }
  for (auto& r : room) {
    if (r >= parts[next]) {
      r -= parts[next];
      pour(parts, next + 1, room, count);
      r += parts[next];
    }
  }
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("power-sum to monomial matrix is singular");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  }
  return out;
}

}  // namespace

BigInt power_to_monomial_coefficient(const Partition& rho, const Partition& lambda) {
  if (rho.size() != lambda.size()) return 0;
  std::vector<int> room(lambda.parts().begin(), lambda.parts().end());
  BigInt count = 0;
  pour(rho.parts(), 0, room, count);
  return count;
}

JackBasis::JackBasis(int degree, const AlphaParam& alpha, Sweep sweep) : degree_(degree), alpha_(alpha) {
  if (degree < 0) throw std::invalid_argument("JackBasis: negative degree");
  parts_ = enumerate_partitions(degree);
  std::reverse(parts_.begin(), parts_.end());  // increasing lex
  const std::size_t n = parts_.size();

  weight_.reserve(n);
  for (const auto& rho : parts_) {
    weight_.push_back(Rational(z_factor(rho)) * pow(alpha.value(), static_cast<unsigned>(rho.length())));
  }
  p_to_m_.assign(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t l = 0; l < n; ++l) p_to_m_[r][l] = power_to_monomial_coefficient(parts_[r], parts_[l]);
  }
  m_to_p_ = invert(p_to_m_);

  // Both sweeps are linear extensions of dominance order, so either yields
  // the same basis.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (sweep == Sweep::conjugate_reverse) {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return parts_[a].conjugate() > parts_[b].conjugate(); });
  }

  jack_.assign(n, {});
  jack_norm_.assign(n, Rational(0));
  std::vector<std::size_t> done;
  for (std::size_t idx : order) {
    std::vector<Rational> v = m_to_p_[idx];
    for (std::size_t prev : done) {
      const Rational coeff = inner(m_to_p_[idx], jack_[prev]) / jack_norm_[prev];
      if (coeff == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] -= coeff * jack_[prev][k];
    }
    jack_norm_[idx] = inner(v, v);
    jack_[idx] = std::move(v);
    done.push_back(idx);
  }
}

std::size_t JackBasis::index_of(const Partition& p) const {
  const auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
  if (it == parts_.end() || *it != p) throw std::out_of_range("partition " + p.to_string() + " not of this degree");
  return static_cast<std::size_t>(it - parts_.begin());
}

Rational JackBasis::inner(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  Rational sum(0);
  for (std::size_t k = 0; k < weight_.size(); ++k) {
    if (u[k] != 0 && v[k] != 0) sum += u[k] * v[k] * weight_[k];
  }
  return sum;
}

const std::vector<Rational>& JackBasis::jack_in_power_sums(const Partition& nu) const { return jack_[index_of(nu)]; }

SymFunExpansion JackBasis::jack_in_monomials(const Partition& nu) const {
  const auto& v = jack_in_power_sums(nu);
  SymFunExpansion out{degree_, SymFunExpansion::Basis::monomial, {}};
  for (std::size_t l = 0; l < parts_.size(); ++l) {
    Rational c(0);
    for (std::size_t r = 0; r < parts_.size(); ++r) {
      if (v[r] != 0 && p_to_m_[r][l] != 0) c += v[r] * Rational(p_to_m_[r][l]);
    }
    if (c != 0) out.coefficients.emplace(parts_[l], c);
  }
  return out;
}

SymFunExpansion JackBasis::monomial_in_power_sums(const Partition& lambda) const {
  const auto& row = m_to_p_[index_of(lambda)];
  SymFunExpansion out{degree_, SymFunExpansion::Basis::power_sum, {}};
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (row[r] != 0) out.coefficients.emplace(parts_[r], row[r]);
  }
  return out;
}

SymFunExpansion JackBasis::expand_in_jack(const std::vector<Rational>& power_vector) const {
  SymFunExpansion out{degree_, SymFunExpansion::Basis::jack, {}};
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Rational c = inner(power_vector, jack_[i]) / jack_norm_[i];
    if (c != 0) out.coefficients.emplace(parts_[i], c);
  }
  return out;
}

std::vector<Rational> multiply_by_p1(const JackBasis& from, const JackBasis& to, const std::vector<Rational>& v) {
  if (to.degree() != from.degree() + 1) throw std::invalid_argument("multiply_by_p1: degree mismatch");
  std::vector<Rational> out(to.partitions().size(), Rational(0));
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r] == 0) continue;
    std::vector<int> parts(from.partitions()[r].parts().begin(), from.partitions()[r].parts().end());
    parts.push_back(1);
    out[to.index_of(Partition(std::move(parts)))] += v[r];
  }
  return out;
}

const JackBasis& PieriOracle::basis(int degree) {
  auto it = bases_.find(degree);
  if (it == bases_.end()) it = bases_.emplace(degree, JackBasis(degree, alpha_)).first;
  return it->second;
}

std::map<BoxRef, Rational> PieriOracle::coefficients(const Partition& mu) {
  if (mu.size() > kPieriOracleBound) {
    throw std::out_of_range("pieri_oracle: |mu| = " + std::to_string(mu.size()) + " exceeds " +
                            std::to_string(kPieriOracleBound));
  }
  const JackBasis& lower = basis(mu.size());
  const JackBasis& upper = basis(mu.size() + 1);
  const auto product = multiply_by_p1(lower, upper, lower.jack_in_power_sums(mu));
  const auto expansion = upper.expand_in_jack(product);

  std::map<BoxRef, Rational> out;
  for (const auto b : addable_corners(mu)) out.emplace(b, Rational(0));
  for (const auto& [lambda, coeff] : expansion.coefficients) {
    // Anything other than μ plus one box would contradict the Pieri rule.
    BoxRef added{0, 0};
    for (const auto b : addable_corners(mu)) {
      if (mu.with_box(b) == lambda) added = b;
    }
    if (added.row == 0) {
      throw std::logic_error("p1*P" + mu.to_string() + " has a term outside mu+box: " + lambda.to_string());
    }
    out[added] = coeff;
  }
  return out;
}

std::map<BoxRef, Rational> pieri_oracle(const Partition& mu, const AlphaParam& alpha) {
  PieriOracle oracle(alpha);
  return oracle.coefficients(mu);
}

}  // namespace charlab
