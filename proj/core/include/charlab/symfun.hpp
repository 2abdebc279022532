#pragma once

#include "charlab/partition.hpp"

#include <map>
#include <vector>

namespace charlab {

/// A homogeneous symmetric function of fixed degree written in one basis.
/// Zero coefficients are never stored.
struct SymFunExpansion {
  enum class Basis { monomial, power_sum, jack };
  int degree = 0;
  Basis basis = Basis::monomial;
  std::map<Partition, Rational> coefficients;
};

// z_ρ = Π_i i^{m_i} m_i!
BigInt z_factor(const Partition& rho);

/// Coefficient of m_λ in p_ρ: the number of ways to pour the parts of ρ
/// into ℓ(λ) labelled bins whose totals are λ_1, λ_2, ….
BigInt power_to_monomial_coefficient(const Partition& rho, const Partition& lambda);

/// Jack P functions of one degree, built by Gram–Schmidt on the monomial
/// basis under ⟨p_ρ, p_σ⟩ = δ_ρσ z_ρ α^{ℓ(ρ)}. Vectors are kept in
/// power-sum coordinates, where the inner product is diagonal.
class JackBasis {
public:
  enum class Sweep {
    lexicographic,       // increasing lex order
    conjugate_reverse,   // decreasing lex order of the conjugates
  };

  JackBasis(int degree, const AlphaParam& alpha, Sweep sweep = Sweep::lexicographic);

  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return parts_; }  // power-sum coordinate order

  // P_ν as a power-sum vector (indexed like partitions()).
  const std::vector<Rational>& jack_in_power_sums(const Partition& nu) const;
  SymFunExpansion jack_in_monomials(const Partition& nu) const;
  SymFunExpansion monomial_in_power_sums(const Partition& lambda) const;

  Rational inner(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  // Coefficients of a power-sum vector in the Jack basis.
  SymFunExpansion expand_in_jack(const std::vector<Rational>& power_vector) const;

  std::size_t index_of(const Partition& p) const;

private:
  int degree_;
  AlphaParam alpha_;
  std::vector<Partition> parts_;
  std::vector<Rational> weight_;  // z_ρ α^{ℓ(ρ)}
  std::vector<std::vector<BigInt>> p_to_m_;     // row ρ: p_ρ in monomials
  std::vector<std::vector<Rational>> m_to_p_;   // row λ: m_λ in power sums
  std::vector<std::vector<Rational>> jack_;     // row ν: P_ν in power sums
  std::vector<Rational> jack_norm_;             // ⟨P_ν, P_ν⟩
};

/// Multiplies a power-sum vector of degree d by p_1 (degree d+1).
std::vector<Rational> multiply_by_p1(const JackBasis& from, const JackBasis& to, const std::vector<Rational>& v);

inline constexpr int kPieriOracleBound = 7;

/// ψ′_{λ/μ} in p_1·P_μ = Σ_λ ψ′_{λ/μ} P_λ, keyed by the corner λ/μ.
/// Independent of the growth kernel. Rejects |μ| > 7.
std::map<BoxRef, Rational> pieri_oracle(const Partition& mu, const AlphaParam& alpha);

/// Caches bases per degree so that sweeping all μ up to a size is cheap.
class PieriOracle {
public:
  explicit PieriOracle(const AlphaParam& alpha) : alpha_(alpha) {}
  std::map<BoxRef, Rational> coefficients(const Partition& mu);
  const JackBasis& basis(int degree);

private:
  AlphaParam alpha_;
  std::map<int, JackBasis> bases_;
};

}  // namespace charlab
