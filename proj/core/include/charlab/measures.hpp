#pragma once

#include "charlab/partition.hpp"

namespace charlab {

/// Plancherel probability n!/Π h(x)² = dim(λ)²/n!. Requires |λ| ≥ 1.
Rational plancherel_prob(const Partition& lambda);

/// Jack_α probability αⁿ n!/(c·c′). Equal to plancherel_prob at α = 1.
Rational jack_prob(const Partition& lambda, const AlphaParam& alpha);

/// Frobenius' transposition character ratio χ^λ(12)/dim(λ). Requires |λ| ≥ 2.
Rational char_ratio(const Partition& lambda);

// Σ_i [α·C(λ_i,2) − C(λ'_i,2)] from row and column lengths.
Rational row_column_statistic(const Partition& lambda, const AlphaParam& alpha);

/// T_{n,α}(λ) = S/√(α·C(n,2)), carried as the exact numerator S plus a
/// double image. Moment identities are checked on S only.
struct TStat {
  int n = 0;
  AlphaParam alpha;
  Rational s_value;
  double t_float = 0.0;
};

TStat t_statistic(const Partition& lambda, const AlphaParam& alpha);

// t = s / √(α·C(n,2)) in double.
double t_from_s(const Rational& s, int n, const AlphaParam& alpha);

/// e_r over the multiset of α-contents. Requires 1 ≤ r ≤ |λ|.
Rational content_elementary(const Partition& lambda, int r, const AlphaParam& alpha);

/// Π_x (m + c_α(x)). Requires m ≥ 1.
Rational content_product(const Partition& lambda, int m, const AlphaParam& alpha);

}  // namespace charlab
