#pragma once

#include "charlab/growth.hpp"
#include "charlab/measures.hpp"

#include <functional>
#include <string>
#include <vector>

namespace charlab {

/// One exact comparison. Identities pass iff lhs == rhs; inequalities pass
/// iff lhs <= rhs. Nothing here is ever compared with a tolerance.
struct CheckResult {
  enum class Kind { identity, inequality };

  std::string check_id;
  int n = 0;
  Rational alpha;
  Kind kind = Kind::identity;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string context;
};

CheckResult make_identity(std::string id, int n, const AlphaParam& alpha, Rational lhs, Rational rhs,
                          std::string context = {});
CheckResult make_bound(std::string id, int n, const AlphaParam& alpha, Rational lhs, Rational rhs,
                       std::string context = {});

// Orders results by (check_id, n, alpha, context) for stable serialisation.
void sort_results(std::vector<CheckResult>& results);

/// Kernel under test. Defaults to charlab::kernel; fault-injection tests
/// pass a perturbed one.
using KernelFn = std::function<KernelRow(const Partition&, const AlphaParam&)>;
KernelFn default_kernel();

inline constexpr int kExactLevelBound = 10;
inline constexpr int kProjectionBound = 8;

/// Row sums (with positivity) and Jack-marginal coherence for every level
/// j ≤ n_max. Requires n_max ≤ 10.
std::vector<CheckResult> check_kernel(int n_max, const AlphaParam& alpha, const KernelFn& kernel_fn = default_kernel());

/// α = 1 kernel against dim(μ+b) / ((|μ|+1)·dim(μ)) for |μ| ≤ mu_max.
std::vector<CheckResult> check_kernel_dimension_ratio(int mu_max, const KernelFn& kernel_fn = default_kernel());

/// Kernel against ψ′_{λ/μ}·c(μ)/c(λ) with ψ′ from the Gram–Schmidt Pieri
/// oracle and c from hook_products, for |μ| ≤ mu_max ≤ 7.
std::vector<CheckResult> check_kernel_pieri(int mu_max, const AlphaParam& alpha,
                                            const KernelFn& kernel_fn = default_kernel());

/// E(X_j|μ) = 0, E(X_j²|μ) = α(j−1) and the fourth conditional moment
/// closed form, for every μ with 1 ≤ |μ| < n_max, formed from one kernel row.
std::vector<CheckResult> conditional_moments_check(int n_max, const AlphaParam& alpha,
                                                   const KernelFn& kernel_fn = default_kernel());

/// E(X_j | S = s) = (j−1)·s/C(n,2) for every j and every attained s, by full
/// path enumeration for 2 ≤ n ≤ n_max ≤ 8.
std::vector<CheckResult> projection_check(int n_max, const AlphaParam& alpha);

/// Unconditional moments at levels 2..n_max: E S = 0, E S² = αC(n,2),
/// E S³ = α(α−1)C(n,2), E X_n² = α(n−1), the closed form for E X_n⁴, the
/// Cauchy–Schwarz chain for the third absolute moments and, at α = 1, the
/// (n−1)√(2n−3) bounds in squared form.
std::vector<CheckResult> global_moments_check(int n_max, const AlphaParam& alpha,
                                              const KernelFn& kernel_fn = default_kernel());

/// E e_{r,α}(λ) = 0 for 1 ≤ r ≤ n and E Π(m + c_α(x)) = mⁿ at every level
/// 1..n_max.
std::vector<CheckResult> symmetric_identities_check(int n_max, const AlphaParam& alpha, const std::vector<int>& m_values);

/// Normalisation, transpose duality of probabilities and of S, and the
/// box-sum versus row/column form of S, at levels 1..n_max.
std::vector<CheckResult> measure_identities_check(int n_max, const AlphaParam& alpha);

struct SuiteConfig {
  int n_max = kExactLevelBound;
  int path_max = kProjectionBound;
  int oracle_max = 7;
  std::vector<AlphaParam> alphas{AlphaParam(1)};
  std::vector<int> m_values{1, 2, 3};
};

std::vector<CheckResult> run_suite(const SuiteConfig& config);

}  // namespace charlab
