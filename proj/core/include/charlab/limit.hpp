#pragma once

#include "charlab/measures.hpp"
#include "charlab/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace charlab {

/// One jump of the exact distribution function of T_{n,α}.
struct CdfAtom {
  double t_value = 0.0;
  Rational exact_s;
  Rational prob;
  Rational cum_prob;
};

inline constexpr int kExactCdfMax = 40;

/// Atoms of T_{n,α} under Jack_α measure, keyed and sorted on the exact S.
/// Requires 2 ≤ n ≤ 40.
std::vector<CdfAtom> exact_cdf(int n, const AlphaParam& alpha);

// Reflects a distribution through 0 (T ↦ −T), keeping atoms sorted.
std::vector<CdfAtom> negate_atoms(const std::vector<CdfAtom>& atoms);

/// sup_x |F(x) − Φ(x)| for a purely atomic F, comparing Φ(t) against both
/// the left and right limits of F at every atom.
double kolmogorov_distance(const std::vector<CdfAtom>& atoms);

/// Same supremum for an empirical CDF; `sorted` must be ascending.
double kolmogorov_distance_sorted(const std::vector<double>& sorted);

// sqrt(ln(2/0.01) / (2N)): 99% Dvoretzky–Kiefer–Wolfowitz half-width.
double dkw_half_width_99(std::uint64_t sample_count);

struct DistanceReport {
  enum class Method { exact, mc };

  int n = 0;
  Rational alpha;
  Method method = Method::exact;
  std::uint64_t sample_count = 0;  // mc only
  double distance = 0.0;
  double dkw_eps_99 = 0.0;         // mc only
  std::uint64_t seed = 0;          // mc only
};

std::string method_name(DistanceReport::Method m);

DistanceReport kolmogorov_exact(int n, const AlphaParam& alpha);

/// One sampled draw of the growth process, reduced to its statistic.
/// S = α·col_offsets − row_offsets, exact.
struct SampleRecord {
  std::uint64_t draw_index = 0;
  long col_offsets = 0;  // Σ(col−1)
  long row_offsets = 0;  // Σ(row−1)
  double t_float = 0.0;

  Rational s_value(const AlphaParam& alpha) const { return alpha.value() * col_offsets - row_offsets; }
  // S·den(α), always an integer.
  BigInt s_numerator(const AlphaParam& alpha) const;
};

/// Draws `count` paths of length n; draw k uses RngStream{seed, k}.
/// Output is indexed by draw and does not depend on `threads`.
std::vector<SampleRecord> sample_statistics(int n, const AlphaParam& alpha, std::uint64_t count, std::uint64_t seed,
                                            unsigned threads = default_thread_count());

inline constexpr std::uint64_t kMinMonteCarloCount = 1000;

/// Requires n ≥ 2 and count ≥ 1000.
DistanceReport kolmogorov_mc(int n, const AlphaParam& alpha, std::uint64_t count, std::uint64_t seed,
                             unsigned threads = default_thread_count());

struct RatePoint {
  int n = 0;
  double distance = 0.0;
};

/// Least-squares line log(distance) = intercept + slope·log(n).
/// sup_scaled = max distance·√n, an empirical lower bound on any constant
/// C with distance ≤ C·n^{-1/2} over the measured points.
struct RateReport {
  Rational alpha;
  std::vector<RatePoint> points;
  double slope = 0.0;
  double intercept = 0.0;
  double sup_scaled = 0.0;
};

/// Requires ≥ 3 reports with distinct n, one α, and positive distances.
RateReport rate_fit(const std::vector<DistanceReport>& reports);

struct ConcentrationReport {
  int n = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  double threshold = 0.0;               // 2e√n
  long max_abs_last = 0;                // max |X_n|
  std::uint64_t exceedances = 0;        // #{|X_n| > 2e√n}
  std::uint64_t step_bound_violations = 0;     // #{(path, j) : |X_j| > j}
  std::uint64_t content_bound_violations = 0;  // #{(path, j) : |X_j| > j−1}

  bool pass() const { return exceedances == 0 && step_bound_violations == 0; }
};

/// Plancherel-only probe of the tail of X_n and of the bound |X_j| ≤ j.
/// Requires n ≥ 3 and α = 1.
ConcentrationReport concentration_probe(int n, std::uint64_t count, const AlphaParam& alpha, std::uint64_t seed,
                                        unsigned threads = default_thread_count());

}  // namespace charlab
