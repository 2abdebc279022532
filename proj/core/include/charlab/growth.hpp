#pragma once

#include "charlab/partition.hpp"
#include "charlab/rng.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace charlab {

/// Exact one-step distribution of the (α-)growth process out of `source`,
/// one entry per addable corner in increasing row order.
struct KernelRow {
  struct Entry {
    BoxRef corner;
    Rational prob;
    double prob_float = 0.0;
  };
  Partition source;
  std::vector<Entry> entries;
};

/// Growth kernel p(μ → μ+b) = ψ′_{μ+b/μ}(α) · c(μ,α)/c(μ+b,α).
///
/// All hook factors cancel except those of boxes sharing a row or a column
/// with b. With arm a and leg l measured in μ, the surviving factors are
///
///   row of b:     (αa + l + 1) / (αa + l + α + 1)
///   column of b:  (αa + l + α) / (αa + l + α + 1)
///
/// (the column factor already absorbs the Pieri coefficient ψ′), so a
/// corner costs O(row length + column height). At α = 1 this is the
/// dimension ratio dim(μ+b) / ((|μ|+1)·dim(μ)).
KernelRow kernel(const Partition& mu, const AlphaParam& alpha);

/// A chain λ(1) ⊂ … ⊂ λ(n) recorded as the box added at each step.
struct GrowthPath {
  int n = 0;
  AlphaParam alpha;
  std::vector<BoxRef> boxes;    // boxes[0] == (1,1)
  std::optional<Rational> prob;  // set for enumerated paths only

  Partition shape_at(int j) const;  // λ(j), 0 ≤ j ≤ n
  Partition final_shape() const { return shape_at(n); }
};

/// X_1 = 0 and X_j = c_α(boxes[j]) for j ≥ 2, recomputed from the boxes.
std::vector<Rational> increments(const GrowthPath& path);

/// Floating-point walker used by every sampling path. Keeps row and column
/// lengths of the current shape and draws one corner per uniform variate.
class GrowthSampler {
public:
  GrowthSampler(int capacity, double alpha);

  void reset();
  // Jumps to an arbitrary shape (|shape| must not exceed the capacity).
  void load(const Partition& shape);
  // Adds one box chosen with probability kernel(current, α) and returns it.
  BoxRef step(double uniform);
  int size() const { return size_; }

  // Σ(col−1) and Σ(row−1) over the boxes added so far; S = α·A − B.
  long col_offset_sum() const { return col_sum_; }
  long row_offset_sum() const { return row_sum_; }

  // Addable corners and their double-precision probabilities for the
  // current shape (same order as kernel()).
  void corner_probabilities(std::vector<BoxRef>& corners, std::vector<double>& probs) const;

private:
  double corner_weight(int row, int col) const;

  double alpha_;
  std::vector<int> rows_;  // rows_[i] = length of row i+1
  std::vector<int> cols_;  // cols_[j] = length of column j+1
  int nrows_ = 0;
  int size_ = 0;
  long col_sum_ = 0;
  long row_sum_ = 0;
};

/// Samples λ(1..n) from the α-growth process. One uniform per step is
/// compared against the cumulative double probabilities in corner order.
GrowthPath sample_path(int n, const AlphaParam& alpha, RngStream rng);

inline constexpr int kDefaultPathBound = 9;

/// Every saturated chain from (1) to size n with its exact probability.
/// Rejects n < 1 or n > bound.
std::vector<GrowthPath> enumerate_paths(int n, const AlphaParam& alpha, int bound = kDefaultPathBound);

}  // namespace charlab
