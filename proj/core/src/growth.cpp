#include "charlab/growth.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace charlab {

KernelRow kernel(const Partition& mu, const AlphaParam& alpha) {
  const Rational& a = alpha.value();
  const Partition conj = mu.conjugate();
  KernelRow row;
  row.source = mu;
  for (const BoxRef b : addable_corners(mu)) {
    Rational p(1);
    for (int k = 1; k < b.col; ++k) {
      const Rational x = a * (mu.row(b.row) - k) + (conj.row(k) - b.row);
      p *= (x + 1) / (x + a + 1);
    }
    for (int r = 1; r < b.row; ++r) {
      const Rational x = a * (mu.row(r) - b.col) + (conj.row(b.col) - r);
      p *= (x + a) / (x + a + 1);
    }
    row.entries.push_back({b, p, to_double(p)});
  }
  return row;
}

Partition GrowthPath::shape_at(int j) const {
  if (j < 0 || j > static_cast<int>(boxes.size())) throw std::out_of_range("shape_at: step out of range");
  std::vector<int> parts;
  for (int k = 0; k < j; ++k) {
    const BoxRef b = boxes[k];
    if (b.row == static_cast<int>(parts.size()) + 1 && b.col == 1) {
      parts.push_back(1);
    } else if (b.row <= static_cast<int>(parts.size()) && parts[b.row - 1] + 1 == b.col) {
      ++parts[b.row - 1];
    } else {
      throw std::logic_error("growth path adds a box outside the shape boundary");
    }
  }
  return Partition(std::move(parts));
}

std::vector<Rational> increments(const GrowthPath& path) {
  std::vector<Rational> xs;
  xs.reserve(path.boxes.size());
  for (std::size_t j = 0; j < path.boxes.size(); ++j) {
    xs.push_back(j == 0 ? Rational(0) : alpha_content(path.boxes[j], path.alpha));
  }
  return xs;
}

GrowthSampler::GrowthSampler(int capacity, double alpha)
    : alpha_(alpha), rows_(static_cast<std::size_t>(capacity) + 2, 0), cols_(static_cast<std::size_t>(capacity) + 2, 0) {}

void GrowthSampler::reset() {
  std::fill(cols_.begin(), cols_.begin() + rows_[0] + 1, 0);
  std::fill(rows_.begin(), rows_.begin() + nrows_ + 1, 0);
  nrows_ = 0;
  size_ = 0;
  col_sum_ = 0;
  row_sum_ = 0;
}

void GrowthSampler::load(const Partition& shape) {
  if (shape.size() + 1 >= static_cast<int>(rows_.size())) throw std::length_error("GrowthSampler capacity exceeded");
  std::fill(rows_.begin(), rows_.end(), 0);
  std::fill(cols_.begin(), cols_.end(), 0);
  nrows_ = shape.length();
  size_ = shape.size();
  col_sum_ = 0;
  row_sum_ = 0;
  for (int r = 1; r <= nrows_; ++r) {
    rows_[r - 1] = shape.row(r);
    for (int c = 1; c <= shape.row(r); ++c) {
      ++cols_[c - 1];
      col_sum_ += c - 1;
      row_sum_ += r - 1;
    }
  }
}

double GrowthSampler::corner_weight(int row, int col) const {
  // Same factors as kernel(), in double. Partial products are renormalised
  // before they can overflow at large n.
  double num = 1.0;
  double den = 1.0;
  const int len = rows_[row - 1];
  for (int k = 1; k < col; ++k) {
    const double x = alpha_ * (len - k) + (cols_[k - 1] - row);
    num *= x + 1.0;
    den *= x + alpha_ + 1.0;
    if (den > 1e200) {
      num /= den;
      den = 1.0;
    }
  }
  const int height = cols_[col - 1];
  for (int r = 1; r < row; ++r) {
    const double x = alpha_ * (rows_[r - 1] - col) + (height - r);
    num *= x + alpha_;
    den *= x + alpha_ + 1.0;
    if (den > 1e200) {
      num /= den;
      den = 1.0;
    }
  }
  return num / den;
}

BoxRef GrowthSampler::step(double uniform) {
  if (size_ + 1 >= static_cast<int>(rows_.size())) throw std::length_error("GrowthSampler capacity exceeded");
  double cumulative = 0.0;
  BoxRef chosen{0, 0};
  for (int r = 1; r <= nrows_ + 1; ++r) {
    const int len = rows_[r - 1];
    if (r > 1 && rows_[r - 2] == len) continue;
    chosen = {r, len + 1};
    cumulative += corner_weight(r, len + 1);
    if (uniform < cumulative) break;
  }
  // Falling off the end (rounding in the cumulative sum) keeps the last corner.
  ++rows_[chosen.row - 1];
  ++cols_[chosen.col - 1];
  if (chosen.row > nrows_) nrows_ = chosen.row;
  ++size_;
  col_sum_ += chosen.col - 1;
  row_sum_ += chosen.row - 1;
  return chosen;
}

void GrowthSampler::corner_probabilities(std::vector<BoxRef>& corners, std::vector<double>& probs) const {
  corners.clear();
  probs.clear();
  for (int r = 1; r <= nrows_ + 1; ++r) {
    const int len = rows_[r - 1];
    if (r > 1 && rows_[r - 2] == len) continue;
    corners.push_back({r, len + 1});
    probs.push_back(corner_weight(r, len + 1));
  }
}

GrowthPath sample_path(int n, const AlphaParam& alpha, RngStream rng) {
  if (n < 1) throw std::invalid_argument("sample_path requires n >= 1");
  GrowthSampler sampler(n, alpha.as_double());
  UniformSource uniform(rng);
  GrowthPath path;
  path.n = n;
  path.alpha = alpha;
  path.boxes.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) path.boxes.push_back(sampler.step(uniform.next()));
  return path;
}

namespace {

struct PathEnumerator {
  int n;
  AlphaParam alpha;
  std::map<Partition, KernelRow> kernels;
  std::vector<GrowthPath> out;
  std::vector<BoxRef> stack;

  const KernelRow& row_for(const Partition& mu) {
    auto it = kernels.find(mu);
    if (it == kernels.end()) it = kernels.emplace(mu, kernel(mu, alpha)).first;
    return it->second;
  }

  void walk(const Partition& shape, const Rational& prob) {
    if (shape.size() == n) {
      out.push_back({n, alpha, stack, prob});
      return;
    }
    // std::map references stay valid across the emplace calls made below.
    const KernelRow& row = row_for(shape);
    for (const auto& e : row.entries) {
      stack.push_back(e.corner);
      walk(shape.with_box(e.corner), prob * e.prob);
      stack.pop_back();
    }
  }
};

}  // namespace

std::vector<GrowthPath> enumerate_paths(int n, const AlphaParam& alpha, int bound) {
  if (n < 1 || n > bound) {
    throw std::out_of_range("enumerate_paths: n=" + std::to_string(n) + " outside [1, " + std::to_string(bound) + "]");
  }
  PathEnumerator e{n, alpha, {}, {}, {}};
  e.stack.push_back({1, 1});
  e.walk(Partition{1}, Rational(1));
  return std::move(e.out);
}

}  // namespace charlab
