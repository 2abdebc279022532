#pragma once

#include "charlab/rational.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charlab {

/// A box of a Young diagram, 1-indexed (English convention: row 1 on top).
struct BoxRef {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const BoxRef&, const BoxRef&) = default;
};

/// Young diagram with weakly decreasing positive row lengths. The empty
/// partition is valid and has size 0.
class Partition {
public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "[4,2,1]" / "[]"
  static Partition parse(std::string_view text);
  std::string to_string() const;

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Row length, 0 beyond the last row (1-indexed).
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  bool contains(BoxRef b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }

  Partition conjugate() const;

  // Preconditions: b is an addable (resp. removable) corner.
  Partition with_box(BoxRef b) const;
  Partition without_box(BoxRef b) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts; a longer partition with equal prefix compares greater.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

struct BoxStats {
  BoxRef box;
  int arm = 0;
  int leg = 0;
  int hook = 1;
  int content = 0;
  Rational alpha_content;
};

// One record per box, row by row.
std::vector<BoxStats> box_stats(const Partition& lambda, const AlphaParam& alpha = AlphaParam());

// α-content α·(col−1) − (row−1).
Rational alpha_content(BoxRef b, const AlphaParam& alpha);
inline int content(BoxRef b) { return b.col - b.row; }

struct Corners {
  std::vector<BoxRef> addable;    // increasing row
  std::vector<BoxRef> removable;  // increasing row
};

Corners corners(const Partition& lambda);
std::vector<BoxRef> addable_corners(const Partition& lambda);

/// Number of standard Young tableaux, n! / Π hooks. Exact.
BigInt dimension(const Partition& lambda);

// c = Π (α·a+l+1), c' = Π (α·a+l+α) over the boxes of λ.
struct HookProducts {
  Rational c;
  Rational c_prime;
};
HookProducts hook_products(const Partition& lambda, const AlphaParam& alpha);

/// Every partition of n, in decreasing lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

}  // namespace charlab
