#include "charlab/growth.hpp"
#include "charlab/measures.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace charlab;
using charlab::testing::sample_alphas;

namespace {

std::map<BoxRef, Rational> as_map(const KernelRow& row) {
  std::map<BoxRef, Rational> out;
  for (const auto& e : row.entries) out.emplace(e.corner, e.prob);
  return out;
}

// Number of involutions of {1..n}; equals the number of standard tableaux.
long involutions(int n) {
  long a = 1, b = 1;
  for (int k = 2; k <= n; ++k) {
    const long c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return n == 0 ? 1 : b;
}

}  // namespace

TEST(Kernel, EmptyAndSingleBox) {
  for (const auto& alpha : sample_alphas()) {
    const Rational& a = alpha.value();
    EXPECT_EQ(as_map(kernel(Partition(), alpha)), (std::map<BoxRef, Rational>{{{1, 1}, Rational(1)}}));
    const auto one = as_map(kernel(Partition{1}, alpha));
    EXPECT_EQ(one.at({1, 2}), Rational(1 / (a + 1)));
    EXPECT_EQ(one.at({2, 1}), Rational(a / (a + 1)));
  }
}

TEST(Kernel, SizeTwoFixtures) {
  for (const auto& alpha : sample_alphas()) {
    const Rational& a = alpha.value();
    const auto row = as_map(kernel(Partition{2}, alpha));
    ASSERT_EQ(row.size(), 2u);
    EXPECT_EQ(row.at({1, 3}), Rational(1 / (2 * a + 1)));
    EXPECT_EQ(row.at({2, 1}), Rational(2 * a / (2 * a + 1)));
    const auto col = as_map(kernel(Partition{1, 1}, alpha));
    ASSERT_EQ(col.size(), 2u);
    EXPECT_EQ(col.at({1, 2}), Rational(2 / (a + 2)));
    EXPECT_EQ(col.at({3, 1}), Rational(a / (a + 2)));
  }
}

TEST(Kernel, AlphaTwoLevelTwoMarginal) {
  const auto one = as_map(kernel(Partition{1}, AlphaParam(2)));
  EXPECT_EQ(one.at({1, 2}), Rational(1, 3));
  EXPECT_EQ(one.at({2, 1}), Rational(2, 3));
}

TEST(Kernel, RowSumsPositivityAndOrder) {
  for (const auto& alpha : sample_alphas()) {
    for (int n = 0; n <= 9; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        const auto row = kernel(mu, alpha);
        EXPECT_EQ(row.source, mu);
        const auto addable = corners(mu).addable;
        ASSERT_EQ(row.entries.size(), addable.size());
        Rational total(0);
        for (std::size_t i = 0; i < addable.size(); ++i) {
          EXPECT_EQ(row.entries[i].corner, addable[i]);
          EXPECT_GT(row.entries[i].prob, 0);
          EXPECT_NEAR(row.entries[i].prob_float, row.entries[i].prob.get_d(), 1e-15);
          total += row.entries[i].prob;
        }
        EXPECT_EQ(total, 1) << mu.to_string();
      }
    }
  }
}

TEST(Kernel, CoherentWithJackMarginals) {
  for (const auto& alpha : sample_alphas()) {
    for (int n = 1; n <= 8; ++n) {
      std::map<Partition, Rational> pushed;
      for (const auto& mu : enumerate_partitions(n)) {
        const Rational m = jack_prob(mu, alpha);
        for (const auto& e : kernel(mu, alpha).entries) pushed[mu.with_box(e.corner)] += m * e.prob;
      }
      for (const auto& lambda : enumerate_partitions(n + 1)) {
        EXPECT_EQ(pushed[lambda], jack_prob(lambda, alpha)) << lambda.to_string();
      }
    }
  }
}

TEST(Kernel, AlphaOneIsDimensionRatio) {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      for (const auto& e : kernel(mu, AlphaParam(1)).entries) {
        Rational expected(dimension(mu.with_box(e.corner)), BigInt((n + 1) * dimension(mu)));
        expected.canonicalize();
        EXPECT_EQ(e.prob, expected) << mu.to_string();
      }
    }
  }
}

TEST(Kernel, TransposeDuality) {
  for (const auto& alpha : sample_alphas()) {
    for (int n = 0; n <= 7; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        const auto dual = as_map(kernel(mu.conjugate(), alpha.reciprocal()));
        for (const auto& e : kernel(mu, alpha).entries) {
          EXPECT_EQ(e.prob, dual.at({e.corner.col, e.corner.row}));
        }
      }
    }
  }
}

TEST(GrowthPath, IncrementsExample) {
  GrowthPath path;
  path.n = 4;
  path.alpha = AlphaParam(2);
  path.boxes = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  EXPECT_EQ(increments(path), (std::vector<Rational>{0, 2, -1, 1}));
  EXPECT_EQ(path.shape_at(0), Partition());
  EXPECT_EQ(path.shape_at(3), (Partition{2, 1}));
  EXPECT_EQ(path.final_shape(), (Partition{2, 2}));
}

TEST(SamplePath, SizeOneAndValidity) {
  const auto p1 = sample_path(1, AlphaParam(1), {3, 0});
  EXPECT_EQ(p1.boxes, (std::vector<BoxRef>{{1, 1}}));
  for (const auto& alpha : sample_alphas()) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const auto path = sample_path(25, alpha, {11, k});
      ASSERT_EQ(path.boxes.size(), 25u);
      EXPECT_FALSE(path.prob.has_value());
      Partition shape;
      for (const auto b : path.boxes) {
        const auto add = corners(shape).addable;
        ASSERT_NE(std::find(add.begin(), add.end(), b), add.end());
        shape = shape.with_box(b);
      }
    }
  }
}

TEST(SamplePath, IncrementsSumToStatisticAndRespectContentBound) {
  for (const auto& alpha : sample_alphas()) {
    const Rational bound = std::max(alpha.value(), Rational(1));
    for (std::uint64_t k = 0; k < 2000; ++k) {
      const auto path = sample_path(20, alpha, {5, k});
      const auto x = increments(path);
      Rational sum(0);
      for (std::size_t j = 0; j < x.size(); ++j) {
        sum += x[j];
        EXPECT_LE(abs_value(x[j]), Rational(bound * static_cast<long>(j)));
      }
      EXPECT_EQ(sum, t_statistic(path.final_shape(), alpha).s_value);
    }
  }
}

TEST(SamplePath, FinalShapeFrequenciesMatchJackMeasure) {
  constexpr int kDraws = 100000;
  for (const auto& alpha : sample_alphas()) {
    for (int n : {2, 4, 6}) {
      std::map<Partition, int> hits;
      for (int k = 0; k < kDraws; ++k) ++hits[sample_path(n, alpha, {17, static_cast<std::uint64_t>(k)}).final_shape()];
      for (const auto& lambda : enumerate_partitions(n)) {
        const double p = jack_prob(lambda, alpha).get_d();
        const double sd = std::sqrt(kDraws * p * (1 - p));
        EXPECT_NEAR(hits[lambda], kDraws * p, 4.5 * sd + 1) << lambda.to_string() << " n=" << n;
      }
    }
  }
}

TEST(SamplePath, PlancherelStatisticMean) {
  constexpr int kDraws = 20000;
  const int n = 30;
  double sum = 0.0;
  for (int k = 0; k < kDraws; ++k) {
    sum += t_statistic(sample_path(n, AlphaParam(1), {23, static_cast<std::uint64_t>(k)}).final_shape(), AlphaParam(1))
               .t_float;
  }
  // T has mean 0 and variance 1.
  EXPECT_NEAR(sum / kDraws, 0.0, 4.0 / std::sqrt(kDraws));
}

TEST(EnumeratePaths, SmallLevels) {
  for (const auto& alpha : sample_alphas()) {
    const Rational& a = alpha.value();
    const auto two = enumerate_paths(2, alpha);
    ASSERT_EQ(two.size(), 2u);
    std::map<Partition, Rational> by_shape;
    for (const auto& p : two) by_shape[p.final_shape()] = *p.prob;
    EXPECT_EQ(by_shape[(Partition{2})], Rational(1 / (a + 1)));
    EXPECT_EQ(by_shape[(Partition{1, 1})], Rational(a / (a + 1)));

    std::map<std::vector<BoxRef>, Rational> three;
    for (const auto& p : enumerate_paths(3, alpha)) three[p.boxes] = *p.prob;
    ASSERT_EQ(three.size(), 4u);
    EXPECT_EQ(Rational(three[{{1, 1}, {1, 2}, {1, 3}}]), Rational(1 / ((a + 1) * (2 * a + 1))));
    EXPECT_EQ(Rational(three[{{1, 1}, {1, 2}, {2, 1}}]), Rational(2 * a / ((a + 1) * (2 * a + 1))));
    EXPECT_EQ(Rational(three[{{1, 1}, {2, 1}, {1, 2}}]), Rational(2 * a / ((a + 1) * (a + 2))));
    EXPECT_EQ(Rational(three[{{1, 1}, {2, 1}, {3, 1}}]), Rational(a * a / ((a + 1) * (a + 2))));
  }
}

TEST(EnumeratePaths, CountsMassAndMarginals) {
  for (const auto& alpha : sample_alphas()) {
    for (int n = 1; n <= 7; ++n) {
      const auto paths = enumerate_paths(n, alpha);
      EXPECT_EQ(static_cast<long>(paths.size()), involutions(n));
      Rational total(0);
      std::map<Partition, Rational> marginal;
      for (const auto& p : paths) {
        total += *p.prob;
        marginal[p.final_shape()] += *p.prob;
        const auto x = increments(p);
        Rational s(0);
        for (const auto& v : x) s += v;
        if (n >= 2) EXPECT_EQ(s, t_statistic(p.final_shape(), alpha).s_value);
      }
      EXPECT_EQ(total, 1);
      for (const auto& [shape, m] : marginal) EXPECT_EQ(m, jack_prob(shape, alpha));
    }
  }
  EXPECT_EQ(enumerate_paths(5, AlphaParam(1)).size(), 26u);
}

TEST(EnumeratePaths, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_paths(0, AlphaParam(1)), std::out_of_range);
  EXPECT_THROW(enumerate_paths(10, AlphaParam(1)), std::out_of_range);
  EXPECT_NO_THROW(enumerate_paths(4, AlphaParam(1), 4));
  EXPECT_THROW(enumerate_paths(5, AlphaParam(1), 4), std::out_of_range);
}

TEST(GrowthSampler, FloatProbabilitiesMatchExactKernel) {
  for (const auto& alpha : sample_alphas()) {
    GrowthSampler sampler(12, alpha.as_double());
    std::vector<BoxRef> got_corners;
    std::vector<double> got;
    for (int n = 0; n <= 10; ++n) {
      for (const auto& mu : enumerate_partitions(n)) {
        sampler.load(mu);
        EXPECT_EQ(sampler.size(), n);
        sampler.corner_probabilities(got_corners, got);
        const auto row = kernel(mu, alpha);
        ASSERT_EQ(got.size(), row.entries.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          EXPECT_EQ(got_corners[i], row.entries[i].corner);
          EXPECT_NEAR(got[i], row.entries[i].prob_float, 1e-13 * row.entries[i].prob_float) << mu.to_string();
        }
      }
    }
  }
}

TEST(GrowthSampler, OffsetSumsTrackStatistic) {
  const auto alpha = AlphaParam::parse("3/2");
  GrowthSampler sampler(40, alpha.as_double());
  UniformSource u({9, 0});
  Partition shape;
  for (int j = 0; j < 40; ++j) shape = shape.with_box(sampler.step(u.next()));
  EXPECT_EQ(alpha.value() * sampler.col_offset_sum() - sampler.row_offset_sum(),
            t_statistic(shape, alpha).s_value);
  sampler.reset();
  EXPECT_EQ(sampler.size(), 0);
  EXPECT_EQ(sampler.step(0.999), (BoxRef{1, 1}));
  EXPECT_THROW(sampler.load(Partition(std::vector<int>(41, 1))), std::length_error);
}
