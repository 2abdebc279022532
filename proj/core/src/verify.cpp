#include "charlab/verify.hpp"

#include "charlab/symfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace charlab {

CheckResult make_identity(std::string id, int n, const AlphaParam& alpha, Rational lhs, Rational rhs,
                          std::string context) {
  CheckResult r;
  r.check_id = std::move(id);
  r.n = n;
  r.alpha = alpha.value();
  r.kind = CheckResult::Kind::identity;
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.context = std::move(context);
  return r;
}

CheckResult make_bound(std::string id, int n, const AlphaParam& alpha, Rational lhs, Rational rhs,
                       std::string context) {
  CheckResult r;
  r.check_id = std::move(id);
  r.n = n;
  r.alpha = alpha.value();
  r.kind = CheckResult::Kind::inequality;
  r.pass = lhs <= rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.context = std::move(context);
  return r;
}

void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    if (a.n != b.n) return a.n < b.n;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.context < b.context;
  });
}

KernelFn default_kernel() {
  return [](const Partition& mu, const AlphaParam& alpha) { return kernel(mu, alpha); };
}

namespace {

void require_bound(int n_max, int bound, const char* what) {
  if (n_max > bound) {
    throw std::out_of_range(std::string(what) + ": n_max=" + std::to_string(n_max) + " exceeds " +
                            std::to_string(bound));
  }
}

// Jack_α measure of one level together with the exact statistic S.
struct Level {
  std::vector<Partition> shapes;
  std::vector<Rational> prob;
  std::vector<Rational> s;
};

Level level_table(int n, const AlphaParam& alpha) {
  Level lv;
  lv.shapes = enumerate_partitions(n);
  for (const auto& p : lv.shapes) {
    lv.prob.push_back(n == 0 ? Rational(1) : jack_prob(p, alpha));
    lv.s.push_back(row_column_statistic(p, alpha));
  }
  return lv;
}

}  // namespace

std::vector<CheckResult> check_kernel(int n_max, const AlphaParam& alpha, const KernelFn& kernel_fn) {
  require_bound(n_max, kExactLevelBound, "check_kernel");
  std::vector<CheckResult> out;
  Level below = level_table(0, alpha);
  for (int j = 1; j <= n_max; ++j) {
    const Level here = level_table(j, alpha);
    std::map<Partition, Rational> pushed;
    for (std::size_t i = 0; i < below.shapes.size(); ++i) {
      const Partition& mu = below.shapes[i];
      const KernelRow row = kernel_fn(mu, alpha);
      Rational total(0);
      bool positive = row.entries.size() == addable_corners(mu).size();
      for (const auto& e : row.entries) {
        total += e.prob;
        positive = positive && e.prob > 0;
        pushed[mu.with_box(e.corner)] += below.prob[i] * e.prob;
      }
      auto r = make_identity("kernel.row_sum", j, alpha, total, Rational(1), mu.to_string());
      if (!positive) {
        r.pass = false;
        r.context += " (non-positive entry or missing corner)";
      }
      out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < here.shapes.size(); ++i) {
      out.push_back(make_identity("kernel.coherence", j, alpha, pushed[here.shapes[i]], here.prob[i],
                                  here.shapes[i].to_string()));
    }
    below = here;
  }
  return out;
}

std::vector<CheckResult> check_kernel_dimension_ratio(int mu_max, const KernelFn& kernel_fn) {
  require_bound(mu_max, kExactLevelBound, "check_kernel_dimension_ratio");
  const AlphaParam one(1);
  std::vector<CheckResult> out;
  for (int k = 0; k <= mu_max; ++k) {
    for (const auto& mu : enumerate_partitions(k)) {
      const BigInt dim_mu = dimension(mu);
      for (const auto& e : kernel_fn(mu, one).entries) {
        const Rational expected(dimension(mu.with_box(e.corner)), dim_mu * (k + 1));
        Rational canonical = expected;
        canonical.canonicalize();
        out.push_back(make_identity("kernel.dimension_ratio", k + 1, one, e.prob, canonical,
                                    mu.to_string() + "+(" + std::to_string(e.corner.row) + "," +
                                        std::to_string(e.corner.col) + ")"));
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_kernel_pieri(int mu_max, const AlphaParam& alpha, const KernelFn& kernel_fn) {
  require_bound(mu_max, kPieriOracleBound, "check_kernel_pieri");
  PieriOracle oracle(alpha);
  std::vector<CheckResult> out;
  for (int k = 0; k <= mu_max; ++k) {
    for (const auto& mu : enumerate_partitions(k)) {
      const auto psi = oracle.coefficients(mu);
      const Rational c_mu = hook_products(mu, alpha).c;
      const KernelRow row = kernel_fn(mu, alpha);
      std::map<BoxRef, Rational> got;
      for (const auto& e : row.entries) got[e.corner] = e.prob;
      for (const auto& [corner, coeff] : psi) {
        const Rational expected = coeff * c_mu / hook_products(mu.with_box(corner), alpha).c;
        out.push_back(make_identity("kernel.pieri_oracle", k + 1, alpha, got[corner], expected,
                                    mu.to_string() + "+(" + std::to_string(corner.row) + "," +
                                        std::to_string(corner.col) + ")"));
      }
    }
  }
  return out;
}

std::vector<CheckResult> conditional_moments_check(int n_max, const AlphaParam& alpha, const KernelFn& kernel_fn) {
  require_bound(n_max, kExactLevelBound, "conditional_moments_check");
  const Rational& a = alpha.value();
  std::vector<CheckResult> out;
  for (int j = 2; j <= n_max; ++j) {
    for (const auto& mu : enumerate_partitions(j - 1)) {
      Rational m1(0), m2(0), m4(0);
      for (const auto& e : kernel_fn(mu, alpha).entries) {
        const Rational x = alpha_content(e.corner, alpha);
        const Rational x2 = x * x;
        m1 += e.prob * x;
        m2 += e.prob * x2;
        m4 += e.prob * x2 * x2;
      }
      Rational sum_c(0), sum_c2(0);
      for (const auto& s : box_stats(mu, alpha)) {
        sum_c += s.alpha_content;
        sum_c2 += s.alpha_content * s.alpha_content;
      }
      const Rational fourth = a * a * choose2(j) + a * (a - 1) * (a - 1) * (j - 1) + 3 * a * sum_c2 +
                              3 * a * (a - 1) * sum_c;
      const auto ctx = mu.to_string();
      out.push_back(make_identity("conditional.mean", j, alpha, m1, Rational(0), ctx));
      out.push_back(make_identity("conditional.second", j, alpha, m2, a * (j - 1), ctx));
      out.push_back(make_identity("conditional.fourth", j, alpha, m4, fourth, ctx));
    }
  }
  return out;
}

std::vector<CheckResult> projection_check(int n_max, const AlphaParam& alpha) {
  require_bound(n_max, kProjectionBound, "projection_check");
  std::vector<CheckResult> out;
  for (int n = 2; n <= n_max; ++n) {
    struct Group {
      Rational mass{0};
      std::vector<Rational> weighted;
    };
    std::map<Rational, Group> groups;
    for (const auto& path : enumerate_paths(n, alpha, kProjectionBound)) {
      const auto xs = increments(path);
      Rational s(0);
      for (const auto& x : xs) s += x;
      Group& g = groups[s];
      if (g.weighted.empty()) g.weighted.assign(static_cast<std::size_t>(n), Rational(0));
      g.mass += *path.prob;
      for (int j = 0; j < n; ++j) g.weighted[j] += *path.prob * xs[j];
    }
    const Rational scale(1, choose2(n));
    for (const auto& [s, g] : groups) {
      for (int j = 1; j <= n; ++j) {
        out.push_back(make_identity("projection.conditional_on_s", n, alpha, g.weighted[j - 1] / g.mass,
                                    Rational((j - 1) * s * scale),
                                    "s=" + to_text(s) + ",j=" + std::to_string(j)));
      }
    }
  }
  return out;
}

std::vector<CheckResult> global_moments_check(int n_max, const AlphaParam& alpha, const KernelFn& kernel_fn) {
  require_bound(n_max, kExactLevelBound, "global_moments_check");
  const Rational& a = alpha.value();
  std::vector<CheckResult> out;
  for (int n = 2; n <= n_max; ++n) {
    const Level top = level_table(n, alpha);
    Rational m1(0), m2(0), m3(0);
    for (std::size_t i = 0; i < top.shapes.size(); ++i) {
      const Rational& s = top.s[i];
      m1 += top.prob[i] * s;
      m2 += top.prob[i] * s * s;
      m3 += top.prob[i] * s * s * s;
    }
    const long c2 = static_cast<long>(choose2(n));
    out.push_back(make_identity("global.s_mean", n, alpha, m1, Rational(0)));
    out.push_back(make_identity("global.s_variance", n, alpha, m2, a * c2));
    out.push_back(make_identity("global.s_third", n, alpha, m3, a * (a - 1) * c2));

    // One-step quantities from λ(n−1) to λ(n), formed over (μ, corner).
    const Level prev = level_table(n - 1, alpha);
    Rational x2(0), x4(0), abs3(0), cond_abs3_sq(0), t_abs3(0);
    for (std::size_t i = 0; i < prev.shapes.size(); ++i) {
      Rational y(0);  // E(|X_n|³ | μ)
      for (const auto& e : kernel_fn(prev.shapes[i], alpha).entries) {
        const Rational x = alpha_content(e.corner, alpha);
        const Rational sq = x * x;
        const Rational w = prev.prob[i] * e.prob;
        x2 += w * sq;
        x4 += w * sq * sq;
        abs3 += w * sq * abs_value(x);
        y += e.prob * sq * abs_value(x);
      }
      cond_abs3_sq += prev.prob[i] * y * y;
      t_abs3 += prev.prob[i] * abs_value(prev.s[i]) * y;
    }
    out.push_back(make_identity("global.x_second", n, alpha, x2, a * (n - 1)));
    if (n < 3) continue;

    const long c2_prev = static_cast<long>(choose2(n - 1));
    const Rational closed = a * a * c2 + 3 * a * a * c2_prev + a * (a - 1) * (a - 1) * (n - 1);
    out.push_back(make_identity("global.x_fourth", n, alpha, x4, closed));

    // Cauchy–Schwarz chain, valid for every α.
    out.push_back(make_bound("bound.abs3_cauchy_schwarz", n, alpha, abs3 * abs3, x2 * x4));
    // E(|T_{n−1}|·|X_n|³)² = t_abs3² / (α·C(n−1,2)).
    const Rational t_term_sq = t_abs3 * t_abs3 / (a * c2_prev);
    out.push_back(make_bound("bound.t_abs3_cauchy_schwarz", n, alpha, t_term_sq, cond_abs3_sq));
    out.push_back(make_bound("bound.t_abs3_conditional", n, alpha, cond_abs3_sq, a * (n - 1) * x4));

    if (alpha.is_one()) {
      const Rational target((n - 1) * (n - 1) * (2 * n - 3));
      out.push_back(make_identity("bound.second_times_fourth", n, alpha, x2 * x4, target));
      out.push_back(make_bound("bound.abs3", n, alpha, abs3 * abs3, target));
      out.push_back(make_bound("bound.t_abs3", n, alpha, t_term_sq, target));
    }
  }
  return out;
}

std::vector<CheckResult> symmetric_identities_check(int n_max, const AlphaParam& alpha,
                                                    const std::vector<int>& m_values) {
  require_bound(n_max, kExactLevelBound, "symmetric_identities_check");
  std::vector<CheckResult> out;
  for (int n = 1; n <= n_max; ++n) {
    const Level lv = level_table(n, alpha);
    std::vector<Rational> e_mean(static_cast<std::size_t>(n) + 1, Rational(0));
    std::vector<Rational> prod_mean(m_values.size(), Rational(0));
    for (std::size_t i = 0; i < lv.shapes.size(); ++i) {
      for (int r = 1; r <= n; ++r) e_mean[r] += lv.prob[i] * content_elementary(lv.shapes[i], r, alpha);
      for (std::size_t k = 0; k < m_values.size(); ++k) {
        prod_mean[k] += lv.prob[i] * content_product(lv.shapes[i], m_values[k], alpha);
      }
    }
    for (int r = 1; r <= n; ++r) {
      out.push_back(make_identity("symmetric.elementary_mean", n, alpha, e_mean[r], Rational(0),
                                  "r=" + std::to_string(r)));
    }
    for (std::size_t k = 0; k < m_values.size(); ++k) {
      out.push_back(make_identity("symmetric.content_product_mean", n, alpha, prod_mean[k],
                                  pow(Rational(m_values[k]), static_cast<unsigned>(n)),
                                  "m=" + std::to_string(m_values[k])));
    }
  }
  return out;
}

std::vector<CheckResult> measure_identities_check(int n_max, const AlphaParam& alpha) {
  require_bound(n_max, kExactLevelBound, "measure_identities_check");
  const AlphaParam dual = alpha.reciprocal();
  std::vector<CheckResult> out;
  for (int n = 1; n <= n_max; ++n) {
    Rational total(0);
    for (const auto& lambda : enumerate_partitions(n)) {
      const Rational p = jack_prob(lambda, alpha);
      total += p;
      const Partition conj = lambda.conjugate();
      const auto ctx = lambda.to_string();
      out.push_back(make_identity("measure.transpose_duality", n, alpha, p, jack_prob(conj, dual), ctx));
      const Rational s = row_column_statistic(lambda, alpha);
      out.push_back(make_identity("measure.s_duality", n, alpha, row_column_statistic(conj, dual),
                                  Rational(-s / alpha.value()), ctx));
      Rational box_sum(0);
      for (const auto& b : box_stats(lambda, alpha)) box_sum += b.alpha_content;
      out.push_back(make_identity("measure.box_content_sum", n, alpha, box_sum, s, ctx));
    }
    out.push_back(make_identity("measure.normalisation", n, alpha, total, Rational(1)));
  }
  return out;
}

std::vector<CheckResult> run_suite(const SuiteConfig& config) {
  std::vector<CheckResult> all;
  auto append = [&all](std::vector<CheckResult> part) {
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };
  append(check_kernel_dimension_ratio(config.n_max - 1));
  for (const auto& alpha : config.alphas) {
    append(measure_identities_check(config.n_max, alpha));
    append(check_kernel(config.n_max, alpha));
    append(check_kernel_pieri(std::min(config.oracle_max, config.n_max - 1), alpha));
    append(conditional_moments_check(config.n_max, alpha));
    append(projection_check(std::min(config.path_max, config.n_max), alpha));
    append(global_moments_check(config.n_max, alpha));
    append(symmetric_identities_check(config.n_max, alpha, config.m_values));
  }
  sort_results(all);
  return all;
}

}  // namespace charlab
