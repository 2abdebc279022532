// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include "charlab/growth.hpp"
#include "charlab/limit.hpp"
#include "charlab/normal.hpp"
#include "charlab/verify.hpp"
#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace charlab;

namespace {

constexpr std::uint64_t kSeedMcAgreement = 20240601;
constexpr std::uint64_t kSeedRate = 20240602;
constexpr std::uint64_t kSeedConcentration = 20240603;
constexpr std::uint64_t kSeedDeterminism = 7;

std::vector<AlphaParam> sample_alphas() {
  return {AlphaParam(1), AlphaParam(2), AlphaParam::parse("1/2"), AlphaParam::parse("3/2"), AlphaParam(5)};
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass && !what.empty()) detail << "first failure: " << what;
      pass = false;
    }
  }
};

std::size_t tally(Outcome& o, const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    o.require(r.pass, r.check_id + " n=" + std::to_string(r.n) + " alpha=" + to_text(r.alpha) + " " + r.context +
                          " lhs=" + to_text(r.lhs) + " rhs=" + to_text(r.rhs));
  }
  return rs.size();
}

Outcome identity_suite() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& alpha : sample_alphas()) {
    count += tally(o, measure_identities_check(10, alpha));
    count += tally(o, conditional_moments_check(10, alpha));
    count += tally(o, global_moments_check(10, alpha));
    count += tally(o, symmetric_identities_check(10, alpha, {1, 2, 3}));
  }
  if (o.pass) o.detail << count << " exact checks";
  return o;
}

std::map<BoxRef, Rational> row_of(const Partition& mu, const AlphaParam& alpha) {
  std::map<BoxRef, Rational> out;
  for (const auto& e : kernel(mu, alpha).entries) out.emplace(e.corner, e.prob);
  return out;
}

Outcome kernel_ladder() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& alpha : sample_alphas()) {
    count += tally(o, check_kernel(10, alpha));
    // Level 10 rows, beyond the coherence ladder.
    for (const auto& mu : enumerate_partitions(10)) {
      Rational total(0);
      for (const auto& e : kernel(mu, alpha).entries) total += e.prob;
      o.require(total == 1, "row sum at " + mu.to_string());
      ++count;
    }
    const Rational& a = alpha.value();
    const std::vector<std::pair<Partition, std::map<BoxRef, Rational>>> fixtures{
        {Partition(), {{{1, 1}, Rational(1)}}},
        {Partition{1}, {{{1, 2}, Rational(1 / (a + 1))}, {{2, 1}, Rational(a / (a + 1))}}},
        {Partition{2}, {{{1, 3}, Rational(1 / (2 * a + 1))}, {{2, 1}, Rational(2 * a / (2 * a + 1))}}},
        {Partition{1, 1}, {{{1, 2}, Rational(2 / (a + 2))}, {{3, 1}, Rational(a / (a + 2))}}},
    };
    for (const auto& [mu, expected] : fixtures) {
      o.require(row_of(mu, alpha) == expected, "fixture " + mu.to_string() + " alpha=" + to_text(a));
      ++count;
    }
  }
  count += tally(o, check_kernel_dimension_ratio(10));
  for (const char* text : {"2", "1/2", "3/2"}) count += tally(o, check_kernel_pieri(7, AlphaParam::parse(text)));
  if (o.pass) o.detail << count << " exact checks";
  return o;
}

Outcome third_moment_bounds() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& r : global_moments_check(10, AlphaParam(1))) {
    if (r.check_id == "bound.abs3" || r.check_id == "bound.t_abs3" || r.check_id == "bound.second_times_fourth") {
      o.require(r.pass, r.check_id + " n=" + std::to_string(r.n));
      ++count;
    }
  }
  o.require(count == 3 * 8, "expected 24 bound checks for 3 <= n <= 10");
  if (o.pass) o.detail << count << " squared comparisons";
  return o;
}

Outcome projection_law() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& alpha : sample_alphas()) count += tally(o, projection_check(8, alpha));
  if (o.pass) o.detail << count << " conditional expectations";
  return o;
}

Outcome exact_distances() {
  Outcome o;
  const double d2 = kolmogorov_exact(2, AlphaParam(1)).distance;
  o.require(std::abs(d2 - (normal_cdf(1.0) - 0.5)) <= 1e-9, "n=2 distance " + std::to_string(d2));
  double prev = 1.0;
  std::ostringstream seq;
  for (int n : {4, 6, 8, 10, 12}) {
    const double d = kolmogorov_exact(n, AlphaParam(1)).distance;
    seq << " n=" << n << ":" << d;
    o.require(d < prev, "not strictly decreasing at n=" + std::to_string(n));
    prev = d;
  }
  if (o.pass) o.detail << "d(2)=" << d2 << seq.str();
  return o;
}

Outcome mc_agreement() {
  Outcome o;
  for (int n : {8, 12}) {
    for (int a : {1, 2}) {
      const AlphaParam alpha(a);
      const auto mc = kolmogorov_mc(n, alpha, 200000, kSeedMcAgreement);
      const double exact = kolmogorov_exact(n, alpha).distance;
      const double gap = std::abs(mc.distance - exact);
      o.detail << " (n=" << n << ",a=" << a << ") gap=" << gap << "/" << mc.dkw_eps_99;
      o.require(gap <= mc.dkw_eps_99, "");
    }
  }
  return o;
}

Outcome berry_esseen_rate() {
  Outcome o;
  for (int a : {1, 2}) {
    const AlphaParam alpha(a);
    std::vector<DistanceReport> reports;
    for (int n : {8, 16, 32, 64, 128}) reports.push_back(kolmogorov_mc(n, alpha, 200000, kSeedRate));
    const auto fit = rate_fit(reports);
    o.detail << " alpha=" << a << " slope=" << fit.slope << " scaled=[";
    for (const auto& p : fit.points) {
      const double scaled = p.distance * std::sqrt(static_cast<double>(p.n));
      o.detail << (p.n == 8 ? "" : ",") << scaled;
      o.require(scaled >= 0.1 && scaled <= 1.5, "");
    }
    o.detail << "]";
    o.require(fit.slope >= -0.65 && fit.slope <= -0.35, "");
  }
  return o;
}

Outcome concentration() {
  Outcome o;
  const auto r = concentration_probe(100, 1000000, AlphaParam(1), kSeedConcentration);
  o.require(r.exceedances == 0, "samples beyond 2e*sqrt(n)");
  o.require(r.step_bound_violations == 0, "increments with |X_j| > j");
  o.detail << " max|X_n|=" << r.max_abs_last << " threshold=" << r.threshold << " exceedances=" << r.exceedances
           << " step violations=" << r.step_bound_violations;
  return o;
}

Outcome duality() {
  Outcome o;
  std::size_t count = 0;
  for (const char* text : {"2", "3/2", "5"}) {
    const auto alpha = AlphaParam::parse(text);
    for (int n = 1; n <= 10; ++n) {
      for (const auto& p : enumerate_partitions(n)) {
        o.require(jack_prob(p, alpha) == jack_prob(p.conjugate(), alpha.reciprocal()), "measure " + p.to_string());
        ++count;
      }
      if (n < 2) continue;
      const auto dual = exact_cdf(n, alpha.reciprocal());
      const auto mirrored = negate_atoms(exact_cdf(n, alpha));
      bool same = dual.size() == mirrored.size();
      for (std::size_t i = 0; same && i < dual.size(); ++i) {
        same = dual[i].prob == mirrored[i].prob && dual[i].exact_s * alpha.value() == mirrored[i].exact_s;
      }
      o.require(same, "negated atoms n=" + std::to_string(n) + " alpha=" + text);
      const double gap = std::abs(kolmogorov_distance(mirrored) - kolmogorov_exact(n, alpha.reciprocal()).distance);
      o.require(gap <= 1e-12, "distance identity n=" + std::to_string(n));
      count += 2;
    }
  }
  if (o.pass) o.detail << count << " comparisons";
  return o;
}

std::string capture(std::vector<std::string> args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != cli::kExitOk) throw std::runtime_error(err.str());
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::string seed = std::to_string(kSeedDeterminism);
  const std::vector<std::vector<std::string>> commands{
      {"sample", "--n", "16", "--alpha", "3/2", "--count", "1000", "--seed", seed},
      {"sample", "--n", "64", "--alpha", "2", "--count", "20000", "--seed", seed},
      {"kolmogorov", "--n", "8,30,60", "--alpha", "1", "--alpha", "1/2", "--count", "20000", "--seed", seed},
  };
  for (const auto& cmd : commands) {
    std::string reference;
    for (const char* threads : {"1", "1", "2", "4"}) {
      auto args = cmd;
      args.insert(args.end(), {"--threads", threads});
      const std::string text = capture(args);
      if (reference.empty()) reference = text;
      o.require(text == reference, cmd[0] + " differs with --threads " + threads);
    }
  }
  if (o.pass) o.detail << commands.size() << " commands x 4 runs byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 exact identity suite", identity_suite},
      {"2 kernel validity ladder", kernel_ladder},
      {"3 third absolute moment bounds", third_moment_bounds},
      {"4 projection law", projection_law},
      {"5 exact distance fixtures", exact_distances},
      {"6 Monte Carlo agrees with exact", mc_agreement},
      {"7 Berry-Esseen rate", berry_esseen_rate},
      {"8 concentration", concentration},
      {"9 duality", duality},
      {"10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << seconds << " s] "
              << o.detail.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
