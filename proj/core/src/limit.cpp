#include "charlab/limit.hpp"

#include "charlab/growth.hpp"
#include "charlab/normal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace charlab {

std::vector<CdfAtom> exact_cdf(int n, const AlphaParam& alpha) {
  if (n < 2 || n > kExactCdfMax) {
    throw std::out_of_range("exact_cdf: n=" + std::to_string(n) + " outside [2, " + std::to_string(kExactCdfMax) + "]");
  }
  std::map<Rational, Rational> mass;
  for_each_partition(n, [&](const Partition& lambda) {
    mass[row_column_statistic(lambda, alpha)] += jack_prob(lambda, alpha);
  });
  std::vector<CdfAtom> atoms;
  atoms.reserve(mass.size());
  Rational cum(0);
  for (auto& [s, p] : mass) {
    cum += p;
    atoms.push_back({t_from_s(s, n, alpha), s, p, cum});
  }
  if (cum != 1) throw std::logic_error("exact_cdf: total mass is " + to_text(cum));
  return atoms;
}

std::vector<CdfAtom> negate_atoms(const std::vector<CdfAtom>& atoms) {
  std::vector<CdfAtom> out;
  out.reserve(atoms.size());
  Rational cum(0);
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    cum += it->prob;
    out.push_back({-it->t_value, Rational(-it->exact_s), it->prob, cum});
  }
  return out;
}

double kolmogorov_distance(const std::vector<CdfAtom>& atoms) {
  double sup = 0.0;
  double below = 0.0;
  for (const auto& a : atoms) {
    const double phi = normal_cdf(a.t_value);
    const double above = to_double(a.cum_prob);
    sup = std::max({sup, std::abs(above - phi), std::abs(below - phi)});
    below = above;
  }
  return sup;
}

double kolmogorov_distance_sorted(const std::vector<double>& sorted) {
  const double count = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double phi = normal_cdf(sorted[i]);
    sup = std::max({sup, std::abs(static_cast<double>(i + 1) / count - phi),
                    std::abs(static_cast<double>(i) / count - phi)});
  }
  return sup;
}

double dkw_half_width_99(std::uint64_t sample_count) {
  return std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(sample_count)));
}

std::string method_name(DistanceReport::Method m) { return m == DistanceReport::Method::exact ? "exact" : "mc"; }

DistanceReport kolmogorov_exact(int n, const AlphaParam& alpha) {
  DistanceReport r;
  r.n = n;
  r.alpha = alpha.value();
  r.method = DistanceReport::Method::exact;
  r.distance = kolmogorov_distance(exact_cdf(n, alpha));
  return r;
}

BigInt SampleRecord::s_numerator(const AlphaParam& alpha) const {
  const Rational& a = alpha.value();
  return BigInt(a.get_num() * col_offsets - a.get_den() * row_offsets);
}

std::vector<SampleRecord> sample_statistics(int n, const AlphaParam& alpha, std::uint64_t count, std::uint64_t seed,
                                            unsigned threads) {
  if (n < 1) throw std::invalid_argument("sample_statistics requires n >= 1");
  const double a = alpha.as_double();
  const double scale = n >= 2 ? 1.0 / std::sqrt(a * static_cast<double>(choose2(n))) : 0.0;
  std::vector<SampleRecord> out(count);
  parallel_for(count, threads, [&](std::size_t k) {
    GrowthSampler sampler(n, a);
    UniformSource uniform({seed, k});
    for (int j = 0; j < n; ++j) sampler.step(uniform.next());
    SampleRecord& rec = out[k];
    rec.draw_index = k;
    rec.col_offsets = sampler.col_offset_sum();
    rec.row_offsets = sampler.row_offset_sum();
    rec.t_float = (a * static_cast<double>(rec.col_offsets) - static_cast<double>(rec.row_offsets)) * scale;
  });
  return out;
}

DistanceReport kolmogorov_mc(int n, const AlphaParam& alpha, std::uint64_t count, std::uint64_t seed, unsigned threads) {
  if (n < 2) throw std::invalid_argument("kolmogorov_mc requires n >= 2");
  if (count < kMinMonteCarloCount) throw std::invalid_argument("kolmogorov_mc requires at least 1000 draws");
  const auto samples = sample_statistics(n, alpha, count, seed, threads);
  std::vector<double> t;
  t.reserve(samples.size());
  for (const auto& s : samples) t.push_back(s.t_float);
  std::sort(t.begin(), t.end());

  DistanceReport r;
  r.n = n;
  r.alpha = alpha.value();
  r.method = DistanceReport::Method::mc;
  r.sample_count = count;
  r.distance = kolmogorov_distance_sorted(t);
  r.dkw_eps_99 = dkw_half_width_99(count);
  r.seed = seed;
  return r;
}

RateReport rate_fit(const std::vector<DistanceReport>& reports) {
  if (reports.size() < 3) throw std::invalid_argument("rate_fit needs at least 3 points");
  RateReport out;
  out.alpha = reports.front().alpha;
  for (const auto& r : reports) {
    if (r.alpha != out.alpha) throw std::invalid_argument("rate_fit: reports mix alpha values");
    if (!(r.distance > 0.0)) throw std::invalid_argument("rate_fit: distances must be positive");
    for (const auto& p : out.points) {
      if (p.n == r.n) throw std::invalid_argument("rate_fit: duplicate n=" + std::to_string(r.n));
    }
    out.points.push_back({r.n, r.distance});
  }
  std::sort(out.points.begin(), out.points.end(), [](const RatePoint& a, const RatePoint& b) { return a.n < b.n; });

  const double m = static_cast<double>(out.points.size());
  double sx = 0, sy = 0;
  for (const auto& p : out.points) {
    sx += std::log(static_cast<double>(p.n));
    sy += std::log(p.distance);
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& p : out.points) {
    const double dx = std::log(static_cast<double>(p.n)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(p.distance) - my);
    out.sup_scaled = std::max(out.sup_scaled, p.distance * std::sqrt(static_cast<double>(p.n)));
  }
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  return out;
}

ConcentrationReport concentration_probe(int n, std::uint64_t count, const AlphaParam& alpha, std::uint64_t seed,
                                        unsigned threads) {
  if (n < 3) throw std::invalid_argument("concentration_probe requires n >= 3");
  if (!alpha.is_one()) throw std::invalid_argument("concentration_probe is defined for alpha = 1 only");

  struct Draw {
    int abs_last = 0;
    int step_violations = 0;
    int content_violations = 0;
  };
  std::vector<Draw> draws(count);
  parallel_for(count, threads, [&](std::size_t k) {
    GrowthSampler sampler(n, 1.0);
    UniformSource uniform({seed, k});
    Draw& d = draws[k];
    for (int j = 1; j <= n; ++j) {
      const BoxRef b = sampler.step(uniform.next());
      const int x = j == 1 ? 0 : std::abs(content(b));
      if (x > j) ++d.step_violations;
      if (x > j - 1) ++d.content_violations;
      if (j == n) d.abs_last = x;
    }
  });

  ConcentrationReport r;
  r.n = n;
  r.sample_count = count;
  r.seed = seed;
  r.threshold = 2.0 * std::numbers::e * std::sqrt(static_cast<double>(n));
  for (const auto& d : draws) {
    r.max_abs_last = std::max<long>(r.max_abs_last, d.abs_last);
    if (d.abs_last > r.threshold) ++r.exceedances;
    r.step_bound_violations += d.step_violations;
    r.content_bound_violations += d.content_violations;
  }
  return r;
}

}  // namespace charlab
