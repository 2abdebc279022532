#include "cli.hpp"

#include "charlab/growth.hpp"
#include "charlab/limit.hpp"
#include "charlab/report.hpp"
#include "charlab/symfun.hpp"
#include "charlab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charlab::cli {

namespace {

// Raised for bad flag values; carries the offending flag name.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

AlphaParam parse_alpha(const std::string& text, const std::string& flag = "--alpha") {
  try {
    return AlphaParam::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag, e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag, "not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

void require_at_least(long value, long min, const std::string& flag) {
  if (value < min) throw UsageError(flag, "must be >= " + std::to_string(min) + ", got " + std::to_string(value));
}

// Writes to --out when given, otherwise to the default stream.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("--out", "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool to_file() const { return file_.is_open(); }

private:
  std::ofstream file_;
  std::ostream& fallback_;
};

struct Options {
  std::vector<std::string> alphas;
  std::string n_text;
  int n = 0;
  int n_max = kExactLevelBound;
  int path_max = kProjectionBound;
  int oracle_max = kPieriOracleBound;
  std::vector<int> m_values{1, 2, 3};
  std::uint64_t count = 0;
  std::uint64_t seed = 1;
  std::uint64_t index = 0;
  int exact_below = 20;
  unsigned threads = default_thread_count();
  std::string out;
  std::string input;
};

AlphaParam single_alpha(const Options& o) {
  if (o.alphas.empty()) return AlphaParam(1);
  if (o.alphas.size() > 1) throw UsageError("--alpha", "this command takes a single value");
  return parse_alpha(o.alphas.front());
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_at_least(o.n_max, 2, "--n-max");
  if (o.n_max > kExactLevelBound) throw UsageError("--n-max", "must be <= " + std::to_string(kExactLevelBound));
  require_at_least(o.path_max, 2, "--path-max");
  if (o.path_max > kProjectionBound) throw UsageError("--path-max", "must be <= " + std::to_string(kProjectionBound));
  require_at_least(o.oracle_max, 0, "--oracle-max");
  if (o.oracle_max > kPieriOracleBound) {
    throw UsageError("--oracle-max", "must be <= " + std::to_string(kPieriOracleBound));
  }
  for (int m : o.m_values) require_at_least(m, 1, "--m");

  SuiteConfig config;
  config.n_max = o.n_max;
  config.path_max = o.path_max;
  config.oracle_max = o.oracle_max;
  config.m_values = o.m_values;
  config.alphas.clear();
  for (const auto& a : o.alphas) config.alphas.push_back(parse_alpha(a));
  if (config.alphas.empty()) config.alphas.emplace_back(1);

  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite(config);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Sink sink(o.out, out);
  write_checks_json(sink.stream(), results);
  write_summary_table(sink.to_file() ? out : err, results, seconds);
  return summarize(results).failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_sample(const Options& o, std::ostream& out) {
  require_at_least(o.n, 2, "--n");
  require_at_least(static_cast<long>(o.count), 1, "--count");
  const AlphaParam alpha = single_alpha(o);
  const auto records = sample_statistics(o.n, alpha, o.count, o.seed, o.threads);
  Sink sink(o.out, out);
  write_samples_csv(sink.stream(), o.n, alpha, records);
  return kExitOk;
}

int cmd_path(const Options& o, std::ostream& out) {
  require_at_least(o.n, 1, "--n");
  const AlphaParam alpha = single_alpha(o);
  const auto path = sample_path(o.n, alpha, {o.seed, o.index});
  Sink sink(o.out, out);
  write_path(sink.stream(), path);
  return kExitOk;
}

int cmd_kolmogorov(const Options& o, std::ostream& out) {
  if (o.n_text.empty()) throw UsageError("--n", "required");
  const auto ns = parse_int_list(o.n_text, "--n");
  for (int n : ns) require_at_least(n, 2, "--n");
  std::vector<AlphaParam> alphas;
  for (const auto& a : o.alphas) alphas.push_back(parse_alpha(a));
  if (alphas.empty()) alphas.emplace_back(1);

  std::vector<DistanceReport> reports;
  for (const auto& alpha : alphas) {
    for (int n : ns) {
      if (n <= o.exact_below && n <= kExactCdfMax) {
        reports.push_back(kolmogorov_exact(n, alpha));
      } else {
        if (o.count < kMinMonteCarloCount) throw UsageError("--count", "must be >= 1000 for Monte Carlo distances");
        reports.push_back(kolmogorov_mc(n, alpha, o.count, o.seed, o.threads));
      }
    }
  }
  Sink sink(o.out, out);
  write_distances_csv(sink.stream(), reports);
  return kExitOk;
}

int cmd_exact_dist(const Options& o, std::ostream& out) {
  require_at_least(o.n, 2, "--n");
  if (o.n > kExactCdfMax) throw UsageError("--n", "must be <= " + std::to_string(kExactCdfMax));
  const AlphaParam alpha = single_alpha(o);
  const auto atoms = exact_cdf(o.n, alpha);
  Sink sink(o.out, out);
  write_cdf_csv(sink.stream(), atoms);
  return kExitOk;
}

int cmd_rate(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("--input", "required");
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw UsageError("--input", "cannot open '" + o.input + "'");
  std::vector<DistanceReport> reports;
  try {
    reports = read_distances_csv(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--input", e.what());
  }
  if (!o.alphas.empty()) {
    const Rational keep = single_alpha(o).value();
    std::erase_if(reports, [&](const DistanceReport& r) { return r.alpha != keep; });
  }
  RateReport rate;
  try {
    rate = rate_fit(reports);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--input", e.what());
  }
  Sink sink(o.out, out);
  write_rate_json(sink.stream(), rate);
  return kExitOk;
}

int cmd_concentration(const Options& o, std::ostream& out) {
  require_at_least(o.n, 3, "--n");
  require_at_least(static_cast<long>(o.count), 1, "--count");
  const auto report = concentration_probe(o.n, o.count, AlphaParam(1), o.seed, o.threads);
  Sink sink(o.out, out);
  write_concentration_json(sink.stream(), report);
  return report.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"charlab: exact and Monte Carlo laboratory for character ratios under Plancherel and Jack measures", "charlab"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run the exact identity suite; JSON rows plus a summary table");
  verify->add_option("--n-max", o.n_max, "Largest level checked (<= 10)");
  verify->add_option("--alpha", o.alphas, "Jack parameter, p/q or integer; repeatable (default 1)");
  verify->add_option("--path-max", o.path_max, "Largest n for path-enumeration checks (<= 8)");
  verify->add_option("--oracle-max", o.oracle_max, "Largest |mu| for the Pieri oracle (<= 7)");
  verify->add_option("--m", o.m_values, "Values of m for the content-product identity");
  verify->add_option("--out", o.out, "Write JSON here instead of stdout");

  auto* sample = app.add_subcommand("sample", "Sample T statistics to CSV");
  sample->add_option("--n", o.n, "Partition size")->required();
  sample->add_option("--alpha", o.alphas, "Jack parameter (default 1)");
  sample->add_option("--count", o.count, "Number of draws")->required();
  sample->add_option("--seed", o.seed, "Master seed");
  sample->add_option("--threads", o.threads, "Worker threads (does not affect output)");
  sample->add_option("--out", o.out, "CSV output path");

  auto* path = app.add_subcommand("path", "Sample one growth path and print its increments");
  path->add_option("--n", o.n, "Path length")->required();
  path->add_option("--alpha", o.alphas, "Jack parameter (default 1)");
  path->add_option("--seed", o.seed, "Master seed");
  path->add_option("--index", o.index, "Stream index within the seed");
  path->add_option("--out", o.out, "Output path");

  auto* kolm = app.add_subcommand("kolmogorov", "Kolmogorov distance of T to the standard normal");
  kolm->add_option("--n", o.n_text, "Comma-separated partition sizes")->required();
  kolm->add_option("--alpha", o.alphas, "Jack parameter; repeatable (default 1)");
  kolm->add_option("--count", o.count, "Monte Carlo draws per size")->default_val(200000);
  kolm->add_option("--seed", o.seed, "Master seed");
  kolm->add_option("--exact-below", o.exact_below, "Use exact enumeration for n <= this (and n <= 40)");
  kolm->add_option("--threads", o.threads, "Worker threads (does not affect output)");
  kolm->add_option("--out", o.out, "distances.csv path");

  auto* exact = app.add_subcommand("exact-dist", "Exact distribution of T as CSV atoms");
  exact->add_option("--n", o.n, "Partition size (2..40)")->required();
  exact->add_option("--alpha", o.alphas, "Jack parameter (default 1)");
  exact->add_option("--out", o.out, "cdf.csv path");

  auto* rate = app.add_subcommand("rate", "Fit log(distance) against log(n) from a distances.csv");
  rate->add_option("--input", o.input, "distances.csv written by kolmogorov")->required();
  rate->add_option("--alpha", o.alphas, "Only use rows with this alpha");
  rate->add_option("--out", o.out, "JSON output path");

  auto* conc = app.add_subcommand("concentration", "Tail probe of the last Plancherel increment");
  conc->add_option("--n", o.n, "Path length (>= 3)")->required();
  conc->add_option("--count", o.count, "Number of draws")->required();
  conc->add_option("--seed", o.seed, "Master seed");
  conc->add_option("--threads", o.threads, "Worker threads (does not affect output)");
  conc->add_option("--out", o.out, "JSON output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 consumes from the back
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (o.threads == 0) throw UsageError("--threads", "must be >= 1");
    if (*verify) return cmd_verify(o, out, err);
    if (*sample) return cmd_sample(o, out);
    if (*path) return cmd_path(o, out);
    if (*kolm) return cmd_kolmogorov(o, out);
    if (*exact) return cmd_exact_dist(o, out);
    if (*rate) return cmd_rate(o, out);
    if (*conc) return cmd_concentration(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace charlab::cli
