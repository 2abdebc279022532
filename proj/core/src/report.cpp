#include "charlab/report.hpp"

#include <json.hpp>

#include <charconv>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charlab {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void write_checks_json(std::ostream& os, const std::vector<CheckResult>& results) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : results) {
    rows.push_back({
        {"check", r.check_id},
        {"n", r.n},
        {"alpha", to_text(r.alpha)},
        {"kind", r.kind == CheckResult::Kind::identity ? "identity" : "inequality"},
        {"lhs", to_text(r.lhs)},
        {"rhs", to_text(r.rhs)},
        {"status", r.pass ? "pass" : "fail"},
        {"context", r.context},
    });
  }
  ordered_json doc{{"schema", kSchemaVersion}, {"checks", std::move(rows)}};
  os << doc.dump(1) << '\n';
}

SuiteSummary summarize(const std::vector<CheckResult>& results) {
  SuiteSummary s;
  s.run = results.size();
  for (const auto& r : results) (r.pass ? s.passed : s.failed)++;
  return s;
}

void write_summary_table(std::ostream& os, const std::vector<CheckResult>& results, double seconds) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_id;  // run, failed
  for (const auto& r : results) {
    auto& [run, failed] = by_id[r.check_id];
    ++run;
    if (!r.pass) ++failed;
  }
  os << std::left << std::setw(34) << "check" << std::right << std::setw(8) << "run" << std::setw(8) << "passed"
     << std::setw(8) << "failed" << '\n';
  for (const auto& [id, counts] : by_id) {
    os << std::left << std::setw(34) << id << std::right << std::setw(8) << counts.first << std::setw(8)
       << counts.first - counts.second << std::setw(8) << counts.second << '\n';
  }
  const auto total = summarize(results);
  os << std::left << std::setw(34) << "TOTAL" << std::right << std::setw(8) << total.run << std::setw(8)
     << total.passed << std::setw(8) << total.failed << '\n';
  os << "wall time: " << std::fixed << std::setprecision(2) << seconds << " s\n";
  os.unsetf(std::ios::floatfield);
}

void write_distances_csv(std::ostream& os, const std::vector<DistanceReport>& reports) {
  os << kDistancesHeader << '\n';
  for (const auto& r : reports) {
    const bool mc = r.method == DistanceReport::Method::mc;
    os << r.n << ',' << to_text(r.alpha) << ',' << method_name(r.method) << ',' << (mc ? std::to_string(r.sample_count) : "")
       << ',' << format_double(r.distance) << ',' << (mc ? format_double(r.dkw_eps_99) : "") << ','
       << (mc ? std::to_string(r.seed) : "") << '\n';
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const char* column) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad value in column ") + column + ": '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<DistanceReport> read_distances_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("distances csv is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kDistancesHeader) throw std::invalid_argument("unexpected distances csv header: " + line);
  std::vector<DistanceReport> out;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 7) throw std::invalid_argument("distances csv row needs 7 fields: " + line);
    DistanceReport r;
    r.n = parse_number<int>(f[0], "n");
    r.alpha = parse_rational(f[1]);
    if (f[2] == "exact") {
      r.method = DistanceReport::Method::exact;
    } else if (f[2] == "mc") {
      r.method = DistanceReport::Method::mc;
    } else {
      throw std::invalid_argument("unknown method '" + f[2] + "'");
    }
    if (!f[3].empty()) r.sample_count = parse_number<std::uint64_t>(f[3], "N");
    r.distance = parse_number<double>(f[4], "distance");
    if (!f[5].empty()) r.dkw_eps_99 = parse_number<double>(f[5], "dkw_eps_99");
    if (!f[6].empty()) r.seed = parse_number<std::uint64_t>(f[6], "seed");
    out.push_back(r);
  }
  return out;
}

void write_rate_json(std::ostream& os, const RateReport& report) {
  ordered_json points = ordered_json::array();
  for (const auto& p : report.points) points.push_back({{"n", p.n}, {"distance", p.distance}});
  ordered_json doc{
      {"schema", kSchemaVersion},
      {"alpha", to_text(report.alpha)},
      {"points", std::move(points)},
      {"slope", report.slope},
      {"intercept", report.intercept},
      {"sup_scaled", report.sup_scaled},
      {"sup_scaled_note", "empirical lower bound on any C with distance <= C*n^-1/2 at the measured n; not an estimate of C"},
  };
  os << doc.dump(1) << '\n';
}

void write_cdf_csv(std::ostream& os, const std::vector<CdfAtom>& atoms) {
  os << kCdfHeader << '\n';
  for (const auto& a : atoms) {
    os << a.exact_s.get_num().get_str() << ',' << a.exact_s.get_den().get_str() << ',' << format_double(a.t_value)
       << ',' << a.prob.get_num().get_str() << ',' << a.prob.get_den().get_str() << ','
       << format_double(to_double(a.cum_prob)) << '\n';
  }
}

void write_samples_csv(std::ostream& os, int n, const AlphaParam& alpha, const std::vector<SampleRecord>& records) {
  os << kSamplesHeader << '\n';
  const std::string alpha_text = to_text(alpha.value());
  for (const auto& r : records) {
    os << n << ',' << alpha_text << ',' << r.draw_index << ',' << r.s_numerator(alpha).get_str() << ','
       << format_double(r.t_float) << '\n';
  }
}

void write_path(std::ostream& os, const GrowthPath& path) {
  const auto xs = increments(path);
  for (std::size_t j = 0; j < path.boxes.size(); ++j) {
    os << j + 1 << ", " << path.boxes[j].row << ", " << path.boxes[j].col << ", " << to_text(xs[j]) << '\n';
  }
}

void write_concentration_json(std::ostream& os, const ConcentrationReport& r) {
  ordered_json doc{
      {"schema", kSchemaVersion},
      {"n", r.n},
      {"count", r.sample_count},
      {"seed", r.seed},
      {"threshold", r.threshold},
      {"max_abs_last", r.max_abs_last},
      {"exceedances", r.exceedances},
      {"step_bound_violations", r.step_bound_violations},
      {"content_bound_violations", r.content_bound_violations},
      {"status", r.pass() ? "pass" : "fail"},
  };
  os << doc.dump(1) << '\n';
}

}  // namespace charlab
