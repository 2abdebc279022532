#pragma once

#include "charlab/growth.hpp"
#include "charlab/limit.hpp"
#include "charlab/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace charlab {

inline constexpr int kSchemaVersion = 1;

// Shortest round-trip decimal form of a double.
std::string format_double(double x);

/// {"schema":1,"checks":[{check,n,alpha,kind,lhs,rhs,status,context},...]}
/// Rationals are "p/q" strings.
void write_checks_json(std::ostream& os, const std::vector<CheckResult>& results);

struct SuiteSummary {
  std::size_t run = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};
SuiteSummary summarize(const std::vector<CheckResult>& results);

// Per-check-id table with totals and wall time.
void write_summary_table(std::ostream& os, const std::vector<CheckResult>& results, double seconds);

// n,alpha,method,N,distance,dkw_eps_99,seed
inline constexpr const char* kDistancesHeader = "n,alpha,method,N,distance,dkw_eps_99,seed";
void write_distances_csv(std::ostream& os, const std::vector<DistanceReport>& reports);
std::vector<DistanceReport> read_distances_csv(std::istream& is);

void write_rate_json(std::ostream& os, const RateReport& report);

// s_numer,s_denom,t_float,prob_numer,prob_denom,cum_float
inline constexpr const char* kCdfHeader = "s_numer,s_denom,t_float,prob_numer,prob_denom,cum_float";
void write_cdf_csv(std::ostream& os, const std::vector<CdfAtom>& atoms);

// n,alpha,draw_index,s_numerator,t_float
inline constexpr const char* kSamplesHeader = "n,alpha,draw_index,s_numerator,t_float";
void write_samples_csv(std::ostream& os, int n, const AlphaParam& alpha, const std::vector<SampleRecord>& records);

// One line per step: "j, box_row, box_col, X_j".
void write_path(std::ostream& os, const GrowthPath& path);

void write_concentration_json(std::ostream& os, const ConcentrationReport& report);

}  // namespace charlab
