#include "charlab/normal.hpp"

#include <cmath>
#include <numbers>

namespace charlab {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace charlab
