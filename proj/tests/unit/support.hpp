#pragma once

#include "charlab/rational.hpp"

#include <vector>

namespace charlab::testing {

// α values used throughout the exact checks: the Plancherel point, the
// α ≥ 1 regime and one dual point below 1.
inline const std::vector<AlphaParam>& sample_alphas() {
  static const std::vector<AlphaParam> alphas{AlphaParam(1), AlphaParam(2), AlphaParam::parse("1/2"),
                                              AlphaParam::parse("3/2"), AlphaParam(5)};
  return alphas;
}

}  // namespace charlab::testing
