#pragma once

namespace charlab {

// Standard normal distribution function Φ(x) = erfc(−x/√2)/2. Uses the C
// library erfc (fdlibm rational approximations, under 1 ulp relative error
// on glibc), so the absolute error stays far below 1e-12 for finite x.
double normal_cdf(double x);

}  // namespace charlab
