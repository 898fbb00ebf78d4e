#ifndef FXAGG_NUMERIC_HPP
#define FXAGG_NUMERIC_HPP

#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <string>

namespace fxagg::numeric {

// Kahan-compensated sum. Keeps the error of long log-sums near one ulp of
// the total instead of growing with n.
inline double kahan_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Mean of natural logs; the geometric mean is exp() of this.
inline double log_mean(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double y = std::log(v) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(values.size());
}

// |a/b - 1| with the convention that two zeros agree.
inline double relative_deviation(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a / b - 1.0);
}

// a <= b, allowing b to be short by at most `ulps` last-place units.
inline bool leq_within_ulps(double a, double b, int ulps = 1) {
  double hi = b;
  for (int i = 0; i < ulps; ++i) {
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
  }
  return a <= hi;
}

// 12 significant digits, the text-mode output precision.
inline std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace fxagg::numeric

#endif  // FXAGG_NUMERIC_HPP
