#ifndef FXAGG_RECIPROCITY_HPP
#define FXAGG_RECIPROCITY_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fxagg/aggregators.hpp"

namespace fxagg {

// A positive function beta on ratio vectors u in [1, inf)^{n-1} satisfying
// beta(u_1,...,u_{n-1}) * beta(u_{n-1},...,u_1) = 1. Every axiom-satisfying
// aggregator is the geometric mean times such a function of the consecutive
// order-statistic ratios.
//
// Two representations:
//   - power law  prod u_i^{a_i}, valid iff a_i + a_{n-i} = 0 for all i.
//     The antisymmetry is checked exactly at construction and algebraically
//     forces the reciprocity identity.
//   - custom     an opaque callable; nothing is checked at construction.
//     Run check_reciprocity_function() to validate by sampling.
class ReciprocityFunction {
 public:
  using EvalFn = std::function<double(std::span<const double>)>;

  std::size_t arity() const noexcept { return arity_; }
  const std::string& name() const noexcept { return name_; }

  bool is_power_law() const noexcept { return power_law_; }
  std::span<const double> exponents() const noexcept { return exponents_; }

  // Value at a ratio vector; throws ArityError on length mismatch.
  double eval(std::span<const double> ratios) const;
  double eval(const OrderedRatios& ratios) const { return eval(ratios.values()); }

  // log(eval), computed without going through eval for power laws.
  double log_eval(std::span<const double> ratios) const;

  static ReciprocityFunction custom(std::size_t arity, std::string name, EvalFn fn);

 private:
  friend ReciprocityFunction power_law_beta(std::vector<double> exponents);
  ReciprocityFunction() = default;

  std::size_t arity_ = 0;
  std::string name_;
  bool power_law_ = false;
  std::vector<double> exponents_;  // power-law representation only
  EvalFn custom_;                  // custom representation only
};

// Builds prod u_i^{a_i}. Throws ReciprocityViolation unless the exponent
// list is exactly antisymmetric (first + last = 0, and so on inward; the
// middle exponent of an odd-length list must be exactly 0). For a single
// exponent this forces a = 0, i.e. beta == 1: the arity-2 uniqueness.
ReciprocityFunction power_law_beta(std::vector<double> exponents);

// Composite rate: geometric mean times beta at the consecutive ratios.
// Requires beta.arity() == n - 1.
double beta_aggregate(const ReciprocityFunction& beta, const RateScenario& s);

// The same map packaged as a fixed-arity Aggregator named after beta.
Aggregator beta_aggregator(const ReciprocityFunction& beta);

// Recovers beta from any aggregator via the log-residual construction:
// with v = reverse(u), evaluates agg on the rate vector
// (1, v_1, v_1 v_2, ...), subtracts the mean log, and exponentiates.
// Round-trip law: extract_beta(beta_aggregator(beta), u) == beta(u) for
// every reciprocity function beta.
double extract_beta(const Aggregator& agg, const OrderedRatios& u);

}  // namespace fxagg

#endif  // FXAGG_RECIPROCITY_HPP
