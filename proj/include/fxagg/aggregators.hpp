#ifndef FXAGG_AGGREGATORS_HPP
#define FXAGG_AGGREGATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fxagg/scenario.hpp"

namespace fxagg {

// Consecutive order-statistic ratios in descending-pair order: entry 0 is
// largest/second-largest, the last entry is second-smallest/smallest. Every
// entry is >= 1 by construction.
class OrderedRatios {
 public:
  explicit OrderedRatios(std::vector<double> ratios);

  std::size_t size() const noexcept { return ratios_.size(); }
  std::span<const double> values() const noexcept { return ratios_; }
  double operator[](std::size_t i) const { return ratios_.at(i); }

 private:
  std::vector<double> ratios_;
};

// Rates sorted ascending. Ties keep their relative input order.
std::vector<double> order_statistics(const RateScenario& s);

// The n-1 ratios of adjacent order statistics, largest pair first.
// Throws ArityError for n < 2.
OrderedRatios consecutive_ratios(const RateScenario& s);

// A named deterministic map from equal-probability scenarios to one rate.
// Built-ins work at any arity n >= 1; beta-derived aggregators are pinned
// to a single arity.
class Aggregator {
 public:
  using EvalFn = std::function<double(std::span<const double>)>;

  Aggregator(std::string name, EvalFn eval,
             std::optional<std::size_t> fixed_arity = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::optional<std::size_t> fixed_arity() const noexcept { return fixed_arity_; }
  bool accepts_arity(std::size_t n) const noexcept;

  // Raw evaluation on a positive-rate vector. Throws ArityError when the
  // vector is outside the declared arity domain.
  double eval(std::span<const double> rates) const;

  // Scenario-level evaluation; the scenario must be equal-probability.
  double eval(const RateScenario& s) const;
  double operator()(const RateScenario& s) const { return eval(s); }

 private:
  std::string name_;
  EvalFn eval_;
  std::optional<std::size_t> fixed_arity_;
};

// The classical means, all computed in the log domain where that matters.
double geometric_mean(const RateScenario& s);
double arithmetic_mean(const RateScenario& s);
double harmonic_mean(const RateScenario& s);

// Middle order statistic for odd n; geometric mean of the two middle order
// statistics for even n.
double median_aggregate(const RateScenario& s);

// Aggregator-valued views of the rate maps above.
Aggregator geometric_aggregator();
Aggregator arithmetic_aggregator();
Aggregator harmonic_aggregator();
Aggregator median_aggregator();

// Log-linear blend exp((1-alpha) log a0 + alpha log a1). The space of
// axiom-satisfying aggregators is closed under this operation.
// Throws DomainError for alpha outside [0,1].
Aggregator mix(const Aggregator& a0, const Aggregator& a1, double alpha);

// prod e_i^{p_i} with the scenario's exact rational weights.
// Throws ProbabilityError when probabilities are absent.
double weighted_geometric_mean(const RateScenario& s);

inline constexpr std::int64_t kDefaultExpansionCap = 1'000'000;

// Recasts a rational-probability scenario as M equally likely rates, where
// M is the least common denominator and rate i appears p_i * M times.
// Throws ExpansionTooLarge when M exceeds the cap.
RateScenario expand_rational_probabilities(const RateScenario& s,
                                           std::int64_t cap = kDefaultExpansionCap);

// The weight p solving sqrt(e1 e2) = p e1 + (1-p) e2. Puts more weight on
// the smaller rate; returns 1/2 at e1 == e2, where the equation degenerates
// and the symmetric convention applies.
double implied_probability(double e1, double e2);

// agg(s) * agg(reciprocal s) - 1: the fractional riskless profit of a
// round trip priced by agg. Zero for every reciprocity-respecting
// aggregator; 0.5625 for the arithmetic mean on rates (1, 4).
double siegel_gap(const Aggregator& agg, const RateScenario& s);

}  // namespace fxagg

#endif  // FXAGG_AGGREGATORS_HPP
