#ifndef FXAGG_SCENARIO_HPP
#define FXAGG_SCENARIO_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fxagg/rational.hpp"

namespace fxagg {

// A rate is a strictly positive finite double (quote currency per base
// currency). Throws ValidationError otherwise.
void validate_rate(double value);

// A finite list of possible future exchange rates, optionally weighted by
// exact rational probabilities. Invariants are enforced at construction:
//   - n >= 1, every rate positive and finite
//   - probabilities, when present: same length, each in (0,1], exact sum 1
class RateScenario {
 public:
  explicit RateScenario(std::vector<double> rates);
  RateScenario(std::vector<double> rates, std::vector<Rational> probabilities);

  std::size_t size() const noexcept { return rates_.size(); }
  std::span<const double> rates() const noexcept { return rates_; }
  double rate(std::size_t i) const { return rates_.at(i); }

  bool has_probabilities() const noexcept { return probabilities_.has_value(); }
  const std::vector<Rational>& probabilities() const;

  // True when no probabilities are attached or all attached ones are equal.
  // Aggregators are defined on this equal-probability domain.
  bool is_uniform() const noexcept;

  // The same scenario quoted in the opposite currency direction: every rate
  // replaced by its reciprocal. Probabilities carry over unchanged.
  RateScenario reciprocal() const;

  // Redenomination by a positive factor.
  RateScenario scaled(double lambda) const;

  // Rates reordered by sigma: result rate i is rate(sigma[i]).
  RateScenario permuted(std::span<const std::size_t> sigma) const;

 private:
  std::vector<double> rates_;
  std::optional<std::vector<Rational>> probabilities_;
};

}  // namespace fxagg

#endif  // FXAGG_SCENARIO_HPP
