#include "fxagg/scenario.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fxagg/errors.hpp"
#include "fxagg/numeric.hpp"

namespace fxagg {

void validate_rate(double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("rate must be finite, got " + numeric::format12(value));
  }
  if (value <= 0.0) {
    throw ValidationError("rate must be strictly positive, got " +
                          numeric::format12(value));
  }
}

RateScenario::RateScenario(std::vector<double> rates) : rates_(std::move(rates)) {
  if (rates_.empty()) {
    throw ValidationError("scenario needs at least one rate");
  }
  for (double r : rates_) validate_rate(r);
}

RateScenario::RateScenario(std::vector<double> rates, std::vector<Rational> probabilities)
    : RateScenario(std::move(rates)) {
  if (probabilities.size() != rates_.size()) {
    throw ProbabilityError("got " + std::to_string(probabilities.size()) +
                           " probabilities for " + std::to_string(rates_.size()) +
                           " rates");
  }
  Rational sum = probabilities.front();
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (!probabilities[i].at_most_one()) {
      throw ProbabilityError("probability " + probabilities[i].to_string() +
                             " exceeds 1");
    }
    if (i > 0) sum = sum + probabilities[i];
  }
  if (!sum.is_one()) {
    throw ProbabilityError("probabilities sum to " + sum.to_string() + ", expected 1");
  }
  probabilities_ = std::move(probabilities);
}

const std::vector<Rational>& RateScenario::probabilities() const {
  if (!probabilities_) {
    throw ProbabilityError("scenario carries no probabilities");
  }
  return *probabilities_;
}

bool RateScenario::is_uniform() const noexcept {
  if (!probabilities_) return true;
  const Rational uniform(1, static_cast<std::int64_t>(rates_.size()));
  for (const Rational& p : *probabilities_) {
    if (!(p == uniform)) return false;
  }
  return true;
}

RateScenario RateScenario::reciprocal() const {
  std::vector<double> flipped;
  flipped.reserve(rates_.size());
  for (double r : rates_) flipped.push_back(1.0 / r);
  if (probabilities_) return RateScenario(std::move(flipped), *probabilities_);
  return RateScenario(std::move(flipped));
}

RateScenario RateScenario::scaled(double lambda) const {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw DomainError("scale factor must be positive and finite");
  }
  std::vector<double> scaled_rates;
  scaled_rates.reserve(rates_.size());
  for (double r : rates_) scaled_rates.push_back(lambda * r);
  if (probabilities_) return RateScenario(std::move(scaled_rates), *probabilities_);
  return RateScenario(std::move(scaled_rates));
}

RateScenario RateScenario::permuted(std::span<const std::size_t> sigma) const {
  if (sigma.size() != rates_.size()) {
    throw ArityError("permutation length " + std::to_string(sigma.size()) +
                     " does not match scenario size " + std::to_string(rates_.size()));
  }
  std::vector<double> reordered(rates_.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    reordered[i] = rates_.at(sigma[i]);
  }
  // Permuting a weighted scenario would have to carry the weights along;
  // the audit engine only permutes uniform scenarios, so keep it simple.
  if (probabilities_ && !is_uniform()) {
    throw ProbabilityError("permuting a non-uniform scenario is not supported");
  }
  if (probabilities_) return RateScenario(std::move(reordered), *probabilities_);
  return RateScenario(std::move(reordered));
}

}  // namespace fxagg
