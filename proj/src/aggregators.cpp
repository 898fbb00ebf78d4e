#include "fxagg/aggregators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fxagg/errors.hpp"
#include "fxagg/numeric.hpp"

namespace fxagg {

namespace {

std::vector<double> sorted_ascending(std::span<const double> rates) {
  std::vector<double> sorted(rates.begin(), rates.end());
  std::stable_sort(sorted.begin(), sorted.end());
  return sorted;
}

// The built-in means sum in sorted order, which makes them exactly
// permutation-invariant: the symmetry axiom holds to the last bit, not just
// within tolerance.
double geometric_of(std::span<const double> rates) {
  if (rates.size() == 1) return rates[0];
  return std::exp(numeric::log_mean(sorted_ascending(rates)));
}

double arithmetic_of(std::span<const double> rates) {
  if (rates.size() == 1) return rates[0];
  return numeric::kahan_sum(sorted_ascending(rates)) /
         static_cast<double>(rates.size());
}

double harmonic_of(std::span<const double> rates) {
  if (rates.size() == 1) return rates[0];
  std::vector<double> inverted;
  inverted.reserve(rates.size());
  for (double r : rates) inverted.push_back(1.0 / r);
  return 1.0 / arithmetic_of(inverted);
}

double median_of(std::span<const double> rates) {
  const std::vector<double> sorted = sorted_ascending(rates);
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  const double lo = sorted[n / 2 - 1];
  const double hi = sorted[n / 2];
  if (lo == hi) return lo;
  return std::exp(0.5 * (std::log(lo) + std::log(hi)));
}

}  // namespace

OrderedRatios::OrderedRatios(std::vector<double> ratios) : ratios_(std::move(ratios)) {
  for (double u : ratios_) {
    if (!std::isfinite(u) || u < 1.0) {
      throw ValidationError("ordered ratio must be finite and >= 1, got " +
                            numeric::format12(u));
    }
  }
}

std::vector<double> order_statistics(const RateScenario& s) {
  return sorted_ascending(s.rates());
}

OrderedRatios consecutive_ratios(const RateScenario& s) {
  const std::size_t n = s.size();
  if (n < 2) {
    throw ArityError("consecutive ratios need at least two rates");
  }
  const std::vector<double> sorted = sorted_ascending(s.rates());
  std::vector<double> ratios;
  ratios.reserve(n - 1);
  for (std::size_t k = n - 1; k >= 1; --k) {
    ratios.push_back(sorted[k] / sorted[k - 1]);
  }
  return OrderedRatios(std::move(ratios));
}

Aggregator::Aggregator(std::string name, EvalFn eval,
                       std::optional<std::size_t> fixed_arity)
    : name_(std::move(name)), eval_(std::move(eval)), fixed_arity_(fixed_arity) {}

bool Aggregator::accepts_arity(std::size_t n) const noexcept {
  if (n == 0) return false;
  return !fixed_arity_ || *fixed_arity_ == n;
}

double Aggregator::eval(std::span<const double> rates) const {
  if (!accepts_arity(rates.size())) {
    throw ArityError("aggregator \"" + name_ + "\" expects arity " +
                     std::to_string(fixed_arity_.value_or(0)) + ", got " +
                     std::to_string(rates.size()));
  }
  return eval_(rates);
}

double Aggregator::eval(const RateScenario& s) const {
  if (!s.is_uniform()) {
    throw ProbabilityError(
        "aggregator \"" + name_ +
        "\" is defined on equal-probability scenarios; expand the scenario first");
  }
  return eval(s.rates());
}

double geometric_mean(const RateScenario& s) { return geometric_of(s.rates()); }
double arithmetic_mean(const RateScenario& s) { return arithmetic_of(s.rates()); }
double harmonic_mean(const RateScenario& s) { return harmonic_of(s.rates()); }
double median_aggregate(const RateScenario& s) { return median_of(s.rates()); }

Aggregator geometric_aggregator() { return {"geometric", geometric_of}; }
Aggregator arithmetic_aggregator() { return {"arithmetic", arithmetic_of}; }
Aggregator harmonic_aggregator() { return {"harmonic", harmonic_of}; }
Aggregator median_aggregator() { return {"median", median_of}; }

Aggregator mix(const Aggregator& a0, const Aggregator& a1, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("mix weight must lie in [0,1], got " +
                      numeric::format12(alpha));
  }
  std::optional<std::size_t> arity = a0.fixed_arity();
  if (a1.fixed_arity()) {
    if (arity && *arity != *a1.fixed_arity()) {
      throw ArityError("cannot mix aggregators of arities " +
                       std::to_string(*arity) + " and " +
                       std::to_string(*a1.fixed_arity()));
    }
    arity = a1.fixed_arity();
  }
  const std::string name = "mix(" + a0.name() + "," + a1.name() + "," +
                           numeric::format12(alpha) + ")";
  auto blend = [a0, a1, alpha](std::span<const double> rates) {
    const double v0 = a0.eval(rates);
    const double v1 = a1.eval(rates);
    if (v0 == v1) return v0;
    return std::exp((1.0 - alpha) * std::log(v0) + alpha * std::log(v1));
  };
  return {name, std::move(blend), arity};
}

double weighted_geometric_mean(const RateScenario& s) {
  const std::vector<Rational>& probs = s.probabilities();
  if (s.size() == 1) return s.rate(0);
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double y = probs[i].to_double() * std::log(s.rate(i)) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return std::exp(sum);
}

RateScenario expand_rational_probabilities(const RateScenario& s, std::int64_t cap) {
  const std::vector<Rational>& probs = s.probabilities();
  const std::int64_t lcd = common_denominator(probs);
  if (lcd > cap) {
    throw ExpansionTooLarge("expansion needs " + std::to_string(lcd) +
                                " states, cap is " + std::to_string(cap),
                            lcd, cap);
  }
  std::vector<double> expanded;
  expanded.reserve(static_cast<std::size_t>(lcd));
  for (std::size_t i = 0; i < s.size(); ++i) {
    // p_i * M = num * (M / den), exact by construction of M.
    const std::int64_t copies = probs[i].num() * (lcd / probs[i].den());
    expanded.insert(expanded.end(), static_cast<std::size_t>(copies), s.rate(i));
  }
  return RateScenario(std::move(expanded));
}

double implied_probability(double e1, double e2) {
  validate_rate(e1);
  validate_rate(e2);
  if (e1 == e2) return 0.5;
  // Equivalent to (e2 - sqrt(e1 e2)) / (e2 - e1), without the cancellation.
  const double s1 = std::sqrt(e1);
  const double s2 = std::sqrt(e2);
  return s2 / (s1 + s2);
}

double siegel_gap(const Aggregator& agg, const RateScenario& s) {
  return agg.eval(s) * agg.eval(s.reciprocal()) - 1.0;
}

}  // namespace fxagg
