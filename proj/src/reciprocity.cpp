#include "fxagg/reciprocity.hpp"

#include <cmath>
#include <utility>

#include "fxagg/errors.hpp"
#include "fxagg/numeric.hpp"

namespace fxagg {

namespace {

std::string power_law_name(std::span<const double> exponents) {
  std::string name = "power_law(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) name += ",";
    name += numeric::format12(exponents[i]);
  }
  return name + ")";
}

}  // namespace

double ReciprocityFunction::eval(std::span<const double> ratios) const {
  if (ratios.size() != arity_) {
    throw ArityError("reciprocity function \"" + name_ + "\" expects " +
                     std::to_string(arity_) + " ratios, got " +
                     std::to_string(ratios.size()));
  }
  if (power_law_) return std::exp(log_eval(ratios));
  return custom_(ratios);
}

double ReciprocityFunction::log_eval(std::span<const double> ratios) const {
  if (power_law_) {
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t i = 0; i < arity_; ++i) {
      const double y = exponents_[i] * std::log(ratios[i]) - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    return sum;
  }
  return std::log(eval(ratios));
}

ReciprocityFunction ReciprocityFunction::custom(std::size_t arity, std::string name,
                                                EvalFn fn) {
  if (arity == 0) {
    throw ArityError("reciprocity function needs at least one ratio argument");
  }
  ReciprocityFunction beta;
  beta.arity_ = arity;
  beta.name_ = std::move(name);
  beta.custom_ = std::move(fn);
  return beta;
}

ReciprocityFunction power_law_beta(std::vector<double> exponents) {
  const std::size_t m = exponents.size();
  if (m == 0) {
    throw ArityError("power law needs at least one exponent");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(exponents[i])) {
      throw ValidationError("power-law exponent must be finite");
    }
    // Exact antisymmetry; anything else makes beta(u) * beta(rev u) != 1
    // somewhere on the domain.
    if (exponents[i] + exponents[m - 1 - i] != 0.0) {
      throw ReciprocityViolation(
          "exponents must satisfy a_i + a_{n-i} = 0 exactly; offending pair (" +
          numeric::format12(exponents[i]) + ", " +
          numeric::format12(exponents[m - 1 - i]) + ")");
    }
  }
  ReciprocityFunction beta;
  beta.arity_ = m;
  beta.name_ = power_law_name(exponents);
  beta.power_law_ = true;
  beta.exponents_ = std::move(exponents);
  return beta;
}

double beta_aggregate(const ReciprocityFunction& beta, const RateScenario& s) {
  if (beta.arity() != s.size() - 1) {
    throw ArityError("beta of arity " + std::to_string(beta.arity()) +
                     " cannot aggregate " + std::to_string(s.size()) + " rates");
  }
  const OrderedRatios ratios = consecutive_ratios(s);
  if (beta.is_power_law()) {
    return std::exp(numeric::log_mean(s.rates()) + beta.log_eval(ratios.values()));
  }
  return geometric_mean(s) * beta.eval(ratios);
}

Aggregator beta_aggregator(const ReciprocityFunction& beta) {
  const std::size_t n = beta.arity() + 1;
  auto eval = [beta](std::span<const double> rates) {
    return beta_aggregate(beta, RateScenario(std::vector<double>(rates.begin(), rates.end())));
  };
  return {"beta[" + beta.name() + "]", std::move(eval), n};
}

double extract_beta(const Aggregator& agg, const OrderedRatios& u) {
  const std::size_t n = u.size() + 1;
  if (!agg.accepts_arity(n)) {
    throw ArityError("aggregator \"" + agg.name() + "\" cannot take arity " +
                     std::to_string(n));
  }
  // beta(u) = exp h at the canonical log-point whose consecutive ratios,
  // read largest pair first, reproduce u: coordinates are the running sums
  // of log of u reversed, anchored at 0.
  std::vector<double> logs(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    logs[i] = logs[i - 1] + std::log(u[u.size() - i]);
  }
  std::vector<double> rates;
  rates.reserve(n);
  for (double x : logs) rates.push_back(std::exp(x));
  const double log_agg = std::log(agg.eval(rates));
  const double mean_log = numeric::kahan_sum(logs) / static_cast<double>(n);
  return std::exp(log_agg - mean_log);
}

}  // namespace fxagg
