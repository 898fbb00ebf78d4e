// Acceptance suite: one line per criterion, exit 0 only if all pass.
//
// Each criterion is self-contained, seeded, and pinned to its tolerance;
// the run doubles as a regression gate for the numerical guarantees the
// library documents.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <limits>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fxagg/aggregators.hpp"
#include "fxagg/audit.hpp"
#include "fxagg/errors.hpp"
#include "fxagg/group.hpp"
#include "fxagg/numeric.hpp"
#include "fxagg/reciprocity.hpp"
#include "fxagg/sampling.hpp"
#include "fxagg/scenario_io.hpp"
#include "cli_runner.hpp"
#include "test_support.hpp"

using namespace fxagg;
using fxagg::testing::CliResult;
using fxagg::testing::CliWorkspace;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double x) { return numeric::format12(x); }

AuditConfig make_config(std::size_t arity, std::uint64_t seed, std::size_t samples) {
  AuditConfig cfg;
  cfg.arity = arity;
  cfg.seed = seed;
  cfg.sample_count = samples;
  return cfg;
}

// 1. Every constructible arity-2 aggregator that passes all three audits
//    agrees with sqrt(e1 e2) to 1e-12 over 1e4 seeded pairs, in under 5 s.
Outcome criterion_uniqueness() {
  const auto start = std::chrono::steady_clock::now();

  std::vector<Aggregator> candidates = {
      geometric_aggregator(),
      arithmetic_aggregator(),
      harmonic_aggregator(),
      median_aggregator(),
      beta_aggregator(power_law_beta({0.0})),
      mix(geometric_aggregator(), median_aggregator(), 0.37),
      mix(arithmetic_aggregator(), harmonic_aggregator(), 0.5),
      mix(arithmetic_aggregator(), harmonic_aggregator(), 0.25),
      mix(geometric_aggregator(), arithmetic_aggregator(), 0.3),
  };

  std::vector<const Aggregator*> passing;
  for (const Aggregator& agg : candidates) {
    if (audit(agg, make_config(2, 1001, 1000)).overall_pass) {
      passing.push_back(&agg);
    }
  }
  // the paradoxical means must not slip through, and the compliant
  // candidates must all survive
  if (passing.size() < 5) {
    return {false, "only " + std::to_string(passing.size()) + " candidates passed"};
  }
  for (const Aggregator* agg : passing) {
    if (agg->name() == "arithmetic" || agg->name() == "harmonic") {
      return {false, agg->name() + " wrongly passed the audit"};
    }
  }

  SampleStream stream(1002);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double rates[2] = {stream.log_uniform(1e-4, 1e4),
                             stream.log_uniform(1e-4, 1e4)};
    const double root = std::sqrt(rates[0]) * std::sqrt(rates[1]);
    for (const Aggregator* agg : passing) {
      worst = std::max(worst,
                       numeric::relative_deviation(agg->eval(rates), root));
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass = worst <= 1e-12 && elapsed < 5.0;
  return {pass, std::to_string(passing.size()) + " audited-passing aggregators, max dev " +
                    fmt(worst) + ", " + fmt(elapsed) + "s"};
}

// 2. demo-siegel on (1,4): quotes 2.5 / 0.625, gap 0.5625, geometric gap 0
//    within 1e-15.
Outcome criterion_siegel_cli(CliWorkspace& ws) {
  const CliResult run = ws.run("demo-siegel --output json");
  if (run.exit_code != 0) {
    return {false, "demo-siegel exited " + std::to_string(run.exit_code)};
  }
  const json out = json::parse(run.out);
  const double base = out["base_quote"].get<double>();
  const double counter = out["counter_quote"].get<double>();
  const double gap = out["gap"].get<double>();
  const double gm_gap = out["resolution"]["gap"].get<double>();
  const bool pass = base == 2.5 && counter == 0.625 &&
                    std::abs(gap - 0.5625) <= 1e-15 && std::abs(gm_gap) <= 1e-15;
  return {pass, "quotes " + fmt(base) + " / " + fmt(counter) + ", gap " + fmt(gap) +
                    ", geometric gap " + fmt(gm_gap)};
}

// 3. Median passes all audits for n in {3,4,5,6} and 100 random mixes of
//    geometric/median pass, in under 10 s.
Outcome criterion_median_and_mixes() {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {3u, 4u, 5u, 6u}) {
    const AuditReport report = audit(median_aggregator(), make_config(n, 3000 + n, 1000));
    if (!report.overall_pass) {
      return {false, "median failed at arity " + std::to_string(n)};
    }
  }
  SampleStream stream(3100);
  for (int i = 0; i < 100; ++i) {
    const double alpha = stream.uniform01();
    const std::size_t n = 3 + stream.below(4);
    const Aggregator blend = mix(geometric_aggregator(), median_aggregator(), alpha);
    if (!audit(blend, make_config(n, stream.next_u64(), 300)).overall_pass) {
      return {false, "mix alpha=" + fmt(alpha) + " failed at arity " +
                         std::to_string(n)};
    }
  }
  const double elapsed = seconds_since(start);
  return {elapsed < 10.0, "median n=3..6 and 100 mixes pass, " + fmt(elapsed) + "s"};
}

// 4. 200 random power-law reciprocity functions across n in {3,4,5}: the
//    induced aggregators pass every audit at 1e-9.
Outcome criterion_beta_forward() {
  SampleStream stream(4000);
  int audited = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + stream.below(3);
    const ReciprocityFunction beta = fxagg::testing::random_power_law(stream, n - 1);
    const AuditReport report =
        audit(beta_aggregator(beta), make_config(n, stream.next_u64(), 250));
    if (!report.overall_pass) {
      return {false, beta.name() + " failed at arity " + std::to_string(n)};
    }
    ++audited;
  }
  return {true, std::to_string(audited) + " random power-law aggregators pass"};
}

// 5. extract_beta recovers beta: 1e3 random ratio vectors per arity within
//    1e-9, and the median instance at (4,2) equals 2^(-1/3) within 1e-12.
Outcome criterion_beta_roundtrip() {
  SampleStream stream(5000);
  double worst = 0.0;
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    for (int i = 0; i < 1000; ++i) {
      const ReciprocityFunction beta = fxagg::testing::random_power_law(stream, n - 1);
      const OrderedRatios u(fxagg::testing::random_ratios(stream, n - 1));
      const double recovered = extract_beta(beta_aggregator(beta), u);
      worst = std::max(worst, numeric::relative_deviation(recovered, beta.eval(u)));
    }
  }
  if (worst > 1e-9) return {false, "round-trip max dev " + fmt(worst)};

  const double median_beta = extract_beta(median_aggregator(), OrderedRatios({4, 2}));
  const double expected = std::pow(2.0, -1.0 / 3.0);
  const double median_dev = numeric::relative_deviation(median_beta, expected);
  return {median_dev <= 1e-12, "round-trip max dev " + fmt(worst) +
                                   ", median beta(4,2) dev " + fmt(median_dev)};
}

// 6. Implied probability: counterparty identity within 1e-12 on 1e4 pairs,
//    and p > 1/2 exactly when e1 < e2, with zero failures.
Outcome criterion_implied_probability() {
  SampleStream stream(6000);
  double worst = 0.0;
  int sign_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const double e1 = stream.log_uniform(1e-4, 1e4);
    const double e2 = stream.log_uniform(1e-4, 1e4);
    const double p = implied_probability(e1, e2);
    const double lhs = (1.0 - p) / e1 + p / e2;
    const double rhs = 1.0 / (std::sqrt(e1) * std::sqrt(e2));
    worst = std::max(worst, numeric::relative_deviation(lhs, rhs));
    const bool bigger = p > 0.5;
    if (bigger != (e1 < e2)) ++sign_failures;
    if ((p == 0.5) != (e1 == e2)) ++sign_failures;
  }
  const bool pass = worst <= 1e-12 && sign_failures == 0;
  return {pass, "identity max dev " + fmt(worst) + ", sign failures " +
                    std::to_string(sign_failures)};
}

// 7. Matrix representation is a homomorphism; h-equivariance holds to 1e-9
//    for audit-passing aggregators over 1e3 random (gamma, x); the
//    arithmetic mean fails under a reflection.
Outcome criterion_group_equivariance() {
  SampleStream stream(7000);

  const auto element = [&](std::size_t n) {
    const int sign = stream.uniform01() < 0.5 ? 1 : -1;
    return group_element(sign, stream.permutation(n), stream.uniform(-5.0, 5.0));
  };
  const auto point = [&](std::size_t n) {
    LogPoint x(n);
    for (double& v : x) v = stream.uniform(-9.0, 9.0);
    return x;
  };

  double matrix_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + stream.below(4);
    const GroupElement g1 = element(n);
    const GroupElement g2 = element(n);
    matrix_dev = std::max(
        matrix_dev,
        SquareMatrix::max_abs_difference(to_matrix(g1) * to_matrix(g2),
                                         to_matrix(compose(g1, g2))));
  }
  if (matrix_dev > 1e-12) return {false, "homomorphism dev " + fmt(matrix_dev)};

  const std::vector<Aggregator> passing = {
      geometric_aggregator(), median_aggregator(),
      beta_aggregator(power_law_beta({-1.0 / 3.0, 1.0 / 3.0})),
      mix(geometric_aggregator(), median_aggregator(), 0.37)};
  double equi_dev = 0.0;
  for (const Aggregator& agg : passing) {
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = agg.fixed_arity().value_or(3 + stream.below(3));
      const EquivarianceResult r =
          check_equivariance(agg, element(n), point(n), 1e-9);
      equi_dev = std::max(equi_dev, r.deviation);
      if (!r.pass) return {false, agg.name() + " equivariance dev " + fmt(r.deviation)};
    }
  }

  bool arithmetic_fails = false;
  for (int i = 0; i < 100 && !arithmetic_fails; ++i) {
    const std::size_t n = 2 + stream.below(3);
    const EquivarianceResult r = check_equivariance(
        arithmetic_aggregator(), reflection_element(n), point(n), 1e-9);
    arithmetic_fails = !r.pass;
  }
  return {arithmetic_fails, "homomorphism dev " + fmt(matrix_dev) +
                                ", equivariance dev " + fmt(equi_dev) +
                                ", arithmetic reflection failure observed"};
}

// 8. Expansion consistency on 100 random rational scenarios (lcm <= 1e4)
//    within 1e-12; the worked instance lands within one ulp of 8.
Outcome criterion_expansion() {
  SampleStream stream(8000);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::int64_t lcd = 2 + static_cast<std::int64_t>(stream.below(9999));
    const std::size_t k = 2 + stream.below(4);
    // split lcd into k positive integer weights
    std::vector<std::int64_t> weights(k, 1);
    std::int64_t remaining = lcd - static_cast<std::int64_t>(k);
    if (remaining < 0) {
      --i;
      continue;
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const std::int64_t take =
          remaining > 0 ? static_cast<std::int64_t>(
                              stream.below(static_cast<std::size_t>(remaining) + 1))
                        : 0;
      weights[j] += take;
      remaining -= take;
    }
    weights[k - 1] += remaining;

    std::vector<Rational> probs;
    std::vector<double> rates;
    for (std::size_t j = 0; j < k; ++j) {
      probs.emplace_back(weights[j], lcd);
      rates.push_back(stream.log_uniform(1e-3, 1e3));
    }
    const RateScenario weighted(rates, probs);
    const RateScenario expanded = expand_rational_probabilities(weighted);
    worst = std::max(worst,
                     numeric::relative_deviation(geometric_mean(expanded),
                                                 weighted_geometric_mean(weighted)));
  }
  if (worst > 1e-12) return {false, "expansion max dev " + fmt(worst)};

  const RateScenario worked({2, 16}, {Rational(1, 3), Rational(2, 3)});
  const double value = weighted_geometric_mean(worked);
  // double precision exactly: within two ulps of 8
  const double ulp8 = std::numeric_limits<double>::epsilon() * 8.0;
  const bool exact = std::abs(value - 8.0) <= 2.0 * ulp8;
  return {exact, "expansion max dev " + fmt(worst) + ", worked instance off 8 by " +
                     fmt(std::abs(value - 8.0))};
}

// 9. harmonic <= geometric <= arithmetic on 1e4 random scenarios, with no
//    violation beyond one ulp.
Outcome criterion_mean_ordering() {
  SampleStream stream(9000);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const RateScenario s = fxagg::testing::random_scenario(stream, 2 + stream.below(7));
    const double h = harmonic_mean(s);
    const double g = geometric_mean(s);
    const double a = arithmetic_mean(s);
    if (!numeric::leq_within_ulps(h, g)) ++violations;
    if (!numeric::leq_within_ulps(g, a)) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " ordering violations"};
}

// 10. Parser fuzzing (1e4 mutated inputs) raises only structured errors,
//     and seeded audits are bit-identical across consecutive runs.
Outcome criterion_robustness(CliWorkspace& ws) {
  SampleStream stream(10000);
  const std::vector<std::string> seeds = {
      R"({"rates":[1,4]})",
      R"({"rates":[2,16],"probabilities":["1/3","2/3"],"metadata":{"pair":"EUR/USD"}})",
      R"({"arity":2,"representation":"power_law","exponents":[-0.25,0.25]})",
      "2,16\n1/3,2/3\n",
      "0.5,1,1.5,7\n",
  };
  for (int i = 0; i < 10000; ++i) {
    std::string input = seeds[stream.below(seeds.size())];
    const std::size_t mutations = 1 + stream.below(10);
    for (std::size_t m = 0; m < mutations && !input.empty(); ++m) {
      const std::size_t pos = stream.below(input.size());
      switch (stream.below(4)) {
        case 0: input[pos] = static_cast<char>(stream.below(256)); break;
        case 1: input.erase(pos, 1); break;
        case 2: input.insert(pos, 1, static_cast<char>(stream.below(128))); break;
        default: input = input.substr(0, pos);
      }
    }
    try {
      switch (stream.below(3)) {
        case 0: (void)parse_scenario(input, FileFormat::kJson); break;
        case 1: (void)parse_scenario(input, FileFormat::kCsv); break;
        default: (void)parse_beta_spec(input);
      }
    } catch (const Error&) {
      // structured failure: expected
    } catch (const std::exception& e) {
      return {false, std::string("unstructured exception: ") + e.what()};
    }
  }

  // bit-reproducibility, in-process
  for (const Aggregator& agg : {geometric_aggregator(), arithmetic_aggregator()}) {
    const AuditReport a = audit(agg, make_config(3, 10101, 500));
    const AuditReport b = audit(agg, make_config(3, 10101, 500));
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      if (std::memcmp(&a.results[i].worst_violation, &b.results[i].worst_violation,
                      sizeof(double)) != 0 ||
          a.results[i].pass != b.results[i].pass) {
        return {false, "in-process audit not reproducible"};
      }
    }
  }

  // bit-reproducibility, end to end through the CLI
  const std::string cmd = "check --method arithmetic --samples 400 --seed 7 --output json";
  const CliResult first = ws.run(cmd);
  const CliResult second = ws.run(cmd);
  if (first.out != second.out || first.exit_code != second.exit_code) {
    return {false, "CLI audit not byte-reproducible"};
  }
  return {true, "10000 fuzz inputs structured, audits bit-reproducible"};
}

}  // namespace

int main(int argc, char** argv) {
  // allow overriding the CLI under test: acceptance [--cli PATH]
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--cli") == 0) {
      setenv("FXAGG_CLI_OVERRIDE", argv[i + 1], 1);
    }
  }

  CliWorkspace ws;

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"arity-2 uniqueness of the geometric mean", [&] { return criterion_uniqueness(); }},
      {"two-state paradox via demo-siegel", [&] { return criterion_siegel_cli(ws); }},
      {"median + log-convex mixes pass audits", [&] { return criterion_median_and_mixes(); }},
      {"random power-law aggregators pass audits", [&] { return criterion_beta_forward(); }},
      {"beta round-trip via extract_beta", [&] { return criterion_beta_roundtrip(); }},
      {"implied-probability identities", [&] { return criterion_implied_probability(); }},
      {"group homomorphism + h-equivariance", [&] { return criterion_group_equivariance(); }},
      {"rational expansion consistency", [&] { return criterion_expansion(); }},
      {"mean ordering", [&] { return criterion_mean_ordering(); }},
      {"parser fuzzing + reproducibility", [&] { return criterion_robustness(ws); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("criterion %2zu %s  %s  (%s)\n", i + 1,
                outcome.pass ? "PASS" : "FAIL", criteria[i].name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
