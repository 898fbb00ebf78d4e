// fxagg: arbitrage-free forward FX rate aggregation.
//
// Commands map onto the library surface: `aggregate` prices a scenario,
// `check` audits an aggregator or a reciprocity function against the
// symmetry / scaling / reciprocity axioms, `demo-siegel` walks through the
// two-sided quoting inconsistency, `demo-group` exercises the log-space
// transformation group, `implied-prob` and `expand` cover the probability
// tooling.
//
// Exit codes: 0 success/pass, 1 audit failure, 2 input error,
// 3 arity or reciprocity-function mismatch.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
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

namespace {

using nlohmann::json;
using fxagg::numeric::format12;

constexpr int kExitPass = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitArityError = 3;

struct GlobalOptions {
  std::string output = "text";
  std::uint64_t seed = 42;
  double tolerance = 1e-9;

  bool json_mode() const { return output == "json"; }
};

void add_global_options(CLI::App& cmd, GlobalOptions& opts) {
  cmd.add_option("--output", opts.output, "Output mode")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd.add_option("--seed", opts.seed, "Seed for randomized sampling")
      ->capture_default_str();
  cmd.add_option("--tolerance", opts.tolerance, "Axiom tolerance")
      ->capture_default_str();
}

fxagg::FileFormat resolve_format(const std::string& path, const std::string& flag) {
  if (flag == "json") return fxagg::FileFormat::kJson;
  if (flag == "csv") return fxagg::FileFormat::kCsv;
  const auto detected = fxagg::detect_format(path);
  if (!detected) {
    throw fxagg::ValidationError("cannot infer format of \"" + path +
                                 "\"; pass --format json|csv");
  }
  return *detected;
}

fxagg::ScenarioDocument load_scenario(const std::string& path, const std::string& format) {
  return fxagg::parse_scenario(fxagg::read_file(path), resolve_format(path, format));
}

fxagg::BetaSpec load_beta_spec(const std::string& path) {
  return fxagg::parse_beta_spec(fxagg::read_file(path));
}

fxagg::Aggregator resolve_simple_method(const std::string& method,
                                        const std::string& beta_file) {
  if (method == "geometric") return fxagg::geometric_aggregator();
  if (method == "arithmetic") return fxagg::arithmetic_aggregator();
  if (method == "harmonic") return fxagg::harmonic_aggregator();
  if (method == "median") return fxagg::median_aggregator();
  if (method == "beta") {
    if (beta_file.empty()) {
      throw fxagg::ValidationError("--method beta requires --beta-file");
    }
    return fxagg::beta_aggregator(fxagg::beta_from_spec(load_beta_spec(beta_file)));
  }
  throw fxagg::ValidationError("unknown method \"" + method + "\"");
}

// Builds the aggregator named by --method. The strict beta path is used
// everywhere except `check`, which loads the file permissively so the audit
// itself can demonstrate the violation.
fxagg::Aggregator resolve_method(const std::string& method, const std::string& beta_file,
                                 const std::string& mix_spec) {
  if (method == "mix") {
    if (mix_spec.empty()) {
      throw fxagg::ValidationError("--method mix requires --mix a0,a1,alpha");
    }
    const std::size_t c1 = mix_spec.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : mix_spec.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw fxagg::ValidationError("--mix must look like \"geometric,median,0.5\"");
    }
    const std::string a0 = mix_spec.substr(0, c1);
    const std::string a1 = mix_spec.substr(c1 + 1, c2 - c1 - 1);
    const std::string alpha_text = mix_spec.substr(c2 + 1);
    double alpha = 0.0;
    try {
      std::size_t used = 0;
      alpha = std::stod(alpha_text, &used);
      if (used != alpha_text.size()) throw std::invalid_argument(alpha_text);
    } catch (const std::exception&) {
      throw fxagg::ValidationError("mix weight \"" + alpha_text + "\" is not a number");
    }
    return fxagg::mix(resolve_simple_method(a0, beta_file),
                      resolve_simple_method(a1, beta_file), alpha);
  }
  return resolve_simple_method(method, beta_file);
}

json witness_json(const fxagg::AxiomResult& result) {
  const fxagg::AuditWitness& w = *result.witness;
  json out;
  out["rates"] = w.rates;
  if (result.id == fxagg::AxiomId::kSymmetry) out["permutation"] = w.permutation;
  if (result.id == fxagg::AxiomId::kScaling) out["lambda"] = w.lambda;
  out["sample_index"] = w.sample_index;
  out["transform"] = w.describe(result.id);
  return out;
}

json report_json(const fxagg::AuditReport& report) {
  json axioms = json::array();
  for (const fxagg::AxiomResult& r : report.results) {
    json entry;
    entry["id"] = fxagg::axiom_label(r.id);
    entry["name"] = fxagg::axiom_name(r.id);
    entry["pass"] = r.pass;
    entry["worst_violation"] = r.worst_violation;
    if (r.witness) entry["witness"] = witness_json(r);
    if (r.error) entry["error"] = *r.error;
    axioms.push_back(entry);
  }
  json out;
  out["subject"] = report.subject;
  out["arity"] = report.arity;
  out["samples"] = report.sample_count;
  out["seed"] = report.seed;
  out["tolerance"] = report.tolerance;
  out["axioms"] = axioms;
  out["overall_pass"] = report.overall_pass;
  return out;
}

void print_report_text(const fxagg::AuditReport& report) {
  std::cout << "audit subject: " << report.subject << " (arity " << report.arity
            << ")\n"
            << "samples: " << report.sample_count << ", seed: " << report.seed
            << ", tolerance: " << format12(report.tolerance) << "\n";
  for (const fxagg::AxiomResult& r : report.results) {
    std::cout << fxagg::axiom_label(r.id) << " " << fxagg::axiom_name(r.id);
    for (std::size_t pad = std::string(fxagg::axiom_name(r.id)).size(); pad < 21;
         ++pad) {
      std::cout << ' ';
    }
    std::cout << (r.pass ? "pass" : "FAIL") << "   worst "
              << format12(r.worst_violation) << "\n";
    if (!r.pass && r.witness) {
      std::cout << "   witness: " << r.witness->describe(r.id) << "\n";
    }
    if (r.error) {
      std::cout << "   error: " << *r.error << "\n";
    }
  }
  std::cout << "overall: " << (report.overall_pass ? "pass" : "FAIL") << "\n";
}

// --- aggregate ---------------------------------------------------------

struct AggregateOptions {
  GlobalOptions global;
  std::string method = "geometric";
  std::string input;
  std::string format = "auto";
  std::string beta_file;
  std::string mix_spec;
};

int run_aggregate(const AggregateOptions& opts) {
  const fxagg::ScenarioDocument doc = load_scenario(opts.input, opts.format);
  const fxagg::Aggregator agg =
      resolve_method(opts.method, opts.beta_file, opts.mix_spec);
  const double rate = agg.eval(doc.scenario);
  const double gap = fxagg::siegel_gap(agg, doc.scenario);
  if (opts.global.json_mode()) {
    json out;
    out["method"] = agg.name();
    out["rate"] = rate;
    out["n"] = doc.scenario.size();
    out["siegel_gap"] = gap;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "method: " << agg.name() << "\n"
              << "n: " << doc.scenario.size() << "\n"
              << "rate: " << format12(rate) << "\n"
              << "siegel_gap: " << format12(gap) << "\n";
  }
  return kExitPass;
}

// --- check -------------------------------------------------------------

struct CheckOptions {
  GlobalOptions global;
  std::string method;
  std::string beta_file;
  std::string mix_spec;
  std::size_t arity = 2;
  std::size_t samples = 1000;
};

fxagg::AuditConfig check_config(const CheckOptions& opts, std::size_t arity) {
  fxagg::AuditConfig cfg;
  cfg.arity = arity;
  cfg.sample_count = opts.samples;
  cfg.seed = opts.global.seed;
  cfg.tolerance = opts.global.tolerance;
  return cfg;
}

int run_check(const CheckOptions& opts) {
  if (opts.method.empty() && opts.beta_file.empty()) {
    throw fxagg::ValidationError("check needs --method or --beta-file");
  }

  fxagg::AuditReport report;
  if (opts.method.empty() || opts.method == "beta") {
    // Beta mode: load permissively, check the reciprocity identity itself,
    // then audit the induced aggregator at the file's own arity.
    if (opts.beta_file.empty()) {
      throw fxagg::ValidationError("--method beta requires --beta-file");
    }
    const fxagg::BetaSpec spec = load_beta_spec(opts.beta_file);
    const fxagg::ReciprocityFunction beta = fxagg::unchecked_beta_from_spec(spec);
    const fxagg::AuditConfig cfg = check_config(opts, spec.arity + 1);
    report = fxagg::audit(fxagg::beta_aggregator(beta), cfg);
    report.results.insert(report.results.begin(),
                          fxagg::check_reciprocity_function(beta, cfg));
    report.overall_pass = report.overall_pass && report.results.front().pass;
  } else {
    const fxagg::Aggregator agg =
        resolve_method(opts.method, opts.beta_file, opts.mix_spec);
    const std::size_t arity = agg.fixed_arity().value_or(opts.arity);
    report = fxagg::audit(agg, check_config(opts, arity));
  }

  if (opts.global.json_mode()) {
    std::cout << report_json(report).dump() << "\n";
  } else {
    print_report_text(report);
  }
  return report.overall_pass ? kExitPass : kExitAuditFail;
}

// --- demo-siegel ---------------------------------------------------------

struct SiegelOptions {
  GlobalOptions global;
  std::string input;
  std::string format = "auto";
  std::string method = "arithmetic";
};

std::pair<std::string, std::string> quote_labels(const fxagg::ScenarioDocument& doc) {
  std::string pair = "EUR/USD";
  if (doc.metadata.contains("pair") && doc.metadata["pair"].is_string()) {
    pair = doc.metadata["pair"].get<std::string>();
  }
  const std::size_t slash = pair.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == pair.size()) {
    return {"base->quote", "quote->base"};
  }
  const std::string base = pair.substr(0, slash);
  const std::string quote = pair.substr(slash + 1);
  return {base + "->" + quote, quote + "->" + base};
}

int run_demo_siegel(const SiegelOptions& opts) {
  const fxagg::ScenarioDocument doc =
      opts.input.empty()
          ? fxagg::ScenarioDocument{fxagg::RateScenario({1.0, 4.0}),
                                    json{{"pair", "EUR/USD"}}}
          : load_scenario(opts.input, opts.format);

  const fxagg::Aggregator naive =
      resolve_method(opts.method, std::string(), std::string());
  const fxagg::Aggregator resolution = fxagg::geometric_aggregator();

  const double base_quote = naive.eval(doc.scenario);
  const double counter_quote = naive.eval(doc.scenario.reciprocal());
  const double product = base_quote * counter_quote;
  const double gap = fxagg::siegel_gap(naive, doc.scenario);

  const double gm_base = resolution.eval(doc.scenario);
  const double gm_counter = resolution.eval(doc.scenario.reciprocal());
  const double gm_gap = fxagg::siegel_gap(resolution, doc.scenario);

  const auto [fwd_label, rev_label] = quote_labels(doc);

  if (opts.global.json_mode()) {
    json out;
    out["rates"] = std::vector<double>(doc.scenario.rates().begin(),
                                       doc.scenario.rates().end());
    out["method"] = naive.name();
    out["base_quote"] = base_quote;
    out["counter_quote"] = counter_quote;
    out["round_trip_product"] = product;
    out["gap"] = gap;
    out["resolution"] = {{"method", resolution.name()},
                         {"base_quote", gm_base},
                         {"counter_quote", gm_counter},
                         {"gap", gm_gap}};
    std::cout << out.dump() << "\n";
    return kExitPass;
  }

  std::cout << "scenario: " << doc.scenario.size() << " rates [";
  for (std::size_t i = 0; i < doc.scenario.size(); ++i) {
    if (i > 0) std::cout << ", ";
    std::cout << format12(doc.scenario.rate(i));
  }
  std::cout << "]\n"
            << "quoting both directions with method \"" << naive.name() << "\":\n"
            << "  " << fwd_label << " forward quote: " << format12(base_quote) << "\n"
            << "  " << rev_label << " forward quote: " << format12(counter_quote)
            << "\n"
            << "  round-trip product:      " << format12(product) << "\n"
            << "  riskless profit (gap):   " << format12(gap) << "\n"
            << "arbitrage-free resolution (geometric mean):\n"
            << "  " << fwd_label << " forward quote: " << format12(gm_base) << "\n"
            << "  " << rev_label << " forward quote: " << format12(gm_counter) << "\n"
            << "  gap:                     " << format12(gm_gap) << "\n";
  return kExitPass;
}

// --- demo-group ---------------------------------------------------------

struct GroupOptions {
  GlobalOptions global;
  std::size_t arity = 3;
  std::size_t samples = 200;
};

fxagg::GroupElement random_element(fxagg::SampleStream& stream, std::size_t n) {
  const int sign = stream.uniform01() < 0.5 ? 1 : -1;
  return fxagg::group_element(sign, stream.permutation(n), stream.uniform(-5.0, 5.0));
}

fxagg::LogPoint random_point(fxagg::SampleStream& stream, std::size_t n) {
  fxagg::LogPoint x(n);
  for (double& v : x) v = stream.uniform(-9.0, 9.0);
  return x;
}

int run_demo_group(const GroupOptions& opts) {
  if (opts.arity < 2) {
    throw fxagg::ValidationError("demo-group needs arity >= 2");
  }
  fxagg::SampleStream stream(opts.global.seed);
  const std::size_t n = opts.arity;

  double compose_dev = 0.0;
  double matrix_dev = 0.0;
  double homogeneous_dev = 0.0;
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const fxagg::GroupElement g1 = random_element(stream, n);
    const fxagg::GroupElement g2 = random_element(stream, n);
    const fxagg::LogPoint x = random_point(stream, n);

    const fxagg::LogPoint via_compose = fxagg::act(fxagg::compose(g1, g2), x);
    const fxagg::LogPoint sequential = fxagg::act(g1, fxagg::act(g2, x));
    for (std::size_t k = 0; k < n; ++k) {
      compose_dev = std::max(compose_dev, std::abs(via_compose[k] - sequential[k]));
    }

    matrix_dev = std::max(
        matrix_dev, fxagg::SquareMatrix::max_abs_difference(
                        fxagg::to_matrix(g1) * fxagg::to_matrix(g2),
                        fxagg::to_matrix(fxagg::compose(g1, g2))));

    std::vector<double> hom(x);
    hom.push_back(1.0);
    const std::vector<double> mapped = fxagg::to_matrix(g1) * hom;
    const fxagg::LogPoint direct = fxagg::act(g1, x);
    for (std::size_t k = 0; k < n; ++k) {
      homogeneous_dev = std::max(homogeneous_dev, std::abs(mapped[k] - direct[k]));
    }
  }

  struct EquivRow {
    std::string name;
    double worst = 0.0;
    bool pass = true;
    std::optional<fxagg::LogPoint> reflection_witness;
    double witness_deviation = 0.0;
  };
  std::vector<EquivRow> rows;
  for (const fxagg::Aggregator& agg :
       {fxagg::geometric_aggregator(), fxagg::median_aggregator(),
        fxagg::arithmetic_aggregator()}) {
    EquivRow row;
    row.name = agg.name();
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const fxagg::GroupElement g = random_element(stream, n);
      const fxagg::LogPoint x = random_point(stream, n);
      const fxagg::EquivarianceResult r =
          fxagg::check_equivariance(agg, g, x, opts.global.tolerance);
      row.worst = std::max(row.worst, r.deviation);
      row.pass = row.pass && r.pass;
      if (!r.pass && !row.reflection_witness && g.sign == -1) {
        row.reflection_witness = x;
        row.witness_deviation = r.deviation;
      }
    }
    rows.push_back(row);
  }

  // Orbit injectivity: for n >= 3 sampled elements send a generic point to
  // pairwise distinct images.
  const fxagg::LogPoint probe = random_point(stream, n);
  std::vector<fxagg::LogPoint> images;
  for (std::size_t i = 0; i < opts.samples; ++i) {
    images.push_back(fxagg::act(random_element(stream, n), probe));
  }
  std::sort(images.begin(), images.end());
  const std::size_t distinct = static_cast<std::size_t>(
      std::unique(images.begin(), images.end()) - images.begin());

  // For n = 2 the action is never free: exhibit the sign-reversing
  // stabilizer that forces the residual of any compliant aggregator to 0.
  std::optional<double> stabilizer_fix_dev;
  std::optional<double> gm_residual;
  if (n == 2) {
    const fxagg::GroupElement stab = fxagg::reversing_stabilizer(probe);
    const fxagg::LogPoint fixed = fxagg::act(stab, probe);
    double dev = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      dev = std::max(dev, std::abs(fixed[k] - probe[k]));
    }
    stabilizer_fix_dev = dev;
    gm_residual = std::abs(fxagg::residual_h(fxagg::geometric_aggregator(), probe));
  }

  if (opts.global.json_mode()) {
    json out;
    out["arity"] = n;
    out["seed"] = opts.global.seed;
    out["samples"] = opts.samples;
    out["composition_max_deviation"] = compose_dev;
    out["matrix_homomorphism_max_deviation"] = matrix_dev;
    out["homogeneous_action_max_deviation"] = homogeneous_dev;
    out["equivariance"] = json::array();
    for (const EquivRow& row : rows) {
      json entry;
      entry["aggregator"] = row.name;
      entry["worst_deviation"] = row.worst;
      entry["pass"] = row.pass;
      if (row.reflection_witness) {
        entry["reflection_witness"] = *row.reflection_witness;
        entry["witness_deviation"] = row.witness_deviation;
      }
      out["equivariance"].push_back(entry);
    }
    out["orbit_samples"] = opts.samples;
    out["orbit_distinct_images"] = distinct;
    if (stabilizer_fix_dev) {
      out["reversing_stabilizer_fix_deviation"] = *stabilizer_fix_dev;
      out["geometric_residual_at_fixed_point"] = *gm_residual;
    }
    std::cout << out.dump() << "\n";
    return kExitPass;
  }

  std::cout << "transformation group demo (arity " << n << ", seed "
            << opts.global.seed << ", samples " << opts.samples << ")\n"
            << "composition vs sequential action: max deviation "
            << format12(compose_dev) << "\n"
            << "matrix homomorphism:              max deviation "
            << format12(matrix_dev) << "\n"
            << "homogeneous action vs act():      max deviation "
            << format12(homogeneous_dev) << "\n"
            << "equivariance h(gx) = sign(g) h(x), tolerance "
            << format12(opts.global.tolerance) << ":\n";
  for (const EquivRow& row : rows) {
    std::cout << "  " << row.name;
    for (std::size_t pad = row.name.size(); pad < 12; ++pad) std::cout << ' ';
    std::cout << " worst " << format12(row.worst) << "  "
              << (row.pass ? "pass" : "FAIL") << "\n";
    if (row.reflection_witness) {
      std::cout << "    reflection witness x = [";
      for (std::size_t k = 0; k < row.reflection_witness->size(); ++k) {
        if (k > 0) std::cout << ", ";
        std::cout << format12((*row.reflection_witness)[k]);
      }
      std::cout << "], deviation " << format12(row.witness_deviation) << "\n";
    }
  }
  std::cout << "orbit of a generic point: " << distinct << " distinct images from "
            << opts.samples << " sampled elements"
            << (n >= 3 ? " (generically free)" : "") << "\n";
  if (stabilizer_fix_dev) {
    std::cout << "n = 2 rigidity: reversing stabilizer fixes the point (deviation "
              << format12(*stabilizer_fix_dev)
              << "), forcing h = 0; geometric-mean residual "
              << format12(*gm_residual) << "\n";
  }
  return kExitPass;
}

// --- implied-prob ---------------------------------------------------------

struct ImpliedOptions {
  GlobalOptions global;
  double e1 = 0.0;
  double e2 = 0.0;
};

int run_implied_prob(const ImpliedOptions& opts) {
  const double p = fxagg::implied_probability(opts.e1, opts.e2);
  const double forward =
      fxagg::geometric_mean(fxagg::RateScenario({opts.e1, opts.e2}));
  if (opts.global.json_mode()) {
    json out;
    out["e1"] = opts.e1;
    out["e2"] = opts.e2;
    out["forward"] = forward;
    out["p"] = p;
    out["q"] = 1.0 - p;
    std::cout << out.dump() << "\n";
    return kExitPass;
  }
  std::cout << "rates: e1 = " << format12(opts.e1) << ", e2 = " << format12(opts.e2)
            << "\n"
            << "geometric forward rate: " << format12(forward) << "\n"
            << "implied weight on the e1 state: p = " << format12(p) << "\n"
            << "implied weight on the e2 state: 1 - p = " << format12(1.0 - p) << "\n"
            << "(the reciprocal market implies the mirrored weights: p on e2)\n";
  return kExitPass;
}

// --- expand ---------------------------------------------------------

struct ExpandOptions {
  GlobalOptions global;
  std::string input;
  std::string format = "auto";
  std::string out_path;
  std::string out_format = "auto";
  std::int64_t cap = fxagg::kDefaultExpansionCap;
};

int run_expand(const ExpandOptions& opts) {
  const fxagg::ScenarioDocument doc = load_scenario(opts.input, opts.format);
  if (!doc.scenario.has_probabilities()) {
    throw fxagg::ProbabilityError("expand needs a scenario with probabilities");
  }
  const std::int64_t lcm = fxagg::common_denominator(doc.scenario.probabilities());
  const fxagg::RateScenario expanded =
      fxagg::expand_rational_probabilities(doc.scenario, opts.cap);
  const fxagg::ScenarioDocument out_doc{expanded, doc.metadata};

  if (opts.out_path.empty()) {
    const fxagg::FileFormat format = opts.out_format == "csv"
                                         ? fxagg::FileFormat::kCsv
                                         : fxagg::FileFormat::kJson;
    std::cout << fxagg::serialize_scenario(out_doc, format);
    return kExitPass;
  }

  const fxagg::FileFormat format = resolve_format(opts.out_path, opts.out_format);
  fxagg::write_file(opts.out_path, fxagg::serialize_scenario(out_doc, format));
  if (opts.global.json_mode()) {
    json out;
    out["input_rates"] = doc.scenario.size();
    out["lcm"] = lcm;
    out["expanded_rates"] = expanded.size();
    out["output"] = opts.out_path;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "expanded " << doc.scenario.size() << " weighted rates into "
              << expanded.size() << " equally likely states (lcm " << lcm << ") -> "
              << opts.out_path << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arbitrage-free forward FX rate aggregation"};
  app.require_subcommand(1);

  AggregateOptions agg_opts;
  CLI::App* agg_cmd =
      app.add_subcommand("aggregate", "Price a scenario with a chosen method");
  add_global_options(*agg_cmd, agg_opts.global);
  agg_cmd->add_option("--method", agg_opts.method, "Aggregation method")
      ->check(CLI::IsMember({"geometric", "arithmetic", "harmonic", "median",
                             "beta", "mix"}))
      ->capture_default_str();
  agg_cmd->add_option("--input", agg_opts.input, "Scenario file")->required();
  agg_cmd->add_option("--format", agg_opts.format, "Input format")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  agg_cmd->add_option("--beta-file", agg_opts.beta_file, "Reciprocity-function file");
  agg_cmd->add_option("--mix", agg_opts.mix_spec, "a0,a1,alpha for --method mix");

  CheckOptions check_opts;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Audit an aggregator against the axioms");
  add_global_options(*check_cmd, check_opts.global);
  check_cmd->add_option("--method", check_opts.method, "Aggregation method")
      ->check(CLI::IsMember({"geometric", "arithmetic", "harmonic", "median",
                             "beta", "mix"}));
  check_cmd->add_option("--beta-file", check_opts.beta_file,
                        "Reciprocity-function file");
  check_cmd->add_option("--mix", check_opts.mix_spec, "a0,a1,alpha for --method mix");
  check_cmd->add_option("--arity", check_opts.arity, "Scenario size to sample")
      ->capture_default_str();
  check_cmd->add_option("--samples", check_opts.samples, "Samples per axiom")
      ->capture_default_str();

  SiegelOptions siegel_opts;
  CLI::App* siegel_cmd = app.add_subcommand(
      "demo-siegel", "Demonstrate the two-sided quoting inconsistency");
  add_global_options(*siegel_cmd, siegel_opts.global);
  siegel_cmd->add_option("--input", siegel_opts.input,
                         "Scenario file (default: rates 1 and 4)");
  siegel_cmd->add_option("--format", siegel_opts.format, "Input format")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  siegel_cmd->add_option("--method", siegel_opts.method, "Naive quoting method")
      ->check(CLI::IsMember({"geometric", "arithmetic", "harmonic", "median"}))
      ->capture_default_str();

  GroupOptions group_opts;
  CLI::App* group_cmd = app.add_subcommand(
      "demo-group", "Exercise the log-space transformation group");
  add_global_options(*group_cmd, group_opts.global);
  group_cmd->add_option("--arity", group_opts.arity, "Dimension n")
      ->capture_default_str();
  group_cmd->add_option("--samples", group_opts.samples, "Sampled group elements")
      ->capture_default_str();

  ImpliedOptions implied_opts;
  CLI::App* implied_cmd = app.add_subcommand(
      "implied-prob", "Implied two-state probabilities of the geometric forward");
  add_global_options(*implied_cmd, implied_opts.global);
  implied_cmd->add_option("e1", implied_opts.e1, "First future rate")->required();
  implied_cmd->add_option("e2", implied_opts.e2, "Second future rate")->required();

  ExpandOptions expand_opts;
  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "Expand rational probabilities into equally likely states");
  add_global_options(*expand_cmd, expand_opts.global);
  expand_cmd->add_option("--input", expand_opts.input, "Weighted scenario file")
      ->required();
  expand_cmd->add_option("--format", expand_opts.format, "Input format")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  expand_cmd->add_option("--out", expand_opts.out_path, "Output file (default: stdout)");
  expand_cmd->add_option("--out-format", expand_opts.out_format, "Output format")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  expand_cmd->add_option("--cap", expand_opts.cap, "Maximum expanded state count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*agg_cmd) return run_aggregate(agg_opts);
    if (*check_cmd) return run_check(check_opts);
    if (*siegel_cmd) return run_demo_siegel(siegel_opts);
    if (*group_cmd) return run_demo_group(group_opts);
    if (*implied_cmd) return run_implied_prob(implied_opts);
    if (*expand_cmd) return run_expand(expand_opts);
  } catch (const fxagg::ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArityError;
  } catch (const fxagg::ReciprocityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArityError;
  } catch (const fxagg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
