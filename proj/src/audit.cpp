#include "fxagg/audit.hpp"

#include <cmath>
#include <utility>

#include "fxagg/errors.hpp"
#include "fxagg/numeric.hpp"
#include "fxagg/sampling.hpp"

namespace fxagg {

namespace {

// Sub-stream tags, one per axiom.
constexpr std::uint64_t kTagSymmetry = 1;
constexpr std::uint64_t kTagScaling = 2;
constexpr std::uint64_t kTagReciprocity = 3;
constexpr std::uint64_t kTagBetaIdentity = 4;

// Ratio sampling range for the reciprocity-function check.
constexpr double kRatioLo = 1.0;
constexpr double kRatioHi = 100.0;

std::vector<double> apply_permutation(std::span<const double> rates,
                                      std::span<const std::size_t> sigma) {
  std::vector<double> out(rates.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = rates[sigma[i]];
  return out;
}

std::vector<double> reciprocals(std::span<const double> rates) {
  std::vector<double> out;
  out.reserve(rates.size());
  for (double r : rates) out.push_back(1.0 / r);
  return out;
}

std::vector<double> scaled(std::span<const double> rates, double lambda) {
  std::vector<double> out;
  out.reserve(rates.size());
  for (double r : rates) out.push_back(lambda * r);
  return out;
}

std::vector<double> reversed(std::span<const double> xs) {
  return {xs.rbegin(), xs.rend()};
}

// Shared max-tracking loop. draw() produces a witness; deviation() scores
// it. The worst witness is the first one attaining the maximum (ties broken
// by sample index), which keeps parallel and sequential reductions aligned.
template <typename Draw, typename Deviation>
AxiomResult run_check(AxiomId id, const AuditConfig& cfg, std::uint64_t tag,
                      Draw&& draw, Deviation&& deviation) {
  cfg.validate();
  SampleStream stream(mix_seed(cfg.seed, tag));
  AxiomResult result;
  result.id = id;
  result.pass = true;
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    AuditWitness w = draw(stream);
    w.sample_index = i;
    double dev = 0.0;
    try {
      dev = deviation(w);
    } catch (const Error& e) {
      result.pass = false;
      result.error = e.what();
      result.witness = std::move(w);
      return result;
    }
    if (!std::isfinite(dev)) {
      result.pass = false;
      result.error = "deviation is not finite";
      result.witness = std::move(w);
      return result;
    }
    if (!result.witness || dev > result.worst_violation) {
      result.worst_violation = dev;
      result.witness = std::move(w);
    }
  }
  result.pass = result.worst_violation <= cfg.tolerance;
  return result;
}

}  // namespace

void AuditConfig::validate() const {
  if (arity == 0) throw DomainError("audit arity must be at least 1");
  if (sample_count == 0) throw DomainError("audit needs at least one sample");
  if (!(rate_lo > 0.0) || !(rate_hi >= rate_lo)) {
    throw DomainError("rate range must satisfy 0 < lo <= hi");
  }
  if (!(scale_lo > 0.0) || !(scale_hi >= scale_lo)) {
    throw DomainError("scale range must satisfy 0 < lo <= hi");
  }
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
}

const char* axiom_label(AxiomId id) {
  switch (id) {
    case AxiomId::kSymmetry: return "A1";
    case AxiomId::kScaling: return "A2";
    case AxiomId::kReciprocity: return "A3";
    case AxiomId::kReciprocityFunction: return "B";
  }
  return "?";
}

const char* axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::kSymmetry: return "symmetry";
    case AxiomId::kScaling: return "scaling";
    case AxiomId::kReciprocity: return "reciprocity";
    case AxiomId::kReciprocityFunction: return "reciprocity-function";
  }
  return "?";
}

std::string AuditWitness::describe(AxiomId id) const {
  std::string text =
      id == AxiomId::kReciprocityFunction ? "ratios [" : "rates [";
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (i > 0) text += ", ";
    text += numeric::format12(rates[i]);
  }
  text += "]";
  switch (id) {
    case AxiomId::kSymmetry: {
      text += ", permutation (";
      for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (i > 0) text += ",";
        text += std::to_string(permutation[i]);
      }
      text += ")";
      break;
    }
    case AxiomId::kScaling:
      text += ", lambda " + numeric::format12(lambda);
      break;
    case AxiomId::kReciprocity:
      text += ", reciprocal rates";
      break;
    case AxiomId::kReciprocityFunction:
      text += ", reversed ratios";
      break;
  }
  text += ", sample " + std::to_string(sample_index);
  return text;
}

AxiomResult check_symmetry(const Aggregator& agg, const AuditConfig& cfg) {
  return run_check(
      AxiomId::kSymmetry, cfg, kTagSymmetry,
      [&](SampleStream& stream) {
        AuditWitness w;
        w.rates = stream.rates(cfg.arity, cfg.rate_lo, cfg.rate_hi);
        w.permutation = stream.permutation(cfg.arity);
        return w;
      },
      [&](const AuditWitness& w) {
        return replay_witness(agg, AxiomId::kSymmetry, w);
      });
}

AxiomResult check_scaling(const Aggregator& agg, const AuditConfig& cfg) {
  return run_check(
      AxiomId::kScaling, cfg, kTagScaling,
      [&](SampleStream& stream) {
        AuditWitness w;
        w.rates = stream.rates(cfg.arity, cfg.rate_lo, cfg.rate_hi);
        w.lambda = stream.log_uniform(cfg.scale_lo, cfg.scale_hi);
        return w;
      },
      [&](const AuditWitness& w) {
        return replay_witness(agg, AxiomId::kScaling, w);
      });
}

AxiomResult check_reciprocity(const Aggregator& agg, const AuditConfig& cfg) {
  return run_check(
      AxiomId::kReciprocity, cfg, kTagReciprocity,
      [&](SampleStream& stream) {
        AuditWitness w;
        w.rates = stream.rates(cfg.arity, cfg.rate_lo, cfg.rate_hi);
        return w;
      },
      [&](const AuditWitness& w) {
        return replay_witness(agg, AxiomId::kReciprocity, w);
      });
}

AuditReport audit(const Aggregator& agg, const AuditConfig& cfg) {
  AuditReport report;
  report.subject = agg.name();
  report.arity = cfg.arity;
  report.sample_count = cfg.sample_count;
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  report.results.push_back(check_symmetry(agg, cfg));
  report.results.push_back(check_scaling(agg, cfg));
  report.results.push_back(check_reciprocity(agg, cfg));
  report.overall_pass = true;
  for (const AxiomResult& r : report.results) {
    report.overall_pass = report.overall_pass && r.pass;
  }
  return report;
}

AxiomResult check_reciprocity_function(const ReciprocityFunction& beta,
                                       const AuditConfig& cfg) {
  return run_check(
      AxiomId::kReciprocityFunction, cfg, kTagBetaIdentity,
      [&](SampleStream& stream) {
        AuditWitness w;
        w.rates = stream.rates(beta.arity(), kRatioLo, kRatioHi);
        return w;
      },
      [&](const AuditWitness& w) { return replay_witness(beta, w); });
}

double replay_witness(const Aggregator& agg, AxiomId id, const AuditWitness& w) {
  switch (id) {
    case AxiomId::kSymmetry: {
      const double base = agg.eval(w.rates);
      const double permuted = agg.eval(apply_permutation(w.rates, w.permutation));
      return numeric::relative_deviation(permuted, base);
    }
    case AxiomId::kScaling: {
      const double base = agg.eval(w.rates);
      const double rescaled = agg.eval(scaled(w.rates, w.lambda));
      return numeric::relative_deviation(rescaled, w.lambda * base);
    }
    case AxiomId::kReciprocity: {
      const double base = agg.eval(w.rates);
      const double flipped = agg.eval(reciprocals(w.rates));
      return std::abs(flipped * base - 1.0);
    }
    case AxiomId::kReciprocityFunction:
      throw DomainError("use the ReciprocityFunction overload to replay a beta witness");
  }
  throw DomainError("unknown axiom");
}

double replay_witness(const ReciprocityFunction& beta, const AuditWitness& w) {
  const double forward = beta.eval(w.rates);
  const double backward = beta.eval(reversed(w.rates));
  return std::abs(forward * backward - 1.0);
}

}  // namespace fxagg
