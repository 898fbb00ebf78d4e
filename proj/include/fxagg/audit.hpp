#ifndef FXAGG_AUDIT_HPP
#define FXAGG_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fxagg/aggregators.hpp"
#include "fxagg/reciprocity.hpp"

namespace fxagg {

// Randomized audit of an aggregator against the three axioms, treated as a
// black box. Everything is driven by one base seed: each axiom derives its
// own sub-stream, so a check run standalone reports exactly what the same
// check reports inside audit().
struct AuditConfig {
  std::size_t arity = 2;
  std::size_t sample_count = 1000;
  // Rates are sampled log-uniformly: the axioms are multiplicative, so log
  // space is the natural uniform measure.
  double rate_lo = 1e-4;
  double rate_hi = 1e4;
  double scale_lo = 1e-4;
  double scale_hi = 1e4;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class AxiomId { kSymmetry, kScaling, kReciprocity, kReciprocityFunction };

const char* axiom_label(AxiomId id);  // "A1".."A3", "B"
const char* axiom_name(AxiomId id);   // "symmetry", ...

// Everything needed to re-run the worst sample of a check: the input plus
// the transformation that exposed the deviation.
struct AuditWitness {
  std::vector<double> rates;             // or ratio vector for the beta check
  std::vector<std::size_t> permutation;  // symmetry only
  double lambda = 1.0;                   // scaling only
  std::size_t sample_index = 0;
  std::string describe(AxiomId id) const;
};

struct AxiomResult {
  AxiomId id = AxiomId::kSymmetry;
  bool pass = false;
  double worst_violation = 0.0;
  std::optional<AuditWitness> witness;  // worst sample seen
  std::optional<std::string> error;     // aggregator evaluation failure
};

struct AuditReport {
  std::string subject;
  std::size_t arity = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<AxiomResult> results;
  bool overall_pass = false;
};

// A1: |A(sigma s) / A(s) - 1| over random scenarios and permutations.
AxiomResult check_symmetry(const Aggregator& agg, const AuditConfig& cfg);

// A2: |A(lambda s) / (lambda A(s)) - 1| with lambda log-uniform.
AxiomResult check_scaling(const Aggregator& agg, const AuditConfig& cfg);

// A3: |A(s^-1) * A(s) - 1|; a nonzero value is the round-trip arbitrage.
AxiomResult check_reciprocity(const Aggregator& agg, const AuditConfig& cfg);

// All three checks; same (agg, cfg) always yields an identical report.
AuditReport audit(const Aggregator& agg, const AuditConfig& cfg);

// |beta(u) * beta(reverse u) - 1| over ratio vectors u in [1, 100]^arity.
AxiomResult check_reciprocity_function(const ReciprocityFunction& beta,
                                       const AuditConfig& cfg);

// Recomputes the deviation a witness records. Soundness: for any failed
// axiom result, replaying its witness reproduces a violation > tolerance.
double replay_witness(const Aggregator& agg, AxiomId id, const AuditWitness& w);
double replay_witness(const ReciprocityFunction& beta, const AuditWitness& w);

}  // namespace fxagg

#endif  // FXAGG_AUDIT_HPP
