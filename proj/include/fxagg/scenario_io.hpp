#ifndef FXAGG_SCENARIO_IO_HPP
#define FXAGG_SCENARIO_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fxagg/reciprocity.hpp"
#include "fxagg/scenario.hpp"

namespace fxagg {

enum class FileFormat { kJson, kCsv };

// A scenario as it travels through files: the validated rates and
// probabilities plus free-form metadata labels (currency pair, horizon).
// CSV carries no metadata; JSON round-trips it untouched.
struct ScenarioDocument {
  RateScenario scenario;
  nlohmann::json metadata = nlohmann::json::object();
};

// JSON schema: {"rates":[number...],
//               "probabilities":["num/den"...]?,
//               "metadata":{...}?}
// CSV: row 1 rates, optional row 2 probabilities, LF line endings.
//
// Throws ParseError with a position for malformed input and
// ValidationError / ProbabilityError for well-formed input that violates
// scenario invariants.
ScenarioDocument parse_scenario(std::string_view text, FileFormat format);

std::string serialize_scenario(const ScenarioDocument& doc, FileFormat format);

// Serialized power-law reciprocity function.
struct BetaSpec {
  std::size_t arity = 0;
  std::vector<double> exponents;
};

BetaSpec parse_beta_spec(std::string_view text);
std::string serialize_beta_spec(const BetaSpec& spec);

// Strict constructor: enforces the exact exponent antisymmetry, throwing
// ReciprocityViolation. Use for pricing paths.
ReciprocityFunction beta_from_spec(const BetaSpec& spec);

// Permissive constructor: builds the power-law evaluator without the
// antisymmetry check, so an audit can demonstrate the violation instead of
// refusing to load the file.
ReciprocityFunction unchecked_beta_from_spec(const BetaSpec& spec);

// By extension: ".json" or ".csv" (case-insensitive); nullopt otherwise.
std::optional<FileFormat> detect_format(const std::filesystem::path& path);

// Whole-file helpers; throw ValidationError on IO failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fxagg

#endif  // FXAGG_SCENARIO_IO_HPP
