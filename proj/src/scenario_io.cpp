#include "fxagg/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fxagg/errors.hpp"

namespace fxagg {

namespace {

using nlohmann::json;

json parse_json_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  } catch (const json::exception& e) {
    // out_of_range and friends carry no byte position
    throw ParseError(e.what());
  }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end()) {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
}

std::vector<double> json_rates(const json& doc) {
  if (!doc.contains("rates")) throw ParseError("missing \"rates\" array");
  const json& rates = doc["rates"];
  if (!rates.is_array() || rates.empty()) {
    throw ParseError("\"rates\" must be a non-empty array");
  }
  std::vector<double> out;
  out.reserve(rates.size());
  for (const json& r : rates) {
    if (!r.is_number()) {
      throw ParseError("rate entries must be numbers");
    }
    out.push_back(r.get<double>());
  }
  return out;
}

std::vector<Rational> json_probabilities(const json& doc) {
  const json& probs = doc["probabilities"];
  if (!probs.is_array()) {
    throw ParseError("\"probabilities\" must be an array of \"num/den\" strings");
  }
  std::vector<Rational> out;
  out.reserve(probs.size());
  for (const json& p : probs) {
    if (!p.is_string()) {
      throw ParseError("probability entries must be \"num/den\" strings");
    }
    out.push_back(Rational::parse(p.get<std::string>()));
  }
  return out;
}

ScenarioDocument parse_scenario_json(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  reject_unknown_keys(doc, {"rates", "probabilities", "metadata"});
  std::vector<double> rates = json_rates(doc);

  json metadata = json::object();
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) {
      throw ParseError("\"metadata\" must be an object");
    }
    metadata = doc["metadata"];
  }
  if (doc.contains("probabilities")) {
    return {RateScenario(std::move(rates), json_probabilities(doc)), std::move(metadata)};
  }
  return {RateScenario(std::move(rates)), std::move(metadata)};
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_decimal(const std::string& token, std::size_t line, std::size_t field) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw ParseError("\"" + token + "\" is not a decimal number", line, field);
  }
  return value;
}

ScenarioDocument parse_scenario_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty CSV input", 1, 1);
  if (lines.size() > 2) {
    throw ParseError("expected at most two rows (rates, probabilities)", 3, 1);
  }

  const std::vector<std::string> rate_fields = split_fields(lines[0]);
  std::vector<double> rates;
  rates.reserve(rate_fields.size());
  for (std::size_t i = 0; i < rate_fields.size(); ++i) {
    rates.push_back(parse_decimal(rate_fields[i], 1, i + 1));
  }

  if (lines.size() == 1) return {RateScenario(std::move(rates)), json::object()};

  const std::vector<std::string> prob_fields = split_fields(lines[1]);
  if (prob_fields.size() != rates.size()) {
    throw ParseError("expected " + std::to_string(rates.size()) +
                         " probabilities, got " + std::to_string(prob_fields.size()),
                     2, prob_fields.size());
  }
  std::vector<Rational> probs;
  probs.reserve(prob_fields.size());
  for (std::size_t i = 0; i < prob_fields.size(); ++i) {
    try {
      probs.push_back(Rational::parse(prob_fields[i]));
    } catch (const ProbabilityError& e) {
      throw ParseError(e.what(), 2, i + 1);
    }
  }
  return {RateScenario(std::move(rates), std::move(probs)), json::object()};
}

std::string shortest_repr(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

ScenarioDocument parse_scenario(std::string_view text, FileFormat format) {
  if (format == FileFormat::kJson) return parse_scenario_json(text);
  return parse_scenario_csv(text);
}

std::string serialize_scenario(const ScenarioDocument& doc, FileFormat format) {
  const RateScenario& s = doc.scenario;
  if (format == FileFormat::kJson) {
    json out;
    out["rates"] = json::array();
    for (double r : s.rates()) out["rates"].push_back(r);
    if (s.has_probabilities()) {
      out["probabilities"] = json::array();
      for (const Rational& p : s.probabilities()) {
        out["probabilities"].push_back(p.to_string());
      }
    }
    if (!doc.metadata.empty()) out["metadata"] = doc.metadata;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out << ',';
    out << shortest_repr(s.rate(i));
  }
  out << '\n';
  if (s.has_probabilities()) {
    const std::vector<Rational>& probs = s.probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (i > 0) out << ',';
      out << probs[i].to_string();
    }
    out << '\n';
  }
  return out.str();
}

BetaSpec parse_beta_spec(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_object()) throw ParseError("beta spec must be a JSON object");
  reject_unknown_keys(doc, {"arity", "representation", "exponents"});
  if (!doc.contains("representation") || doc["representation"] != "power_law") {
    throw ParseError("\"representation\" must be \"power_law\"");
  }
  if (!doc.contains("exponents") || !doc["exponents"].is_array() ||
      doc["exponents"].empty()) {
    throw ParseError("\"exponents\" must be a non-empty array");
  }
  BetaSpec spec;
  for (const json& e : doc["exponents"]) {
    if (!e.is_number()) throw ParseError("exponent entries must be numbers");
    const double value = e.get<double>();
    if (!std::isfinite(value)) throw ParseError("exponents must be finite");
    spec.exponents.push_back(value);
  }
  spec.arity = spec.exponents.size();
  if (doc.contains("arity")) {
    if (!doc["arity"].is_number_unsigned() ||
        doc["arity"].get<std::size_t>() != spec.arity) {
      throw ParseError("\"arity\" must equal the number of exponents");
    }
  }
  return spec;
}

std::string serialize_beta_spec(const BetaSpec& spec) {
  json out;
  out["arity"] = spec.arity;
  out["representation"] = "power_law";
  out["exponents"] = spec.exponents;
  return out.dump(2) + "\n";
}

ReciprocityFunction beta_from_spec(const BetaSpec& spec) {
  return power_law_beta(spec.exponents);
}

ReciprocityFunction unchecked_beta_from_spec(const BetaSpec& spec) {
  std::vector<double> exponents = spec.exponents;
  std::string name = "unchecked_power_law(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) name += ",";
    name += shortest_repr(exponents[i]);
  }
  name += ")";
  return ReciprocityFunction::custom(
      spec.arity, std::move(name), [exponents](std::span<const double> u) {
        double log_sum = 0.0;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
          log_sum += exponents[i] * std::log(u[i]);
        }
        return std::exp(log_sum);
      });
}

std::optional<FileFormat> detect_format(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".json") return FileFormat::kJson;
  if (ext == ".csv") return FileFormat::kCsv;
  return std::nullopt;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) {
    throw ValidationError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ValidationError("cannot read " + path.string());
  }
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) {
    throw ValidationError("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out.good()) {
    throw ValidationError("cannot write " + path.string());
  }
}

}  // namespace fxagg
