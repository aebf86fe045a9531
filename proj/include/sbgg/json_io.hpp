#pragma once

#include "sbgg/bbw.hpp"
#include "sbgg/complex.hpp"
#include "sbgg/hasse.hpp"
#include "sbgg/weights.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace sbgg {

/// Everything one run of the pipeline produced.
struct PipelineResult {
  SingularityProfile profile;
  std::optional<LabeledDiagram> relative;
  std::optional<SingularComplex> complex;

  friend bool operator==(const PipelineResult&, const PipelineResult&) = default;
};

nlohmann::json to_json(const SingularityProfile& profile);
nlohmann::json to_json(const LabeledDiagram& d);
nlohmann::json to_json(const SingularComplex& c);
nlohmann::json to_json(const RegularDiagram& d);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const PipelineResult& result);

/// Pretty-printed JSON with a trailing newline.
std::string emit_json(const PipelineResult& result);

/// Inverse of to_json(PipelineResult). Throws input_error on malformed input.
PipelineResult pipeline_from_json(const nlohmann::json& j);
PipelineResult parse_pipeline(const std::string& text);

} // namespace sbgg
