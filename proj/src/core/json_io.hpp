#pragma once

#include <json.hpp>

#include "core/types.hpp"

namespace vsrchart {

// Annotation/parse-result JSON schema: snake_case keys, px as a two-element
// integer array. This is the contract between generated corpora, the
// evaluator and the refine loop's ground truth.

nlohmann::ordered_json annotation_to_json(const ChartAnnotation& annotation);
ChartAnnotation annotation_from_json(const nlohmann::json& j);

nlohmann::ordered_json parse_result_to_json(const ParseResult& result);
ParseResult parse_result_from_json(const nlohmann::json& j);

// Serialize with a stable layout (2-space indent, '\n' terminated) so that
// repeated runs produce byte-identical files.
std::string to_stable_string(const nlohmann::ordered_json& j);

nlohmann::json parse_json(const std::string& text, const std::string& origin);

}  // namespace vsrchart
