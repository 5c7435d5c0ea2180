#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "vsr/client.hpp"
#include "vsr/prompts.hpp"

namespace vsrchart {

// OpenAI-compatible chat-completions endpoint serving the three model roles.
struct EndpointConfig {
  std::string base_url;              // e.g. http://localhost:8000/v1
  std::string model;
  std::string api_key_env = "VSRCHART_API_KEY";
  double timeout_s = 120.0;
  int max_in_flight = 4;
  std::string prompt_dir;            // empty: built-in prompts
  int max_attempts = 3;              // transport retries per call
  double retry_base_delay_s = 0.5;   // doubles per retry

  void validate() const;
  static EndpointConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

class RemoteClient : public ModelClient {
 public:
  // Transport retries are logged here; they never count as inference calls.
  virtual int transport_retries() const = 0;
};

std::unique_ptr<RemoteClient> make_remote_client(const EndpointConfig& config);

// Lenient reply handling, exposed for tests: extracts the first balanced
// JSON value from free-form text.
std::optional<nlohmann::json> extract_first_json(const std::string& text);
std::vector<PixelPoint> parse_point_array(const nlohmann::json& j);
ParseResult lenient_parse_result(const nlohmann::json& j);

}  // namespace vsrchart
