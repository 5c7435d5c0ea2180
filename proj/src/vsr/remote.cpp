#include "vsr/remote.hpp"

#include <httplib.h>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <semaphore>
#include <thread>

#include "core/calibration.hpp"
#include "core/json_io.hpp"
#include "render/png_io.hpp"

namespace vsrchart {

using nlohmann::json;

void EndpointConfig::validate() const {
  if (base_url.empty()) throw ConfigError("endpoint: base_url is required");
  if (model.empty()) throw ConfigError("endpoint: model is required");
  if (timeout_s <= 0.0) throw ConfigError("endpoint: timeout_s must be positive");
  if (max_in_flight < 1) throw ConfigError("endpoint: max_in_flight must be >= 1");
  if (max_attempts < 1) throw ConfigError("endpoint: max_attempts must be >= 1");
}

EndpointConfig EndpointConfig::from_json(const json& j) {
  EndpointConfig c;
  c.base_url = j.at("base_url").get<std::string>();
  c.model = j.at("model").get<std::string>();
  if (j.contains("api_key_env")) c.api_key_env = j["api_key_env"].get<std::string>();
  if (j.contains("timeout_s")) c.timeout_s = j["timeout_s"].get<double>();
  if (j.contains("max_in_flight")) c.max_in_flight = j["max_in_flight"].get<int>();
  if (j.contains("prompt_dir")) c.prompt_dir = j["prompt_dir"].get<std::string>();
  if (j.contains("max_attempts")) c.max_attempts = j["max_attempts"].get<int>();
  if (j.contains("retry_base_delay_s"))
    c.retry_base_delay_s = j["retry_base_delay_s"].get<double>();
  c.validate();
  return c;
}

nlohmann::ordered_json EndpointConfig::to_json() const {
  return {{"base_url", base_url},       {"model", model},
          {"api_key_env", api_key_env}, {"timeout_s", timeout_s},
          {"max_in_flight", max_in_flight}, {"prompt_dir", prompt_dir},
          {"max_attempts", max_attempts},   {"retry_base_delay_s", retry_base_delay_s}};
}

namespace {

const char kBase64Chars[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::string& in) {
  std::string out;
  out.reserve((in.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 2 < in.size()) {
    const unsigned v = (static_cast<unsigned char>(in[i]) << 16) |
                       (static_cast<unsigned char>(in[i + 1]) << 8) |
                       static_cast<unsigned char>(in[i + 2]);
    out.push_back(kBase64Chars[(v >> 18) & 63]);
    out.push_back(kBase64Chars[(v >> 12) & 63]);
    out.push_back(kBase64Chars[(v >> 6) & 63]);
    out.push_back(kBase64Chars[v & 63]);
    i += 3;
  }
  const std::size_t rest = in.size() - i;
  if (rest == 1) {
    const unsigned v = static_cast<unsigned char>(in[i]) << 16;
    out.push_back(kBase64Chars[(v >> 18) & 63]);
    out.push_back(kBase64Chars[(v >> 12) & 63]);
    out.append("==");
  } else if (rest == 2) {
    const unsigned v = (static_cast<unsigned char>(in[i]) << 16) |
                       (static_cast<unsigned char>(in[i + 1]) << 8);
    out.push_back(kBase64Chars[(v >> 18) & 63]);
    out.push_back(kBase64Chars[(v >> 12) & 63]);
    out.push_back(kBase64Chars[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // leading path, no trailing slash
};

SplitUrl split_url(const std::string& base_url) {
  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos)
    throw ConfigError("endpoint: base_url must include a scheme: " + base_url);
  const auto path_start = base_url.find('/', scheme_end + 3);
  SplitUrl out;
  if (path_start == std::string::npos) {
    out.origin = base_url;
  } else {
    out.origin = base_url.substr(0, path_start);
    out.path = base_url.substr(path_start);
    while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  }
  return out;
}

bool contains_confirm_token(const std::string& text) {
  std::size_t pos = 0;
  while ((pos = text.find("CONFIRM", pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    const std::size_t end = pos + 7;
    const bool right_ok =
        end >= text.size() || !std::isalnum(static_cast<unsigned char>(text[end]));
    if (left_ok && right_ok) return true;
    pos = end;
  }
  return false;
}

class HttpRemoteClient final : public RemoteClient {
 public:
  explicit HttpRemoteClient(const EndpointConfig& config)
      : config_(config),
        url_(split_url(config.base_url)),
        prompts_(config.prompt_dir.empty() ? default_prompts()
                                           : load_prompts(config.prompt_dir)),
        in_flight_(config.max_in_flight) {
    config_.validate();
    if (const char* key = std::getenv(config_.api_key_env.c_str())) api_key_ = key;
  }

  std::vector<PixelPoint> localize(const Image& image) override {
    const std::string prompt =
        render_prompt(prompts_.localize, image.width(), image.height(), "[]");
    const std::string reply = chat({{prompt, &image}});
    const auto value = extract_first_json(reply);
    if (!value || !value->is_array())
      throw ProtocolError("localize reply has no JSON array", reply);
    return parse_point_array(*value);
  }

  VerifyResult verify(const Image& original, const Image& overlaid,
                      std::span<const PixelPoint> current) override {
    json points = json::array();
    for (const auto& p : current) points.push_back({p.x, p.y});
    const std::string prompt = render_prompt(prompts_.verify, original.width(),
                                             original.height(), points.dump());
    const std::string reply = chat({{prompt, &original}, {"", &overlaid}});
    const auto value = extract_first_json(reply);
    if (value && value->is_array()) return Corrected{parse_point_array(*value)};
    if (contains_confirm_token(reply)) return Confirm{};
    throw ProtocolError("verify reply is neither CONFIRM nor a JSON array", reply);
  }

  ParseResult decode(const Image& image,
                     std::span<const PixelPoint> localizations) override {
    json points = json::array();
    for (const auto& p : localizations) points.push_back({p.x, p.y});
    const std::string prompt =
        render_prompt(prompts_.decode, image.width(), image.height(), points.dump());
    const std::string reply = chat({{prompt, &image}});
    const auto value = extract_first_json(reply);
    if (!value || !value->is_object())
      throw ProtocolError("decode reply has no JSON object", reply);
    return lenient_parse_result(*value);
  }

  int transport_retries() const override { return retries_.load(); }

 private:
  struct Part {
    std::string text;
    const Image* image;
  };

  std::string chat(const std::vector<Part>& parts) {
    json content = json::array();
    for (const auto& part : parts) {
      if (!part.text.empty()) content.push_back({{"type", "text"}, {"text", part.text}});
      if (part.image) {
        content.push_back(
            {{"type", "image_url"},
             {"image_url",
              {{"url",
                "data:image/png;base64," + base64_encode(encode_png(*part.image))}}}});
      }
    }
    const json body = {{"model", config_.model},
                       {"temperature", 0},
                       {"messages", json::array({{{"role", "user"}, {"content", content}}})}};
    const std::string payload = body.dump();

    in_flight_.acquire();
    struct Release {
      std::counting_semaphore<>* sem;
      ~Release() { sem->release(); }
    } release{&in_flight_};

    std::string last_error;
    for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
      if (attempt > 0) {
        ++retries_;
        const double delay = config_.retry_base_delay_s * std::pow(2.0, attempt - 1);
        std::this_thread::sleep_for(std::chrono::duration<double>(delay));
      }
      httplib::Client client(url_.origin);
      const auto timeout = std::chrono::duration<double>(config_.timeout_s);
      client.set_connection_timeout(timeout);
      client.set_read_timeout(timeout);
      client.set_write_timeout(timeout);
      httplib::Headers headers;
      if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

      auto res = client.Post(url_.path + "/chat/completions", headers, payload,
                             "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 500) {
        last_error = "server error: HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200)
        throw EndpointError("endpoint returned HTTP " + std::to_string(res->status) +
                            ": " + res->body);
      json reply;
      try {
        reply = json::parse(res->body);
      } catch (const json::parse_error& e) {
        throw ProtocolError(std::string("response body is not JSON: ") + e.what(),
                            res->body);
      }
      try {
        return reply.at("choices").at(0).at("message").at("content").get<std::string>();
      } catch (const json::exception&) {
        throw ProtocolError("response lacks choices[0].message.content", res->body);
      }
    }
    throw EndpointError("endpoint unreachable after " +
                        std::to_string(config_.max_attempts) + " attempts; last: " +
                        last_error);
  }

  EndpointConfig config_;
  SplitUrl url_;
  PromptSet prompts_;
  std::string api_key_;
  std::counting_semaphore<> in_flight_;
  std::atomic<int> retries_{0};
};

}  // namespace

std::optional<json> extract_first_json(const std::string& text) {
  for (std::size_t start = 0; start < text.size(); ++start) {
    const char open = text[start];
    if (open != '[' && open != '{') continue;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped) escaped = false;
        else if (c == '\\') escaped = true;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '[' || c == '{') ++depth;
      else if (c == ']' || c == '}') {
        --depth;
        if (depth == 0) {
          const auto candidate = text.substr(start, i - start + 1);
          json parsed = json::parse(candidate, nullptr, false);
          if (!parsed.is_discarded()) return parsed;
          break;  // unbalanced braces of mixed kinds; try the next start
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<PixelPoint> parse_point_array(const json& j) {
  std::vector<PixelPoint> points;
  for (const auto& item : j) {
    if (item.is_array() && item.size() >= 2 && item[0].is_number() && item[1].is_number()) {
      points.push_back(PixelPoint{round_half_even(item[0].get<double>()),
                                  round_half_even(item[1].get<double>())});
    } else if (item.is_object() && item.contains("x") && item.contains("y")) {
      points.push_back(PixelPoint{round_half_even(item["x"].get<double>()),
                                  round_half_even(item["y"].get<double>())});
    } else {
      throw ProtocolError("point array entry is not an [x, y] pair", j.dump());
    }
  }
  return points;
}

ParseResult lenient_parse_result(const json& j) {
  ParseResult r;
  r.chart_id = j.value("chart_id", std::string{});
  try {
    r.chart_type = chart_type_from_name(j.value("chart_type", std::string{"line"}));
  } catch (const ConfigError&) {
    r.chart_type = ChartType::kLine;
  }
  if (j.contains("title") && j["title"].is_string()) r.title = j["title"].get<std::string>();

  if (j.contains("x_axis") && j["x_axis"].is_object()) {
    const auto& x = j["x_axis"];
    if (x.contains("label") && x["label"].is_string())
      r.x_axis.label = x["label"].get<std::string>();
    r.x_axis.kind = x.value("kind", std::string{"categorical"}) == "numeric"
                        ? AxisKind::kNumeric
                        : AxisKind::kCategorical;
    if (x.contains("categories") && x["categories"].is_array())
      r.x_axis.categories = x["categories"].get<std::vector<std::string>>();
    if (x.contains("range") && x["range"].is_array() && x["range"].size() == 2)
      r.x_axis.range = x["range"].get<std::array<double, 2>>();
  }
  if (j.contains("y_axis") && j["y_axis"].is_object()) {
    const auto& y = j["y_axis"];
    if (y.contains("label") && y["label"].is_string())
      r.y_axis.label = y["label"].get<std::string>();
    if (y.contains("range") && y["range"].is_array() && y["range"].size() == 2)
      r.y_axis.range = y["range"].get<std::array<double, 2>>();
  }

  if (j.contains("series") && j["series"].is_array()) {
    for (const auto& sj : j["series"]) {
      if (!sj.is_object()) continue;
      ParsedSeries series;
      series.label = sj.value("label", std::string{"series"});
      if (sj.contains("points") && sj["points"].is_array()) {
        for (const auto& pj : sj["points"]) {
          ParsedPoint p;
          if (pj.is_object()) {
            if (pj.contains("category") && pj["category"].is_string())
              p.category = pj["category"].get<std::string>();
            if (pj.contains("x") && pj["x"].is_number()) p.x = pj["x"].get<double>();
            if (pj.contains("y") && pj["y"].is_number()) p.y = pj["y"].get<double>();
            else continue;
          } else if (pj.is_number()) {
            p.y = pj.get<double>();
          } else {
            continue;
          }
          series.points.push_back(std::move(p));
        }
      }
      r.series.push_back(std::move(series));
    }
  }
  return r;
}

std::unique_ptr<RemoteClient> make_remote_client(const EndpointConfig& config) {
  return std::make_unique<HttpRemoteClient>(config);
}

}  // namespace vsrchart
