#include "vsr/prompts.hpp"

#include <filesystem>

#include "common/fs_util.hpp"

namespace vsrchart {

namespace {

constexpr const char* kLocalize =
    "The image is a chart of size {width}x{height} pixels. Mark every data point "
    "in the chart with a pixel coordinate: for a line chart each vertex, for a bar "
    "chart the top-center of each bar, for a scatter chart each marker. Do not "
    "read values. Respond with only a JSON array of [x, y] integer pixel pairs, "
    "ordered series by series.\n";

constexpr const char* kVerify =
    "The first image is the original chart ({width}x{height} pixels). The second "
    "image shows the current data-point markers drawn on it as gold circles. The "
    "marker coordinates are: {localizations}. Inspect the markers for mistakes: "
    "missing data points, markers away from any data point, duplicated or "
    "hallucinated markers. If every data point is marked exactly once and "
    "accurately, respond with the single token CONFIRM. Otherwise respond with "
    "only the full corrected JSON array of [x, y] integer pixel pairs.\n";

constexpr const char* kDecode =
    "Parse the chart in the image ({width}x{height} pixels) into structured data. "
    "The verified pixel locations of all data points are: {localizations}. Use "
    "them as visual anchors to read each value from the axes. Respond with only a "
    "JSON object with keys: chart_id, chart_type (line|bar|grouped_bar|scatter), "
    "title (optional), x_axis {label, kind (categorical|numeric), categories or "
    "range}, y_axis {label, range}, series (array of {label, points}); each point "
    "has y plus category (categorical) or x (numeric).\n";

std::string replace_all(std::string text, const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos += value.size();
  }
  return text;
}

}  // namespace

const PromptSet& default_prompts() {
  static const PromptSet prompts{kLocalize, kVerify, kDecode};
  return prompts;
}

PromptSet load_prompts(const std::string& dir) {
  PromptSet prompts = default_prompts();
  namespace fs = std::filesystem;
  auto maybe = [&](const char* name, std::string& slot) {
    const fs::path path = fs::path(dir) / name;
    if (fs::exists(path)) slot = read_file(path);
  };
  maybe("localize.txt", prompts.localize);
  maybe("verify.txt", prompts.verify);
  maybe("decode.txt", prompts.decode);
  return prompts;
}

std::string render_prompt(const std::string& tmpl, int width, int height,
                          const std::string& localizations_json) {
  std::string out = replace_all(tmpl, "{width}", std::to_string(width));
  out = replace_all(out, "{height}", std::to_string(height));
  out = replace_all(out, "{localizations}", localizations_json);
  return out;
}

}  // namespace vsrchart
