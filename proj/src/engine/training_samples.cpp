#include "engine/training_samples.hpp"

#include "core/json_io.hpp"
#include "render/chart_renderer.hpp"
#include "vsr/prompts.hpp"

namespace vsrchart::engine {

const char* sample_kind_name(SampleKind kind) {
  switch (kind) {
    case SampleKind::kRefineFromScratch: return "refine_from_scratch";
    case SampleKind::kRefineCorrect: return "refine_correct";
    case SampleKind::kRefineConfirm: return "refine_confirm";
    case SampleKind::kDecode: return "decode";
  }
  return "decode";
}

namespace {

std::vector<PixelPoint> anchor_list(const ChartAnnotation& annotation) {
  std::vector<PixelPoint> anchors;
  for (const auto& s : annotation.series)
    for (const auto& p : s.points) anchors.push_back(p.px);
  return anchors;
}

nlohmann::ordered_json points_json(const std::vector<PixelPoint>& points) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : points) arr.push_back({p.x, p.y});
  return arr;
}

ParseResult strip_to_parse_result(const ChartAnnotation& annotation) {
  ParseResult r;
  r.chart_id = annotation.chart_id;
  r.chart_type = annotation.chart_type;
  r.title = annotation.title;
  r.x_axis = annotation.x_axis;
  r.y_axis = annotation.y_axis;
  for (const auto& s : annotation.series) {
    ParsedSeries ps;
    ps.label = s.label;
    for (const auto& p : s.points) ps.points.push_back(ParsedPoint{p.category, p.x, p.y});
    r.series.push_back(std::move(ps));
  }
  return r;
}

}  // namespace

TrainingSampleSet build_training_samples(const RenderedChart& chart,
                                         const PerturbationSpec& spec,
                                         std::uint64_t seed) {
  TrainingSampleSet out;
  const std::string base = chart.annotation.chart_id + ".png";
  const std::string overlay_ok = chart.annotation.chart_id + ".refine_ok.png";
  const std::string overlay_err = chart.annotation.chart_id + ".refine_err.png";

  const std::vector<PixelPoint> anchors = anchor_list(chart.annotation);
  const PromptSet& prompts = default_prompts();
  const int width = chart.image.width();
  const int height = chart.image.height();

  TrainingSample scratch;
  scratch.kind = SampleKind::kRefineFromScratch;
  scratch.image_paths = {base};
  scratch.prompt = render_prompt(prompts.localize, width, height, {});
  scratch.target = points_json(anchors);
  out.samples.push_back(std::move(scratch));

  out.overlays.emplace_back(overlay_ok, overlay_markers(chart.image, anchors));
  TrainingSample confirm;
  confirm.kind = SampleKind::kRefineConfirm;
  confirm.image_paths = {base, overlay_ok};
  confirm.prompt = render_prompt(prompts.verify, width, height, points_json(anchors).dump());
  confirm.target = kConfirmToken;
  out.samples.push_back(std::move(confirm));

  const PerturbedLocalizations perturbed = inject_errors(chart.annotation, spec, seed);
  out.overlays.emplace_back(overlay_err, overlay_markers(chart.image, perturbed.points));
  TrainingSample correct;
  correct.kind = SampleKind::kRefineCorrect;
  correct.image_paths = {base, overlay_err};
  correct.prompt =
      render_prompt(prompts.verify, width, height, points_json(perturbed.points).dump());
  correct.target = points_json(anchors);  // correction restores the full truth
  out.samples.push_back(std::move(correct));

  TrainingSample decode;
  decode.kind = SampleKind::kDecode;
  decode.image_paths = {base};
  decode.prompt = render_prompt(prompts.decode, width, height, points_json(anchors).dump());
  decode.target = parse_result_to_json(strip_to_parse_result(chart.annotation));
  out.samples.push_back(std::move(decode));

  return out;
}

nlohmann::ordered_json sample_to_json(const TrainingSample& sample) {
  nlohmann::ordered_json j;
  j["kind"] = sample_kind_name(sample.kind);
  j["images"] = sample.image_paths;
  j["prompt"] = sample.prompt;
  j["target"] = sample.target;
  return j;
}

}  // namespace vsrchart::engine
