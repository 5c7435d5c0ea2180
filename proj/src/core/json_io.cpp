#include "core/json_io.hpp"

namespace vsrchart {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const char* axis_kind_name(AxisKind k) {
  return k == AxisKind::kCategorical ? "categorical" : "numeric";
}

AxisKind axis_kind_from_name(const std::string& name) {
  if (name == "categorical") return AxisKind::kCategorical;
  if (name == "numeric") return AxisKind::kNumeric;
  throw ConfigError("unknown axis kind: " + name);
}

ordered_json x_axis_to_json(const XAxisInfo& x) {
  ordered_json j;
  if (x.label) j["label"] = *x.label;
  j["kind"] = axis_kind_name(x.kind);
  if (x.categories) j["categories"] = *x.categories;
  if (x.range) j["range"] = *x.range;
  return j;
}

XAxisInfo x_axis_from_json(const json& j) {
  XAxisInfo x;
  if (j.contains("label") && !j["label"].is_null()) x.label = j["label"].get<std::string>();
  x.kind = axis_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("categories") && !j["categories"].is_null())
    x.categories = j["categories"].get<std::vector<std::string>>();
  if (j.contains("range") && !j["range"].is_null())
    x.range = j["range"].get<std::array<double, 2>>();
  return x;
}

ordered_json y_axis_to_json(const YAxisInfo& y) {
  ordered_json j;
  if (y.label) j["label"] = *y.label;
  j["range"] = y.range;
  return j;
}

YAxisInfo y_axis_from_json(const json& j) {
  YAxisInfo y;
  if (j.contains("label") && !j["label"].is_null()) y.label = j["label"].get<std::string>();
  y.range = j.at("range").get<std::array<double, 2>>();
  return y;
}

ordered_json calibration_to_json(const AxisCalibration& cal) {
  ordered_json j;
  j["plot_area_px"] = {{"left", cal.plot_area_px.left},
                       {"top", cal.plot_area_px.top},
                       {"right", cal.plot_area_px.right},
                       {"bottom", cal.plot_area_px.bottom}};
  if (cal.x_range) j["x_range"] = *cal.x_range;
  if (!cal.x_slots_px.empty()) j["x_slots_px"] = cal.x_slots_px;
  j["y_range"] = cal.y_range;
  return j;
}

AxisCalibration calibration_from_json(const json& j) {
  AxisCalibration cal;
  const auto& r = j.at("plot_area_px");
  cal.plot_area_px = PlotRect{r.at("left").get<int>(), r.at("top").get<int>(),
                              r.at("right").get<int>(), r.at("bottom").get<int>()};
  if (j.contains("x_range") && !j["x_range"].is_null())
    cal.x_range = j["x_range"].get<std::array<double, 2>>();
  if (j.contains("x_slots_px") && !j["x_slots_px"].is_null())
    cal.x_slots_px = j["x_slots_px"].get<std::vector<double>>();
  cal.y_range = j.at("y_range").get<std::array<double, 2>>();
  return cal;
}

}  // namespace

ordered_json annotation_to_json(const ChartAnnotation& a) {
  ordered_json j;
  j["chart_id"] = a.chart_id;
  j["chart_type"] = chart_type_name(a.chart_type);
  if (a.title) j["title"] = *a.title;
  j["x_axis"] = x_axis_to_json(a.x_axis);
  j["y_axis"] = y_axis_to_json(a.y_axis);
  j["calibration"] = calibration_to_json(a.calibration);
  j["image"] = {{"width", a.image.width}, {"height", a.image.height}};
  ordered_json series = ordered_json::array();
  for (const auto& s : a.series) {
    ordered_json points = ordered_json::array();
    for (const auto& p : s.points) {
      ordered_json pj;
      if (p.category) pj["category"] = *p.category;
      if (p.x) pj["x"] = *p.x;
      pj["y"] = p.y;
      pj["px"] = {p.px.x, p.px.y};
      if (p.occluded) pj["occluded"] = true;
      points.push_back(std::move(pj));
    }
    series.push_back({{"label", s.label}, {"points", std::move(points)}});
  }
  j["series"] = std::move(series);
  return j;
}

ChartAnnotation annotation_from_json(const json& j) {
  ChartAnnotation a;
  a.chart_id = j.at("chart_id").get<std::string>();
  a.chart_type = chart_type_from_name(j.at("chart_type").get<std::string>());
  if (j.contains("title") && !j["title"].is_null()) a.title = j["title"].get<std::string>();
  a.x_axis = x_axis_from_json(j.at("x_axis"));
  a.y_axis = y_axis_from_json(j.at("y_axis"));
  a.calibration = calibration_from_json(j.at("calibration"));
  a.image = ImageSize{j.at("image").at("width").get<int>(),
                      j.at("image").at("height").get<int>()};
  for (const auto& sj : j.at("series")) {
    SeriesAnnotation s;
    s.label = sj.at("label").get<std::string>();
    for (const auto& pj : sj.at("points")) {
      AnnotatedPoint p;
      if (pj.contains("category") && !pj["category"].is_null())
        p.category = pj["category"].get<std::string>();
      if (pj.contains("x") && !pj["x"].is_null()) p.x = pj["x"].get<double>();
      p.y = pj.at("y").get<double>();
      const auto& px = pj.at("px");
      p.px = PixelPoint{px.at(0).get<int>(), px.at(1).get<int>()};
      if (pj.contains("occluded")) p.occluded = pj["occluded"].get<bool>();
      s.points.push_back(std::move(p));
    }
    a.series.push_back(std::move(s));
  }
  return a;
}

ordered_json parse_result_to_json(const ParseResult& r) {
  ordered_json j;
  j["chart_id"] = r.chart_id;
  j["chart_type"] = chart_type_name(r.chart_type);
  if (r.title) j["title"] = *r.title;
  j["x_axis"] = x_axis_to_json(r.x_axis);
  j["y_axis"] = y_axis_to_json(r.y_axis);
  ordered_json series = ordered_json::array();
  for (const auto& s : r.series) {
    ordered_json points = ordered_json::array();
    for (const auto& p : s.points) {
      ordered_json pj;
      if (p.category) pj["category"] = *p.category;
      if (p.x) pj["x"] = *p.x;
      pj["y"] = p.y;
      points.push_back(std::move(pj));
    }
    series.push_back({{"label", s.label}, {"points", std::move(points)}});
  }
  j["series"] = std::move(series);
  return j;
}

ParseResult parse_result_from_json(const json& j) {
  ParseResult r;
  r.chart_id = j.at("chart_id").get<std::string>();
  r.chart_type = chart_type_from_name(j.at("chart_type").get<std::string>());
  if (j.contains("title") && !j["title"].is_null()) r.title = j["title"].get<std::string>();
  r.x_axis = x_axis_from_json(j.at("x_axis"));
  r.y_axis = y_axis_from_json(j.at("y_axis"));
  for (const auto& sj : j.at("series")) {
    ParsedSeries s;
    s.label = sj.at("label").get<std::string>();
    for (const auto& pj : sj.at("points")) {
      ParsedPoint p;
      if (pj.contains("category") && !pj["category"].is_null())
        p.category = pj["category"].get<std::string>();
      if (pj.contains("x") && !pj["x"].is_null()) p.x = pj["x"].get<double>();
      p.y = pj.at("y").get<double>();
      s.points.push_back(std::move(p));
    }
    r.series.push_back(std::move(s));
  }
  return r;
}

std::string to_stable_string(const ordered_json& j) {
  return j.dump(2) + "\n";
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

}  // namespace vsrchart
