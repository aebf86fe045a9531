#include "sbgg/json_io.hpp"

#include "sbgg/error.hpp"

#include <fmt/format.h>

namespace sbgg {

using nlohmann::json;

namespace {

json barred(const BarredWeight& w) { return json::array({w.first, w.second}); }

BarredWeight barred_from(const json& j) {
  return {j.at(0).get<std::vector<int>>(), j.at(1).get<std::vector<int>>()};
}

} // namespace

json to_json(const SingularityProfile& profile) {
  return {
      {"n", profile.n},
      {"k", profile.k},
      {"l", profile.l},
      {"S", profile.S},
      {"I", profile.I},
      {"J", profile.J},
      {"mu", std::vector<int>(profile.mu.coords().begin(), profile.mu.coords().end())},
  };
}

json to_json(const LabeledDiagram& d) {
  json vertices = json::array();
  for (VertexId id = 0; id < d.diagram.vertices.size(); ++id) {
    const auto& v = d.diagram.vertices[id];
    const auto& label = d.labels[id];
    vertices.push_back({{"id", id},
                        {"g1", v.g1},
                        {"g2", v.g2},
                        {"g3", v.g3},
                        {"p", v.p},
                        {"label", label.q ? json(*label.q) : json(nullptr)}});
  }
  json arrows = json::array();
  for (const auto& a : d.diagram.arrows)
    arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"dir", a.direction}});
  return {{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

json to_json(const SingularComplex& c) {
  json vertices = json::array();
  for (VertexId id = 0; id < c.vertices.size(); ++id) {
    const auto& v = c.vertices[id];
    vertices.push_back({{"id", id},
                        {"base", v.base},
                        {"p", v.p},
                        {"q", v.q},
                        {"s", v.s},
                        {"pushed_weight", barred(v.pushed_weight)},
                        {"bundle_weight", barred(v.bundle_weight)}});
  }
  json arrows = json::array();
  for (const auto& a : c.arrows)
    arrows.push_back({{"src", a.src},
                      {"dst", a.dst},
                      {"dir", a.direction},
                      {"steps", a.steps},
                      {"order", a.order},
                      {"standard", a.standard}});
  return {{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}, {"chain_spaces", c.chain_spaces}};
}

json to_json(const RegularDiagram& d) {
  json vertices = json::array();
  for (VertexId id = 0; id < d.vertices.size(); ++id)
    vertices.push_back({{"id", id}, {"weight", barred(d.vertices[id].weight)}, {"degree", d.vertices[id].degree}});
  json arrows = json::array();
  for (const auto& a : d.arrows)
    arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"dir", a.direction}});
  return {{"values", d.values}, {"k", d.k}, {"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"counterexamples", c.counterexamples}});
  return {{"ok", report.ok()}, {"checks", std::move(checks)}};
}

json to_json(const PipelineResult& result) {
  json j = to_json(result.profile);
  if (result.relative)
    j["relative"] = to_json(*result.relative);
  if (result.complex)
    j["complex"] = to_json(*result.complex);
  return j;
}

std::string emit_json(const PipelineResult& result) { return to_json(result).dump(2) + "\n"; }

PipelineResult pipeline_from_json(const json& j) {
  try {
    PipelineResult result;
    auto& profile = result.profile;
    profile.n = j.at("n").get<int>();
    profile.k = j.at("k").get<int>();
    profile.l = j.at("l").get<int>();
    profile.S = j.at("S").get<std::vector<int>>();
    profile.I = j.at("I").get<std::vector<int>>();
    profile.J = j.at("J").get<std::vector<int>>();
    profile.mu = Weight(j.at("mu").get<std::vector<int>>());

    if (j.contains("relative")) {
      const json& rel = j.at("relative");
      std::vector<RelativeVertex> vertices;
      std::vector<Label> labels;
      for (const json& v : rel.at("vertices")) {
        if (v.at("id").get<VertexId>() != vertices.size())
          throw input_error(input_errc::invalid_input, "relative vertices are not ordered by id");
        vertices.push_back({v.at("g1").get<std::vector<int>>(), v.at("g2").get<std::vector<int>>(),
                            v.at("g3").get<std::vector<int>>(), v.at("p").get<int>()});
        const json& label = v.at("label");
        labels.push_back(label.is_null() ? vanishing_label : Label{label.get<int>()});
      }
      std::vector<Arrow> arrows;
      for (const json& a : rel.at("arrows"))
        arrows.push_back({a.at("src").get<VertexId>(), a.at("dst").get<VertexId>(), a.at("dir").get<int>()});
      result.relative = LabeledDiagram{
          RelativeDiagram::from_parts(profile, std::move(vertices), std::move(arrows), 0), std::move(labels)};
    }

    if (j.contains("complex")) {
      const json& cj = j.at("complex");
      SingularComplex c;
      c.profile = profile;
      for (const json& v : cj.at("vertices")) {
        if (v.at("id").get<VertexId>() != c.vertices.size())
          throw input_error(input_errc::invalid_input, "complex vertices are not ordered by id");
        c.vertices.push_back({v.at("base").get<VertexId>(), v.at("p").get<int>(), v.at("q").get<int>(),
                              v.at("s").get<int>(), barred_from(v.at("pushed_weight")),
                              barred_from(v.at("bundle_weight"))});
      }
      for (const json& a : cj.at("arrows"))
        c.arrows.push_back({a.at("src").get<VertexId>(), a.at("dst").get<VertexId>(), a.at("dir").get<int>(),
                            a.at("steps").get<int>(), a.at("order").get<int>(), a.at("standard").get<bool>()});
      c.chain_spaces = cj.at("chain_spaces").get<std::vector<std::vector<VertexId>>>();
      result.complex = std::move(c);
    }
    return result;
  } catch (const json::exception& e) {
    throw input_error(input_errc::invalid_input, fmt::format("malformed pipeline JSON: {}", e.what()));
  }
}

PipelineResult parse_pipeline(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(input_errc::invalid_input, fmt::format("malformed pipeline JSON: {}", e.what()));
  }
  return pipeline_from_json(j);
}

} // namespace sbgg
