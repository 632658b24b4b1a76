#include "qgring/pipeline.hpp"

namespace qgring {

namespace {

GroupAnalysis finish(GroupPtr g, ClassificationReport report, const RunConfig& config) {
  GroupAnalysis out;
  out.group = std::move(g);
  auto whole = Subgroup::whole(out.group);
  for (const auto& cp : report.pairs) {
    ComponentDescriptor comp = build_component(whole, cp.pair, cp.chain);
    trivialize_twisting(comp, config.height_budget);
    out.components.push_back(std::move(comp));
  }
  out.report = std::move(report);
  return out;
}

}  // namespace

GroupAnalysis analyze(GroupPtr g, const RunConfig& config) {
  config.validate();
  auto report = complete_irredundant_set(g, config.subgroup_cap, config.chain_budget);
  return finish(std::move(g), std::move(report), config);
}

GroupAnalysis analyze_declared(
    GroupPtr g,
    const std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>&
        declared,
    const RunConfig& config) {
  config.validate();
  auto report = classify_declared_pairs(g, declared);
  return finish(std::move(g), std::move(report), config);
}

}  // namespace qgring
