#ifndef QGRING_PIPELINE_HPP
#define QGRING_PIPELINE_HPP

#include "qgring/component.hpp"
#include "qgring/idempotents.hpp"

namespace qgring {

struct RunConfig {
  int subgroup_cap = 200;
  int closure_cap = 5000;
  int height_budget = 64;
  int chain_budget = 10000;

  void validate() const {
    check(subgroup_cap > 0 && closure_cap > 0 && height_budget > 0 && chain_budget > 0,
          ErrKind::ParameterInvalid, "all budgets must be positive");
  }
};

struct GroupAnalysis {
  GroupPtr group;
  ClassificationReport report;
  std::vector<ComponentDescriptor> components;  // aligned with report.pairs
};

// Full pipeline with enumeration: classification, component construction,
// trivialization attempts.
GroupAnalysis analyze(GroupPtr g, const RunConfig& config = RunConfig());

// Declared-pair mode for groups beyond the enumeration cap. Every claim is
// verified before use.
GroupAnalysis analyze_declared(
    GroupPtr g,
    const std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>&
        declared,
    const RunConfig& config = RunConfig());

}  // namespace qgring

#endif
