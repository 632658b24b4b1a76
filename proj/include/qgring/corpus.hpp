#ifndef QGRING_CORPUS_HPP
#define QGRING_CORPUS_HPP

#include "qgring/builtin_groups.hpp"
#include "qgring/io.hpp"

namespace qgring {

// Declared Shoda pairs and chains for the extraspecial-by-dihedral group at
// p = 5, n = 3, r = 1 (order 1000), exactly as the worked example presents
// them: the linear pairs, the strong pairs on <P,a>, <P,b>, <P,ba> and P,
// and the three chain pairs through <P,a>.
std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>
p5_declared_pairs(const GroupPtr& g);

// Regression corpus document: per-group classification verdicts, Wedderburn
// rows, idempotent/matrix-unit battery results and unit counts. The slow
// order-1000 declared-pair bundle is included only on request.
Json corpus_run_json(bool include_slow, const RunConfig& config = RunConfig());

// Writes the corpus group files (cycle notation) plus the declared-pair JSON
// for the order-1000 bundle into a directory, for use with --group/--pairs.
void corpus_emit(const std::string& dir);

}  // namespace qgring

#endif
