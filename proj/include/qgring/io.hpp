#ifndef QGRING_IO_HPP
#define QGRING_IO_HPP

#include <string>

#include "json.hpp"
#include "qgring/units.hpp"

namespace qgring {

using Json = nlohmann::ordered_json;

// {"coeffs": {"<element-index>": ["num", "den"], ...}} with decimal strings
Json algebra_element_to_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const GroupPtr& g, const Json& j);

// {"conductor": n, "coeffs": [["num","den"], ...]}
Json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

// Group input: cycle-notation text (one permutation per line, optional
// "name = cycles" labels) or JSON {"order": n, "mul": [[...]]}; selected by
// the leading character of the file.
GroupPtr group_from_file(const std::string& path, int closure_cap);

// Declared pairs: {"pairs": [{"H": [words], "K": [words] |
// {"commutator_of_H_plus": [words]}, "chain": [[words], ...]}]}
std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>
pairs_from_file(const GroupPtr& g, const std::string& path);
std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>
pairs_from_json(const GroupPtr& g, const Json& doc);

Json subgroup_to_json(const Subgroup& s);

// Command outputs (all deterministic given the inputs).
Json shoda_list_json(const GroupAnalysis& a);
Json wedderburn_json(const GroupAnalysis& a);
Json idempotents_json(const GroupAnalysis& a);
Json matrix_units_json(const GroupAnalysis& a);
Json units_json(const GroupAnalysis& a, const UnitReport& rep);

// Re-checks a bundle in any of the emitted shapes against the ring
// identities; throws on the first violated identity.
void verify_bundle(const GroupPtr& g, const Json& doc);

}  // namespace qgring

#endif
