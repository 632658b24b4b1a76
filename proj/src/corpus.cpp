#include "qgring/corpus.hpp"

#include <filesystem>
#include <fstream>

namespace qgring {

std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>
p5_declared_pairs(const GroupPtr& g) {
  auto sub = [&](std::initializer_list<const char*> words) {
    std::vector<Elt> gens;
    for (const char* w : words) gens.push_back(g->evaluate_word(w));
    return Subgroup::closure(g, gens);
  };
  auto derived_plus = [&](const Subgroup& h, std::initializer_list<const char*> words) {
    Subgroup d = commutator_subgroup(h, h);
    std::vector<Elt> gens = d.members();
    for (const char* w : words) gens.push_back(g->evaluate_word(w));
    return Subgroup::closure(g, gens);
  };

  Subgroup whole = Subgroup::whole(g);
  Subgroup p = sub({"x", "y", "z"});
  Subgroup pa = sub({"x", "y", "z", "a"});
  Subgroup pb = sub({"x", "y", "z", "b"});
  Subgroup pba = sub({"x", "y", "z", "b*a"});
  Subgroup h_chain = sub({"x", "y", "a"});

  std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>> out;
  // linear pairs (G, K) with G/K cyclic
  out.push_back({{whole, whole}, {}});
  out.push_back({{whole, sub({"x", "y", "z", "a^2", "a*b"})}, {}});
  out.push_back({{whole, pa}, {}});
  out.push_back({{whole, sub({"x", "y", "z", "a^2", "b"})}, {}});
  // (<P,a>, P): the M2(Q) component
  out.push_back({{pa, p}, {}});
  // (<P,b>, K), K in X \ {P}
  out.push_back({{pb, derived_plus(pb, {})}, {}});
  out.push_back({{pb, derived_plus(pb, {"b"})}, {}});
  // (<P,ba>, K), K in X' \ {P}
  out.push_back({{pba, derived_plus(pba, {})}, {}});
  out.push_back({{pba, derived_plus(pba, {"b*a"})}, {}});
  // (P, K) with K in Z (one representative up to equivalence)
  out.push_back({{p, sub({"x", "y"})}, {}});
  // (<x,y,a>, <y,a^(2^j)>), j = 0,1,2: chain through <P,a>
  out.push_back({{h_chain, sub({"y", "a"})}, {pa}});
  out.push_back({{h_chain, sub({"y", "a^2"})}, {pa}});
  out.push_back({{h_chain, sub({"y"})}, {pa}});
  return out;
}

namespace {

Json battery_json(const GroupAnalysis& a) {
  int sets = 0;
  int members = 0;
  bool all_trivialized = true;
  AlgebraElement total = AlgebraElement::zero(a.group);
  for (const auto& comp : a.components) {
    if (!comp.trivialized) {
      all_trivialized = false;
      continue;
    }
    auto set = primitive_idempotent_set(comp);  // full battery runs inside
    ++sets;
    members += static_cast<int>(set.members.size());
    for (const auto& f : set.members) total = total + f;
  }
  bool sums_to_one = total == AlgebraElement::one(a.group);
  // global completeness holds exactly when every component participated
  if (a.report.gsm_certified() && all_trivialized)
    check(sums_to_one, ErrKind::InvariantBreach,
          "primitive idempotents of all components must sum to 1");
  return Json{{"components", sets},
              {"members", members},
              {"all_trivialized", all_trivialized},
              {"sums_to_one", sums_to_one}};
}

Json group_entry(const std::string& name, GroupAnalysis a, bool with_battery) {
  Json entry;
  entry["name"] = name;
  entry["order"] = a.group->order();
  entry["shoda"] = shoda_list_json(a);
  entry["wedderburn"] = wedderburn_json(a);
  if (with_battery) {
    entry["idempotent_battery"] = battery_json(a);
    auto rep = unit_report(a);
    entry["units"] = units_json(a, rep);
  }
  return entry;
}

}  // namespace

Json corpus_run_json(bool include_slow, const RunConfig& config) {
  Json groups = Json::array();
  for (const auto& [name, g] : builtin::corpus_fast())
    groups.push_back(group_entry(name, analyze(g, config), true));
  if (include_slow) {
    auto g = builtin::p_dihedral(5, 3, 1);
    auto analysis = analyze_declared(g, p5_declared_pairs(g), config);
    groups.push_back(group_entry("P5xD8", std::move(analysis), false));
  }
  return Json{{"corpus", std::move(groups)}};
}

void corpus_emit(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(fs::path(dir) / name);
    check(out.good(), ErrKind::InputError, "cannot write " + name);
    out << text;
  };
  write("s3.group", "r = (1 2 3)\ns = (1 2)\n");
  write("d8.group", "a = (1 2 3 4)\nb = (2 4)\n");
  write("d16.group", "a = (1 2 3 4 5 6 7 8)\nb = (2 8)(3 7)(4 6)\n");
  write("q8.group", "i = (1 2 3 4)(5 6 7 8)\nj = (1 5 3 7)(2 8 4 6)\n");
  write("c7c3.group", "n = (1 2 3 4 5 6 7)\nc = (2 3 5)(4 7 6)\n");
  write("c5c4.group", "n = (1 2 3 4 5)\nc = (2 3 5 4)\n");

  // order-1000 bundle: permutations of the builtin construction plus pairs
  auto g = builtin::p_dihedral(5, 3, 1);
  // export as a JSON Cayley table (cycle notation on 125 points would work
  // too, but the table is the bit-exact canonical form)
  Json mul = Json::array();
  for (int a = 0; a < g->order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g->order(); ++b)
      row.push_back(static_cast<int>(g->mul(a, b)));
    mul.push_back(std::move(row));
  }
  // keep generator labels alongside for the pairs file
  Json labels = Json::object();
  for (size_t i = 0; i < g->generator_labels().size(); ++i)
    labels[g->generator_labels()[i]] = static_cast<int>(g->generators()[i]);
  Json doc{{"order", g->order()}, {"labels", std::move(labels)}, {"mul", std::move(mul)}};
  write("p5d8.group", doc.dump());

  Json pairs = Json::array();
  const char* text = R"JSON({"pairs": [
    {"H": ["x","y","z","a","b"], "K": ["x","y","z","a","b"]},
    {"H": ["x","y","z","a","b"], "K": ["x","y","z","a^2","a*b"]},
    {"H": ["x","y","z","a","b"], "K": ["x","y","z","a"]},
    {"H": ["x","y","z","a","b"], "K": ["x","y","z","a^2","b"]},
    {"H": ["x","y","z","a"], "K": ["x","y","z"]},
    {"H": ["x","y","z","b"], "K": {"commutator_of_H_plus": []}},
    {"H": ["x","y","z","b"], "K": {"commutator_of_H_plus": ["b"]}},
    {"H": ["x","y","z","b*a"], "K": {"commutator_of_H_plus": []}},
    {"H": ["x","y","z","b*a"], "K": {"commutator_of_H_plus": ["b*a"]}},
    {"H": ["x","y","z"], "K": ["x","y"]},
    {"H": ["x","y","a"], "K": ["y","a"], "chain": [["x","y","z","a"]]},
    {"H": ["x","y","a"], "K": ["y","a^2"], "chain": [["x","y","z","a"]]},
    {"H": ["x","y","a"], "K": ["y"], "chain": [["x","y","z","a"]]}
  ]}
)JSON";
  (void)pairs;
  write("p5d8.pairs.json", text);
}

}  // namespace qgring
