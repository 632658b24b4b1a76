#include "qgring/io.hpp"

#include <fstream>
#include <sstream>

namespace qgring {

Json algebra_element_to_json(const AlgebraElement& x) {
  Json coeffs = Json::object();
  for (const auto& [g, c] : x.terms())
    coeffs[std::to_string(g)] = Json::array({c.get_num().get_str(), c.get_den().get_str()});
  return Json{{"coeffs", std::move(coeffs)}};
}

AlgebraElement algebra_element_from_json(const GroupPtr& g, const Json& j) {
  check(j.contains("coeffs") && j["coeffs"].is_object(), ErrKind::InputError,
        "algebra element needs a coeffs object");
  std::vector<std::pair<Elt, Rational>> terms;
  for (const auto& [key, val] : j["coeffs"].items()) {
    long idx = std::stol(key);
    check(idx >= 0 && idx < g->order(), ErrKind::InputError,
          "coefficient index out of range");
    check(val.is_array() && val.size() == 2, ErrKind::InputError,
          "coefficient must be a [num, den] pair");
    terms.emplace_back(static_cast<Elt>(idx),
                       rat_from_strings(val[0].get<std::string>(),
                                        val[1].get<std::string>()));
  }
  return AlgebraElement::from_terms(g, std::move(terms));
}

Json cyclotomic_to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs())
    coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  return Json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  int n = j.at("conductor").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("coeffs"))
    coeffs.push_back(
        rat_from_strings(pair[0].get<std::string>(), pair[1].get<std::string>()));
  return Cyclotomic(n, std::move(coeffs));
}

GroupPtr group_from_file(const std::string& path, int closure_cap) {
  std::ifstream in(path);
  check(in.good(), ErrKind::InputError, "cannot open group file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  check(first != std::string::npos, ErrKind::InputError, "empty group file");
  if (text[first] == '{') {
    Json doc = Json::parse(text);
    int order = doc.at("order").get<int>();
    auto mul = doc.at("mul").get<std::vector<std::vector<int>>>();
    check(static_cast<int>(mul.size()) == order, ErrKind::InputError,
          "Cayley table size disagrees with the declared order");
    std::vector<std::pair<std::string, Elt>> labels;
    if (doc.contains("labels"))
      for (const auto& [name, idx] : doc["labels"].items())
        labels.emplace_back(name, static_cast<Elt>(idx.get<int>()));
    return FiniteGroup::from_cayley_table(mul, labels);
  }
  std::vector<std::string> lines;
  std::istringstream ls(text);
  std::string line;
  while (std::getline(ls, line)) lines.push_back(line);
  return FiniteGroup::from_cycle_strings(lines, closure_cap);
}

namespace {

Subgroup subgroup_from_words(const GroupPtr& g, const Json& words) {
  std::vector<Elt> gens;
  for (const auto& w : words) gens.push_back(g->evaluate_word(w.get<std::string>()));
  return Subgroup::closure(g, gens);
}

}  // namespace

std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>
pairs_from_json(const GroupPtr& g, const Json& doc) {
  std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>> out;
  for (const auto& entry : doc.at("pairs")) {
    Subgroup h = subgroup_from_words(g, entry.at("H"));
    Subgroup k;
    const auto& kj = entry.at("K");
    if (kj.is_object() && kj.contains("commutator_of_H_plus")) {
      Subgroup derived = commutator_subgroup(h, h);
      std::vector<Elt> gens = derived.members();
      for (const auto& w : kj["commutator_of_H_plus"])
        gens.push_back(g->evaluate_word(w.get<std::string>()));
      k = Subgroup::closure(g, gens);
    } else {
      k = subgroup_from_words(g, kj);
    }
    std::vector<Subgroup> mids;
    if (entry.contains("chain"))
      for (const auto& tower : entry["chain"]) mids.push_back(subgroup_from_words(g, tower));
    out.emplace_back(std::make_pair(std::move(h), std::move(k)), std::move(mids));
  }
  return out;
}

std::vector<std::pair<std::pair<Subgroup, Subgroup>, std::vector<Subgroup>>>
pairs_from_file(const GroupPtr& g, const std::string& path) {
  std::ifstream in(path);
  check(in.good(), ErrKind::InputError, "cannot open pairs file: " + path);
  Json doc = Json::parse(in, nullptr, true, true);
  return pairs_from_json(g, doc);
}

Json subgroup_to_json(const Subgroup& s) {
  Json members = Json::array();
  for (Elt m : s.members()) members.push_back(static_cast<int>(m));
  return Json{{"order", s.order()}, {"members", std::move(members)}};
}

namespace {

Json pair_to_json(const ClassifiedPair& cp) {
  Json towers = Json::array();
  for (const auto& t : cp.chain.tower) towers.push_back(subgroup_to_json(t));
  return Json{{"H", subgroup_to_json(cp.pair.h)},
              {"K", subgroup_to_json(cp.pair.k)},
              {"strong", cp.strong},
              {"chain", std::move(towers)},
              {"central_idempotent", algebra_element_to_json(cp.central)}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Incomplete: return "Incomplete";
    case Verdict::GeneralizedStronglyMonomial: return "GeneralizedStronglyMonomial";
    case Verdict::StronglyMonomial: return "StronglyMonomial";
  }
  return "?";
}

}  // namespace

Json shoda_list_json(const GroupAnalysis& a) {
  Json pairs = Json::array();
  for (const auto& cp : a.report.pairs) pairs.push_back(pair_to_json(cp));
  return Json{{"group_order", a.group->order()},
              {"verdict", verdict_name(a.report.verdict)},
              {"coverage_is_one", a.report.coverage == AlgebraElement::one(a.group)},
              {"pairs", std::move(pairs)}};
}

Json wedderburn_json(const GroupAnalysis& a) {
  auto rep = wedderburn_summary(a.group, a.components, a.report.gsm_certified());
  Json rows = Json::array();
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    Json center = Json::array();
    for (const auto& eta : r.center_orbit_sums) center.push_back(cyclotomic_to_json(eta));
    rows.push_back(Json{{"pair", Json{{"H", subgroup_to_json(a.components[i].pair.h)},
                                      {"K", subgroup_to_json(a.components[i].pair.k)}}},
                        {"k", r.k},
                        {"kk", r.kk},
                        {"conductor", r.conductor},
                        {"trivialized", r.trivialized},
                        {"matrix_size", r.matrix_size},
                        {"dim_center", r.dim_center},
                        {"contribution", r.contribution},
                        {"center_orbit_sums", std::move(center)}});
  }
  return Json{{"group_order", a.group->order()},
              {"covers_group", rep.covers_group},
              {"total_dimension", rep.total},
              {"components", std::move(rows)}};
}

Json idempotents_json(const GroupAnalysis& a) {
  Json comps = Json::array();
  Json skipped = Json::array();
  for (const auto& comp : a.components) {
    if (!comp.trivialized) {
      skipped.push_back(Json{{"conductor", comp.conductor},
                             {"reason", "SchurIndexNotOne"},
                             {"note", comp.twist_note}});
      continue;
    }
    auto set = primitive_idempotent_set(comp);
    Json members = Json::array();
    for (size_t i = 0; i < set.members.size(); ++i) {
      int t = static_cast<int>(i) / comp.kk;
      int zi = static_cast<int>(i) % comp.kk;
      members.push_back(Json{{"t", t},
                             {"i", zi},
                             {"value", algebra_element_to_json(set.members[i])}});
    }
    comps.push_back(Json{{"e", algebra_element_to_json(comp.e)},
                         {"normal_element", cyclotomic_to_json(set.normal_element)},
                         {"members", std::move(members)}});
  }
  return Json{{"group_order", a.group->order()},
              {"components", std::move(comps)},
              {"skipped", std::move(skipped)}};
}

Json matrix_units_json(const GroupAnalysis& a) {
  Json comps = Json::array();
  Json skipped = Json::array();
  for (const auto& comp : a.components) {
    if (!comp.trivialized) {
      skipped.push_back(Json{{"conductor", comp.conductor},
                             {"reason", "SchurIndexNotOne"},
                             {"note", comp.twist_note}});
      continue;
    }
    auto units = matrix_units(comp);
    int n = comp.matrix_size();
    Json entries = Json::array();
    for (const auto& u : units) entries.push_back(algebra_element_to_json(u));
    comps.push_back(Json{{"e", algebra_element_to_json(comp.e)},
                         {"n", n},
                         {"units", std::move(entries)}});
  }
  return Json{{"group_order", a.group->order()},
              {"components", std::move(comps)},
              {"skipped", std::move(skipped)}};
}

namespace {

Json unit_to_json(const UnitElement& u) {
  Json params = Json::object();
  for (const auto& [k, v] : u.params) params[k] = v;
  Json j{{"kind", u.kind},
         {"params", std::move(params)},
         {"value", algebra_element_to_json(u.value)},
         {"inverse", algebra_element_to_json(u.inverse)}};
  if (!u.note.empty()) j["note"] = u.note;
  return j;
}

}  // namespace

Json units_json(const GroupAnalysis& a, const UnitReport& rep) {
  Json gens = Json::array();
  for (const auto* bucket : {&rep.bass_cyclic, &rep.generalized_bass, &rep.bicyclic,
                             &rep.v_plus, &rep.v_minus})
    for (const auto& u : *bucket) gens.push_back(unit_to_json(u));
  Json exc = Json::array();
  for (const auto& line : rep.exceptional) exc.push_back(line);
  Json notes = Json::array();
  for (const auto& line : rep.notes) notes.push_back(line);
  return Json{{"group_order", a.group->order()},
              {"generators", std::move(gens)},
              {"exceptional", std::move(exc)},
              {"notes", std::move(notes)}};
}

void verify_bundle(const GroupPtr& g, const Json& doc) {
  bool checked_something = false;
  if (doc.contains("components")) {
    for (const auto& comp : doc["components"]) {
      if (comp.contains("members")) {
        checked_something = true;
        AlgebraElement e = algebra_element_from_json(g, comp.at("e"));
        check(is_idempotent(e), ErrKind::NotAnIdempotent,
              "component idempotent fails e^2 = e");
        std::vector<AlgebraElement> members;
        for (const auto& m : comp["members"])
          members.push_back(algebra_element_from_json(g, m.at("value")));
        AlgebraElement sum = AlgebraElement::zero(g);
        for (const auto& f : members) {
          check(is_idempotent(f), ErrKind::NotAnIdempotent,
                "member fails f^2 = f");
          sum = sum + f;
        }
        check(sum == e, ErrKind::InvariantBreach, "members do not sum to e");
        for (size_t x = 0; x < members.size(); ++x)
          for (size_t y = x + 1; y < members.size(); ++y)
            check(are_orthogonal(members[x], members[y]), ErrKind::InvariantBreach,
                  "members are not pairwise orthogonal");
      }
      if (comp.contains("units")) {
        checked_something = true;
        AlgebraElement e = algebra_element_from_json(g, comp.at("e"));
        int n = comp.at("n").get<int>();
        std::vector<AlgebraElement> units;
        for (const auto& u : comp["units"])
          units.push_back(algebra_element_from_json(g, u));
        check(static_cast<int>(units.size()) == n * n, ErrKind::InputError,
              "matrix unit bundle has the wrong cardinality");
        AlgebraElement diag = AlgebraElement::zero(g);
        for (int i = 0; i < n; ++i) diag = diag + units[static_cast<size_t>(i) * n + i];
        check(diag == e, ErrKind::InvariantBreach, "matrix-unit diagonal must sum to e");
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              for (int d = 0; d < n; ++d) {
                const auto& prod = units[static_cast<size_t>(a) * n + b] *
                                   units[static_cast<size_t>(c) * n + d];
                AlgebraElement expect =
                    (b == c) ? units[static_cast<size_t>(a) * n + d]
                             : AlgebraElement::zero(g);
                check(prod == expect, ErrKind::InvariantBreach,
                      "matrix-unit relation violated");
              }
      }
    }
  }
  if (doc.contains("generators")) {
    checked_something = true;
    AlgebraElement one = AlgebraElement::one(g);
    for (const auto& uj : doc["generators"]) {
      AlgebraElement v = algebra_element_from_json(g, uj.at("value"));
      AlgebraElement w = algebra_element_from_json(g, uj.at("inverse"));
      check(v.has_integer_coeffs() && w.has_integer_coeffs(),
            ErrKind::NonIntegralInverse, "unit coefficients must be integers");
      check(v * w == one && w * v == one, ErrKind::InvariantBreach,
            "unit times inverse must be 1");
    }
  }
  check(checked_something, ErrKind::InputError,
        "bundle contains nothing recognizable to verify");
}

}  // namespace qgring
