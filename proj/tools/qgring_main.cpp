#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qgring/corpus.hpp"

using namespace qgring;

namespace {

struct CliOptions {
  std::string group_file;
  std::string pairs_file;
  int subgroup_cap = 200;
  int closure_cap = 5000;
  int chain_budget = 10000;
  int height_budget = 64;
  std::string format = "json";
  std::string out_dir;
};

RunConfig to_config(const CliOptions& o) {
  RunConfig cfg;
  cfg.subgroup_cap = o.subgroup_cap;
  cfg.closure_cap = o.closure_cap;
  cfg.chain_budget = o.chain_budget;
  cfg.height_budget = o.height_budget;
  cfg.validate();
  return cfg;
}

GroupPtr load_group(const CliOptions& o) {
  check(!o.group_file.empty(), ErrKind::InputError, "--group <file> is required");
  return group_from_file(o.group_file, o.closure_cap);
}

GroupAnalysis run_analysis(const CliOptions& o) {
  auto g = load_group(o);
  RunConfig cfg = to_config(o);
  if (!o.pairs_file.empty())
    return analyze_declared(g, pairs_from_file(g, o.pairs_file), cfg);
  return analyze(std::move(g), cfg);
}

void emit(const CliOptions& o, const std::string& name, const Json& doc) {
  std::string text;
  if (o.format == "text") {
    // compact human-readable rendering: one line per top-level list entry
    std::ostringstream os;
    os << name << ":" << "\n";
    for (const auto& [key, value] : doc.items())
      os << "  " << key << " = "
         << (value.is_structured() ? std::to_string(value.size()) + " entries"
                                   : value.dump())
         << "\n";
    text = os.str();
  } else {
    text = doc.dump(2) + "\n";
  }
  std::cout << text;
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream f(std::filesystem::path(o.out_dir) / (name + ".json"));
    f << doc.dump(2) << "\n";
  }
}

void add_common(CLI::App* cmd, CliOptions& o, bool needs_group = true) {
  auto* g = cmd->add_option("--group", o.group_file, "group input file");
  if (needs_group) g->required();
  cmd->add_option("--pairs", o.pairs_file,
                  "declared (H,K,chain) file; replaces enumeration");
  cmd->add_option("--cap", o.subgroup_cap, "subgroup enumeration cap");
  cmd->add_option("--closure-cap", o.closure_cap, "permutation closure cap");
  cmd->add_option("--budget", o.chain_budget, "chain search budget");
  cmd->add_option("--height-budget", o.height_budget, "norm equation height budget");
  cmd->add_option("--format", o.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out_dir, "directory for JSON output files");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Wedderburn data, primitive idempotents and unit generators "
               "of rational group algebras"};
  app.require_subcommand(1);
  CliOptions o;

  auto* c_info = app.add_subcommand("group", "group ingestion and summary");
  auto* c_info_run = c_info->add_subcommand("info", "orders, generators, class count");
  c_info->require_subcommand(1);
  add_common(c_info_run, o);

  auto* c_shoda = app.add_subcommand("shoda", "Shoda pair classification");
  auto* c_shoda_run = c_shoda->add_subcommand("list", "list the irredundant pairs");
  c_shoda->require_subcommand(1);
  add_common(c_shoda_run, o);

  auto* c_wedd = app.add_subcommand("wedderburn", "simple component summary");
  add_common(c_wedd, o);

  auto* c_idem = app.add_subcommand("idempotents",
                                    "complete orthogonal primitive idempotent sets");
  add_common(c_idem, o);

  auto* c_mat = app.add_subcommand("matrix-units", "complete sets of matrix units");
  add_common(c_mat, o);

  auto* c_units = app.add_subcommand("units", "integral group ring unit generators");
  add_common(c_units, o);

  auto* c_verify = app.add_subcommand("verify", "re-check an emitted JSON bundle");
  std::string bundle_file;
  c_verify->add_option("--bundle", bundle_file, "bundle to verify")->required();
  add_common(c_verify, o);

  auto* c_corpus = app.add_subcommand("corpus", "regression corpus");
  auto* c_run = c_corpus->add_subcommand("run", "run the golden regression set");
  bool include_slow = false;
  c_run->add_flag("--include-slow", include_slow,
                  "include the order-1000 declared-pair bundle");
  std::string emit_dir;
  auto* c_emit = c_corpus->add_subcommand("emit", "write corpus input files");
  c_emit->add_option("--out", emit_dir, "target directory")->required();
  c_corpus->require_subcommand(1);
  add_common(c_run, o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_info) {
      auto g = load_group(o);
      Json gens = Json::array();
      for (size_t i = 0; i < g->generators().size(); ++i)
        gens.push_back(Json{{"label", g->generator_labels()[i]},
                            {"element", static_cast<int>(g->generators()[i])}});
      Json doc{{"order", g->order()},
               {"abelian", g->is_abelian()},
               {"generators", std::move(gens)},
               {"conjugacy_classes",
                static_cast<int>(conjugacy_classes(Subgroup::whole(g)).size())}};
      if (g->order() <= o.subgroup_cap)
        doc["subgroups"] = static_cast<int>(all_subgroups(g, o.subgroup_cap).size());
      emit(o, "group-info", doc);
    } else if (*c_shoda) {
      emit(o, "shoda-list", shoda_list_json(run_analysis(o)));
    } else if (*c_wedd) {
      emit(o, "wedderburn", wedderburn_json(run_analysis(o)));
    } else if (*c_idem) {
      emit(o, "idempotents", idempotents_json(run_analysis(o)));
    } else if (*c_mat) {
      emit(o, "matrix-units", matrix_units_json(run_analysis(o)));
    } else if (*c_units) {
      auto analysis = run_analysis(o);
      auto rep = unit_report(analysis);
      emit(o, "units", units_json(analysis, rep));
    } else if (*c_verify) {
      auto g = load_group(o);
      std::ifstream in(bundle_file);
      check(in.good(), ErrKind::InputError, "cannot open bundle: " + bundle_file);
      Json doc = Json::parse(in);
      verify_bundle(g, doc);
      emit(o, "verify", Json{{"verified", true}});
    } else if (*c_corpus) {
      if (*c_run) {
        emit(o, "corpus", corpus_run_json(include_slow, to_config(o)));
      } else {
        corpus_emit(emit_dir);
        std::cout << Json{{"written", emit_dir}}.dump(2) << "\n";
      }
    }
  } catch (const Error& e) {
    Json err{{"error", err_kind_name(e.kind())}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return err_kind_exit_code(e.kind());
  } catch (const std::exception& e) {
    Json err{{"error", "Unexpected"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
