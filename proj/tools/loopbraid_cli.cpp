/**
 * @file loopbraid_cli.cpp
 * @brief Command-line surface: build loop braid representations from ribbon
 *        category data, verify coherence and relations, evaluate words.
 *
 * Exit codes: 0 = success / all checks pass, 1 = a mathematical check failed
 * (coherence or relation residual above tolerance), 2 = usage or IO error.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "loopbraid/braid_oracle.hpp"
#include "loopbraid/builtin.hpp"
#include "loopbraid/io.hpp"
#include "loopbraid/loop_rep.hpp"
#include "loopbraid/word_eval.hpp"

namespace lb = loopbraid;

namespace {

struct RunConfig {
  std::string builtin;  ///< trivial | ising | ty (empty = use file)
  std::string file;     ///< category data file (empty = use builtin)
  lb::TYParams ty;      ///< parameters when builtin == "ty"
  std::string x = "vac";
  std::string y = "vac";
  std::string z = "vac";
  int n = 2;
  double tol = 1e-9;
  std::string format = "human";
  std::string out;  ///< report destination (empty = stdout)
};

lb::RibbonCategory make_category(const RunConfig& cfg) {
  if (!cfg.file.empty()) return lb::load_category_file(cfg.file);
  if (cfg.builtin == "trivial") return lb::trivial();
  if (cfg.builtin == "ising") return lb::ising();
  if (cfg.builtin == "ty") return lb::tambara_yamagami(cfg.ty);
  throw lb::UsageError("no category selected: pass --builtin {trivial|ising|ty} or --file PATH");
}

/** Exact object names win; "vac" and "1" fall back to the unit object. */
lb::ObjId resolve_object(const lb::RibbonCategory& cat, const std::string& name) {
  if (const auto id = cat.find_object(name)) return *id;
  if (name == "vac" || name == "1") return cat.unit();
  std::string known;
  for (lb::ObjId a = 0; a < cat.num_objects(); ++a)
    known += (a ? ", " : "") + cat.name_of(a);
  throw lb::UsageError("unknown object '" + name + "' (objects: " + known +
                       "; aliases vac/1 name the unit)");
}

/** Send the finished report to --out if given, stdout otherwise. */
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw lb::UsageError("cannot open '" + cfg.out + "' for writing");
  f << text;
  if (!f) throw lb::UsageError("failed while writing '" + cfg.out + "'");
}

void add_category_options(CLI::App* cmd, RunConfig& cfg) {
  auto* b = cmd->add_option("--builtin", cfg.builtin, "Built-in category: trivial, ising, or ty")
                ->check(CLI::IsMember({"trivial", "ising", "ty"}));
  auto* f = cmd->add_option("--file", cfg.file, "Category data file (JSON)")
                ->check(CLI::ExistingFile);
  b->excludes(f);
  f->excludes(b);
  cmd->add_option("--ty-k", cfg.ty.k, "TY group rank: G = (Z_2)^k, k in 1..3")
      ->check(CLI::Range(1, 3));
  cmd->add_option("--ty-bicharacter", cfg.ty.bicharacter_rows,
                  "Bicharacter Gram matrix rows as bitmasks (default: identity)");
  cmd->add_option("--ty-sign", cfg.ty.sign, "m-m-m F-block normalization sign (+1 or -1)");
  cmd->add_option("--ty-refinement", cfg.ty.refinement_signs,
                  "Per-generator quadratic refinement signs (+1/-1 each)");
  cmd->add_option("--ty-root-branch", cfg.ty.root_branch,
                  "Square-root branch for the m-over-m normalization (+1 or -1)");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "Numerical tolerance for pass/fail verdicts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"human", "structured"}));
  cmd->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
}

void add_rep_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-x,--x", cfg.x, "First object of each circle pair (default: unit)");
  cmd->add_option("-y,--y", cfg.y, "Second object of each circle pair (default: unit)");
  cmd->add_option("-z,--z", cfg.z, "Total charge sector (default: unit)");
  cmd->add_option("-n,--n", cfg.n, "Number of circle pairs")->check(CLI::PositiveNumber);
}

std::string json_config(const char* command, const lb::RibbonCategory& cat, const RunConfig& cfg,
                        bool with_rep, lb::ObjId x = -1, lb::ObjId y = -1, lb::ObjId z = -1) {
  std::ostringstream os;
  os << "\"command\": " << lb::json_escape(command)
     << ", \"category\": " << lb::json_escape(cat.name());
  if (with_rep)
    os << ", \"x\": " << lb::json_escape(cat.name_of(x))
       << ", \"y\": " << lb::json_escape(cat.name_of(y))
       << ", \"z\": " << lb::json_escape(cat.name_of(z)) << ", \"n\": " << cfg.n;
  os << ", \"tolerance\": " << lb::format_double(cfg.tol);
  return os.str();
}

// ---------------------------------------------------------------------------
// Subcommand runners (each returns the process exit code)
// ---------------------------------------------------------------------------

int run_verify(const RunConfig& cfg) {
  const lb::RibbonCategory cat = make_category(cfg);
  const lb::ValidationReport structure = lb::validate_structure(cat);
  const auto& inverse_issues = cat.inverse_block_issues();
  const lb::CoherenceReport pentagon = lb::verify_pentagon(cat, cfg.tol);
  const lb::CoherenceReport hexagon = lb::verify_hexagon(cat, cfg.tol);
  const bool pass =
      structure.ok() && inverse_issues.empty() && pentagon.pass() && hexagon.pass();

  std::ostringstream os;
  if (cfg.format == "structured") {
    os << "{" << json_config("verify", cat, cfg, false)
       << ", \"structure\": " << lb::json_validation_report(structure)
       << ", \"inverse_blocks\": {\"pass\": " << (inverse_issues.empty() ? "true" : "false")
       << ", \"issues\": [";
    for (std::size_t i = 0; i < inverse_issues.size(); ++i)
      os << (i ? ", " : "") << lb::json_escape(inverse_issues[i]);
    os << "]}, \"pentagon\": " << lb::json_coherence_report(pentagon)
       << ", \"hexagon\": " << lb::json_coherence_report(hexagon)
       << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  } else {
    os << "category: " << cat.name() << " (" << cat.num_objects() << " objects)\n";
    os << lb::human_validation_report(structure);
    os << "f-block inversion: " << (inverse_issues.empty() ? "PASS" : "FAIL") << "\n";
    for (const std::string& issue : inverse_issues) os << "  " << issue << "\n";
    os << lb::human_coherence_report("pentagon", pentagon);
    os << lb::human_coherence_report("hexagon", hexagon);
    os << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(cfg, os.str());
  return pass ? 0 : 1;
}

int run_rep(const RunConfig& cfg) {
  const lb::RibbonCategory cat = make_category(cfg);
  const lb::ObjId x = resolve_object(cat, cfg.x);
  const lb::ObjId y = resolve_object(cat, cfg.y);
  const lb::ObjId z = resolve_object(cat, cfg.z);
  const lb::LBRep rep = lb::build_lb_representation(cat, x, y, z, cfg.n);
  if (rep.basis.size() == 0)
    std::cerr << "warning: Hom(" << cat.name_of(z) << ", ((" << cat.name_of(x) << " "
              << cat.name_of(y) << "))^" << cfg.n
              << ") is zero-dimensional; all relations hold trivially\n";
  const lb::RelationReport relations = lb::verify_lb_relations(rep, cfg.tol);

  std::ostringstream os;
  if (cfg.format == "structured") {
    os << "{" << json_config("rep", cat, cfg, true, x, y, z) << ", \"dim\": " << rep.basis.size()
       << ", \"double_braiding\": " << lb::json_double_braiding(cat, rep.double_braiding)
       << ", \"basis\": " << lb::json_paired_basis(cat, rep.basis) << ", \"sigma\": [";
    for (std::size_t i = 0; i < rep.sigma.size(); ++i)
      os << (i ? ", " : "") << lb::json_matrix(rep.sigma[i]);
    os << "], \"s\": [";
    for (std::size_t i = 0; i < rep.s.size(); ++i) os << (i ? ", " : "") << lb::json_matrix(rep.s[i]);
    os << "], \"relations\": " << lb::json_relation_report(relations)
       << ", \"pass\": " << (relations.pass ? "true" : "false") << "}\n";
  } else {
    os << "category: " << cat.name() << "\n";
    os << "x = " << cat.name_of(x) << ", y = " << cat.name_of(y) << ", z = " << cat.name_of(z)
       << ", n = " << cfg.n << "\n";
    os << "dim Hom(z, ((x y))^n) = " << rep.basis.size() << "\n\n";
    os << lb::human_double_braiding(cat, rep.double_braiding) << "\n";
    os << "basis (pair charges a_i; running products):\n"
       << lb::human_paired_basis(cat, rep.basis) << "\n";
    for (std::size_t i = 0; i < rep.sigma.size(); ++i)
      os << "sigma_" << (i + 1) << ":\n" << lb::human_matrix(rep.sigma[i]);
    for (std::size_t i = 0; i < rep.s.size(); ++i)
      os << "s_" << (i + 1) << ":\n" << lb::human_matrix(rep.s[i]);
    os << "\n" << lb::human_relation_report(relations);
  }
  emit(cfg, os.str());
  return relations.pass ? 0 : 1;
}

int run_eval(const RunConfig& cfg, const std::string& word_text) {
  const lb::RibbonCategory cat = make_category(cfg);
  const lb::ObjId x = resolve_object(cat, cfg.x);
  const lb::ObjId y = resolve_object(cat, cfg.y);
  const lb::ObjId z = resolve_object(cat, cfg.z);
  const lb::LBRep rep = lb::build_lb_representation(cat, x, y, z, cfg.n);
  const lb::LoopBraidWord word = lb::parse_word(word_text);
  const lb::Mat value = lb::evaluate(rep, word);

  std::ostringstream os;
  if (cfg.format == "structured") {
    os << "{" << json_config("eval", cat, cfg, true, x, y, z)
       << ", \"word\": " << lb::json_escape(lb::to_string(word))
       << ", \"dim\": " << rep.basis.size() << ", \"matrix\": " << lb::json_matrix(value)
       << "}\n";
  } else {
    os << "word: \"" << lb::to_string(word) << "\" on dim " << rep.basis.size() << "\n";
    os << lb::human_matrix(value);
  }
  emit(cfg, os.str());
  return 0;
}

int run_oracle(const RunConfig& cfg) {
  const lb::RibbonCategory cat = make_category(cfg);
  const lb::ObjId x = resolve_object(cat, cfg.x);
  const lb::ObjId y = resolve_object(cat, cfg.y);
  const lb::ObjId z = resolve_object(cat, cfg.z);
  const lb::EquivalenceReport report = lb::oracle_equivalence(cat, x, y, z, cfg.n, cfg.tol);

  std::ostringstream os;
  if (cfg.format == "structured") {
    os << "{" << json_config("oracle", cat, cfg, true, x, y, z)
       << ", \"equivalence\": " << lb::json_equivalence_report(report)
       << ", \"pass\": " << (report.pass ? "true" : "false") << "}\n";
  } else {
    os << "closed form vs strand-level oracle (tolerance " << lb::human_double(report.tolerance)
       << "): " << (report.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [name, diff] : report.differences)
      os << "  " << name << "  difference " << lb::human_double(diff) << "\n";
    os << "max difference: " << lb::human_double(report.max_difference) << "\n";
  }
  emit(cfg, os.str());
  return report.pass ? 0 : 1;
}

int run_dims(const RunConfig& cfg, int max_n, bool all_z, bool show_basis, bool z_given) {
  if (all_z && z_given) throw lb::UsageError("pass either -z or --all-z, not both");
  if (show_basis && all_z) throw lb::UsageError("--show-basis needs a single -z");
  const lb::RibbonCategory cat = make_category(cfg);
  const lb::ObjId x = resolve_object(cat, cfg.x);
  const lb::ObjId y = resolve_object(cat, cfg.y);
  std::vector<lb::ObjId> sectors;
  if (all_z)
    for (lb::ObjId a = 0; a < cat.num_objects(); ++a) sectors.push_back(a);
  else
    sectors.push_back(resolve_object(cat, cfg.z));

  std::ostringstream os;
  if (cfg.format == "structured") {
    os << "{" << json_config("dims", cat, cfg, false) << ", \"x\": "
       << lb::json_escape(cat.name_of(x)) << ", \"y\": " << lb::json_escape(cat.name_of(y))
       << ", \"max_n\": " << max_n << ", \"entries\": [";
    bool first = true;
    for (int n = 1; n <= max_n; ++n) {
      const std::vector<lb::ObjId> leaves = lb::alternating_leaves(x, y, n);
      for (const lb::ObjId z : sectors) {
        os << (first ? "" : ", ") << "{\"n\": " << n
           << ", \"z\": " << lb::json_escape(cat.name_of(z))
           << ", \"dim\": " << lb::dim_hom(cat, leaves, z);
        if (show_basis)
          os << ", \"basis\": "
             << lb::json_paired_basis(cat, lb::enumerate_paired_basis(cat, x, y, z, n));
        os << "}";
        first = false;
      }
    }
    os << "]}\n";
  } else {
    os << "dim Hom(z, ((x y))^n) for x = " << cat.name_of(x) << ", y = " << cat.name_of(y)
       << " in " << cat.name() << "\n";
    for (int n = 1; n <= max_n; ++n) {
      const std::vector<lb::ObjId> leaves = lb::alternating_leaves(x, y, n);
      os << "  n = " << n << ":";
      for (const lb::ObjId z : sectors) {
        if (all_z)
          os << "  " << cat.name_of(z) << " = " << lb::dim_hom(cat, leaves, z);
        else
          os << " " << lb::dim_hom(cat, leaves, z);
      }
      os << "\n";
      if (show_basis)
        os << lb::human_paired_basis(cat, lb::enumerate_paired_basis(cat, x, y, sectors[0], n));
    }
  }
  emit(cfg, os.str());
  return 0;
}

int run_export(const RunConfig& cfg) {
  if (cfg.builtin.empty())
    throw lb::UsageError("export-builtin writes built-in data: pass --builtin {trivial|ising|ty}");
  emit(cfg, lb::save_category(make_category(cfg)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop braid group representations from ribbon fusion category data"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string word_text;
  int max_n = 6;
  bool all_z = false, show_basis = false;

  CLI::App* verify = app.add_subcommand("verify", "Check structure and pentagon/hexagon coherence");
  add_category_options(verify, cfg);
  add_output_options(verify, cfg);

  CLI::App* rep =
      app.add_subcommand("rep", "Build the representation and verify every loop braid relation");
  add_category_options(rep, cfg);
  add_rep_options(rep, cfg);
  add_output_options(rep, cfg);

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a generator word (tokens x<i>, s<j>, optional ^-1; leftmost acts first)");
  eval->add_option("word", word_text, "The word, one quoted argument (empty = identity)");
  add_category_options(eval, cfg);
  add_rep_options(eval, cfg);
  add_output_options(eval, cfg);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Compare closed-form generators against the strand-level crossing oracle");
  add_category_options(oracle, cfg);
  add_rep_options(oracle, cfg);
  add_output_options(oracle, cfg);

  CLI::App* dims =
      app.add_subcommand("dims", "Tabulate dim Hom(z, ((x y))^n) for n = 1..max-n");
  add_category_options(dims, cfg);
  CLI::Option* dims_z = nullptr;
  {
    dims->add_option("-x,--x", cfg.x, "First object of each circle pair (default: unit)");
    dims->add_option("-y,--y", cfg.y, "Second object of each circle pair (default: unit)");
    dims_z = dims->add_option("-z,--z", cfg.z, "Total charge sector (default: unit)");
    dims->add_option("--max-n", max_n, "Largest number of circle pairs")
        ->check(CLI::PositiveNumber);
    dims->add_flag("--all-z", all_z, "Tabulate every object as the total charge");
    dims->add_flag("--show-basis", show_basis, "Also list the paired fusion trees");
  }
  add_output_options(dims, cfg);

  CLI::App* exportb =
      app.add_subcommand("export-builtin", "Write the canonical category file for a builtin");
  add_category_options(exportb, cfg);
  exportb->add_option("--out", cfg.out, "Write the file here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any parse problem is a usage error
  }

  try {
    if (verify->parsed()) return run_verify(cfg);
    if (rep->parsed()) return run_rep(cfg);
    if (eval->parsed()) return run_eval(cfg, word_text);
    if (oracle->parsed()) return run_oracle(cfg);
    if (dims->parsed())
      return run_dims(cfg, max_n, all_z, show_basis, dims_z != nullptr && dims_z->count() > 0);
    if (exportb->parsed()) return run_export(cfg);
  } catch (const lb::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lb::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
