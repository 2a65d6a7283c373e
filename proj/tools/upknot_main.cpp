#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "upknot/catalog.hpp"
#include "upknot/diagram.hpp"
#include "upknot/errors.hpp"
#include "upknot/invariants.hpp"
#include "upknot/serialize.hpp"
#include "upknot/verify.hpp"

namespace {

using namespace upknot;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitCheckFailed = 3;

struct Input {
  std::string name;
  UprightDiagram diagram;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Files first (in argument order), then requested catalog fixtures.
std::vector<Input> gather_inputs(const std::vector<std::string>& paths,
                                 const std::vector<std::string>& catalog_names) {
  std::vector<Input> inputs;
  for (const std::string& p : paths) {
    try {
      inputs.push_back({p, parse_diagram(read_file(p))});
    } catch (const SyntaxError& e) {
      throw InputError(p + ": " + e.what());
    } catch (const DiagramValidationError& e) {
      throw InputError(p + ": " + e.what());
    }
  }
  for (const std::string& n : catalog_names) inputs.push_back({n, catalog_diagram(n)});
  return inputs;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_compute(const std::vector<std::string>& paths,
                const std::vector<std::string>& catalog_names,
                const std::string& invariant, bool json, bool stable,
                const ThetaOptions& theta_opts) {
  const bool want_delta = invariant == "delta" || invariant == "all";
  const bool want_rho1 = invariant == "rho1" || invariant == "all";
  const bool want_theta = invariant == "theta" || invariant == "all";

  for (const Input& in : gather_inputs(paths, catalog_names)) {
    OutputDocument doc;
    doc.name = in.name;
    doc.crossings = in.diagram.crossing_count();
    doc.writhe = in.diagram.writhe();
    doc.total_rotation = in.diagram.total_rotation();
    std::map<std::string, double> timing;

    if (want_delta) {
      const auto t0 = std::chrono::steady_clock::now();
      doc.delta = alexander(in.diagram);
      timing["delta"] = ms_since(t0);
    }
    if (want_rho1) {
      const auto t0 = std::chrono::steady_clock::now();
      doc.rho1 = rho1(in.diagram);
      timing["rho1"] = ms_since(t0);
    }
    if (want_theta) {
      const auto t0 = std::chrono::steady_clock::now();
      doc.theta = theta(in.diagram, theta_opts);
      timing["theta"] = ms_since(t0);
    }
    if (!stable) doc.timing_ms = std::move(timing);

    if (json)
      std::cout << document_json(doc).dump() << "\n";
    else
      std::cout << document_table(doc);
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& paths, bool whole_catalog, bool json,
               const ThetaOptions& theta_opts) {
  VerifyOptions opts;
  opts.theta = theta_opts;
  opts.kink_invariance = true;

  std::vector<VerificationReport> reports;
  if (whole_catalog) {
    reports = verify_catalog(opts);
  } else {
    for (const Input& in : gather_inputs(paths, {}))
      reports.push_back(verify_diagram(in.name, in.diagram, opts));
  }

  bool all_pass = true;
  for (const VerificationReport& rep : reports) {
    all_pass = all_pass && rep.all_pass();
    if (json)
      std::cout << report_json(rep).dump() << "\n";
    else
      std::cout << report_table(rep);
  }
  if (!json)
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << " ("
              << reports.size() << " reports)\n";
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_catalog_list(bool json) {
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const CatalogEntry& e : catalog())
      out.push_back({{"name", e.name},
                     {"group", e.group},
                     {"n", catalog_diagram(e.name).crossing_count()}});
    std::cout << out.dump() << "\n";
  } else {
    for (const CatalogEntry& e : catalog()) std::cout << e.name << "\n";
  }
  return kExitOk;
}

const CatalogEntry& require_entry(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw InputError("unknown catalog fixture: " + name);
  return *e;
}

int cmd_catalog_show(const std::string& name) {
  std::cout << require_entry(name).udf;
  return kExitOk;
}

int cmd_catalog_emit(const std::string& name, const std::string& path) {
  const CatalogEntry& e = require_entry(name);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << e.udf;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of upright long-knot diagrams"};
  app.require_subcommand(1);

  bool json = false, stable = false, f2_exclude_diagonal = false;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_flag("--stable", stable, "suppress timing fields for byte-identical output");
  app.add_flag("--f2-exclude-diagonal", f2_exclude_diagonal,
               "diagnostic: drop same-crossing terms from the pair sum");

  std::vector<std::string> compute_paths, compute_fixtures;
  std::string invariant = "all";
  CLI::App* compute = app.add_subcommand("compute", "compute invariants of diagrams");
  compute->fallthrough();
  compute->add_option("paths", compute_paths, "diagram files");
  compute->add_option("--catalog", compute_fixtures, "bundled fixture names");
  compute->add_option("--invariant", invariant, "delta | rho1 | theta | all")
      ->check(CLI::IsMember({"delta", "rho1", "theta", "all"}));

  std::vector<std::string> verify_paths;
  bool verify_whole_catalog = false;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->fallthrough();
  verify->add_option("paths", verify_paths, "diagram files");
  verify->add_flag("--catalog", verify_whole_catalog,
                   "verify every bundled fixture and fixture group");

  CLI::App* cat = app.add_subcommand("catalog", "inspect bundled fixtures");
  cat->fallthrough();
  cat->require_subcommand(1);
  CLI::App* cat_list = cat->add_subcommand("list", "list fixture names");
  cat_list->fallthrough();
  std::string show_name;
  CLI::App* cat_show = cat->add_subcommand("show", "print a fixture's diagram text");
  cat_show->fallthrough();
  cat_show->add_option("name", show_name)->required();
  std::string emit_name, emit_path;
  CLI::App* cat_emit = cat->add_subcommand("emit", "write a fixture's diagram text to a file");
  cat_emit->fallthrough();
  cat_emit->add_option("name", emit_name)->required();
  cat_emit->add_option("path", emit_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  ThetaOptions theta_opts;
  if (f2_exclude_diagonal) theta_opts.pair_sum = PairSum::ExcludeDiagonal;

  try {
    if (compute->parsed()) {
      if (compute_paths.empty() && compute_fixtures.empty())
        throw InputError("compute: no inputs (give diagram files or --catalog names)");
      return cmd_compute(compute_paths, compute_fixtures, invariant, json, stable,
                         theta_opts);
    }
    if (verify->parsed()) {
      if (verify_paths.empty() && !verify_whole_catalog)
        throw InputError("verify: no inputs (give diagram files or --catalog)");
      return cmd_verify(verify_paths, verify_whole_catalog, json, theta_opts);
    }
    if (cat_list->parsed()) return cmd_catalog_list(json);
    if (cat_show->parsed()) return cmd_catalog_show(show_name);
    if (cat_emit->parsed()) return cmd_catalog_emit(emit_name, emit_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
