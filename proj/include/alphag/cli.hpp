#pragma once

// Command implementations behind the `alphag` executable. Everything writes
// to caller-supplied streams and returns the process exit code:
//   0  every assertion holds
//   1  a mathematical counterexample was found (witnesses printed)
//   2  usage, IO, or validation error

#include "alphag/catalog.hpp"
#include "alphag/density.hpp"
#include "alphag/report.hpp"
#include "alphag/sweep.hpp"
#include "alphag/theorem.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace alphag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitError = 2;

struct CommandContext {
  BuildOptions build{};
  bool trust_table = false;
};

inline int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what();
  if (!e.witness().empty()) {
    err << "\nwitness:";
    for (auto w : e.witness()) err << ' ' << w;
  }
  err << '\n';
  return kExitError;
}

inline int cmd_alpha(const GroupSpec& spec, const CommandContext& ctx, std::ostream& out, std::ostream& err) {
  try {
    const FiniteGroup g = build_group(spec, ctx.build, ctx.trust_table);
    const Subgroup z = center(g);
    const FiniteGroup zg = center_group(g, z);
    const CyclicCensus census = cyclic_subgroups(g);
    const Rational a = alpha(g), az = alpha(zg), og = average_order(g), oz = average_order(zg);
    out << "group             " << g.label() << '\n'
        << "order             " << g.order() << '\n'
        << "cyclic subgroups  " << census.subgroup_count << '\n'
        << "alpha(G)          " << a << "  (approx " << a.decimal() << ")\n"
        << "center order      " << z.order() << '\n'
        << "alpha(Z(G))       " << az << "  (approx " << az.decimal() << ")\n"
        << "o(G)              " << og << "  (approx " << og.decimal() << ")\n"
        << "o(Z(G))           " << oz << "  (approx " << oz.decimal() << ")\n";
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

inline int cmd_verify(const GroupSpec& spec, OutputFormat format, const CommandContext& ctx, std::ostream& out,
                      std::ostream& err, const Verifier& verify = default_verifier) {
  try {
    const FiniteGroup g = build_group(spec, ctx.build, ctx.trust_table);
    const AlphaReport r = verify(g);
    out << render_report(r, format);
    if (!r.ok()) {
      err << "counterexample: " << r.counterexamples.size() << " assertion(s) failed for " << r.label << '\n';
      return kExitCounterexample;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

inline int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err,
                     const Verifier& verify = default_verifier) {
  try {
    const SweepResult res = run_sweep(cfg, verify);
    out << render_sweep(res, cfg.output_format);
    if (!res.ok()) {
      err << "counterexamples found: " << res.summary.counterexamples << '\n';
      return kExitCounterexample;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

/// Validates a table file and reports how it was re-indexed.
inline int cmd_import(const std::string& path, const CommandContext& ctx, std::ostream& out, std::ostream& err) {
  try {
    const TableLoad load = load_table(path, LoadOptions{ctx.build, ctx.trust_table});
    out << "valid group of order " << load.group.order() << '\n';
    if (load.reindexed()) {
      out << "identity found at file row " << load.source_index[0] << ", re-indexed to 0\n"
          << "permutation (new id: file row):";
      for (std::size_t i = 0; i < load.source_index.size(); ++i) out << ' ' << i << ':' << load.source_index[i];
      out << '\n';
    } else {
      out << "identity at file row 0, no re-indexing\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Full command-line entry point.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   const Verifier& verify = default_verifier) {
  CLI::App app{"Cyclic-subgroup density alpha(G) = |C(G)|/|G| and checks of alpha(G) <= alpha(Z(G))", "alphag"};
  app.require_subcommand(1);

  bool size_override = false;
  bool trust_table = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--size-override", size_override, "Raise the size cap to allow up to 5040 elements");
    sub->add_flag("--trust-table", trust_table,
                  "Sample associativity instead of the full check for tables above 512 elements");
  };

  std::string group_spec;
  bool as_json = false, as_csv = false;

  auto* alpha_cmd = app.add_subcommand("alpha", "Print |C(G)|, alpha(G), alpha(Z(G)), o(G), o(Z(G))");
  alpha_cmd->add_option("--group", group_spec, "Group spec, e.g. dihedral:8")->required();
  add_common(alpha_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Full verification report for one group");
  verify_cmd->add_option("--group", group_spec, "Group spec")->required();
  auto* vj = verify_cmd->add_flag("--json", as_json, "JSON output");
  verify_cmd->add_flag("--csv", as_csv, "CSV output")->excludes(vj);
  add_common(verify_cmd);

  SweepConfig cfg;
  std::string families;
  std::vector<std::string> extra_groups;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every catalog group up to a maximum order");
  sweep_cmd->add_option("--max-order", cfg.max_order, "Largest group order to include")->capture_default_str();
  sweep_cmd->add_option("--families", families, "Comma-separated family names (default: all)");
  sweep_cmd->add_option("--table", cfg.include_tables, "Extra Cayley-table file (repeatable)");
  sweep_cmd->add_option("--group", extra_groups, "Extra group spec, included regardless of order (repeatable)");
  auto* sj = sweep_cmd->add_flag("--json", as_json, "JSON output");
  sweep_cmd->add_flag("--csv", as_csv, "CSV output")->excludes(sj);
  sweep_cmd->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first counterexample");
  sweep_cmd->add_option("--parallelism", cfg.parallelism, "Worker threads")->capture_default_str();
  add_common(sweep_cmd);

  std::string table_path;
  auto* import_cmd = app.add_subcommand("import", "Validate a Cayley-table file");
  import_cmd->add_option("--table", table_path, "Table file")->required();
  add_common(import_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  CommandContext ctx;
  ctx.build = size_override ? BuildOptions::with_override() : BuildOptions{};
  ctx.trust_table = trust_table;
  const OutputFormat format = as_json ? OutputFormat::json : as_csv ? OutputFormat::csv : OutputFormat::text;

  try {
    if (alpha_cmd->parsed()) return cmd_alpha(parse_group_spec(group_spec), ctx, out, err);
    if (verify_cmd->parsed()) return cmd_verify(parse_group_spec(group_spec), format, ctx, out, err, verify);
    if (import_cmd->parsed()) return cmd_import(table_path, ctx, out, err);
    if (sweep_cmd->parsed()) {
      cfg.output_format = format;
      cfg.size_override = size_override;
      cfg.trust_table = trust_table;
      if (!families.empty()) {
        cfg.families.clear();
        for (const auto& name : split_list(families)) cfg.families.insert(family_from_name(name));
      }
      for (const auto& s : extra_groups) cfg.extra_specs.push_back(parse_group_spec(s));
      return cmd_sweep(cfg, out, err, verify);
    }
  } catch (const Error& e) {
    return report_error(e, err);
  }
  return kExitError;
}

}  // namespace alphag::cli
