#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "schreier/acceptance.hpp"
#include "schreier/cli.hpp"
#include "schreier/errors.hpp"
#include "schreier/gl_index.hpp"
#include "schreier/norms.hpp"
#include "schreier/sequences.hpp"

namespace schreier::cli {

using nlohmann::json;

namespace {

struct CommonFlags {
  std::string format = "text";
  std::uint64_t seed = 0;
};

json set_json(const FinSet& s) { return json(s.elements()); }

json witness_json(const NormResult& r) {
  if (const auto* set = std::get_if<SchreierSet>(&r.witness)) return set_json(set->set());
  if (const auto* chain = std::get_if<SchreierChain>(&r.witness)) {
    json sets = json::array();
    for (const auto& f : *chain) sets.push_back(set_json(f.set()));
    return sets;
  }
  return json::array();
}

SpaceSpec make_space(const std::string& kind, double p) {
  return SpaceSpec(kind == "Bp" ? SpaceKind::Bp : SpaceKind::Sp, p);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json base_report(const std::string& command, json inputs, std::uint64_t seed) {
  return json{{"command", command}, {"inputs", std::move(inputs)}, {"seed", seed}, {"tool_version", kToolVersion}};
}

// ---------------------------------------------------------------------------
// Commands. Each builds the JSON report; text/csv are rendered from it.

json do_norm(const std::string& space_kind, double p, const std::string& vec, std::uint64_t seed) {
  const SpaceSpec space = make_space(space_kind, p);
  const FinVec x = parse_vector_literal(vec);
  const NormResult result = norm(x, space);
  json report = base_report("norm", {{"space", space_kind}, {"p", p}, {"vec", x.to_string()}}, seed);
  report["value"] = result.value;
  report["witness"] = witness_json(result);
  return report;
}

json do_tau(const std::string& set_text, std::uint64_t seed) {
  const FinSet a = parse_set_literal(set_text);
  json report = base_report("tau", {{"set", set_text}}, seed);
  report["value"] = tau1(a);
  json pieces = json::array();
  if (!a.empty()) {
    for (const auto& piece : tau1_decompose(a)) pieces.push_back(set_json(piece.set()));
  }
  report["witness"] = pieces;
  return report;
}

json do_glindex(const std::string& m_text, const std::string& n_text, Natural window, std::uint64_t seed) {
  const IndexSeq m(parse_set_literal(m_text));
  const IndexSeq n(parse_set_literal(n_text));
  const auto result = gl1_windowed(m, n, window, OracleBounds::from_env());
  json report = base_report("glindex", {{"M", m_text}, {"N", n_text}, {"window", window}}, seed);
  report["value"] = result.value;
  report["witness"] = set_json(result.argmax_j);
  report["note"] = "windowed value: J restricted to [1, " + std::to_string(window) +
                   "]; a lower bound for the full Gasparis-Leung index";
  return report;
}

json do_uncomp_table(const std::string& space_kind, double p, Natural k_max, std::uint64_t seed) {
  const SpaceSpec space = make_space(space_kind, p);
  json rows = json::array();
  for (const auto& row : growth_table(space, k_max)) {
    rows.push_back({{"k", row.k},
                    {"companion", row.companion_norm},
                    {"spike", row.spike_norm},
                    {"lower_bound", row.lower_bound_c}});
  }
  json report = base_report("uncomp-table", {{"space", space_kind}, {"p", p}, {"kmax", k_max}}, seed);
  report["value"] = rows;
  report["witness"] = json::array();
  return report;
}

json do_selftest(std::uint64_t seed, const std::string& level, const std::string& mutation,
                 int criterion, std::ostream& progress, bool stream_text) {
  acceptance::Options options;
  options.seed = seed;
  options.level = level == "quick" ? acceptance::Level::Quick : acceptance::Level::Full;
  options.bounds = OracleBounds::from_env();
  if (!mutation.empty()) options.engines = acceptance::mutated_engines(mutation);

  json results = json::array();
  bool all = true;
  for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
    if (criterion != 0 && criterion != id) continue;
    const auto report = acceptance::run_criterion(id, options);
    if (stream_text) progress << acceptance::format_report(report) << std::flush;
    all = all && report.passed;
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json entry{{"id", id}, {"title", report.title}, {"passed", report.passed}, {"seconds", report.seconds},
               {"checks", checks}};
    if (report.certificate) entry["certificate"] = *report.certificate;
    results.push_back(entry);
  }
  json inputs{{"level", level}, {"mutation", mutation}};
  if (criterion != 0) inputs["criterion"] = criterion;
  json report = base_report("selftest", inputs, seed);
  report["value"] = all;
  report["witness"] = results;
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

void render_text(const json& report, std::ostream& out) {
  const std::string command = report["command"];
  if (command == "norm") {
    out << "value: " << fmt(report["value"].get<double>()) << '\n';
    out << "witness: " << report["witness"].dump() << '\n';
  } else if (command == "tau") {
    out << "tau1: " << report["value"] << '\n';
    out << "pieces: " << report["witness"].dump() << '\n';
  } else if (command == "glindex") {
    out << "note: " << report["note"].get<std::string>() << '\n';
    out << "value: " << report["value"] << '\n';
    out << "argmax J: " << report["witness"].dump() << '\n';
  } else if (command == "uncomp-table") {
    out << std::setw(3) << "k" << std::setw(16) << "companion" << std::setw(16) << "spike" << std::setw(16)
        << "lower_bound" << '\n';
    for (const auto& row : report["value"]) {
      out << std::setw(3) << row["k"].get<Natural>() << std::setw(16) << fmt(row["companion"].get<double>()).substr(0, 14)
          << std::setw(16) << fmt(row["spike"].get<double>()).substr(0, 14) << std::setw(16)
          << fmt(row["lower_bound"].get<double>()).substr(0, 14) << '\n';
    }
  } else if (command == "selftest") {
    out << (report["value"].get<bool>() ? "selftest: all criteria passed" : "selftest: FAILED") << " (seed "
        << report["seed"] << ")\n";
  }
}

void render_csv(const json& report, std::ostream& out) {
  const std::string command = report["command"];
  if (command == "uncomp-table") {
    out << "k,companion,spike,lower_bound\n";
    for (const auto& row : report["value"]) {
      out << row["k"].get<Natural>() << ',' << fmt(row["companion"].get<double>()) << ','
          << fmt(row["spike"].get<double>()) << ',' << fmt(row["lower_bound"].get<double>()) << '\n';
    }
  } else if (command == "selftest") {
    out << "criterion,title,passed,seconds\n";
    for (const auto& c : report["witness"]) {
      out << c["id"] << ",\"" << c["title"].get<std::string>() << "\"," << (c["passed"].get<bool>() ? 1 : 0) << ','
          << c["seconds"] << '\n';
    }
  } else {
    out << "value,witness\n";
    const json& v = report["value"];
    out << (v.is_number_float() ? fmt(v.get<double>()) : v.dump()) << ",\"" << report["witness"].dump() << "\"\n";
  }
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << '\n';
  } else if (format == "csv") {
    render_csv(report, out);
  } else {
    render_text(report, out);
  }
}

int exit_code_for(const json& report) {
  if (report["command"] == "selftest") return report["value"].get<bool>() ? kSuccess : kPropertyFailure;
  return kSuccess;
}

// Re-runs the command recorded in a JSON report and compares value and witness exactly.
json rerun_report(const json& saved) {
  const std::string command = saved.at("command");
  const json& in = saved.at("inputs");
  const std::uint64_t seed = saved.at("seed");
  if (command == "norm") return do_norm(in.at("space"), in.at("p"), in.at("vec"), seed);
  if (command == "tau") return do_tau(in.at("set"), seed);
  if (command == "glindex") return do_glindex(in.at("M"), in.at("N"), in.at("window"), seed);
  if (command == "uncomp-table") return do_uncomp_table(in.at("space"), in.at("p"), in.at("kmax"), seed);
  throw PreconditionError("rerun does not support command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact norms, covering numbers and index computations for Schreier and Baernstein spaces",
               "schreier_lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto add_common = [](CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--seed", flags.seed, "Seed recorded in the report (randomized commands use it)");
  };

  CommonFlags common;
  std::string space_kind;
  double p = 0.0;
  std::string vec;
  std::string set_text;
  std::string m_text;
  std::string n_text;
  Natural window = 0;
  Natural k_max = 0;
  std::string level = "full";
  std::string mutation;
  int criterion = 0;
  std::string report_path;

  auto* norm_cmd = app.add_subcommand("norm", "Norm of a finitely supported vector with its optimal Schreier set/chain");
  norm_cmd->add_option("--space", space_kind, "Sp or Bp")->required()->check(CLI::IsMember({"Sp", "Bp"}));
  norm_cmd->add_option("--p", p, "Exponent p")->required();
  norm_cmd->add_option("--vec", vec, "Vector literal, e.g. \"1:1,2:-0.5\"")->required();
  add_common(norm_cmd, common);

  auto* tau_cmd = app.add_subcommand("tau", "Schreier covering number with its greedy decomposition");
  tau_cmd->add_option("--set", set_text, "Set literal, e.g. \"1,2,3\"")->required();
  add_common(tau_cmd, common);

  auto* gl_cmd = app.add_subcommand("glindex", "Windowed Gasparis-Leung index GL_1(M, N)");
  gl_cmd->add_option("--M", m_text, "Increasing sequence M")->required();
  gl_cmd->add_option("--N", n_text, "Increasing sequence N")->required();
  gl_cmd->add_option("--window", window, "Restrict J to [1, window]")->required();
  add_common(gl_cmd, common);

  auto* table_cmd = app.add_subcommand("uncomp-table", "Growth of the complementation lower bound, k = 1..kmax");
  table_cmd->add_option("--space", space_kind, "Sp or Bp")->required()->check(CLI::IsMember({"Sp", "Bp"}));
  table_cmd->add_option("--p", p, "Exponent p")->required();
  table_cmd->add_option("--kmax", k_max, "Last row (at most 8)")->required();
  add_common(table_cmd, common);

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
  self_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  self_cmd->add_option("--mutate", mutation, "Corrupt one engine (negative control)")
      ->check(CLI::IsMember(acceptance::mutation_names()));
  self_cmd->add_option("--criterion", criterion, "Run a single criterion (1-9)")->check(CLI::Range(1, acceptance::kCriterionCount));
  add_common(self_cmd, common);

  auto* rerun_cmd = app.add_subcommand("rerun", "Re-run a saved JSON report and compare results bit for bit");
  rerun_cmd->add_option("--report", report_path, "Path to a JSON report")->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    json report;
    if (norm_cmd->parsed()) {
      report = do_norm(space_kind, p, vec, common.seed);
    } else if (tau_cmd->parsed()) {
      report = do_tau(set_text, common.seed);
    } else if (gl_cmd->parsed()) {
      report = do_glindex(m_text, n_text, window, common.seed);
    } else if (table_cmd->parsed()) {
      report = do_uncomp_table(space_kind, p, k_max, common.seed);
    } else if (self_cmd->parsed()) {
      report = do_selftest(common.seed, level, mutation, criterion, out, common.format == "text");
    } else if (rerun_cmd->parsed()) {
      std::ifstream in(report_path);
      json saved;
      try {
        saved = json::parse(in);
      } catch (const json::exception& e) {
        err << "error: cannot parse report: " << e.what() << '\n';
        return kUsageError;
      }
      const json fresh = rerun_report(saved);
      const bool same = fresh.at("value") == saved.at("value") && fresh.at("witness") == saved.at("witness");
      out << (same ? "identical" : "MISMATCH") << ": " << saved.at("command").get<std::string>() << '\n';
      if (!same) out << "saved: " << saved.at("value").dump() << "\nfresh: " << fresh.at("value").dump() << '\n';
      return same ? kSuccess : kPropertyFailure;
    }
    emit(report, common.format, out);
    return exit_code_for(report);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "error: malformed report: " << e.what() << '\n';
    return kUsageError;
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
}

}  // namespace schreier::cli
