// SPDX-License-Identifier: Apache-2.0
#include "discordant/cli/commands.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "discordant/cli/report.hpp"
#include "discordant/error.hpp"

namespace discordant::cli {

namespace {

struct StateOptions {
  std::string family;
  std::vector<std::string> params;
  std::string input;
};

struct CommonOptions {
  bool json = false;
  bool timing = false;
  std::string side = "A";
  double kT = 1.0;
  std::string measure = "D1";
  Settings settings;
};

void add_state_options(CLI::App* cmd, StateOptions& s) {
  auto* family = cmd->add_option("--family", s.family, "state family (see 'states list')");
  cmd->add_option("--param", s.params, "family parameter key=value; lists are comma separated")
      ->take_all()
      ->allow_extra_args(false);
  auto* input = cmd->add_option("--input", s.input, "state document file, or '-' for standard input");
  family->excludes(input);
}

void add_optimizer_options(CLI::App* cmd, CommonOptions& o) {
  OptimizerConfig& c = o.settings.optimizer;
  cmd->add_option("--seed", c.seed, "optimizer seed (env DISCORDANT_SEED)")->capture_default_str();
  cmd->add_option("--restarts", c.restarts, "random restarts per optimization (env DISCORDANT_RESTARTS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol", c.simplex_tolerance, "simplex size tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads, 0 for all cores (env DISCORDANT_THREADS)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_flag("--timing", o.timing, "include wall-clock timings");
}

void add_side_option(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--side", o.side, "measured subsystem")
      ->check(CLI::IsMember({"A", "B"}, CLI::ignore_case))
      ->capture_default_str();
}

// Environment values become the defaults that flags then override.
void apply_environment(OptimizerConfig& c) {
  const auto read = [](const char* name, long long min) -> std::optional<long long> {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (*end != '\0' || errno != 0 || v < min || v > std::numeric_limits<int>::max()) {
      throw DocumentError(std::string(name) + "='" + raw + "' is not a valid value");
    }
    return v;
  };
  if (const auto v = read("DISCORDANT_SEED", 0)) c.seed = static_cast<std::uint64_t>(*v);
  if (const auto v = read("DISCORDANT_RESTARTS", 1)) c.restarts = static_cast<int>(*v);
  if (const auto v = read("DISCORDANT_THREADS", 0)) c.threads = static_cast<int>(*v);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

StateDocument load_document(const StateOptions& s, std::istream& in) {
  if (!s.input.empty()) {
    if (!s.params.empty()) throw DocumentError("--param applies only to --family");
    if (s.input == "-") return StateDocument::parse(read_all(in));
    std::ifstream file(s.input);
    if (!file) throw DocumentError("cannot open " + s.input);
    return StateDocument::parse(read_all(file));
  }
  if (s.family.empty()) throw DocumentError("a state is required: use --family or --input");
  Json params = Json::object();
  for (const std::string& p : s.params) {
    auto [key, value] = parse_param(p);
    if (params.contains(key)) throw DocumentError("--param " + key + " given twice");
    params[key] = std::move(value);
  }
  return StateDocument::of_family(s.family, std::move(params));
}

int verdict_exit(const std::string& verdict) {
  if (verdict == to_string(Verdict::Zero)) return kExitOk;
  if (verdict == to_string(Verdict::Nonzero)) return kExitNonzero;
  return kExitAmbiguous;
}

DiscordMeasure measure_from(const std::string& s) {
  if (s == "D1") return DiscordMeasure::D1;
  if (s == "D2") return DiscordMeasure::D2;
  if (s == "D3") return DiscordMeasure::D3;
  return DiscordMeasure::D3Sym;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discord, zero-discord classification and demon work ledgers for bipartite states"};
  app.name("discordant");
  app.require_subcommand(1);

  StateOptions state_opts;
  CommonOptions opts;
  double table_a = 0.25;
  std::vector<std::string> table_params;

  auto* analyze = app.add_subcommand("analyze", "full report: entropies, discord, classification, work");
  auto* classify = app.add_subcommand("classify", "zero-discord test; exit 0 ZERO, 1 NONZERO, 4 AMBIGUOUS");
  auto* discord = app.add_subcommand("discord", "a single discord measure");
  auto* demon = app.add_subcommand("demon", "work extraction ledger");
  auto* table1 = app.add_subcommand("table1", "discord versus local distinguishability for four ensembles");
  auto* states = app.add_subcommand("states", "list state families or emit a state document");
  states->require_subcommand(1);
  auto* states_list = states->add_subcommand("list", "list state families");
  auto* states_emit = states->add_subcommand("emit", "print the state document for --family/--param");

  for (CLI::App* cmd : {analyze, classify, discord, demon}) {
    add_state_options(cmd, state_opts);
    add_output_options(cmd, opts);
  }
  for (CLI::App* cmd : {analyze, discord, demon, table1}) add_optimizer_options(cmd, opts);
  for (CLI::App* cmd : {classify, discord}) add_side_option(cmd, opts);
  for (CLI::App* cmd : {analyze, demon}) {
    cmd->add_option("--kT", opts.kT, "energy unit")->check(CLI::PositiveNumber)->capture_default_str();
  }
  discord->add_option("--measure", opts.measure, "D1, D2, D3 or D3sym")
      ->check(CLI::IsMember({"D1", "D2", "D3", "D3sym"}))
      ->capture_default_str();
  add_output_options(table1, opts);
  table1->add_option("--param", table_params, "a=<value> for the Bell-mixture row")->take_all();
  states_list->add_flag("--json", opts.json, "machine-readable output");
  add_state_options(states_emit, state_opts);

  try {
    apply_environment(opts.settings.optimizer);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  std::vector<std::string> argv_store{"discordant"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  opts.settings.side = (opts.side == "B" || opts.side == "b") ? Subsystem::B : Subsystem::A;
  opts.settings.kT = opts.kT;
  opts.settings.timing = opts.timing;

  const auto emit = [&](const Json& report, std::string (*render)(const Json&)) {
    if (opts.json) {
      out << report.dump(2) << "\n";
    } else {
      out << render(report);
    }
  };

  try {
    opts.settings.optimizer.validate();
    if (states_list->parsed()) {
      emit(families_report(), render_families);
      return kExitOk;
    }
    if (table1->parsed()) {
      for (const std::string& p : table_params) {
        auto [key, value] = parse_param(p);
        if (key != "a" || !value.is_number()) throw DocumentError("table1 accepts only --param a=<number>");
        table_a = value.get<double>();
      }
      const Json report = table1_report(table_a, opts.settings);
      emit(report, render_table1);
      return kExitOk;
    }

    const StateDocument doc = load_document(state_opts, in);
    const BipartiteState state = doc.build();
    if (states_emit->parsed()) {
      out << doc.to_json().dump(2) << "\n";
      return kExitOk;
    }
    if (analyze->parsed()) {
      emit(analyze_report(doc, state, opts.settings), render_analyze);
      return kExitOk;
    }
    if (classify->parsed()) {
      const Json report = classify_report(doc, state, opts.settings);
      emit(report, render_classify);
      return verdict_exit(report.at("classification").at("verdict").get<std::string>());
    }
    if (discord->parsed()) {
      emit(discord_report(doc, state, measure_from(opts.measure), opts.settings), render_discord);
      return kExitOk;
    }
    emit(demon_report(doc, state, opts.settings), render_demon);
    return kExitOk;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "invalid state (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace discordant::cli
