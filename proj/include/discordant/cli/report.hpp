// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "discordant/cli/document.hpp"
#include "discordant/demon.hpp"
#include "discordant/discord.hpp"

namespace discordant::cli {

struct Settings {
  OptimizerConfig optimizer;
  Subsystem side = Subsystem::A;
  double kT = 1.0;
  bool timing = false;
};

/// Reports are built as JSON first; the human renderings read from the same
/// object so both views always agree.
Json analyze_report(const StateDocument& doc, const BipartiteState& state, const Settings& settings);
Json classify_report(const StateDocument& doc, const BipartiteState& state, const Settings& settings);
Json discord_report(const StateDocument& doc, const BipartiteState& state, DiscordMeasure measure,
                    const Settings& settings);
Json demon_report(const StateDocument& doc, const BipartiteState& state, const Settings& settings);
Json table1_report(double a, const Settings& settings);
Json families_report();

std::string render_analyze(const Json& report);
std::string render_classify(const Json& report);
std::string render_discord(const Json& report);
std::string render_demon(const Json& report);
std::string render_table1(const Json& report);
std::string render_families(const Json& report);

Json discord_json(const DiscordReport& r);
Json verdict_json(const ZeroDiscordVerdict& v);
Json ledger_json(const WorkLedger& l);

/// Largest gap tolerated by the cross-identities before a WARN is raised.
inline constexpr double kIdentityTolerance = 1e-7;

}  // namespace discordant::cli
