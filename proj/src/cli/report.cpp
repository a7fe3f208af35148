// SPDX-License-Identifier: Apache-2.0
#include "discordant/cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "discordant/correlations.hpp"
#include "discordant/tolerances.hpp"

namespace discordant::cli {

namespace {

constexpr int kSchemaVersion = 1;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string side_name(Subsystem s) { return std::string(1, to_char(s)); }

Json real_list(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json optimizer_json(const OptimizerConfig& c) {
  return Json{{"restarts", c.restarts},
              {"include_eigenbasis_seed", c.include_eigenbasis_seed},
              {"simplex_tolerance", c.simplex_tolerance},
              {"max_evaluations", c.max_evaluations},
              {"seed", c.seed}};
}

Json header(const char* command) {
  return Json{{"command", command}, {"schema_version", kSchemaVersion}};
}

Json identity(const char* name, double lhs, double rhs) {
  const double gap = std::abs(lhs - rhs);
  return Json{{"name", name},
              {"lhs", lhs},
              {"rhs", rhs},
              {"gap", gap},
              {"tolerance", kIdentityTolerance},
              {"ok", gap <= kIdentityTolerance}};
}

Json ordering(const char* name, double smaller, double larger) {
  return Json{{"name", name},
              {"lhs", smaller},
              {"rhs", larger},
              {"gap", std::max(0.0, smaller - larger)},
              {"tolerance", kIdentityTolerance},
              {"ok", smaller <= larger + kIdentityTolerance}};
}

Json warnings_from(const Json& identities) {
  Json out = Json::array();
  for (const Json& id : identities) {
    if (!id.at("ok").get<bool>()) {
      std::ostringstream os;
      os << "identity '" << id.at("name").get<std::string>() << "' off by " << id.at("gap").get<double>();
      out.push_back(os.str());
    }
  }
  return out;
}

Json bell_mixture_note(double a) {
  std::ostringstream os;
  os.precision(6);
  os << "closed form 1 - H2(a) = " << bell_mixture_discord_closed_form(a)
     << "; the frequently quoted form a log2 a - (1-a) log2 a + 1 gives "
     << bell_mixture_discord_literal_form(a)
     << " and does not vanish at a = 1/2, so it is not used";
  return os.str();
}

std::optional<double> family_param(const StateDocument& doc, const char* family, const char* key,
                                   double fallback) {
  if (!doc.family || doc.family->name != family) return std::nullopt;
  const Json& p = doc.family->params;
  if (!p.contains(key)) return fallback;
  return p.at(key).get<double>();
}

// ---------------------------------------------------------------------------
// Human-readable rendering.

std::string f4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void render_notes(std::ostream& os, const Json& report) {
  if (report.contains("warnings")) {
    for (const Json& w : report.at("warnings")) os << "WARN " << w.get<std::string>() << "\n";
  }
  if (report.contains("notes")) {
    for (const Json& n : report.at("notes")) os << "note: " << n.get<std::string>() << "\n";
  }
}

void render_state(std::ostream& os, const Json& state) {
  const Json& dims = state.at("dims");
  os << "state      dims " << dims[0].get<int>() << "x" << dims[1].get<int>() << ", purity "
     << f4(state.at("purity").get<double>()) << "\n";
}

std::string discord_line(const Json& d) {
  std::ostringstream os;
  const std::string measure = d.at("measure").get<std::string>();
  os << measure << (measure == "D3sym" ? "" : "^" + d.at("side").get<std::string>()) << " = "
     << f4(d.at("value").get<double>()) << "  (J = " << f4(d.at("j_value").get<double>()) << ")";
  if (d.at("degenerate").get<bool>()) os << "  [degenerate marginal]";
  if (!d.at("degenerate_infimum").is_null()) {
    os << "  inf over diagonalizing bases " << f4(d.at("degenerate_infimum").get<double>());
  }
  const Json& diag = d.at("diagnostics");
  if (diag.at("restarts_used").get<int>() > 0 && !diag.at("converged").get<bool>()) os << "  [not converged]";
  return os.str();
}

std::string verdict_line(const Json& v) {
  std::ostringstream os;
  os << "side " << v.at("side").get<std::string>() << ": " << v.at("verdict").get<std::string>() << " via "
     << v.at("method").get<std::string>() << "  commutator " << sci(v.at("commutator_norm").get<double>());
  if (!v.at("residual_discord").is_null()) os << "  residual " << sci(v.at("residual_discord").get<double>());
  if (!v.at("block_commutator_norm").is_null()) {
    os << "  block commutator " << sci(v.at("block_commutator_norm").get<double>());
  }
  return os.str();
}

void render_ledger(std::ostream& os, const Json& l) {
  os << "work (kT = " << f4(l.at("kT").get<double>()) << ")\n";
  os << "  W+ " << f4(l.at("w_plus").get<double>()) << "  W_L " << f4(l.at("w_local").get<double>()) << "  W2 "
     << f4(l.at("w2").get<double>()) << "  W3 " << f4(l.at("w3").get<double>()) << "\n";
  os << "  dW_L " << f4(l.at("delta_l").get<double>()) << "  dW2 " << f4(l.at("delta_2").get<double>())
     << "  dW3 " << f4(l.at("delta_3").get<double>()) << "\n";
}

}  // namespace

Json discord_json(const DiscordReport& r) {
  Json bases = Json::array();
  if (r.optimal_measurement) bases.push_back(basis_json(r.optimal_measurement->basis()));
  for (const ProjectiveMeasurement& m : r.forced_bases) bases.push_back(basis_json(m.basis()));
  return Json{{"measure", to_string(r.measure)},
              {"side", side_name(r.side)},
              {"value", r.value},
              {"j_value", r.j_value},
              {"bases", bases},
              {"basis_is_optimized", r.optimal_measurement.has_value()},
              {"alternate_form", optional_number(r.alternate_form)},
              {"degenerate", r.degenerate},
              {"degenerate_infimum", optional_number(r.degenerate_infimum)},
              {"diagnostics",
               Json{{"restarts_used", r.diagnostics.restarts_used},
                    {"best_restart", r.diagnostics.best_restart},
                    {"converged", r.diagnostics.converged},
                    {"best_per_restart", r.diagnostics.best_per_restart},
                    {"evaluations_per_restart", r.diagnostics.evaluations_per_restart}}}};
}

Json verdict_json(const ZeroDiscordVerdict& v) {
  return Json{{"side", side_name(v.side)},
              {"verdict", to_string(v.verdict)},
              {"method", to_string(v.method)},
              {"commutator_norm", v.commutator_norm},
              {"residual_discord", optional_number(v.residual_discord)},
              {"block_commutator_norm", optional_number(v.block_commutator_norm)},
              {"degenerate_marginal", v.degenerate_marginal},
              {"witness", v.witness ? basis_json(v.witness->basis()) : Json(nullptr)}};
}

Json ledger_json(const WorkLedger& l) {
  return Json{{"kT", l.kT},
              {"w_plus", l.w_plus},
              {"w_local", l.w_local},
              {"w2", l.w2},
              {"w3", l.w3},
              {"delta_l", l.delta_l},
              {"delta_2", l.delta_2},
              {"delta_3", l.delta_3},
              {"delta_l_via_information", l.delta_l_via_information},
              {"delta_2_via_discord", l.delta_2_via_discord},
              {"delta_3_via_discord", l.delta_3_via_discord},
              {"identity_gap", l.identity_gap()},
              {"measurement_w2", l.measurement_w2 ? basis_json(l.measurement_w2->basis()) : Json(nullptr)}};
}

Json analyze_report(const StateDocument& doc, const BipartiteState& state, const Settings& settings) {
  const auto t_start = Clock::now();
  Json timing = Json::object();
  Json report = header("analyze");

  const HermitianOperator rho_a = state.marginal(Subsystem::A);
  const HermitianOperator rho_b = state.marginal(Subsystem::B);
  const double s_a = von_neumann_entropy(rho_a);
  const double s_b = von_neumann_entropy(rho_b);
  const double s_ab = von_neumann_entropy(state.rho());
  const double info = mutual_information(state);
  report["state"] = Json{{"document", doc.to_json()},
                         {"dims", {state.dims().a, state.dims().b}},
                         {"purity", state.purity()},
                         {"spectrum",
                          Json{{"rho_ab", real_list(eigenvalues(state.rho()))},
                               {"rho_a", real_list(eigenvalues(rho_a))},
                               {"rho_b", real_list(eigenvalues(rho_b))}}}};
  report["entropies"] = Json{{"S_A", s_a}, {"S_B", s_b}, {"S_AB", s_ab}, {"I", info}};

  auto t0 = Clock::now();
  Json discord = Json::object();
  std::optional<DiscordReport> d1_a, d2_a, d3_a;
  for (Subsystem side : {Subsystem::A, Subsystem::B}) {
    DiscordReport d1 = optimize_discord(DiscordMeasure::D1, state, side, settings.optimizer);
    DiscordReport d2 = optimize_discord(DiscordMeasure::D2, state, side, settings.optimizer);
    DiscordReport d3 = discord_d3(state, side, settings.optimizer);
    discord[side_name(side)] = Json{{"D1", discord_json(d1)}, {"D2", discord_json(d2)}, {"D3", discord_json(d3)}};
    if (side == Subsystem::A) {
      d1_a = std::move(d1);
      d2_a = std::move(d2);
      d3_a = std::move(d3);
    }
  }
  discord["D3sym"] = discord_json(discord_d3_symmetric(state));
  report["discord"] = discord;
  timing["discord_ms"] = ms_since(t0);

  t0 = Clock::now();
  report["classification"] = Json{{"A", verdict_json(classify_zero_discord(state, Subsystem::A))},
                                  {"B", verdict_json(classify_zero_discord(state, Subsystem::B))}};
  timing["classification_ms"] = ms_since(t0);

  t0 = Clock::now();
  const WorkLedger ledger = work_ledger(state, settings.kT, settings.optimizer);
  report["demon"] = ledger_json(ledger);
  timing["demon_ms"] = ms_since(t0);

  // Cross-identities on side A at the D1-optimal measurement.
  const ProjectiveMeasurement& m1 = *d1_a->optimal_measurement;
  const MeasuredDiscord d1_at = discord_d1_at(state, m1);
  const MeasuredDiscord d2_at = discord_d2_at(state, m1);
  const double h_outcome = measurement_statistics(state, m1).outcome_entropy();
  const double s_cond_pi = conditional_entropy_after_measurement(state, m1);
  const double s_ca = cerf_adami_conditional_entropy(state);
  const double kT = settings.kT;
  Json identities = Json::array();
  identities.push_back(identity("J^Pi = I(post-measurement state)", d1_at.j_value,
                                mutual_information(post_measurement_state(state, m1))));
  identities.push_back(identity("D1^Pi = D2^Pi - [H(A^Pi) - S_A]", d1_at.value, d2_at.value - (h_outcome - s_a)));
  identities.push_back(identity("S(B|A) = S_AB - S_A", s_ca, s_ab - s_a));
  identities.push_back(identity("S(B|A) = S(B|Pi) - D1^Pi", s_ca, s_cond_pi - d1_at.value));
  identities.push_back(identity("K - K_one_way = D1", information_function(state.rho()) -
                                                          one_way_purification_rate(state, m1),
                                d1_a->value));
  identities.push_back(identity("dW_L = kT I", ledger.delta_l, kT * info));
  identities.push_back(identity("dW2 = kT D2", ledger.delta_2, kT * d2_a->value));
  identities.push_back(identity("dW3 = kT D3", ledger.delta_3, kT * d3_a->value));
  identities.push_back(ordering("D1 <= D2", d1_a->value, d2_a->value));
  identities.push_back(ordering("D2 <= D3", d2_a->value, d3_a->value));
  report["identities"] = identities;
  report["warnings"] = warnings_from(identities);

  Json notes = Json::array();
  notes.push_back("D1 and D2 are minima over rank-1 projective measurements");
  if (const auto a = family_param(doc, "bell_mixture", "a", 0.5)) notes.push_back(bell_mixture_note(*a));
  report["notes"] = notes;
  report["optimizer"] = optimizer_json(settings.optimizer);
  if (settings.timing) {
    timing["total_ms"] = ms_since(t_start);
    report["timing"] = timing;
  }
  return report;
}

Json classify_report(const StateDocument& doc, const BipartiteState& state, const Settings& settings) {
  Json report = header("classify");
  report["state"] = Json{{"document", doc.to_json()}, {"dims", {state.dims().a, state.dims().b}}};
  const auto t0 = Clock::now();
  report["classification"] = verdict_json(classify_zero_discord(state, settings.side));
  report["tolerances"] = Json{{"commutator", tolerance::commutator},
                              {"zero_discord", tolerance::zero_discord},
                              {"ambiguity_factor", tolerance::ambiguity_factor}};
  if (settings.timing) report["timing"] = Json{{"total_ms", ms_since(t0)}};
  return report;
}

Json discord_report(const StateDocument& doc, const BipartiteState& state, DiscordMeasure measure,
                    const Settings& settings) {
  Json report = header("discord");
  report["state"] = Json{{"document", doc.to_json()}, {"dims", {state.dims().a, state.dims().b}}};
  const auto t0 = Clock::now();
  DiscordReport r;
  switch (measure) {
    case DiscordMeasure::D1:
    case DiscordMeasure::D2:
      r = optimize_discord(measure, state, settings.side, settings.optimizer);
      break;
    case DiscordMeasure::D3:
      r = discord_d3(state, settings.side, settings.optimizer);
      break;
    case DiscordMeasure::D3Sym:
      r = discord_d3_symmetric(state);
      break;
  }
  report["discord"] = discord_json(r);
  Json notes = Json::array();
  if (const auto a = family_param(doc, "bell_mixture", "a", 0.5)) notes.push_back(bell_mixture_note(*a));
  report["notes"] = notes;
  report["optimizer"] = optimizer_json(settings.optimizer);
  if (settings.timing) report["timing"] = Json{{"total_ms", ms_since(t0)}};
  return report;
}

Json demon_report(const StateDocument& doc, const BipartiteState& state, const Settings& settings) {
  Json report = header("demon");
  report["state"] = Json{{"document", doc.to_json()}, {"dims", {state.dims().a, state.dims().b}}};
  const auto t0 = Clock::now();
  const WorkLedger ledger = work_ledger(state, settings.kT, settings.optimizer);
  report["demon"] = ledger_json(ledger);
  Json identities = Json::array();
  identities.push_back(identity("dW_L = kT I", ledger.delta_l, ledger.delta_l_via_information));
  identities.push_back(identity("dW2 = kT D2", ledger.delta_2, ledger.delta_2_via_discord));
  identities.push_back(identity("dW3 = kT D3", ledger.delta_3, ledger.delta_3_via_discord));
  report["identities"] = identities;
  report["warnings"] = warnings_from(identities);
  report["optimizer"] = optimizer_json(settings.optimizer);
  if (settings.timing) report["timing"] = Json{{"total_ms", ms_since(t0)}};
  return report;
}

Json table1_report(double a, const Settings& settings) {
  struct Row {
    const char* label;
    StateDocument doc;
    bool expect_zero;
    const char* locally_distinguishable;
  };
  const std::vector<Row> rows{
      {"9 teahouse states, equal weights", StateDocument::of_family("teahouse_ensemble", {{"weights", "equal"}}),
       true, "no"},
      {"2 product bi-orthogonal states |00>, |11>",
       StateDocument::of_family("classical_classical", {{"dims", {2, 2}}, {"w", {0.5, 0.0, 0.0, 0.5}}}), true,
       "yes"},
      {"2 entangled orthogonal states (Bell mixture)", StateDocument::of_family("bell_mixture", {{"a", a}}), false,
       "yes"},
      {"9 teahouse states, psi7 and psi9 doubled",
       StateDocument::of_family("teahouse_ensemble", {{"weights", "doubled"}}), false, "no"},
  };

  const auto t0 = Clock::now();
  Json report = header("table1");
  Json out = Json::array();
  bool all_match = true;
  for (const Row& row : rows) {
    const BipartiteState state = row.doc.build();
    const DiscordReport d1_a = optimize_discord(DiscordMeasure::D1, state, Subsystem::A, settings.optimizer);
    const DiscordReport d1_b = optimize_discord(DiscordMeasure::D1, state, Subsystem::B, settings.optimizer);
    const ZeroDiscordVerdict v_a = classify_zero_discord(state, Subsystem::A);
    const ZeroDiscordVerdict v_b = classify_zero_discord(state, Subsystem::B);
    const bool match = row.expect_zero
                           ? d1_a.value <= tolerance::zero_discord && d1_b.value <= tolerance::zero_discord
                           : d1_a.value > 1e-3;
    all_match = all_match && match;
    out.push_back(Json{{"state", row.label},
                       {"document", row.doc.to_json()},
                       {"D1_A", d1_a.value},
                       {"D1_B", d1_b.value},
                       {"verdict_A", to_string(v_a.verdict)},
                       {"verdict_B", to_string(v_b.verdict)},
                       {"expected_discord", row.expect_zero ? "D^A = D^B = 0" : "D1^A > 0"},
                       {"matches_expected", match},
                       {"locally_distinguishable", row.locally_distinguishable},
                       {"locally_distinguishable_source", "cited"}});
  }
  report["rows"] = out;
  report["all_match"] = all_match;
  report["bell_mixture_a"] = a;
  report["bell_mixture_closed_form"] = bell_mixture_discord_closed_form(a);
  report["bell_mixture_literal_form"] = bell_mixture_discord_literal_form(a);
  report["notes"] = Json::array(
      {"the locally-distinguishable column is cited from the LOCC literature, not computed",
       bell_mixture_note(a)});
  report["optimizer"] = optimizer_json(settings.optimizer);
  if (settings.timing) report["timing"] = Json{{"total_ms", ms_since(t0)}};
  return report;
}

Json families_report() {
  Json report = header("states");
  Json list = Json::array();
  for (const FamilyInfo& f : families()) {
    list.push_back(Json{{"name", f.name}, {"params", f.params}, {"description", f.description}});
  }
  report["families"] = list;
  return report;
}

std::string render_analyze(const Json& r) {
  std::ostringstream os;
  render_state(os, r.at("state"));
  const Json& e = r.at("entropies");
  os << "entropies  S_A " << f4(e.at("S_A").get<double>()) << "  S_B " << f4(e.at("S_B").get<double>())
     << "  S_AB " << f4(e.at("S_AB").get<double>()) << "  I " << f4(e.at("I").get<double>()) << "\n";
  os << "discord\n";
  for (const char* side : {"A", "B"}) {
    for (const char* m : {"D1", "D2", "D3"}) os << "  " << discord_line(r.at("discord").at(side).at(m)) << "\n";
  }
  os << "  " << discord_line(r.at("discord").at("D3sym")) << "\n";
  os << "classification\n";
  for (const char* side : {"A", "B"}) os << "  " << verdict_line(r.at("classification").at(side)) << "\n";
  render_ledger(os, r.at("demon"));
  os << "identities\n";
  for (const Json& id : r.at("identities")) {
    os << "  " << (id.at("ok").get<bool>() ? "ok   " : "WARN ") << id.at("name").get<std::string>() << "  gap "
       << sci(id.at("gap").get<double>()) << "\n";
  }
  if (r.contains("timing")) os << "time       " << f4(r.at("timing").at("total_ms").get<double>()) << " ms\n";
  render_notes(os, r);
  return os.str();
}

std::string render_classify(const Json& r) {
  std::ostringstream os;
  os << verdict_line(r.at("classification")) << "\n";
  const Json& w = r.at("classification").at("witness");
  if (!w.is_null()) os << "witness basis available in --json output\n";
  return os.str();
}

std::string render_discord(const Json& r) {
  std::ostringstream os;
  os << discord_line(r.at("discord")) << "\n";
  const Json& alt = r.at("discord").at("alternate_form");
  if (!alt.is_null()) os << "entropy-increase form " << f4(alt.get<double>()) << "\n";
  render_notes(os, r);
  return os.str();
}

std::string render_demon(const Json& r) {
  std::ostringstream os;
  render_ledger(os, r.at("demon"));
  render_notes(os, r);
  return os.str();
}

std::string render_table1(const Json& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-46s %8s %8s %-9s %-9s %-14s %s\n", "states", "D1^A", "D1^B", "A", "B",
                "expected", "locally distinguishable (cited)");
  os << line;
  for (const Json& row : r.at("rows")) {
    std::snprintf(line, sizeof line, "%-46s %8s %8s %-9s %-9s %-14s %s%s\n",
                  row.at("state").get<std::string>().c_str(), f4(row.at("D1_A").get<double>()).c_str(),
                  f4(row.at("D1_B").get<double>()).c_str(), row.at("verdict_A").get<std::string>().c_str(),
                  row.at("verdict_B").get<std::string>().c_str(),
                  row.at("expected_discord").get<std::string>().c_str(),
                  row.at("locally_distinguishable").get<std::string>().c_str(),
                  row.at("matches_expected").get<bool>() ? "" : "   WARN mismatch");
    os << line;
  }
  os << "bell mixture a = " << f4(r.at("bell_mixture_a").get<double>()) << ": 1 - H2(a) = "
     << f4(r.at("bell_mixture_closed_form").get<double>()) << "\n";
  if (r.contains("timing")) os << "time " << f4(r.at("timing").at("total_ms").get<double>()) << " ms\n";
  render_notes(os, r);
  return os.str();
}

std::string render_families(const Json& r) {
  std::ostringstream os;
  for (const Json& f : r.at("families")) {
    char line[256];
    std::snprintf(line, sizeof line, "%-20s %-34s %s\n", f.at("name").get<std::string>().c_str(),
                  f.at("params").get<std::string>().c_str(), f.at("description").get<std::string>().c_str());
    os << line;
  }
  return os.str();
}

}  // namespace discordant::cli
