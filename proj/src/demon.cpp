// SPDX-License-Identifier: Apache-2.0
#include "discordant/demon.hpp"

#include <algorithm>
#include <cmath>

#include "discordant/correlations.hpp"

namespace discordant {

namespace {

double entropy(const HermitianOperator& rho) { return entropy_of_spectrum(eigenvalues(rho)); }

void check_kt(double kT) {
  if (!(kT > 0.0) || !std::isfinite(kT)) throw Error(ErrorCode::InvalidParameters, "kT must be positive");
}

}  // namespace

double WorkLedger::identity_gap() const {
  return std::max({std::abs(delta_l - delta_l_via_information),
                   std::abs(delta_2 - delta_2_via_discord),
                   std::abs(delta_3 - delta_3_via_discord)});
}

double work_single(const HermitianOperator& rho, double kT) {
  check_kt(kT);
  return kT * information_function(rho);
}

WorkLedger work_ledger(const BipartiteState& state, double kT, const OptimizerConfig& config) {
  check_kt(kT);
  const Dims dims = state.dims();
  const double log_da = std::log2(static_cast<double>(dims.a));
  const double log_db = std::log2(static_cast<double>(dims.b));
  const double s_a = entropy(state.marginal(Subsystem::A));
  const double s_b = entropy(state.marginal(Subsystem::B));

  WorkLedger ledger;
  ledger.kT = kT;
  ledger.w_plus = work_single(state.rho(), kT);
  ledger.w_local = kT * (log_da + log_db - s_a - s_b);

  // Alice picks the measurement that leaves the least post-measurement entropy.
  const DiscordReport d2 = optimize_discord(DiscordMeasure::D2, state, Subsystem::A, config);
  const BipartiteState post = post_measurement_state(state, *d2.optimal_measurement);
  ledger.w2 = kT * (log_da + log_db - entropy(post.rho()));
  ledger.measurement_w2 = d2.optimal_measurement;
  ledger.diagnostics = d2.diagnostics;

  // Alice measures in the eigenbasis of rho_A.
  const ProjectiveMeasurement eigenbasis(Subsystem::A, eig(state.marginal(Subsystem::A)).vectors);
  const double s_b_given = conditional_entropy_after_measurement(state, eigenbasis);
  ledger.w3 = kT * (log_da - s_a) + kT * (log_db - s_b_given);

  ledger.delta_l = ledger.w_plus - ledger.w_local;
  ledger.delta_2 = ledger.w_plus - ledger.w2;
  ledger.delta_3 = ledger.w_plus - ledger.w3;

  ledger.delta_l_via_information = kT * mutual_information(state);
  ledger.delta_2_via_discord = kT * d2.value;
  ledger.delta_3_via_discord = kT * discord_d3(state, Subsystem::A, config).value;
  return ledger;
}

}  // namespace discordant
