// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "discordant/discord.hpp"

namespace discordant {

/// Work extractable from a bipartite state by a global demon and by local
/// agents under three communication regimes, in units of kT (log base 2, so
/// kT = 1 means bits of work). Memory-reset costs are not included.
struct WorkLedger {
  double kT = 1.0;
  double w_plus = 0.0;   // global: kT K(rho_AB)
  double w_local = 0.0;  // local, no communication: kT (log d_A d_B - S_A - S_B)
  double w2 = 0.0;       // one-way communication, both know rho_AB
  double w3 = 0.0;       // one-way communication, A knows only rho_A
  double delta_l = 0.0;  // w_plus - w_local
  double delta_2 = 0.0;  // w_plus - w2
  double delta_3 = 0.0;  // w_plus - w3
  /// The same differences through the correlation and discord measures:
  /// kT I, kT D2, kT D3.
  double delta_l_via_information = 0.0;
  double delta_2_via_discord = 0.0;
  double delta_3_via_discord = 0.0;
  std::optional<ProjectiveMeasurement> measurement_w2;
  OptimizerDiagnostics diagnostics;

  /// Largest disagreement between the direct and discord-based differences.
  double identity_gap() const;
};

/// kT K(rho).
double work_single(const HermitianOperator& rho, double kT = 1.0);

WorkLedger work_ledger(const BipartiteState& state, double kT = 1.0,
                       const OptimizerConfig& config = {});

}  // namespace discordant
