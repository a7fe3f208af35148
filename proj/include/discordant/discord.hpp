// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "discordant/measurement.hpp"
#include "discordant/optimizer.hpp"
#include "discordant/states.hpp"

namespace discordant {

/// D1: S_A + S(B|Pi) - S_AB minimized over projective rank-1 measurements.
/// D2: H(A^Pi) + S(B|Pi) - S_AB minimized (the one-way deficit).
/// D3: D2's functional at the eigenbasis of the measured marginal.
/// D3Sym: I(rho) - I(rho dephased in both marginal eigenbases).
enum class DiscordMeasure { D1, D2, D3, D3Sym };

std::string_view to_string(DiscordMeasure m);

/// A discord functional evaluated at one measurement, with its J partner.
struct MeasuredDiscord {
  double value = 0.0;
  double j_value = 0.0;
  /// D2 and D3 only: the entropy-increase form S(rho^Pi) - S(rho).
  double entropy_increase = 0.0;
  /// |sum form - entropy-increase form|; zero for D1.
  double formula_gap = 0.0;
};

struct OptimizerDiagnostics {
  int restarts_used = 0;
  std::vector<double> best_per_restart;
  std::vector<int> evaluations_per_restart;
  int best_restart = -1;
  bool converged = false;
};

struct DiscordReport {
  DiscordMeasure measure = DiscordMeasure::D1;
  Subsystem side = Subsystem::A;
  double value = 0.0;
  double j_value = 0.0;
  /// D1 and D2: the minimizing measurement.
  std::optional<ProjectiveMeasurement> optimal_measurement;
  /// D3 and D3Sym: the eigenbases the measure is evaluated in (one per
  /// measured side).
  std::vector<ProjectiveMeasurement> forced_bases;
  /// D3/D3Sym: entropy-increase form; must match value to 1e-9.
  std::optional<double> alternate_form;
  /// A measured marginal has a degenerate spectrum, so the forced basis is a
  /// convention rather than unique.
  bool degenerate = false;
  /// D3 with degenerate marginal: minimum over all bases diagonalizing it.
  std::optional<double> degenerate_infimum;
  OptimizerDiagnostics diagnostics;
};

/// D1^Pi and J^Pi = S_other - S(other|Pi); the measured side is m.subsystem().
MeasuredDiscord discord_d1_at(const BipartiteState& state, const ProjectiveMeasurement& m);

/// D2^Pi = H(A^Pi) + S(B|Pi) - S_AB, cross-checked against S(rho^Pi) - S_AB.
MeasuredDiscord discord_d2_at(const BipartiteState& state, const ProjectiveMeasurement& m);

/// Multistart simplex minimization over the measurement chart. Starting points:
/// the eigenbasis of the measured marginal (restart 0, when enabled) followed by
/// config.restarts seeded random chart points. Restarts are independent and the
/// reduction picks the lowest value, ties within 1e-10 going to the lowest index.
DiscordReport optimize_discord(DiscordMeasure measure, const BipartiteState& state,
                               Subsystem side, const OptimizerConfig& config = {});

DiscordReport discord_d3(const BipartiteState& state, Subsystem side,
                         const OptimizerConfig& config = {});

DiscordReport discord_d3_symmetric(const BipartiteState& state);

/// Alias for optimize_discord(D2, ...).value.
double one_way_deficit(const BipartiteState& state, Subsystem side,
                       const OptimizerConfig& config = {});

/// 1 - H2(a): discord of a |Psi+><Psi+| + (1-a) |Psi-><Psi-| for either side and
/// for both D1 and D2.
double bell_mixture_discord_closed_form(double a);

/// The expression a log2 a - (1-a) log2 a + 1 as it is commonly quoted for the
/// same family. It does not vanish at a = 1/2 and is kept only so reports can
/// show the discrepancy next to the correct value.
double bell_mixture_discord_literal_form(double a);

/// Binary entropy in bits.
double binary_entropy(double p);

// ---------------------------------------------------------------------------
// Zero-discord classification.

enum class Verdict { Zero, Nonzero, Ambiguous };
enum class VerdictMethod { Commutator, Eigenbasis, Eigenstructure };

std::string_view to_string(Verdict v);
std::string_view to_string(VerdictMethod m);

struct ZeroDiscordVerdict {
  Verdict verdict = Verdict::Ambiguous;
  VerdictMethod method = VerdictMethod::Commutator;
  Subsystem side = Subsystem::A;
  /// max |[rho_side (x) 1, rho_AB]|.
  double commutator_norm = 0.0;
  /// D1 evaluated at the eigenbasis / witness basis, when computed.
  std::optional<double> residual_discord;
  /// Eigenstructure path: max commutator among the blocks <i|rho|j> of the
  /// unmeasured side.
  std::optional<double> block_commutator_norm;
  bool degenerate_marginal = false;
  /// Basis in which the state is classical on the measured side (ZERO only).
  std::optional<ProjectiveMeasurement> witness;
};

/// Staged test:
///  1. commutator of rho_side (x) 1 with rho_AB above 10x its tolerance: NONZERO;
///  2. non-degenerate marginal: D1 at its eigenbasis decides;
///  3. degenerate marginal: the blocks <i|rho|j> (operators on the measured
///     side) must pairwise commute; their common eigenbasis is the witness.
/// A decisive quantity within a factor 10 of its tolerance gives AMBIGUOUS, as
/// does a commutator in its band alongside an otherwise ZERO result.
ZeroDiscordVerdict classify_zero_discord(const BipartiteState& state, Subsystem side);

}  // namespace discordant
