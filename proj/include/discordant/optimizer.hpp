// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace discordant {

struct OptimizerConfig {
  int restarts = 20;                     // random starting points
  bool include_eigenbasis_seed = true;   // plus the marginal eigenbasis
  double simplex_tolerance = 1e-9;       // value change tolerated at convergence
  int max_evaluations = 5000;            // per restart
  std::uint64_t seed = 1234567;
  int threads = 0;                       // 0: hardware concurrency

  /// Throws InvalidParameters on non-positive counts or tolerances.
  void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;

struct LocalMinimum {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization (GSL nmsimplex2) from x0 with initial
/// step `step` in every coordinate. Converged means the best value stalled
/// within simplex_tolerance while the simplex was below 1e-5 in size, or
/// over a ten times longer stretch at any size.
LocalMinimum nelder_mead(const Objective& f, std::vector<double> x0, double step,
                         double simplex_tolerance, int max_evaluations);

/// Runs task(i) for i in [0, n) on up to `threads` workers. Results are stored
/// by index, so the outcome does not depend on scheduling.
void parallel_for(int n, int threads, const std::function<void(int)>& task);

/// Index of the smallest value; values within `tie` of the minimum resolve to
/// the lowest index.
int best_index(std::span<const double> values, double tie = 1e-10);

/// Deterministic uniform angles for restart `index`: theta in [0, pi],
/// phi in [0, 2 pi), alternating, `count` entries.
std::vector<double> random_angles(std::uint64_t seed, int index, int count);

}  // namespace discordant
