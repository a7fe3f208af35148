// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "discordant/operator_core.hpp"
#include "discordant/states.hpp"

namespace discordant {

/// Complete rank-1 projective measurement on one subsystem, stored as the
/// unitary whose columns are the measurement vectors. Projector a is
/// |u_a><u_a| with u_a = basis().col(a).
class ProjectiveMeasurement {
 public:
  ProjectiveMeasurement(Subsystem subsystem, const Matrix& basis);

  static ProjectiveMeasurement computational(Subsystem subsystem, int dim);

  Subsystem subsystem() const { return subsystem_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  int outcomes() const { return dim(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(int a) const { return basis_.col(a); }
  Matrix projector(int a) const { return basis_.col(a) * basis_.col(a).adjoint(); }
  std::vector<Matrix> projectors() const;

 private:
  Subsystem subsystem_;
  Matrix basis_;
};

/// Optimization coordinates: d(d-1) angles, two per plane.
using MeasurementParameters = std::vector<double>;

inline int parameter_count(int d) { return d * (d - 1); }

/// Chart onto measurement bases. U is the ordered product
///   U = G(0,1) G(0,2) ... G(0,d-1) G(1,2) ... G(d-2,d-1)
/// and plane k of that list consumes params[2k] = theta, params[2k+1] = phi:
///   G(p,q)|p> = cos(theta/2)|p> + e^{i phi} sin(theta/2)|q>
///   G(p,q)|q> = -e^{-i phi} sin(theta/2)|p> + cos(theta/2)|q>
/// For d = 2 the first vector is the Bloch-sphere state at polar angle theta and
/// azimuth phi, so (pi/2, 0) gives the sigma_x eigenbasis.
Matrix unitary_from_parameters(std::span<const double> params, int d);

ProjectiveMeasurement from_parameters(std::span<const double> params, int d,
                                      Subsystem subsystem = Subsystem::A);

struct ConditionalOutcome {
  double probability = 0.0;
  /// Absent when the outcome is impossible (probability <= 1e-12).
  std::optional<HermitianOperator> state;
};

/// Outcome probability and the renormalized state of the unmeasured side.
ConditionalOutcome conditional_state(const BipartiteState& state, const ProjectiveMeasurement& m,
                                     int outcome);

/// sum_a (Pi_a (x) 1) rho (Pi_a (x) 1), with the projector on the measured side.
BipartiteState post_measurement_state(const BipartiteState& state, const ProjectiveMeasurement& m);

/// Removes off-diagonal terms in the given orthonormal basis (columns).
HermitianOperator dephase(const HermitianOperator& rho, const Matrix& basis);

/// Outcome distribution of measuring a single-system state.
std::vector<double> outcome_distribution(const HermitianOperator& rho, const Matrix& basis);

/// Per-outcome data for measuring side A of rho_AB with the columns of `basis`.
/// Unnormalized conditional blocks (v^dagger (x) 1) rho (v (x) 1) are formed
/// directly, so candidate measurements are cheap to evaluate.
struct MeasurementStatistics {
  std::vector<double> probabilities;
  std::vector<double> conditional_entropies;  // 0 for impossible outcomes

  double outcome_entropy() const;       // H(A^Pi)
  double conditional_entropy() const;   // sum_a p_a S(rho_{B|a})
};

MeasurementStatistics measure_side_a(const Matrix& rho, Dims dims, const Matrix& basis);

/// Convenience: statistics for m applied to its own subsystem of `state`.
MeasurementStatistics measurement_statistics(const BipartiteState& state,
                                             const ProjectiveMeasurement& m);

}  // namespace discordant
