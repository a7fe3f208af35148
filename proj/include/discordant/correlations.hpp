// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "discordant/measurement.hpp"
#include "discordant/operator_core.hpp"
#include "discordant/states.hpp"

namespace discordant {

// ---------------------------------------------------------------------------
// Classical side. All entropies are in bits with 0 log 0 = 0.

/// H(p). Throws NotNormalized unless p >= 0 and sums to 1 within 1e-12.
double shannon_entropy(std::span<const double> p);

/// Joint distribution p(a, b) over n_A x n_B outcomes.
class JointDistribution {
 public:
  explicit JointDistribution(Eigen::MatrixXd p);

  const Eigen::MatrixXd& p() const { return p_; }
  Eigen::VectorXd marginal_a() const { return p_.rowwise().sum(); }
  Eigen::VectorXd marginal_b() const { return p_.colwise().sum().transpose(); }

  double entropy_a() const;
  double entropy_b() const;
  double joint_entropy() const;
  /// H(A|B) = sum_b p_b H(A|b).
  double conditional_entropy_a_given_b() const;
  /// H(B|A) = sum_a p_a H(B|a).
  double conditional_entropy_b_given_a() const;
  /// I(A:B) = H(A) + H(B) - H(A,B).
  double mutual_information() const;
  /// J(A:B) = H(A) - H(A|B).
  double mutual_information_j() const;

 private:
  Eigen::MatrixXd p_;
};

// ---------------------------------------------------------------------------
// Quantum side.

/// S(rho) = -tr rho log2 rho. Throws NotDensityMatrix on invalid input.
double von_neumann_entropy(const HermitianOperator& rho);

/// S_A + S_B - S_AB.
double mutual_information(const BipartiteState& state);

/// S(rho_B | Pi^A) = sum_a p_a S(rho_{B|a}); the unmeasured side is the one
/// not named by m.subsystem().
double conditional_entropy_after_measurement(const BipartiteState& state,
                                             const ProjectiveMeasurement& m);

/// K(rho) = log2 d - S(rho).
double information_function(const HermitianOperator& rho);

/// Cerf-Adami conditional operator exp2(-log2 rho_A (x) 1 + log2 rho_AB).
/// The logarithms are taken on their supports and the exponential is taken on
/// the support of rho_AB (zero on its kernel). Positive semidefinite; the trace
/// is generally not 1.
class ConditionalOperator {
 public:
  explicit ConditionalOperator(HermitianOperator op);
  const HermitianOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

/// Throws SupportMismatch when rho_AB has entries > 1e-10 outside the support
/// of rho_A (x) 1_B. A valid state never does; the raw overload exists for
/// operators that have not been validated as states.
ConditionalOperator cerf_adami_operator(const BipartiteState& state);
ConditionalOperator cerf_adami_operator(Dims dims, const HermitianOperator& rho);

/// -tr rho_AB log2 rho_{B|A}, computed from the operator itself. Equals
/// S_AB - S_A; negative for entangled states and never clamped.
double cerf_adami_conditional_entropy(const BipartiteState& state);

/// rho_AB (rho_A (x) 1)^{-1} with the inverse taken on the support. Matches the
/// conditional operator only when the two factors commute.
Matrix commuting_conditional_operator(const BipartiteState& state);

/// log2(d_A d_B) + I(rho^Pi) - S_A - S_B at the supplied measurement.
double one_way_purification_rate(const BipartiteState& state, const ProjectiveMeasurement& m);

}  // namespace discordant
