// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "discordant/operator_core.hpp"

namespace discordant {

/// Density matrix on C^{d_A} (x) C^{d_B}: unit trace, Hermitian and positive
/// semidefinite within the library tolerances.
class BipartiteState {
 public:
  BipartiteState(Dims dims, const Matrix& rho);
  BipartiteState(Dims dims, HermitianOperator rho);

  Dims dims() const { return dims_; }
  const HermitianOperator& rho() const { return rho_; }
  const Matrix& matrix() const { return rho_.matrix(); }

  HermitianOperator marginal(Subsystem keep) const { return partial_trace(rho_, dims_, keep); }
  /// The same state with the roles of A and B exchanged.
  BipartiteState swapped() const;
  double purity() const;

 private:
  void validate() const;

  Dims dims_;
  HermitianOperator rho_;
};

/// Checks trace, Hermiticity and positivity; throws NotDensityMatrix.
void validate_density_matrix(const Matrix& rho);

struct EnsembleMember {
  double weight = 0.0;
  Vector vector;
};

class PureStateEnsemble {
 public:
  PureStateEnsemble(Dims dims, std::vector<EnsembleMember> members);

  Dims dims() const { return dims_; }
  const std::vector<EnsembleMember>& members() const { return members_; }
  /// Gram matrix of the member vectors.
  Matrix gram() const;
  /// Largest |<psi_i|psi_j>| over i != j.
  double max_overlap() const;
  BipartiteState density() const;

 private:
  Dims dims_;
  std::vector<EnsembleMember> members_;
};

/// (1/4)(1 + b sz(x)1 + c sx(x)sx). Throws InvalidParameters when not PSD.
BipartiteState example_state(double b, double c);

/// Bell vectors |Psi+-> = (|01> +- |10>)/sqrt(2).
Vector bell_psi_plus();
Vector bell_psi_minus();

/// a |Psi+><Psi+| + (1 - a) |Psi-><Psi-|, 0 <= a <= 1.
BipartiteState bell_mixture(double a);

/// The nine 3x3 product vectors in print order:
///   |1>|1>, |0>|0+1>, |0>|0-1>, |2>|1+2>, |2>|1-2>,
///   |1+2>|0>, |1-2>|0>, |0+1>|2>, |0-1>|2>
/// with |i+-j> = (|i> +- |j>)/sqrt(2). Index k here is psi_{k+1}.
std::array<Vector, 9> teahouse_vectors();

PureStateEnsemble teahouse_ensemble(std::span<const double> weights);

/// Weights 2:1 for psi_7 and psi_9 against the other seven, normalized.
std::array<double, 9> teahouse_doubled_weights();

/// sum_a p_a |e_a><e_a| (x) sigma_a over an orthonormal set {e_a} on A.
BipartiteState zero_discord_state(std::span<const double> p, std::span<const Vector> basis_a,
                                  std::span<const HermitianOperator> sigmas_b);

/// sum_ab w_ab |a><a| (x) |b><b|; w is d_A x d_B.
BipartiteState classical_classical_state(const Eigen::MatrixXd& w);

/// Induced measure: trace over a rank-dimensional ancilla of a Haar-random
/// pure state. Deterministic for a given seed on every platform.
BipartiteState random_state(Dims dims, int rank, std::uint64_t seed);

/// Haar-random pure state vector on dim, deterministic for a given seed.
Vector random_pure_vector(int dim, std::uint64_t seed);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(int dim, std::uint64_t seed);

}  // namespace discordant
