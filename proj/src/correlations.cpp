// SPDX-License-Identifier: Apache-2.0
#include "discordant/correlations.hpp"

#include <cmath>
#include <sstream>

namespace discordant {

namespace {

constexpr double kClassicalNormalization = 1e-12;

double entropy_unchecked(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double state_entropy(const HermitianOperator& rho) { return entropy_of_spectrum(eigenvalues(rho)); }

// Columns of the eigenvectors whose eigenvalues exceed the support clip.
Matrix support_basis(const EigenSystem& es) {
  int rank = 0;
  for (int i = 0; i < es.dim(); ++i)
    if (es.values[i] > tolerance::support_clip) ++rank;
  Matrix basis(es.dim(), rank);
  int k = 0;
  for (int i = 0; i < es.dim(); ++i)
    if (es.values[i] > tolerance::support_clip) basis.col(k++) = es.vectors.col(i);
  return basis;
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw Error(ErrorCode::NotNormalized, "negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kClassicalNormalization) {
    std::ostringstream os;
    os << "probabilities sum to " << sum;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  return entropy_unchecked(p);
}

JointDistribution::JointDistribution(Eigen::MatrixXd p) : p_(std::move(p)) {
  if (p_.size() == 0 || (p_.array() < 0.0).any() || !p_.allFinite()) {
    throw Error(ErrorCode::NotNormalized, "joint distribution entries must be non-negative");
  }
  if (std::abs(p_.sum() - 1.0) > kClassicalNormalization) {
    throw Error(ErrorCode::NotNormalized, "joint distribution does not sum to 1");
  }
}

double JointDistribution::entropy_a() const {
  const Eigen::VectorXd m = marginal_a();
  return entropy_unchecked({m.data(), static_cast<std::size_t>(m.size())});
}

double JointDistribution::entropy_b() const {
  const Eigen::VectorXd m = marginal_b();
  return entropy_unchecked({m.data(), static_cast<std::size_t>(m.size())});
}

double JointDistribution::joint_entropy() const {
  return entropy_unchecked({p_.data(), static_cast<std::size_t>(p_.size())});
}

double JointDistribution::conditional_entropy_a_given_b() const {
  const Eigen::VectorXd pb = marginal_b();
  double h = 0.0;
  for (Eigen::Index b = 0; b < p_.cols(); ++b) {
    if (pb[b] <= 0.0) continue;
    const Eigen::VectorXd cond = p_.col(b) / pb[b];
    h += pb[b] * entropy_unchecked({cond.data(), static_cast<std::size_t>(cond.size())});
  }
  return h;
}

double JointDistribution::conditional_entropy_b_given_a() const {
  const Eigen::VectorXd pa = marginal_a();
  double h = 0.0;
  for (Eigen::Index a = 0; a < p_.rows(); ++a) {
    if (pa[a] <= 0.0) continue;
    const Eigen::VectorXd cond = p_.row(a).transpose() / pa[a];
    h += pa[a] * entropy_unchecked({cond.data(), static_cast<std::size_t>(cond.size())});
  }
  return h;
}

double JointDistribution::mutual_information() const {
  return entropy_a() + entropy_b() - joint_entropy();
}

double JointDistribution::mutual_information_j() const {
  return entropy_a() - conditional_entropy_a_given_b();
}

double von_neumann_entropy(const HermitianOperator& rho) {
  validate_density_matrix(rho.matrix());
  return state_entropy(rho);
}

double mutual_information(const BipartiteState& state) {
  return state_entropy(state.marginal(Subsystem::A)) + state_entropy(state.marginal(Subsystem::B)) -
         state_entropy(state.rho());
}

double conditional_entropy_after_measurement(const BipartiteState& state,
                                             const ProjectiveMeasurement& m) {
  return measurement_statistics(state, m).conditional_entropy();
}

double information_function(const HermitianOperator& rho) {
  return std::log2(static_cast<double>(rho.dim())) - von_neumann_entropy(rho);
}

ConditionalOperator::ConditionalOperator(HermitianOperator op) : op_(std::move(op)) {
  if (op_.dim() > 0 && eigenvalues(op_)[0] < tolerance::psd_floor) {
    throw Error(ErrorCode::NotPositiveSemidefinite, "conditional operator must be PSD");
  }
}

ConditionalOperator cerf_adami_operator(const BipartiteState& state) {
  return cerf_adami_operator(state.dims(), state.rho());
}

ConditionalOperator cerf_adami_operator(Dims dims, const HermitianOperator& rho) {
  const HermitianOperator rho_a = partial_trace(rho, dims, Subsystem::A);
  const HermitianOperator id_b = HermitianOperator::identity(dims.b);

  const EigenSystem es_a = eig(rho_a);
  const Matrix pa = support_basis(es_a);
  const Matrix support_a = kron(pa * pa.adjoint(), id_b.matrix());
  const double leak = max_abs(rho.matrix() - support_a * rho.matrix());
  if (leak > tolerance::support_leak) {
    std::ostringstream os;
    os << "rho_AB has weight " << leak << " outside the support of rho_A (x) 1_B";
    throw Error(ErrorCode::SupportMismatch, os.str());
  }

  const Matrix exponent = -kron(matrix_log_on_support(rho_a).matrix(), id_b.matrix()) +
                          matrix_log_on_support(rho).matrix();
  const Matrix v = support_basis(eig(rho));
  const HermitianOperator compressed = HermitianOperator::symmetrized(v.adjoint() * exponent * v);
  const Matrix on_support = matrix_exp(compressed).matrix();
  return ConditionalOperator(HermitianOperator::symmetrized(v * on_support * v.adjoint()));
}

double cerf_adami_conditional_entropy(const BipartiteState& state) {
  const ConditionalOperator op = cerf_adami_operator(state);
  const Matrix log_op = matrix_log_on_support(op.op()).matrix();
  return -(state.matrix() * log_op).trace().real();
}

Matrix commuting_conditional_operator(const BipartiteState& state) {
  const HermitianOperator rho_a = state.marginal(Subsystem::A);
  const HermitianOperator inverse = apply_spectral(
      eig(rho_a), [](double x) { return x <= tolerance::support_clip ? 0.0 : 1.0 / x; });
  return state.matrix() * kron(inverse.matrix(), Matrix::Identity(state.dims().b, state.dims().b));
}

double one_way_purification_rate(const BipartiteState& state, const ProjectiveMeasurement& m) {
  const Dims dims = state.dims();
  const BipartiteState post = post_measurement_state(state, m);
  return std::log2(static_cast<double>(dims.total())) + mutual_information(post) -
         state_entropy(state.marginal(Subsystem::A)) - state_entropy(state.marginal(Subsystem::B));
}

}  // namespace discordant
