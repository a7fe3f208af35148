// SPDX-License-Identifier: Apache-2.0
#include "discordant/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace discordant {

namespace {

// Portable standard normals: mt19937_64 is fully specified by the standard,
// std::normal_distribution is not.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    // 53-bit mantissa in (0, 1).
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

Matrix ginibre(int rows, int cols, std::uint64_t seed) {
  GaussianSource g(seed);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g.complex_normal();
  return m;
}

Vector ket(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v[index] = 1.0;
  return v;
}

Vector superpose(int dim, int i, int j, double sign) {
  Vector v = Vector::Zero(dim);
  v[i] = 1.0 / std::numbers::sqrt2;
  v[j] = sign / std::numbers::sqrt2;
  return v;
}

Vector product(const Vector& a, const Vector& b) { return kron(a, b); }

void check_probabilities(std::span<const double> p, const char* what) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::BadWeights, std::string(what) + " must be non-negative and finite");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > tolerance::trace) {
    std::ostringstream os;
    os << what << " sum to " << sum << ", not 1";
    throw Error(ErrorCode::BadWeights, os.str());
  }
}

}  // namespace

void validate_density_matrix(const Matrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw Error(ErrorCode::NotDensityMatrix, "density matrix must be square and non-empty");
  }
  if (!rho.allFinite()) throw Error(ErrorCode::NotDensityMatrix, "non-finite entries");
  const double defect = max_abs(rho - rho.adjoint());
  if (defect > tolerance::hermiticity) {
    std::ostringstream os;
    os << "not Hermitian (defect " << defect << ")";
    throw Error(ErrorCode::NotDensityMatrix, os.str());
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tolerance::trace) {
    std::ostringstream os;
    os << "trace " << tr.real() << " differs from 1";
    throw Error(ErrorCode::NotDensityMatrix, os.str());
  }
  const double lowest = eigenvalues(HermitianOperator::symmetrized(rho))[0];
  if (lowest < tolerance::psd_floor) {
    std::ostringstream os;
    os << "negative eigenvalue " << lowest;
    throw Error(ErrorCode::NotDensityMatrix, os.str());
  }
}

BipartiteState::BipartiteState(Dims dims, const Matrix& rho) : dims_(dims) {
  if (dims.a < 1 || dims.b < 1 || rho.rows() != dims.total() || rho.cols() != dims.total()) {
    std::ostringstream os;
    os << "matrix of size " << rho.rows() << "x" << rho.cols() << " does not match dims "
       << dims.a << "x" << dims.b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  validate_density_matrix(rho);
  rho_ = HermitianOperator::symmetrized(rho);
}

BipartiteState::BipartiteState(Dims dims, HermitianOperator rho)
    : BipartiteState(dims, rho.matrix()) {}

BipartiteState BipartiteState::swapped() const {
  return BipartiteState(dims_.swapped(), swap_factors(rho_.matrix(), dims_));
}

double BipartiteState::purity() const { return (rho_.matrix() * rho_.matrix()).trace().real(); }

PureStateEnsemble::PureStateEnsemble(Dims dims, std::vector<EnsembleMember> members)
    : dims_(dims), members_(std::move(members)) {
  std::vector<double> w;
  for (const auto& m : members_) {
    if (m.vector.size() != dims.total()) {
      throw Error(ErrorCode::DimensionMismatch, "ensemble vector has the wrong dimension");
    }
    if (std::abs(m.vector.norm() - 1.0) > tolerance::trace) {
      throw Error(ErrorCode::NotNormalized, "ensemble vectors must be unit vectors");
    }
    w.push_back(m.weight);
  }
  check_probabilities(w, "ensemble weights");
}

Matrix PureStateEnsemble::gram() const {
  const int n = static_cast<int>(members_.size());
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = members_[i].vector.dot(members_[j].vector);
  return g;
}

double PureStateEnsemble::max_overlap() const {
  const Matrix g = gram();
  double worst = 0.0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (i != j) worst = std::max(worst, std::abs(g(i, j)));
  return worst;
}

BipartiteState PureStateEnsemble::density() const {
  Matrix rho = Matrix::Zero(dims_.total(), dims_.total());
  for (const auto& m : members_) rho += m.weight * m.vector * m.vector.adjoint();
  return BipartiteState(dims_, rho);
}

BipartiteState example_state(double b, double c) {
  if (!std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidParameters, "b and c must be finite");
  }
  const Matrix rho = (Matrix::Identity(4, 4) + b * kron(pauli::z(), pauli::identity()) +
                      c * kron(pauli::x(), pauli::x())) /
                     4.0;
  const double lowest = eigenvalues(HermitianOperator::symmetrized(rho))[0];
  if (lowest < tolerance::psd_floor) {
    std::ostringstream os;
    os << "(b, c) = (" << b << ", " << c << ") gives eigenvalue " << lowest;
    throw Error(ErrorCode::InvalidParameters, os.str());
  }
  return BipartiteState({2, 2}, rho);
}

Vector bell_psi_plus() { return superpose(4, 1, 2, +1.0); }
Vector bell_psi_minus() { return superpose(4, 1, 2, -1.0); }

BipartiteState bell_mixture(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "mixing weight a must lie in [0, 1]");
  }
  const Vector plus = bell_psi_plus();
  const Vector minus = bell_psi_minus();
  return BipartiteState({2, 2}, a * plus * plus.adjoint() + (1.0 - a) * minus * minus.adjoint());
}

std::array<Vector, 9> teahouse_vectors() {
  const int d = 3;
  return {
      product(ket(d, 1), ket(d, 1)),
      product(ket(d, 0), superpose(d, 0, 1, +1)),
      product(ket(d, 0), superpose(d, 0, 1, -1)),
      product(ket(d, 2), superpose(d, 1, 2, +1)),
      product(ket(d, 2), superpose(d, 1, 2, -1)),
      product(superpose(d, 1, 2, +1), ket(d, 0)),
      product(superpose(d, 1, 2, -1), ket(d, 0)),
      product(superpose(d, 0, 1, +1), ket(d, 2)),
      product(superpose(d, 0, 1, -1), ket(d, 2)),
  };
}

PureStateEnsemble teahouse_ensemble(std::span<const double> weights) {
  if (weights.size() != 9) throw Error(ErrorCode::BadWeights, "teahouse ensemble needs 9 weights");
  check_probabilities(weights, "teahouse weights");
  const auto vectors = teahouse_vectors();
  std::vector<EnsembleMember> members;
  for (std::size_t i = 0; i < 9; ++i) members.push_back({weights[i], vectors[i]});
  PureStateEnsemble ensemble({3, 3}, std::move(members));
  if (ensemble.max_overlap() > 1e-12) {
    throw Error(ErrorCode::NonOrthogonalBasis, "teahouse vectors lost orthogonality");
  }
  return ensemble;
}

std::array<double, 9> teahouse_doubled_weights() {
  std::array<double, 9> w{};
  w.fill(1.0 / 11.0);
  w[6] = 2.0 / 11.0;
  w[8] = 2.0 / 11.0;
  return w;
}

BipartiteState zero_discord_state(std::span<const double> p, std::span<const Vector> basis_a,
                                  std::span<const HermitianOperator> sigmas_b) {
  if (p.empty() || p.size() != basis_a.size() || p.size() != sigmas_b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "p, basis_A and sigmas_B must have equal length");
  }
  const int da = static_cast<int>(basis_a[0].size());
  const int db = sigmas_b[0].dim();
  if (static_cast<int>(p.size()) > da) {
    throw Error(ErrorCode::DimensionMismatch, "more components than the dimension of A");
  }
  check_probabilities(p, "component probabilities");
  for (std::size_t i = 0; i < basis_a.size(); ++i) {
    if (basis_a[i].size() != da) throw Error(ErrorCode::DimensionMismatch, "basis vector size");
    if (sigmas_b[i].dim() != db) throw Error(ErrorCode::DimensionMismatch, "sigma_B size");
    for (std::size_t j = 0; j < basis_a.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(basis_a[i].dot(basis_a[j]) - expected) > tolerance::orthonormality) {
        throw Error(ErrorCode::NonOrthogonalBasis, "basis_A vectors are not orthonormal");
      }
    }
    validate_density_matrix(sigmas_b[i].matrix());
  }
  Matrix rho = Matrix::Zero(da * db, da * db);
  for (std::size_t i = 0; i < p.size(); ++i) {
    rho += p[i] * kron(basis_a[i] * basis_a[i].adjoint(), sigmas_b[i].matrix());
  }
  return BipartiteState({da, db}, rho);
}

BipartiteState classical_classical_state(const Eigen::MatrixXd& w) {
  if (w.size() == 0) throw Error(ErrorCode::BadWeights, "empty weight matrix");
  std::vector<double> flat(w.data(), w.data() + w.size());
  check_probabilities(flat, "joint weights");
  const int da = static_cast<int>(w.rows());
  const int db = static_cast<int>(w.cols());
  RealVector diag(da * db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) diag[a * db + b] = w(a, b);
  return BipartiteState({da, db}, HermitianOperator::diagonal(diag));
}

BipartiteState random_state(Dims dims, int rank, std::uint64_t seed) {
  const int n = dims.total();
  if (dims.a < 1 || dims.b < 1) throw Error(ErrorCode::DimensionMismatch, "dims must be positive");
  if (rank < 1 || rank > n) {
    std::ostringstream os;
    os << "rank " << rank << " outside [1, " << n << "]";
    throw Error(ErrorCode::BadRank, os.str());
  }
  const Matrix g = ginibre(n, rank, seed);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return BipartiteState(dims, rho);
}

Vector random_pure_vector(int dim, std::uint64_t seed) {
  Vector v = ginibre(dim, 1, seed).col(0);
  return v / v.norm();
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  const Matrix g = ginibre(dim, dim, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace discordant
