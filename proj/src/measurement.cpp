// SPDX-License-Identifier: Apache-2.0
#include "discordant/measurement.hpp"

#include <cmath>
#include <sstream>

namespace discordant {

namespace {

double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > tolerance::outcome_probability) h -= x * std::log2(x);
  return h;
}

// Eigenvalues of a small Hermitian block; closed form for 2x2.
RealVector small_spectrum(const Matrix& m) {
  if (m.rows() == 1) {
    RealVector v(1);
    v[0] = m(0, 0).real();
    return v;
  }
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    RealVector v(2);
    v << 0.5 * (a + d) - half_gap, 0.5 * (a + d) + half_gap;
    return v;
  }
  return eigenvalues(HermitianOperator::symmetrized(m));
}

// (v^dagger (x) 1) rho (v (x) 1) for side A.
Matrix conditional_block(const Matrix& rho, Dims dims, const Vector& v) {
  const int da = dims.a;
  const int db = dims.b;
  Matrix block = Matrix::Zero(db, db);
  for (int i = 0; i < da; ++i) {
    const Complex ci = std::conj(v[i]);
    if (ci == Complex(0.0)) continue;
    for (int j = 0; j < da; ++j) {
      const Complex w = ci * v[j];
      if (w == Complex(0.0)) continue;
      block.noalias() += w * rho.block(i * db, j * db, db, db);
    }
  }
  return block;
}

Matrix oriented(const BipartiteState& state, Subsystem measured) {
  return measured == Subsystem::A ? state.matrix() : swap_factors(state.matrix(), state.dims());
}

Dims oriented_dims(const BipartiteState& state, Subsystem measured) {
  return measured == Subsystem::A ? state.dims() : state.dims().swapped();
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(Subsystem subsystem, const Matrix& basis)
    : subsystem_(subsystem), basis_(basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0) {
    throw Error(ErrorCode::IncompleteBasis, "measurement basis must be a square matrix");
  }
  const double defect = max_abs(basis.adjoint() * basis - Matrix::Identity(dim(), dim()));
  if (defect > tolerance::orthonormality) {
    std::ostringstream os;
    os << "measurement vectors are not orthonormal (defect " << defect << ")";
    throw Error(ErrorCode::NonOrthogonalBasis, os.str());
  }
}

ProjectiveMeasurement ProjectiveMeasurement::computational(Subsystem subsystem, int dim) {
  return ProjectiveMeasurement(subsystem, Matrix::Identity(dim, dim));
}

std::vector<Matrix> ProjectiveMeasurement::projectors() const {
  std::vector<Matrix> out;
  for (int a = 0; a < dim(); ++a) out.push_back(projector(a));
  return out;
}

Matrix unitary_from_parameters(std::span<const double> params, int d) {
  if (d < 1 || static_cast<int>(params.size()) != parameter_count(d)) {
    std::ostringstream os;
    os << "expected " << parameter_count(d) << " parameters for d = " << d << ", got "
       << params.size();
    throw Error(ErrorCode::BadParameterCount, os.str());
  }
  Matrix u = Matrix::Identity(d, d);
  std::size_t k = 0;
  for (int p = 0; p < d; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const double theta = params[k++];
      const double phi = params[k++];
      const double c = std::cos(0.5 * theta);
      const double s = std::sin(0.5 * theta);
      const Complex e = std::polar(1.0, phi);
      // u <- u * G(p, q); only columns p and q change.
      const Vector col_p = u.col(p);
      const Vector col_q = u.col(q);
      u.col(p) = c * col_p + e * s * col_q;
      u.col(q) = -std::conj(e) * s * col_p + c * col_q;
    }
  }
  return u;
}

ProjectiveMeasurement from_parameters(std::span<const double> params, int d,
                                      Subsystem subsystem) {
  return ProjectiveMeasurement(subsystem, unitary_from_parameters(params, d));
}

ConditionalOutcome conditional_state(const BipartiteState& state, const ProjectiveMeasurement& m,
                                     int outcome) {
  const Subsystem measured = m.subsystem();
  const Dims dims = oriented_dims(state, measured);
  if (m.dim() != dims.a) throw Error(ErrorCode::DimensionMismatch, "measurement dimension");
  if (outcome < 0 || outcome >= m.outcomes()) {
    throw Error(ErrorCode::OutOfRange, "outcome index out of range");
  }
  const Matrix block = conditional_block(oriented(state, measured), dims, m.vector(outcome));
  ConditionalOutcome out;
  out.probability = std::max(0.0, block.trace().real());
  if (out.probability > tolerance::outcome_probability) {
    out.state = HermitianOperator::symmetrized(block / out.probability);
  }
  return out;
}

BipartiteState post_measurement_state(const BipartiteState& state,
                                      const ProjectiveMeasurement& m) {
  const Dims dims = state.dims();
  if (m.dim() != dims.of(m.subsystem())) {
    throw Error(ErrorCode::DimensionMismatch, "measurement dimension");
  }
  const int other_dim = dims.of(other(m.subsystem()));
  const Matrix id = Matrix::Identity(other_dim, other_dim);
  Matrix out = Matrix::Zero(dims.total(), dims.total());
  for (int a = 0; a < m.outcomes(); ++a) {
    const Matrix p = m.subsystem() == Subsystem::A ? kron(m.projector(a), id)
                                                   : kron(id, m.projector(a));
    out += p * state.matrix() * p;
  }
  return BipartiteState(dims, HermitianOperator::symmetrized(out));
}

HermitianOperator dephase(const HermitianOperator& rho, const Matrix& basis) {
  if (basis.rows() != rho.dim() || basis.cols() != rho.dim()) {
    throw Error(ErrorCode::IncompleteBasis, "dephasing basis must span the space");
  }
  if (max_abs(basis.adjoint() * basis - Matrix::Identity(rho.dim(), rho.dim())) >
      tolerance::orthonormality) {
    throw Error(ErrorCode::IncompleteBasis, "dephasing basis is not orthonormal");
  }
  const Matrix in_basis = basis.adjoint() * rho.matrix() * basis;
  const Matrix diag = in_basis.diagonal().asDiagonal();
  return HermitianOperator::symmetrized(basis * diag * basis.adjoint());
}

std::vector<double> outcome_distribution(const HermitianOperator& rho, const Matrix& basis) {
  std::vector<double> p;
  for (int a = 0; a < basis.cols(); ++a) {
    p.push_back(std::max(0.0, (basis.col(a).adjoint() * rho.matrix() * basis.col(a))(0, 0).real()));
  }
  return p;
}

double MeasurementStatistics::outcome_entropy() const { return shannon_bits(probabilities); }

double MeasurementStatistics::conditional_entropy() const {
  double s = 0.0;
  for (std::size_t a = 0; a < probabilities.size(); ++a) {
    s += probabilities[a] * conditional_entropies[a];
  }
  return s;
}

MeasurementStatistics measure_side_a(const Matrix& rho, Dims dims, const Matrix& basis) {
  MeasurementStatistics stats;
  stats.probabilities.reserve(basis.cols());
  stats.conditional_entropies.reserve(basis.cols());
  for (int a = 0; a < basis.cols(); ++a) {
    const Matrix block = conditional_block(rho, dims, basis.col(a));
    const double p = std::max(0.0, block.trace().real());
    double s = 0.0;
    if (p > tolerance::outcome_probability) {
      s = entropy_of_spectrum(small_spectrum(block / p));
    }
    stats.probabilities.push_back(p <= tolerance::outcome_probability ? 0.0 : p);
    stats.conditional_entropies.push_back(s);
  }
  return stats;
}

MeasurementStatistics measurement_statistics(const BipartiteState& state,
                                             const ProjectiveMeasurement& m) {
  const Dims dims = oriented_dims(state, m.subsystem());
  if (m.dim() != dims.a) throw Error(ErrorCode::DimensionMismatch, "measurement dimension");
  return measure_side_a(oriented(state, m.subsystem()), dims, m.basis());
}

}  // namespace discordant
