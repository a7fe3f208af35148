// SPDX-License-Identifier: Apache-2.0
#include "discordant/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace discordant {

namespace {

constexpr double kPhaseThreshold = 1e-8;
constexpr double kLexTieThreshold = 1e-10;

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void fix_phase(Eigen::Ref<Vector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > kPhaseThreshold) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      v[i] = std::abs(v[i]);
      return;
    }
  }
}

// True when u precedes w in descending lexicographic (re, im) order.
bool lex_before(const Vector& u, const Vector& w) {
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double dr = u[i].real() - w[i].real();
    if (std::abs(dr) > kLexTieThreshold) return dr > 0;
    const double di = u[i].imag() - w[i].imag();
    if (std::abs(di) > kLexTieThreshold) return di > 0;
  }
  return false;
}

// Orthonormal basis of the range of a projector, built from its columns in
// index order.
Matrix canonical_basis(const Matrix& projector, int rank) {
  const int n = static_cast<int>(projector.rows());
  Matrix basis(n, rank);
  int found = 0;
  for (int j = 0; j < n && found < rank; ++j) {
    Vector v = projector.col(j);
    for (int k = 0; k < found; ++k) v -= basis.col(k) * basis.col(k).dot(v);
    for (int k = 0; k < found; ++k) v -= basis.col(k) * basis.col(k).dot(v);
    const double norm = v.norm();
    if (norm > 1e-6) basis.col(found++) = v / norm;
  }
  // Numerically impossible for a rank-r projector, but keep the solver basis
  // rather than return garbage.
  if (found < rank) return Matrix();
  return basis;
}

}  // namespace

HermitianOperator::HermitianOperator(const Matrix& entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "operator must be a non-empty square matrix");
  }
  const double defect = hermiticity_defect(entries);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "max |X - X^dagger| = " << defect << " exceeds " << tol;
    throw Error(ErrorCode::NonHermitian, os.str());
  }
  m_ = (entries + entries.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::symmetrized(const Matrix& entries) {
  HermitianOperator h;
  h.m_ = (entries + entries.adjoint()) * 0.5;
  return h;
}

HermitianOperator HermitianOperator::identity(int dim) {
  return symmetrized(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(const RealVector& values) {
  return symmetrized(values.cast<Complex>().asDiagonal().toDenseMatrix());
}

bool EigenSystem::degenerate() const {
  return std::any_of(degeneracy_groups.begin(), degeneracy_groups.end(),
                     [](const auto& g) { return g.size() > 1; });
}

Matrix EigenSystem::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

EigenSystem eig(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  EigenSystem es;
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  const int n = h.dim();

  std::vector<int> current{0};
  for (int i = 1; i < n; ++i) {
    if (es.values[i] - es.values[i - 1] < tolerance::degeneracy_gap) {
      current.push_back(i);
    } else {
      es.degeneracy_groups.push_back(current);
      current = {i};
    }
  }
  es.degeneracy_groups.push_back(current);

  for (const auto& group : es.degeneracy_groups) {
    const int first = group.front();
    const int size = static_cast<int>(group.size());
    if (size > 1) {
      const Matrix block = es.vectors.middleCols(first, size);
      const Matrix projector = block * block.adjoint();
      Matrix basis = canonical_basis(projector, size);
      if (basis.size() != 0) es.vectors.middleCols(first, size) = basis;
    }
    for (int i : group) fix_phase(es.vectors.col(i));
    if (size > 1) {
      std::vector<Vector> cols;
      for (int i : group) cols.emplace_back(es.vectors.col(i));
      std::stable_sort(cols.begin(), cols.end(), lex_before);
      for (int k = 0; k < size; ++k) {
        es.vectors.col(first + k) = cols[k];
        es.values[first + k] = (cols[k].adjoint() * h.matrix() * cols[k])(0, 0).real();
      }
    }
  }
  return es;
}

RealVector eigenvalues(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

HermitianOperator apply_spectral(const EigenSystem& es, const std::function<double(double)>& f) {
  RealVector mapped(es.dim());
  for (int i = 0; i < es.dim(); ++i) mapped[i] = f(es.values[i]);
  return HermitianOperator::symmetrized(es.vectors * mapped.cast<Complex>().asDiagonal() *
                                        es.vectors.adjoint());
}

HermitianOperator matrix_log_on_support(const HermitianOperator& h, double clip) {
  const EigenSystem es = eig(h);
  if (es.values[0] < tolerance::psd_floor) {
    std::ostringstream os;
    os << "eigenvalue " << es.values[0] << " below " << tolerance::psd_floor;
    throw Error(ErrorCode::NotPositiveSemidefinite, os.str());
  }
  return apply_spectral(es, [clip](double x) { return x <= clip ? 0.0 : std::log2(x); });
}

HermitianOperator matrix_exp(const HermitianOperator& h) {
  return apply_spectral(eig(h), [](double x) { return std::exp2(x); });
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

HermitianOperator tensor(const HermitianOperator& x, const HermitianOperator& y) {
  return HermitianOperator::symmetrized(kron(x.matrix(), y.matrix()));
}

Matrix partial_trace(const Matrix& h, Dims dims, Subsystem keep) {
  if (h.rows() != dims.total() || h.cols() != dims.total()) {
    std::ostringstream os;
    os << "operator of size " << h.rows() << " does not factor as " << dims.a << "x" << dims.b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const int da = dims.a;
  const int db = dims.b;
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) out(i, j) = h.block(i * db, j * db, db, db).trace();
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (int i = 0; i < da; ++i) out += h.block(i * db, i * db, db, db);
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& h, Dims dims, Subsystem keep) {
  return HermitianOperator::symmetrized(partial_trace(h.matrix(), dims, keep));
}

Matrix swap_factors(const Matrix& h, Dims dims) {
  const int da = dims.a;
  const int db = dims.b;
  Matrix out(h.rows(), h.cols());
  for (int a1 = 0; a1 < da; ++a1)
    for (int b1 = 0; b1 < db; ++b1)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2)
          out(b1 * da + a1, b2 * da + a2) = h(a1 * db + b1, a2 * db + b2);
  return out;
}

double commutator_norm(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator of operators with different sizes");
  }
  return max_abs(x * y - y * x);
}

double commutator_norm(const HermitianOperator& x, const HermitianOperator& y) {
  return commutator_norm(x.matrix(), y.matrix());
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double entropy_of_spectrum(const RealVector& values, double clip) {
  double s = 0.0;
  for (double x : values) {
    if (x > clip) s -= x * std::log2(x);
  }
  return s;
}

namespace pauli {
Matrix identity() { return Matrix::Identity(2, 2); }
Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
Matrix y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

}  // namespace discordant
