// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "discordant/error.hpp"
#include "discordant/tolerances.hpp"

namespace discordant {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }
inline char to_char(Subsystem s) { return s == Subsystem::A ? 'A' : 'B'; }

/// Tensor factorization d_A x d_B of a bipartite Hilbert space.
struct Dims {
  int a = 0;
  int b = 0;

  int total() const { return a * b; }
  int of(Subsystem s) const { return s == Subsystem::A ? a : b; }
  Dims swapped() const { return {b, a}; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Dense Hermitian operator. Construction validates Hermiticity and stores the
/// exactly symmetrized matrix (X + X^dagger) / 2.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const Matrix& entries, double tol = tolerance::hermiticity);

  /// Symmetrizes without checking; for results of exact-in-theory algebra.
  static HermitianOperator symmetrized(const Matrix& entries);
  static HermitianOperator identity(int dim);
  static HermitianOperator diagonal(const RealVector& values);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  Complex trace() const { return m_.trace(); }

 private:
  Matrix m_;
};

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // column i pairs with values[i]
  std::vector<std::vector<int>> degeneracy_groups;

  int dim() const { return static_cast<int>(values.size()); }
  bool degenerate() const;
  Matrix reconstruct() const;
};

/// Spectral decomposition with a reproducible gauge:
///  - eigenvalues ascending; adjacent values within tolerance::degeneracy_gap
///    form one degeneracy group;
///  - inside a group of size > 1 the basis is replaced by Gram-Schmidt on the
///    columns of the group projector, so it does not depend on solver internals;
///  - every vector has its first component with modulus > 1e-8 made real
///    positive;
///  - vectors within a group are ordered by descending lexicographic order of
///    their (re, im) entries.
EigenSystem eig(const HermitianOperator& h);

/// Eigenvalues only, ascending.
RealVector eigenvalues(const HermitianOperator& h);

/// f applied to the spectrum: V f(Lambda) V^dagger.
HermitianOperator apply_spectral(const EigenSystem& es, const std::function<double(double)>& f);

/// Base-2 logarithm on the support. Eigenvalues <= clip map to 0; eigenvalues
/// below tolerance::psd_floor raise NotPositiveSemidefinite.
HermitianOperator matrix_log_on_support(const HermitianOperator& h,
                                        double clip = tolerance::support_clip);

/// Base-2 spectral exponential, the inverse of matrix_log_on_support on
/// full-rank positive operators.
HermitianOperator matrix_exp(const HermitianOperator& h);

Matrix kron(const Matrix& x, const Matrix& y);
HermitianOperator tensor(const HermitianOperator& x, const HermitianOperator& y);

HermitianOperator partial_trace(const HermitianOperator& h, Dims dims, Subsystem keep);
Matrix partial_trace(const Matrix& h, Dims dims, Subsystem keep);

/// Reorders the tensor factors: an operator on A (x) B becomes one on B (x) A.
Matrix swap_factors(const Matrix& h, Dims dims);

/// Max-abs entry of XY - YX.
double commutator_norm(const Matrix& x, const Matrix& y);
double commutator_norm(const HermitianOperator& x, const HermitianOperator& y);

double max_abs(const Matrix& m);

/// Entropy in bits of a spectrum; entries <= clip contribute nothing.
double entropy_of_spectrum(const RealVector& values, double clip = tolerance::support_clip);

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

}  // namespace discordant
