// SPDX-License-Identifier: Apache-2.0
//
// Brute-force discord for two-qubit states. Measurements are Bloch directions
// n(theta, phi) with projectors (1 +- n.sigma)/2; conditional states are
// reduced to Bloch vectors and their entropies use the binary entropy of
// (1 + |r|)/2. Only plain Eigen is used, never the library under test.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;

inline double h2(double p) {
  double h = 0.0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

inline double entropy4(const M4& rho) {
  Eigen::SelfAdjointEigenSolver<M4> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double x = es.eigenvalues()[i];
    if (x > 1e-12) s -= x * std::log2(x);
  }
  return s;
}

inline std::array<M2, 3> paulis() {
  M2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, C(0, -1), C(0, 1), 0;
  z << 1, 0, 0, -1;
  return {x, y, z};
}

// Entropy of a qubit state from its Bloch vector length.
inline double qubit_entropy(const M2& rho) {
  const auto s = paulis();
  double r2 = 0.0;
  for (const auto& p : s) r2 += std::norm((p * rho).trace());
  const double r = std::min(1.0, std::sqrt(r2));
  return h2(0.5 * (1.0 + r));
}

inline M2 reduce_a(const M4& rho) {
  M2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

inline M2 reduce_b(const M4& rho) { return rho.block<2, 2>(0, 0) + rho.block<2, 2>(2, 2); }

inline M4 kron(const M2& a, const M2& b) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

struct Functional {
  M4 rho;
  double s_a;
  double s_ab;

  explicit Functional(const M4& r) : rho(r), s_a(qubit_entropy(reduce_a(r))), s_ab(entropy4(r)) {}

  // D1 at direction (theta, phi) on side A.
  double d1(double theta, double phi) const {
    const auto s = paulis();
    const M2 ns = std::sin(theta) * std::cos(phi) * s[0] + std::sin(theta) * std::sin(phi) * s[1] +
                  std::cos(theta) * s[2];
    double cond = 0.0;
    for (double sign : {1.0, -1.0}) {
      const M4 p = kron((M2::Identity() + sign * ns) / 2.0, M2::Identity());
      const M4 m = p * rho * p;
      const double prob = m.trace().real();
      if (prob > 1e-12) cond += prob * qubit_entropy(reduce_b(m) / prob);
    }
    return s_a + cond - s_ab;
  }
};

/// min over a theta x phi grid, then repeated local zooms around the best cell.
inline double d1_grid(const M4& rho, int n_theta = 200, int n_phi = 400, int zooms = 40) {
  const Functional f(rho);
  const double pi = std::numbers::pi;
  double best = 1e300, bt = 0, bp = 0;
  for (int i = 0; i <= n_theta; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const double t = pi * i / n_theta;
      const double p = 2 * pi * j / n_phi;
      const double v = f.d1(t, p);
      if (v < best) best = v, bt = t, bp = p;
    }
  }
  double dt = pi / n_theta, dp = 2 * pi / n_phi;
  for (int z = 0; z < zooms; ++z) {
    const double ct = bt, cp = bp;
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) {
        const double t = ct + dt * i / 5.0;
        const double p = cp + dp * j / 5.0;
        const double v = f.d1(t, p);
        if (v < best) best = v, bt = t, bp = p;
      }
    }
    dt *= 0.5;
    dp *= 0.5;
  }
  return best;
}

}  // namespace oracle
