// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace discordant::tolerance {

// Max-abs deviation of an operator from its adjoint.
inline constexpr double hermiticity = 1e-12;
// Eigenvalues in [psd_floor, support_clip] are treated as exact zeros; anything
// below psd_floor is a genuine negative eigenvalue.
inline constexpr double psd_floor = -1e-10;
inline constexpr double support_clip = 1e-12;
inline constexpr double trace = 1e-10;
// Adjacent eigenvalues closer than this belong to the same degeneracy group.
inline constexpr double degeneracy_gap = 1e-8;
inline constexpr double orthonormality = 1e-10;
// Outcomes at or below this probability are treated as impossible.
inline constexpr double outcome_probability = 1e-12;
// Weight of rho_AB allowed outside the support of rho_A (x) 1_B.
inline constexpr double support_leak = 1e-10;

// Zero-discord classification.
inline constexpr double commutator = 1e-8;
inline constexpr double zero_discord = 1e-7;
inline constexpr double ambiguity_factor = 10.0;

}  // namespace discordant::tolerance
