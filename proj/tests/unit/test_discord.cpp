// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "discordant/correlations.hpp"
#include "discordant/discord.hpp"
#include "qubit_oracle.hpp"

using namespace discordant;

namespace {

// Frozen with tests/oracles/frozen_values.py (numpy eigvalsh + scipy
// Nelder-Mead over Bloch directions).
constexpr double kH2Quarter = 0.8112781244591328;
constexpr double kExampleJointEntropy = 1.600876036692856;
constexpr double kExampleD1 = 0.02168021222540939;
constexpr double kExampleD2 = 0.19956198165357164;
constexpr double kExampleD3 = 0.2104020877662769;

ProjectiveMeasurement sigma_x_basis() {
  const std::vector<double> params{std::numbers::pi / 2, 0.0};
  return from_parameters(params, 2);
}

oracle::M4 to_fixed(const BipartiteState& s) { return s.matrix(); }

BipartiteState constructed_zero(std::uint64_t seed, Dims dims, bool degenerate) {
  const Matrix u = random_unitary(dims.a, seed);
  std::vector<double> p(dims.a);
  double sum = 0.0;
  for (int a = 0; a < dims.a; ++a) sum += p[a] = degenerate ? 1.0 : 1.0 + a + 0.37 * a * a;
  for (double& x : p) x /= sum;
  std::vector<Vector> basis;
  std::vector<HermitianOperator> sigmas;
  for (int a = 0; a < dims.a; ++a) {
    basis.emplace_back(u.col(a));
    sigmas.push_back(random_state({dims.b, 1}, 1 + (seed + a) % dims.b, seed * 31 + a).rho());
  }
  return zero_discord_state(p, basis, sigmas);
}

BipartiteState pure_state(Dims dims, std::uint64_t seed) {
  const Vector v = random_pure_vector(dims.total(), seed);
  return BipartiteState(dims, v * v.adjoint());
}

OptimizerConfig quick_config() {
  OptimizerConfig c;
  c.restarts = 8;
  return c;
}

}  // namespace

TEST_CASE("discord at fixed measurements on the b = c = 1/2 example") {
  const BipartiteState s = example_state(0.5, 0.5);
  const auto z = ProjectiveMeasurement::computational(Subsystem::A, 2);
  const MeasuredDiscord d1z = discord_d1_at(s, z);
  CHECK(d1z.value == doctest::Approx(kH2Quarter + 1.0 - kExampleJointEntropy).epsilon(1e-12));
  CHECK(d1z.value == doctest::Approx(kExampleD3).epsilon(1e-12));

  const MeasuredDiscord d2x = discord_d2_at(s, sigma_x_basis());
  CHECK(d2x.value == doctest::Approx(1.0 + kH2Quarter - kExampleJointEntropy).epsilon(1e-12));
  CHECK(d2x.formula_gap <= 1e-9);
  CHECK(discord_d1_at(s, sigma_x_basis()).value == doctest::Approx(kExampleD1).epsilon(1e-10));
}

TEST_CASE("fixed-measurement identities") {
  SUBCASE("zero-discord state at its defining basis") {
    const BipartiteState s = constructed_zero(7, {2, 3}, false);
    const ProjectiveMeasurement m(Subsystem::A, eig(s.marginal(Subsystem::A)).vectors);
    CHECK(std::abs(discord_d1_at(s, m).value) < 1e-10);
  }
  SUBCASE("Bell state: D1 = 1 at every measurement") {
    for (int k = 0; k < 10; ++k) {
      const auto m = from_parameters(random_angles(11, k, 2), 2);
      CHECK(discord_d1_at(bell_mixture(1.0), m).value == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("D2 = D1 at the marginal eigenbasis") {
    for (int k = 0; k < 20; ++k) {
      const BipartiteState s = random_state({2, 3}, 6, 90 + k);
      const ProjectiveMeasurement m(Subsystem::A, eig(s.marginal(Subsystem::A)).vectors);
      CHECK(std::abs(discord_d2_at(s, m).value - discord_d1_at(s, m).value) < 1e-10);
    }
  }
  SUBCASE("D1 = D2 - [H(A^Pi) - S_A], J = I(post), both D2 forms agree") {
    for (int k = 0; k < 100; ++k) {
      const Dims dims = k % 3 == 0 ? Dims{3, 2} : Dims{2, 2};
      const BipartiteState s = random_state(dims, 1 + k % dims.total(), 2000 + k);
      const auto m = from_parameters(random_angles(21, k, parameter_count(dims.a)), dims.a);
      const MeasuredDiscord d1 = discord_d1_at(s, m);
      const MeasuredDiscord d2 = discord_d2_at(s, m);
      const double h = measurement_statistics(s, m).outcome_entropy();
      const double s_a = von_neumann_entropy(s.marginal(Subsystem::A));
      CHECK(std::abs(d1.value - (d2.value - (h - s_a))) <= 1e-9);
      CHECK(std::abs(d1.j_value - mutual_information(post_measurement_state(s, m))) <= 1e-9);
      CHECK(d2.formula_gap <= 1e-9);
    }
  }
  SUBCASE("side B is side A of the swapped state") {
    const BipartiteState s = random_state({2, 3}, 4, 5);
    const auto mb = from_parameters(random_angles(1, 1, 6), 3, Subsystem::B);
    const ProjectiveMeasurement ma(Subsystem::A, mb.basis());
    CHECK(discord_d1_at(s, mb).value == doctest::Approx(discord_d1_at(s.swapped(), ma).value).epsilon(1e-12));
  }
  SUBCASE("dimension mismatch") {
    const BipartiteState s = random_state({2, 3}, 4, 5);
    CHECK_THROWS_AS(discord_d1_at(s, ProjectiveMeasurement::computational(Subsystem::A, 3)), Error);
  }
}

TEST_CASE("optimized discord on the b = c = 1/2 example") {
  const BipartiteState s = example_state(0.5, 0.5);
  const DiscordReport d1 = optimize_discord(DiscordMeasure::D1, s, Subsystem::A);
  const DiscordReport d2 = optimize_discord(DiscordMeasure::D2, s, Subsystem::A);
  const DiscordReport d3 = discord_d3(s, Subsystem::A);
  CHECK(d1.value == doctest::Approx(kExampleD1).epsilon(1e-8));
  CHECK(d2.value == doctest::Approx(kExampleD2).epsilon(1e-8));
  CHECK(d3.value == doctest::Approx(kExampleD3).epsilon(1e-12));
  CHECK(std::abs(*d3.alternate_form - d3.value) <= 1e-9);
  CHECK_FALSE(d3.degenerate);
  REQUIRE(d1.optimal_measurement);
  CHECK(std::abs(discord_d1_at(s, *d1.optimal_measurement).value - d1.value) <= 1e-8);
  CHECK(d1.diagnostics.restarts_used == 21);
  CHECK(d1.diagnostics.best_per_restart.size() == 21);
  CHECK(one_way_deficit(s, Subsystem::A) == doctest::Approx(kExampleD2).epsilon(1e-8));
  // measuring B: the state is classical on B
  CHECK(optimize_discord(DiscordMeasure::D1, s, Subsystem::B).value <= 1e-7);
}

TEST_CASE("optimizer is deterministic for a fixed seed") {
  const BipartiteState s = random_state({2, 3}, 6, 3);
  OptimizerConfig c = quick_config();
  c.threads = 3;
  const DiscordReport a = optimize_discord(DiscordMeasure::D2, s, Subsystem::A, c);
  c.threads = 1;
  const DiscordReport b = optimize_discord(DiscordMeasure::D2, s, Subsystem::A, c);
  CHECK(a.value == b.value);
  CHECK(a.diagnostics.best_per_restart == b.diagnostics.best_per_restart);
  CHECK(max_abs(a.optimal_measurement->basis() - b.optimal_measurement->basis()) == 0.0);
}

TEST_CASE("Bell mixtures: closed form, literal form and optimizer") {
  CHECK(bell_mixture_discord_closed_form(0.5) == doctest::Approx(0.0));
  CHECK(bell_mixture_discord_closed_form(0.0) == doctest::Approx(1.0));
  CHECK(bell_mixture_discord_closed_form(1.0) == doctest::Approx(1.0));
  CHECK(bell_mixture_discord_closed_form(0.25) == doctest::Approx(1.0 - kH2Quarter).epsilon(1e-14));
  CHECK_THROWS_AS(bell_mixture_discord_closed_form(1.2), Error);
  // the literal expression equals 1 at a = 1/2 instead of 0
  CHECK(bell_mixture_discord_literal_form(0.5) == doctest::Approx(1.0));

  for (double a : {0.1, 0.25, 0.4}) {
    const BipartiteState s = bell_mixture(a);
    const double oracle = oracle::d1_grid(to_fixed(s));
    CHECK(oracle == doctest::Approx(bell_mixture_discord_closed_form(a)).epsilon(1e-6));
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
      CHECK(std::abs(optimize_discord(DiscordMeasure::D1, s, side).value -
                     bell_mixture_discord_closed_form(a)) <= 1e-4);
      CHECK(std::abs(optimize_discord(DiscordMeasure::D2, s, side).value -
                     bell_mixture_discord_closed_form(a)) <= 1e-4);
    }
  }
}

TEST_CASE("D3 cases") {
  SUBCASE("zero-discord state") {
    CHECK(std::abs(discord_d3(constructed_zero(12, {3, 2}, false), Subsystem::A).value) < 1e-9);
  }
  SUBCASE("pure states: every measure equals the entanglement entropy") {
    for (int k = 0; k < 10; ++k) {
      const Dims dims = k % 2 ? Dims{2, 2} : Dims{2, 3};
      const BipartiteState phi = pure_state(dims, 50 + k);
      const double e = von_neumann_entropy(phi.marginal(Subsystem::A));
      CHECK(std::abs(discord_d3(phi, Subsystem::A).value - e) <= 1e-6);
      CHECK(std::abs(optimize_discord(DiscordMeasure::D1, phi, Subsystem::A, quick_config()).value - e) <= 1e-6);
      CHECK(std::abs(optimize_discord(DiscordMeasure::D2, phi, Subsystem::A, quick_config()).value - e) <= 1e-6);
    }
  }
  SUBCASE("degenerate marginal sets the flag and brackets the value") {
    const BipartiteState s = bell_mixture(0.3);
    const DiscordReport d3 = discord_d3(s, Subsystem::A, quick_config());
    CHECK(d3.degenerate);
    REQUIRE(d3.degenerate_infimum);
    CHECK(*d3.degenerate_infimum <= d3.value + 1e-12);
    CHECK(*d3.degenerate_infimum == doctest::Approx(bell_mixture_discord_closed_form(0.3)).epsilon(1e-6));
  }
}

TEST_CASE("D3 symmetric") {
  Eigen::MatrixXd w(2, 3);
  w << 0.1, 0.2, 0.05, 0.3, 0.15, 0.2;
  CHECK(std::abs(discord_d3_symmetric(classical_classical_state(w)).value) < 1e-12);
  const DiscordReport bell = discord_d3_symmetric(bell_mixture(1.0));
  CHECK(bell.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bell.degenerate);
  for (int k = 0; k < 20; ++k) {
    const BipartiteState s = random_state({2, 2}, 4, 800 + k);
    const DiscordReport sym = discord_d3_symmetric(s);
    CHECK(sym.value >= -1e-9);
    CHECK(std::abs(*sym.alternate_form - sym.value) <= 1e-9);
    CHECK(sym.value >= optimize_discord(DiscordMeasure::D1, s, Subsystem::A, quick_config()).value - 1e-7);
  }
}

TEST_CASE("optimizer agrees with the brute-force grid on two-qubit states") {
  for (int k = 0; k < 10; ++k) {
    const BipartiteState s = random_state({2, 2}, 1 + k % 4, 9100 + k);
    const double grid = oracle::d1_grid(to_fixed(s));
    CHECK(std::abs(optimize_discord(DiscordMeasure::D1, s, Subsystem::A).value - grid) <= 1e-5);
  }
}

TEST_CASE("ordering and maximally mixed marginal") {
  for (int k = 0; k < 20; ++k) {
    const Dims dims = k % 2 ? Dims{2, 2} : Dims{2, 3};
    const BipartiteState s = random_state(dims, dims.total(), 4400 + k);
    const double d1 = optimize_discord(DiscordMeasure::D1, s, Subsystem::A, quick_config()).value;
    const double d2 = optimize_discord(DiscordMeasure::D2, s, Subsystem::A, quick_config()).value;
    const double d3 = discord_d3(s, Subsystem::A).value;
    CHECK(d1 <= d2 + 1e-7);
    CHECK(d2 <= d3 + 1e-7);
  }
  // rho_A = 1/2 for the Bell-diagonal family
  for (double a : {0.15, 0.35, 0.8}) {
    const BipartiteState s = bell_mixture(a);
    CHECK(std::abs(optimize_discord(DiscordMeasure::D1, s, Subsystem::A).value -
                   optimize_discord(DiscordMeasure::D2, s, Subsystem::A).value) <= 1e-6);
  }
}

TEST_CASE("classification") {
  SUBCASE("teahouse equal weights: zero on both sides") {
    std::vector<double> w(9, 1.0 / 9.0);
    const BipartiteState s = teahouse_ensemble(w).density();
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
      const ZeroDiscordVerdict v = classify_zero_discord(s, side);
      CHECK(v.verdict == Verdict::Zero);
      CHECK(v.method == VerdictMethod::Eigenstructure);
      CHECK(v.witness.has_value());
    }
  }
  SUBCASE("teahouse doubled: nonzero by commutator") {
    const auto w = teahouse_doubled_weights();
    const ZeroDiscordVerdict v = classify_zero_discord(teahouse_ensemble(w).density(), Subsystem::A);
    CHECK(v.verdict == Verdict::Nonzero);
    CHECK(v.method == VerdictMethod::Commutator);
    CHECK(v.commutator_norm > 1e-8);
  }
  SUBCASE("Bell mixtures") {
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
      CHECK(classify_zero_discord(bell_mixture(0.5), side).verdict == Verdict::Zero);
      const ZeroDiscordVerdict v = classify_zero_discord(bell_mixture(0.3), side);
      CHECK(v.verdict == Verdict::Nonzero);
      CHECK(v.method == VerdictMethod::Eigenstructure);
    }
  }
  SUBCASE("non-degenerate zero-discord state uses the eigenbasis") {
    const ZeroDiscordVerdict v = classify_zero_discord(constructed_zero(40, {3, 2}, false), Subsystem::A);
    CHECK(v.verdict == Verdict::Zero);
    CHECK(v.method == VerdictMethod::Eigenbasis);
    REQUIRE(v.residual_discord);
    CHECK(std::abs(*v.residual_discord) < 1e-9);
  }
  SUBCASE("degenerate zero-discord state is found through the block structure") {
    for (int k = 0; k < 10; ++k) {
      const BipartiteState s = constructed_zero(60 + k, {2, 2}, true);
      const ZeroDiscordVerdict v = classify_zero_discord(s, Subsystem::A);
      CHECK(v.verdict == Verdict::Zero);
      CHECK(v.method == VerdictMethod::Eigenstructure);
      REQUIRE(v.residual_discord);
      CHECK(std::abs(*v.residual_discord) < 1e-7);
    }
  }
  SUBCASE("a perturbation near the threshold is ambiguous") {
    const BipartiteState zero = constructed_zero(5, {2, 2}, false);
    const BipartiteState noise = random_state({2, 2}, 4, 6);
    const double eps = 1e-7;
    const BipartiteState mixed({2, 2}, (1 - eps) * zero.matrix() + eps * noise.matrix());
    const ZeroDiscordVerdict v = classify_zero_discord(mixed, Subsystem::A);
    CHECK(v.verdict == Verdict::Ambiguous);
  }
}
