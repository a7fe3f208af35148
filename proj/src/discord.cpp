// SPDX-License-Identifier: Apache-2.0
#include "discordant/discord.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "discordant/correlations.hpp"

namespace discordant {

namespace {

constexpr double kInitialStep = 0.5;
constexpr int kDegenerateBracketRestarts = 50;

double spectrum_entropy(const Matrix& m) {
  return entropy_of_spectrum(eigenvalues(HermitianOperator::symmetrized(m)));
}

// The state viewed with the measured side as the first tensor factor.
struct Oriented {
  Matrix rho;
  Dims dims;
  HermitianOperator marginal;  // measured side
  double s_measured = 0.0;
  double s_other = 0.0;
  double s_joint = 0.0;
};

Oriented orient(const BipartiteState& state, Subsystem side) {
  Oriented o;
  o.dims = side == Subsystem::A ? state.dims() : state.dims().swapped();
  o.rho = side == Subsystem::A ? state.matrix() : swap_factors(state.matrix(), state.dims());
  o.marginal = state.marginal(side);
  o.s_measured = entropy_of_spectrum(eigenvalues(o.marginal));
  o.s_other = entropy_of_spectrum(eigenvalues(state.marginal(other(side))));
  o.s_joint = entropy_of_spectrum(eigenvalues(state.rho()));
  return o;
}

void check_side(const BipartiteState& state, const ProjectiveMeasurement& m) {
  if (m.dim() != state.dims().of(m.subsystem())) {
    throw Error(ErrorCode::DimensionMismatch, "measurement does not act on the measured subsystem");
  }
}

// Unitary that is block diagonal over contiguous index groups, each block a
// chart unitary of the group's size.
Matrix block_chart(std::span<const double> params, const std::vector<std::vector<int>>& groups,
                   int d) {
  Matrix u = Matrix::Identity(d, d);
  std::size_t offset = 0;
  for (const auto& g : groups) {
    const int size = static_cast<int>(g.size());
    const int count = parameter_count(size);
    if (count > 0) {
      u.block(g.front(), g.front(), size, size) =
          unitary_from_parameters(params.subspan(offset, count), size);
    }
    offset += count;
  }
  return u;
}

int block_parameter_count(const std::vector<std::vector<int>>& groups) {
  int n = 0;
  for (const auto& g : groups) n += parameter_count(static_cast<int>(g.size()));
  return n;
}

struct Start {
  Matrix base;
  std::vector<double> x0;
};

struct MultistartResult {
  Matrix basis;
  double value = 0.0;
  OptimizerDiagnostics diagnostics;
};

// Minimizes value(base * chart(x)) over all starts.
MultistartResult multistart(const std::vector<Start>& starts,
                            const std::function<Matrix(const Start&, std::span<const double>)>& chart,
                            const std::function<double(const Matrix&)>& value,
                            const OptimizerConfig& config) {
  std::vector<LocalMinimum> minima(starts.size());
  parallel_for(static_cast<int>(starts.size()), config.threads, [&](int i) {
    const Start& start = starts[i];
    const Objective f = [&](std::span<const double> x) { return value(chart(start, x)); };
    minima[i] = nelder_mead(f, start.x0, kInitialStep, config.simplex_tolerance,
                            config.max_evaluations);
  });

  MultistartResult result;
  std::vector<double> values;
  for (const auto& m : minima) {
    values.push_back(m.value);
    result.diagnostics.best_per_restart.push_back(m.value);
    result.diagnostics.evaluations_per_restart.push_back(m.evaluations);
  }
  const int best = best_index(values);
  result.diagnostics.restarts_used = static_cast<int>(starts.size());
  result.diagnostics.best_restart = best;
  result.diagnostics.converged = minima[best].converged;
  result.basis = chart(starts[best], minima[best].x);
  result.value = minima[best].value;
  return result;
}

}  // namespace

std::string_view to_string(DiscordMeasure m) {
  switch (m) {
    case DiscordMeasure::D1: return "D1";
    case DiscordMeasure::D2: return "D2";
    case DiscordMeasure::D3: return "D3";
    case DiscordMeasure::D3Sym: return "D3sym";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "ZERO";
    case Verdict::Nonzero: return "NONZERO";
    case Verdict::Ambiguous: return "AMBIGUOUS";
  }
  return "?";
}

std::string_view to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::Commutator: return "COMMUTATOR";
    case VerdictMethod::Eigenbasis: return "EIGENBASIS";
    case VerdictMethod::Eigenstructure: return "EIGENSTRUCTURE";
  }
  return "?";
}

MeasuredDiscord discord_d1_at(const BipartiteState& state, const ProjectiveMeasurement& m) {
  check_side(state, m);
  const Oriented o = orient(state, m.subsystem());
  const MeasurementStatistics stats = measure_side_a(o.rho, o.dims, m.basis());
  MeasuredDiscord out;
  out.value = o.s_measured + stats.conditional_entropy() - o.s_joint;
  out.j_value = o.s_other - stats.conditional_entropy();
  return out;
}

MeasuredDiscord discord_d2_at(const BipartiteState& state, const ProjectiveMeasurement& m) {
  check_side(state, m);
  const Oriented o = orient(state, m.subsystem());
  const MeasurementStatistics stats = measure_side_a(o.rho, o.dims, m.basis());
  const double post_entropy_sum = stats.outcome_entropy() + stats.conditional_entropy();
  const double post_entropy = spectrum_entropy(post_measurement_state(state, m).matrix());
  MeasuredDiscord out;
  out.value = post_entropy_sum - o.s_joint;
  out.j_value = o.s_measured + o.s_other - post_entropy_sum;
  out.entropy_increase = post_entropy - o.s_joint;
  out.formula_gap = std::abs(out.value - out.entropy_increase);
  return out;
}

DiscordReport optimize_discord(DiscordMeasure measure, const BipartiteState& state,
                               Subsystem side, const OptimizerConfig& config) {
  if (measure == DiscordMeasure::D3) return discord_d3(state, side, config);
  if (measure == DiscordMeasure::D3Sym) return discord_d3_symmetric(state);
  config.validate();

  const Oriented o = orient(state, side);
  const int d = o.dims.a;
  const int n = parameter_count(d);

  std::vector<Start> starts;
  if (config.include_eigenbasis_seed) starts.push_back({eig(o.marginal).vectors, std::vector<double>(n, 0.0)});
  for (int r = 0; r < config.restarts; ++r) {
    starts.push_back({Matrix::Identity(d, d), random_angles(config.seed, r, n)});
  }

  const bool with_outcome_entropy = measure == DiscordMeasure::D2;
  const auto chart = [d](const Start& s, std::span<const double> x) {
    return Matrix(s.base * unitary_from_parameters(x, d));
  };
  const auto value = [&](const Matrix& basis) {
    const MeasurementStatistics stats = measure_side_a(o.rho, o.dims, basis);
    const double first = with_outcome_entropy ? stats.outcome_entropy() : o.s_measured;
    return first + stats.conditional_entropy() - o.s_joint;
  };
  const MultistartResult best = multistart(starts, chart, value, config);

  DiscordReport report;
  report.measure = measure;
  report.side = side;
  report.diagnostics = best.diagnostics;
  ProjectiveMeasurement m(side, best.basis);
  const MeasuredDiscord at_best =
      with_outcome_entropy ? discord_d2_at(state, m) : discord_d1_at(state, m);
  report.value = at_best.value;
  report.j_value = at_best.j_value;
  report.optimal_measurement = std::move(m);
  return report;
}

DiscordReport discord_d3(const BipartiteState& state, Subsystem side,
                         const OptimizerConfig& config) {
  const Oriented o = orient(state, side);
  const EigenSystem es = eig(o.marginal);
  const ProjectiveMeasurement forced(side, es.vectors);
  const MeasurementStatistics stats = measure_side_a(o.rho, o.dims, es.vectors);
  const BipartiteState post = post_measurement_state(state, forced);

  DiscordReport report;
  report.measure = DiscordMeasure::D3;
  report.side = side;
  report.value = o.s_measured - o.s_joint + stats.conditional_entropy();
  report.j_value = mutual_information(post);
  report.alternate_form = spectrum_entropy(post.matrix()) - o.s_joint;
  report.forced_bases.push_back(forced);
  report.degenerate = es.degenerate();

  if (report.degenerate) {
    config.validate();
    const int n = block_parameter_count(es.degeneracy_groups);
    std::vector<Start> starts{{es.vectors, std::vector<double>(n, 0.0)}};
    for (int r = 0; r < kDegenerateBracketRestarts; ++r) {
      starts.push_back({es.vectors, random_angles(config.seed, r, n)});
    }
    const int d = o.dims.a;
    const auto chart = [&](const Start& s, std::span<const double> x) {
      return Matrix(s.base * block_chart(x, es.degeneracy_groups, d));
    };
    const auto value = [&](const Matrix& basis) {
      const MeasurementStatistics st = measure_side_a(o.rho, o.dims, basis);
      return st.outcome_entropy() + st.conditional_entropy() - o.s_joint;
    };
    const MultistartResult best = multistart(starts, chart, value, config);
    report.degenerate_infimum = std::min(best.value, report.value);
    report.diagnostics = best.diagnostics;
  }
  return report;
}

DiscordReport discord_d3_symmetric(const BipartiteState& state) {
  const EigenSystem es_a = eig(state.marginal(Subsystem::A));
  const EigenSystem es_b = eig(state.marginal(Subsystem::B));
  const Matrix product_basis = kron(es_a.vectors, es_b.vectors);
  const BipartiteState dephased(state.dims(), dephase(state.rho(), product_basis));

  DiscordReport report;
  report.measure = DiscordMeasure::D3Sym;
  report.side = Subsystem::A;
  report.j_value = mutual_information(dephased);
  report.value = mutual_information(state) - report.j_value;
  report.alternate_form = spectrum_entropy(dephased.matrix()) - spectrum_entropy(state.matrix());
  report.forced_bases.emplace_back(Subsystem::A, es_a.vectors);
  report.forced_bases.emplace_back(Subsystem::B, es_b.vectors);
  report.degenerate = es_a.degenerate() || es_b.degenerate();
  return report;
}

double one_way_deficit(const BipartiteState& state, Subsystem side, const OptimizerConfig& config) {
  return optimize_discord(DiscordMeasure::D2, state, side, config).value;
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double bell_mixture_discord_closed_form(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::OutOfRange, "a must lie in [0, 1]");
  return 1.0 - binary_entropy(a);
}

double bell_mixture_discord_literal_form(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorCode::OutOfRange, "a must lie in (0, 1]");
  return a * std::log2(a) - (1.0 - a) * std::log2(a) + 1.0;
}

ZeroDiscordVerdict classify_zero_discord(const BipartiteState& state, Subsystem side) {
  const Oriented o = orient(state, side);
  const int da = o.dims.a;
  const int db = o.dims.b;
  const double k = tolerance::ambiguity_factor;

  ZeroDiscordVerdict v;
  v.side = side;
  v.commutator_norm =
      commutator_norm(kron(o.marginal.matrix(), Matrix::Identity(db, db)), o.rho);
  if (v.commutator_norm > k * tolerance::commutator) {
    v.verdict = Verdict::Nonzero;
    v.method = VerdictMethod::Commutator;
    return v;
  }
  const bool commutator_in_band = v.commutator_norm >= tolerance::commutator / k;

  const EigenSystem es = eig(o.marginal);
  v.degenerate_marginal = es.degenerate();
  Matrix witness;
  double decisive = 0.0;
  double decisive_tol = 0.0;

  if (!v.degenerate_marginal) {
    v.method = VerdictMethod::Eigenbasis;
    witness = es.vectors;
    v.residual_discord = o.s_measured + measure_side_a(o.rho, o.dims, witness).conditional_entropy() -
                         o.s_joint;
    decisive = *v.residual_discord;
    decisive_tol = tolerance::zero_discord;
  } else {
    v.method = VerdictMethod::Eigenstructure;
    // M_ij = <i|_other rho |j>_other, operators on the measured side.
    std::vector<Matrix> blocks;
    for (int i = 0; i < db; ++i) {
      for (int j = 0; j < db; ++j) {
        Matrix m(da, da);
        for (int x = 0; x < da; ++x)
          for (int y = 0; y < da; ++y) m(x, y) = o.rho(x * db + i, y * db + j);
        blocks.push_back(std::move(m));
      }
    }
    double worst = 0.0;
    for (std::size_t p = 0; p < blocks.size(); ++p)
      for (std::size_t q = p + 1; q < blocks.size(); ++q)
        worst = std::max(worst, commutator_norm(blocks[p], blocks[q]));
    v.block_commutator_norm = worst;
    decisive = worst;
    decisive_tol = tolerance::commutator;

    // A fixed generic Hermitian combination of the family shares its
    // eigenvectors with every member when they all commute.
    std::mt19937_64 engine(0x5eedULL);
    std::uniform_real_distribution<double> coefficient(0.5, 1.5);
    Matrix combination = Matrix::Zero(da, da);
    for (const Matrix& m : blocks) {
      combination += coefficient(engine) * (m + m.adjoint());
      combination += coefficient(engine) * Complex(0, 1) * (m - m.adjoint());
    }
    witness = eig(HermitianOperator::symmetrized(combination)).vectors;
    v.residual_discord = o.s_measured + measure_side_a(o.rho, o.dims, witness).conditional_entropy() -
                         o.s_joint;
  }

  if (decisive > k * decisive_tol) {
    v.verdict = Verdict::Nonzero;
  } else if (decisive >= decisive_tol / k || commutator_in_band) {
    v.verdict = Verdict::Ambiguous;
  } else if (v.residual_discord && *v.residual_discord > k * tolerance::zero_discord) {
    // Commuting blocks whose common basis still shows discord: inconsistent.
    v.verdict = Verdict::Ambiguous;
  } else {
    v.verdict = Verdict::Zero;
    v.witness = ProjectiveMeasurement(side, witness);
  }
  return v;
}

}  // namespace discordant
