// SPDX-License-Identifier: Apache-2.0
#include "discordant/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "discordant/error.hpp"

namespace discordant {

namespace {

constexpr double kSimplexSizeCeiling = 1e-5;

struct ObjectiveContext {
  const Objective* f;
  int evaluations;
  std::vector<double> scratch;
};

double trampoline(const gsl_vector* v, void* params) {
  auto* ctx = static_cast<ObjectiveContext*>(params);
  for (std::size_t i = 0; i < v->size; ++i) ctx->scratch[i] = gsl_vector_get(v, i);
  ++ctx->evaluations;
  const double value = (*ctx->f)(ctx->scratch);
  return std::isfinite(value) ? value : GSL_POSINF;
}

void silence_gsl() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

// splitmix64 finalizer, used to derive independent per-restart streams.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 0 || (restarts == 0 && !include_eigenbasis_seed)) {
    throw Error(ErrorCode::InvalidParameters, "optimizer needs at least one starting point");
  }
  if (!(simplex_tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidParameters, "simplex tolerance must be positive");
  }
  if (max_evaluations < 1) throw Error(ErrorCode::InvalidParameters, "max evaluations must be >= 1");
  if (threads < 0) throw Error(ErrorCode::InvalidParameters, "threads must be >= 0");
}

LocalMinimum nelder_mead(const Objective& f, std::vector<double> x0, double step,
                         double simplex_tolerance, int max_evaluations) {
  silence_gsl();
  const std::size_t n = x0.size();
  LocalMinimum result;
  if (n == 0) {
    result.value = f(x0);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  ObjectiveContext ctx{&f, 0, std::vector<double>(n)};
  gsl_multimin_function fn{&trampoline, n, &ctx};

  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* steps = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x, i, x0[i]);
  gsl_vector_set_all(steps, step);

  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &fn, x, steps);

  // Converged once the best value has moved by at most the tolerance over the
  // last `window` iterations while the simplex is small, or over a much longer
  // stretch at any size (a flat valley of minimizers). Size alone cannot be
  // used: near a quadratic minimum the values stop resolving at ~1e-8 in x.
  const std::size_t window = 10 * (n + 1);
  const std::size_t flat_window = 10 * window;
  std::vector<double> history;
  const auto stalled = [&](std::size_t w) {
    return history.size() > w && history[history.size() - 1 - w] - s->fval <= simplex_tolerance;
  };
  while (ctx.evaluations < max_evaluations) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    history.push_back(s->fval);
    if ((stalled(window) && gsl_multimin_fminimizer_size(s) < kSimplexSizeCeiling) || stalled(flat_window)) {
      result.converged = true;
      break;
    }
  }

  result.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.x[i] = gsl_vector_get(s->x, i);
  result.value = s->fval;
  result.evaluations = ctx.evaluations;

  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(steps);
  gsl_vector_free(x);
  return result;
}

void parallel_for(int n, int threads, const std::function<void(int)>& task) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int best_index(std::span<const double> values, double tie) {
  if (values.empty()) return -1;
  const double lowest = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= lowest + tie) return static_cast<int>(i);
  }
  return 0;
}

std::vector<double> random_angles(std::uint64_t seed, int index, int count) {
  std::mt19937_64 engine(mix(seed ^ mix(static_cast<std::uint64_t>(index))));
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    out[k] = (k % 2 == 0 ? std::numbers::pi : 2.0 * std::numbers::pi) * u;
  }
  return out;
}

}  // namespace discordant
