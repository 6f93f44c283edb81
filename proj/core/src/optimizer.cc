// Copyright 2026 The patternlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternlab/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "patternlab/errors.h"

namespace patternlab {
namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-18;
constexpr double kMaxStep = 1e6;
constexpr double kTieTolerance = 1e-12;

struct StartResult {
  double value = 0.0;
  std::vector<double> x;
};

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = std::max(out, std::abs(a[i] - b[i]));
  }
  return out;
}

double ResidualWithGradient(std::span<const double> x,
                            std::span<const double> grad) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + grad[i];
  ProjectOntoSimplex(y);
  return MaxAbsDiff(x, y);
}

void Normalize(std::vector<double>& x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  for (double& v : x) v /= sum;
}

// Newton iterations for the KKT system restricted to the face of x:
// H_FF d - nu 1 = -g_F, sum d = 0. Projected gradient alone stalls once
// value differences drop below rounding (residual around 1e-8); this drives
// the residual to rounding level. A step is taken only if it stays in the
// simplex and does not lower the objective beyond rounding.
void PolishOnFace(const SimplexPolynomial& f, std::vector<double>& x) {
  const std::size_t n = x.size();
  for (int it = 0; it < 20; ++it) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] > 0.0) face.push_back(i);
    }
    const std::size_t k = face.size();
    if (k < 2) return;
    const std::vector<double> grad = f.Gradient(x);
    const std::vector<double> hess = f.Hessian(x);
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        system(a, b) = hess[face[a] * n + face[b]];
      }
      system(a, k) = 1.0;
      system(k, a) = 1.0;
      rhs(a) = -grad[face[a]];
    }
    const Eigen::VectorXd step = system.completeOrthogonalDecomposition().solve(rhs);
    std::vector<double> candidate = x;
    double move = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      candidate[face[a]] += step(a);
      if (!(candidate[face[a]] >= 0.0)) return;
      move = std::max(move, std::abs(step(a)));
    }
    Normalize(candidate);
    const double fx = f.Eval(x);
    if (f.Eval(candidate) < fx - 1e-14 * std::max(1.0, std::abs(fx))) return;
    if (ResidualWithGradient(candidate, f.Gradient(candidate)) >
        ResidualWithGradient(x, grad)) {
      return;
    }
    x.swap(candidate);
    if (move < 1e-15) return;
  }
}

StartResult Ascend(const SimplexPolynomial& f, std::vector<double> x,
                   const OptimizerConfig& cfg) {
  const std::size_t n = x.size();
  std::vector<double> grad(n);
  std::vector<double> y(n);
  double fx = f.Eval(x);
  f.Gradient(x, grad);
  double step = 1.0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (ResidualWithGradient(x, grad) <= cfg.tolerance) break;
    double fy = 0.0;
    bool moved = false;
    while (step >= kMinStep) {
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + step * grad[i];
      ProjectOntoSimplex(y);
      double ascent = 0.0;
      for (std::size_t i = 0; i < n; ++i) ascent += grad[i] * (y[i] - x[i]);
      if (MaxAbsDiff(x, y) == 0.0) break;
      fy = f.Eval(y);
      if (fy >= fx + kArmijo * ascent && fy >= fx) {
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
    x.swap(y);
    fx = fy;
    f.Gradient(x, grad);
    step = std::min(step * 2.0, kMaxStep);
  }
  Normalize(x);
  PolishOnFace(f, x);
  return {f.Eval(x), std::move(x)};
}

std::vector<std::vector<double>> StartingPoints(std::size_t dim,
                                                const OptimizerConfig& cfg) {
  std::vector<std::vector<double>> starts;
  auto add_face = [&](const std::vector<std::size_t>& face) {
    std::vector<double> x(dim, 0.0);
    for (std::size_t i : face) x[i] = 1.0 / static_cast<double>(face.size());
    starts.push_back(std::move(x));
  };
  if (dim <= cfg.full_barycenter_max_dim) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < dim; ++i) {
        if (mask & (std::uint64_t{1} << i)) face.push_back(i);
      }
      add_face(face);
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) add_face({i});
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) add_face({i, j});
    }
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    add_face(all);
  }

  // Uniform on the simplex: normalized unit exponentials. The uniform draw
  // is built from raw engine bits so the sequence is portable.
  std::mt19937_64 engine(cfg.seed);
  for (int k = 0; k < cfg.restarts; ++k) {
    std::vector<double> x(dim);
    double sum = 0.0;
    for (double& v : x) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      v = -std::log1p(-u);
      sum += v;
    }
    for (double& v : x) v /= sum;
    starts.push_back(std::move(x));
  }
  return starts;
}

}  // namespace

void OptimizerConfig::Validate() const {
  if (restarts < 1) throw InputError("restarts must be >= 1");
  if (max_iterations < 1) throw InputError("max_iterations must be >= 1");
  if (!(tolerance > 0.0)) throw InputError("tolerance must be > 0");
  if (!(support_threshold >= 0.0)) {
    throw InputError("support_threshold must be >= 0");
  }
  if (jobs < 1) throw InputError("jobs must be >= 1");
  if (full_barycenter_max_dim > 20) {
    throw InputError("full_barycenter_max_dim must be <= 20");
  }
}

double KktResidual(const SimplexPolynomial& objective,
                   std::span<const double> x) {
  return ResidualWithGradient(x, objective.Gradient(x));
}

OptimizerReport MaximizeOnSimplex(const SimplexPolynomial& objective,
                                  const OptimizerConfig& cfg) {
  cfg.Validate();
  const std::size_t dim = objective.dim();
  if (dim == 0) throw InputError("cannot optimize over an empty simplex");

  const auto starts = StartingPoints(dim, cfg);
  std::vector<StartResult> results(starts.size());
  if (cfg.jobs == 1) {
    for (std::size_t k = 0; k < starts.size(); ++k) {
      results[k] = Ascend(objective, starts[k], cfg);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < cfg.jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < starts.size(); k = next++) {
          results[k] = Ascend(objective, starts[k], cfg);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  double best = results.front().value;
  for (const auto& r : results) best = std::max(best, r.value);
  const StartResult* chosen = nullptr;
  for (const auto& r : results) {
    if (r.value < best - kTieTolerance) continue;
    if (chosen == nullptr || r.x < chosen->x) chosen = &r;
  }

  OptimizerReport report;
  report.value = chosen->value;
  report.argmax = SimplexPoint(chosen->x);
  for (std::size_t i = 0; i < dim; ++i) {
    if (chosen->x[i] > cfg.support_threshold) report.support.push_back(i);
  }
  report.restarts_used = static_cast<int>(starts.size());
  report.kkt_residual = KktResidual(objective, chosen->x);
  report.converged = report.kkt_residual <= cfg.kkt_tolerance;
  return report;
}

}  // namespace patternlab
