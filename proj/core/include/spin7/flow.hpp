#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spin7/metric.hpp"
#include "spin7/polyform.hpp"
#include "spin7/spin7_forms.hpp"

namespace spin7 {

enum class StepRule { fixed, backtracking };

enum class StartKind { random_sphere, perturbed_cayley };

enum class PerturbSubspace { seven, twentyseven, mixed };

// Starting point for a descent run.  random_sphere draws a Gaussian
// self-dual form and scales it onto the sphere of norm sqrt(14);
// perturbed_cayley nudges the canonical form by eps along a random unit
// direction in the chosen isotypic subspace before rescaling.
struct FlowStart {
  StartKind kind = StartKind::random_sphere;
  double eps = 0.3;
  PerturbSubspace subspace = PerturbSubspace::twentyseven;
};

struct FlowConfig {
  std::uint64_t seed = 0;
  int max_iters = 5000;
  double step = 0.01;
  StepRule step_rule = StepRule::backtracking;
  double grad_tol = 1e-10;
  FlowStart start;
  int restarts = 1;
};

enum class FlowClass { spin7_cone, other_critical, not_converged };

struct FlowReport {
  Polyform final_form;
  int iterations = 0;
  double final_grad_norm = 0.0;
  double final_w = 0.0;
  Spin7Verdict verdict;
  std::array<double, 35> hessian_spectrum{};
  FlowClass classification = FlowClass::not_converged;
  std::vector<double> trajectory_w;
};

// One projected-gradient step on the sphere |phi|_h = sqrt(14): subtract
// the radial part of the gradient, move by step, rescale back onto the
// sphere.  phi must already be on the sphere to within 1e-9; the
// rescaling denominator must stay above 1e-12.
Polyform flow_step(const Polyform& phi, const Metric8& h, double step);

// Full descent runs, one per restart; restart r uses seed + r.  Reports
// come back in restart order and are bitwise deterministic in the seed.
std::vector<FlowReport> flow_run_all(const FlowConfig& config, const Metric8& h);

// Best single run: smallest final gradient norm, ties broken by the
// lowest restart index.
FlowReport flow_run(const FlowConfig& config, const Metric8& h);

}  // namespace spin7
