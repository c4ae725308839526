#include "spin7/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "spin7/algebra.hpp"
#include "spin7/potential.hpp"
#include "spin7/rng.hpp"

namespace spin7 {

namespace {

constexpr double kSqrt14 = 3.7416573867739413;
constexpr double kStepCap = 0.1;
constexpr double kArmijoSlope = 1e-4;
constexpr double kArmijoShrink = 0.5;
constexpr double kStepFloor = 1e-15;
// Potential values on the norm sqrt(14) sphere are differences of terms of
// size a few hundred, so evaluations carry absolute noise near 1e-13.
constexpr double kPotentialNoise = 1e-12;

void check_config(const FlowConfig& cfg) {
  if (cfg.max_iters < 0) throw std::invalid_argument("max_iters must be nonnegative");
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step))
    throw std::invalid_argument("step must be positive and finite");
  if (!(cfg.grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be positive");
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (cfg.start.kind == StartKind::perturbed_cayley &&
      (!(cfg.start.eps >= 0.0) || !std::isfinite(cfg.start.eps)))
    throw std::invalid_argument("start eps must be nonnegative and finite");
}

Polyform rescale_to_sphere(const Polyform& a, const Metric8& h) {
  const double n = norm(a, h);
  if (n < 1e-12)
    throw std::invalid_argument("rescaling denominator below 1e-12; form collapsed to zero");
  return (kSqrt14 / n) * a;
}

Polyform random_self_dual(const std::array<Polyform, 35>& basis, Rng& rng) {
  Polyform out;
  for (const Polyform& b : basis) out += rng.gaussian() * b;
  return out;
}

Polyform start_point(const FlowConfig& cfg, const Metric8& h,
                     const std::array<Polyform, 35>& basis, Rng& rng) {
  if (cfg.start.kind == StartKind::random_sphere)
    return rescale_to_sphere(random_self_dual(basis, rng), h);

  const Polyform cayley = canonical_cayley();
  Polyform direction;
  bool found = false;
  // A random self-dual form almost surely has a nonzero component in the
  // requested subspace; the retry loop only guards the measure-zero draws.
  for (int attempt = 0; attempt < 32 && !found; ++attempt) {
    const Polyform q = random_self_dual(basis, rng);
    const FourFormDecomposition dec = decompose_4form(q, cayley, h);
    switch (cfg.start.subspace) {
      case PerturbSubspace::seven: direction = dec.q7; break;
      case PerturbSubspace::twentyseven: direction = dec.q27; break;
      case PerturbSubspace::mixed: direction = dec.q7 + dec.q27; break;
    }
    found = norm(direction, h) > 1e-8 * norm(q, h);
  }
  if (!found) throw std::runtime_error("failed to draw a usable perturbation direction");
  const Polyform unit = (1.0 / norm(direction, h)) * direction;
  return rescale_to_sphere(cayley + cfg.start.eps * unit, h);
}

// Tangential part of the potential gradient on the sphere |phi|^2 = 14.
Polyform projected_gradient(const Polyform& phi, const Metric8& h) {
  const Polyform g = potential_gradient(phi, h);
  return g - (inner(g, phi, h) / 14.0) * phi;
}

Polyform retract(const Polyform& phi, const Polyform& tangent, double step, const Metric8& h) {
  const Polyform moved = phi - step * tangent;
  const double den = norm(moved, h);
  if (den < 1e-12)
    throw std::invalid_argument("retraction denominator below 1e-12; reduce the step size");
  return (kSqrt14 / den) * moved;
}

FlowReport run_single(const FlowConfig& cfg, const Metric8& h,
                      const std::array<Polyform, 35>& basis, std::uint64_t seed) {
  Rng rng(seed);
  Polyform phi = start_point(cfg, h, basis, rng);

  FlowReport rep;
  rep.trajectory_w.push_back(potential_value(phi, h));

  bool converged = false;
  double gnorm = 0.0;
  int steps = 0;
  while (true) {
    const Polyform gt = projected_gradient(phi, h);
    gnorm = norm(gt, h);
    if (gnorm <= cfg.grad_tol) {
      converged = true;
      break;
    }
    if (steps >= cfg.max_iters) break;

    if (cfg.step_rule == StepRule::fixed) {
      phi = retract(phi, gt, cfg.step, h);
      rep.trajectory_w.push_back(potential_value(phi, h));
    } else {
      const double w0 = rep.trajectory_w.back();
      double t = std::min(cfg.step, kStepCap);
      bool accepted = false;
      while (t >= kStepFloor) {
        const Polyform cand = retract(phi, gt, t, h);
        const double wc = potential_value(cand, h);
        // The allowance covers cancellation noise in the potential near its
        // zero set, where the true decrease per step falls below the
        // resolution of double evaluation; away from that floor the required
        // decrease dwarfs it and the test is the plain Armijo condition.
        if (wc <= w0 - kArmijoSlope * t * gnorm * gnorm + kPotentialNoise) {
          phi = cand;
          rep.trajectory_w.push_back(wc);
          accepted = true;
          break;
        }
        t *= kArmijoShrink;
      }
      // No step length gives a decrease: the iterate is at the resolution
      // limit of the line search, so stop and classify what we have.
      if (!accepted) break;
    }
    ++steps;
  }

  rep.final_form = phi;
  rep.iterations = static_cast<int>(rep.trajectory_w.size()) - 1;
  rep.final_grad_norm = gnorm;
  rep.final_w = rep.trajectory_w.back();
  rep.verdict = is_conformal_spin7(phi, h, 1e-8);
  if (converged) {
    if (rep.verdict.metric) {
      rep.classification = FlowClass::spin7_cone;
    } else {
      const CubicReport cr = cubic_bound_check(phi, h, 1e-6);
      rep.classification = cr.saturated ? FlowClass::other_critical : FlowClass::not_converged;
    }
  } else {
    rep.classification = FlowClass::not_converged;
  }

  const Matrix35 hess = potential_hessian(phi, h);
  Eigen::SelfAdjointEigenSolver<Matrix35> eig(hess);
  for (int i = 0; i < 35; ++i) rep.hessian_spectrum[static_cast<size_t>(i)] = eig.eigenvalues()(i);

  return rep;
}

}  // namespace

Polyform flow_step(const Polyform& phi, const Metric8& h, double step) {
  const double n = norm(phi, h);
  if (std::abs(n - kSqrt14) > 1e-9)
    throw std::invalid_argument("flow_step input must lie on the sphere of norm sqrt(14)");
  return retract(phi, projected_gradient(phi, h), step, h);
}

std::vector<FlowReport> flow_run_all(const FlowConfig& cfg, const Metric8& h) {
  check_config(cfg);
  const std::array<Polyform, 35> basis = self_dual_basis(h);
  std::vector<FlowReport> reports;
  reports.reserve(static_cast<size_t>(cfg.restarts));
  for (int r = 0; r < cfg.restarts; ++r)
    reports.push_back(run_single(cfg, h, basis, cfg.seed + static_cast<std::uint64_t>(r)));
  return reports;
}

FlowReport flow_run(const FlowConfig& cfg, const Metric8& h) {
  const std::vector<FlowReport> reports = flow_run_all(cfg, h);
  size_t best = 0;
  for (size_t i = 1; i < reports.size(); ++i)
    if (reports[i].final_grad_norm < reports[best].final_grad_norm) best = i;
  return reports[best];
}

}  // namespace spin7
