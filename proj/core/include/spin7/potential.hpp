#pragma once

#include <Eigen/Dense>

#include "spin7/algebra.hpp"

namespace spin7 {

using Matrix35 = Eigen::Matrix<double, 35, 35>;

// Cubic-plus-norm functional on self-dual four-forms,
//   W(phi) = (sqrt(14)/3) <phi Delta_2 phi, phi> + 4 |phi|^3,
// nonnegative, vanishing exactly on the cone of conformal Spin(7) forms.
// Inputs must be self-dual within `tol` relative; scaling is cubic.
double potential_value(const Polyform& phi, const Metric8& h,
                       double tol = 1e-8);

// Gradient sqrt(14) (phi Delta_2 phi) + 12 |phi| phi with respect to the
// scalar product on four-forms; zero at phi = 0 despite the norm factor.
Polyform potential_gradient(const Polyform& phi, const Metric8& h,
                            double tol = 1e-8);

// Second derivative restricted to the self-dual subspace, assembled in the
// basis of self_dual_basis(h):
//   d2W(q1, q2) = sqrt(14) <q1 Delta_2 q2 + q2 Delta_2 q1, phi>
//                 + 12 |phi| <q1, q2> + (12/|phi|) <q1, phi> <phi, q2>.
// Requires a nonzero self-dual base point.
Matrix35 potential_hessian(const Polyform& phi, const Metric8& h,
                           double tol = 1e-8);

struct HessianBlockReport {
  std::array<double, 35> eigenvalues{};  // ascending
  // Frobenius norms of the off-diagonal Hessian blocks across the splitting
  // of the self-dual space by the reference form, pairs (1,7), (1,27), (7,27).
  std::array<double, 3> block_norms{};
};

// Hessian eigenvalues together with the coupling between the invariant
// subspaces cut out by phi.  Requires phi to define a metric structure after
// rescaling to norm sqrt(14); the blocks decouple exactly on that locus.
HessianBlockReport hessian_block_report(const Polyform& phi, const Metric8& h,
                                        double tol = 1e-8);

// The same functional as a function of the metric, defined for every metric
// and every four-form; agrees with potential_value on self-dual forms.
double pair_potential(const Metric8& h, const Polyform& phi);

// Partial gradient of pair_potential in the metric: the symmetric matrix G
// with d/dt W(h + t k, phi) = G_{ab} k^{ab}, indices of k raised with h.
// Vanishes when phi induces h as its Spin(7) metric.
Matrix8 metric_gradient(const Metric8& h, const Polyform& phi);

struct CubicReport {
  double f_value = 0.0;    // <q, q Delta_2 q> / 3
  double c = 0.0;          // 3 f / |q|^2, the eigenvalue when saturated
  bool saturated = false;  // q Delta_2 q = c q within tolerance
  double bound_gap = 0.0;  // (26/3) |q|^3 - W(q), strictly positive
};

// Evaluates the cubic invariant of a nonzero self-dual four-form and the gap
// of the strict upper bound W < (26/3) |q|^3.
CubicReport cubic_bound_check(const Polyform& q, const Metric8& h,
                              double tol = 1e-8);

}  // namespace spin7
