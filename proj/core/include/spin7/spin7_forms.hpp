#pragma once

#include <Eigen/Dense>

#include "spin7/algebra.hpp"

namespace spin7 {

// The canonical Cayley four-form: fourteen unit blades,
//   - e1234 - e1256 - e1278 - e1357 + e1368 + e1458 + e1467
//   - e5678 - e3478 - e3456 - e2468 + e2457 + e2358 + e2367.
// Self-dual, squared norm 14 for the identity metric, and the rank-four part
// of sixteen times a positive chiral spinor square.
Polyform canonical_cayley();

// Matrix of w -> 2 (phi Delta_2 w) on four-forms, in the 70-blade basis
// (increasing mask order).  Symmetric for the identity metric; mixed-rank
// inputs are rejected.
Eigen::MatrixXd lambda_operator(const Polyform& phi, const Metric8& h);

struct Spin7Verdict {
  bool conformal = false;
  bool metric = false;
  // 14^{-1/4} |phi|^{1/2}: the factor scaling h to the metric induced by phi.
  double conformal_constant = 0.0;
  // |sqrt(14) phi Delta_2 phi + 12 |phi| phi| / |phi|^2, scale invariant.
  double residual = 0.0;
  // +1 self-dual, -1 anti-self-dual, 0 neither within tolerance.
  int chirality_branch = 0;
};

// Tests whether the four-form defines a conformal Spin(7) structure for h:
// one definite duality type and a vanishing quadratic defect.  `metric` adds
// |phi| = sqrt(14).  The zero form is rejected.
Spin7Verdict is_conformal_spin7(const Polyform& phi, const Metric8& h,
                                double tol = 1e-8);

// Metric induced by a conformal Spin(7) form: conformal_constant * h.
// Rejects forms that fail the predicate.
Metric8 induced_metric(const Polyform& phi, const Metric8& h,
                       double tol = 1e-8);

struct FourFormDecomposition {
  Polyform q1;   // along phi_ref
  Polyform q7;   // self-dual, phi Delta_2 eigenvalue -6 |phi| / sqrt(14)
  Polyform q27;  // self-dual, phi Delta_2 eigenvalue +2 |phi| / sqrt(14)
  Polyform q35;  // anti-self-dual kernel part
};

// Splits a four-form into the irreducible pieces determined by a reference
// form passing the metric Spin(7) predicate.  The self-dual components come
// from quadratic spectral projectors of phi_ref Delta_2 with the known
// eigenvalues; their eigen-residuals are checked and a drifted reference is
// reported as an error.
FourFormDecomposition decompose_4form(const Polyform& q,
                                      const Polyform& phi_ref, const Metric8& h,
                                      double tol = 1e-8);

// Dimension of the stabilizer algebra of a four-form inside the antisymmetric
// 8x8 matrices: 28 minus the numeric rank of the derivation action on phi,
// with the given relative singular-value cutoff.
int stabilizer_dimension(const Polyform& phi, double cutoff = 1e-8);

}  // namespace spin7
