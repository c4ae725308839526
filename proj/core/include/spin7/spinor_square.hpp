#pragma once

#include <array>

#include "spin7/clifford.hpp"

namespace spin7 {

// Squaring map from spinors to polyforms and its inverse.  The square of a
// spinor is the polyform whose representation is kappa xi xi^T; its blade
// coefficients are (kappa/16) <xi, gamma^{i1} ... gamma^{ik} xi> over
// increasing index tuples.
Polyform signed_square(const CliffordRep& rep, const Spinor16& xi, int kappa,
                       const Metric8& h);

// Sixteen times the rank-four part of the square of a chiral spinor: the
// Cayley four-form of xi.  Self-dual for positive chirality, anti-self-dual
// for negative; its norm is sqrt(14) <xi, xi>.  Zero or non-chiral spinors
// are rejected.
Polyform cayley_from_spinor(const CliffordRep& rep, const Spinor16& xi,
                            const Metric8& h);

struct SquareReport {
  bool is_square = false;
  int kappa = 0;  // sign of the trace of the represented polyform
  int mu = 0;     // volume eigenvalue: volume <> a = mu a
  double spinor_norm = 0.0;  // |trace| = <xi, xi> for a recovered spinor
  // Normalized defects of the three square conditions:
  //   a <> a = 16 a^(0) a,  reversion(a) = a,  volume <> a = mu a.
  std::array<double, 3> residuals{};
};

// Tests whether a polyform is the signed square of a spinor.  The residuals
// are scale invariant; is_square requires all three below the tolerance.  The
// zero polyform counts as the square of the zero spinor with kappa = mu = +1.
SquareReport check_square_conditions(const Polyform& a, const Metric8& h,
                                     double tol = 1e-9);

// Inverse of the squaring map: eigen-decomposes kappa * represent(a), checks
// that it is positive semidefinite of numerical rank one (eigenvalue ratio
// 1e-7), and returns the spinor scaled to the top eigenvalue.  The overall
// sign is fixed by making the component of largest magnitude positive (first
// such index on ties).  Requires report.is_square.
Spinor16 recover_spinor(const CliffordRep& rep, const Polyform& a,
                        const SquareReport& report, const Metric8& h);

}  // namespace spin7
