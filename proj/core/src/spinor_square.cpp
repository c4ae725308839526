#include "spin7/spinor_square.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace spin7 {
namespace {

void check_kappa(int kappa) {
  if (kappa != 1 && kappa != -1)
    throw std::invalid_argument("kappa must be +1 or -1");
}

// Square in the orthonormal frame coordinates; the caller maps back.
Polyform frame_square(const CliffordRep& rep, const Spinor16& xi, int kappa) {
  Polyform out;
  const double scale = static_cast<double>(kappa) / 16.0;
  for (int i = 0; i < kBladeCount; ++i) {
    const Blade b = static_cast<Blade>(i);
    const double c = scale * xi.dot(rep.blade_matrix(b) * xi);
    out[b] = c;
  }
  return out;
}

}  // namespace

Polyform signed_square(const CliffordRep& rep, const Spinor16& xi, int kappa,
                       const Metric8& h) {
  check_kappa(kappa);
  const Polyform frame = frame_square(rep, xi, kappa);
  return h.orthonormal() ? frame : transform(frame, h.cholesky());
}

Polyform cayley_from_spinor(const CliffordRep& rep, const Spinor16& xi,
                            const Metric8& h) {
  const double nsq = xi.squaredNorm();
  if (nsq == 0.0) throw std::invalid_argument("zero spinor rejected");
  const Spinor16 chi = rep.chirality() * xi;
  const double tol = 1e-10 * std::sqrt(nsq);
  if ((chi - xi).norm() > tol && (chi + xi).norm() > tol)
    throw std::invalid_argument("spinor must be chiral");

  Polyform frame;
  for (Blade b : blades_of_rank(4))
    frame[b] = xi.dot(rep.blade_matrix(b) * xi);
  return h.orthonormal() ? frame : transform(frame, h.cholesky());
}

SquareReport check_square_conditions(const Polyform& a, const Metric8& h,
                                     double tol) {
  SquareReport r;
  const double n = norm(a, h);
  if (n == 0.0) {
    r.is_square = true;
    r.kappa = +1;
    r.mu = +1;
    return r;
  }

  const Polyform square = geometric_product(a, a, h);
  r.residuals[0] =
      norm(square - (16.0 * a.scalar_part()) * a, h) / (n * n);
  r.residuals[1] = norm(reversion(a) - a, h) / n;

  const Polyform va = geometric_product(volume_form(h), a, h);
  const double dplus = norm(va - a, h);
  const double dminus = norm(va + a, h);
  r.mu = dplus <= dminus ? +1 : -1;
  r.residuals[2] = std::min(dplus, dminus) / n;

  r.spinor_norm = std::abs(16.0 * a.scalar_part());
  r.kappa = a.scalar_part() >= 0.0 ? +1 : -1;
  r.is_square = r.residuals[0] <= tol && r.residuals[1] <= tol &&
                r.residuals[2] <= tol;
  return r;
}

Spinor16 recover_spinor(const CliffordRep& rep, const Polyform& a,
                        const SquareReport& report, const Metric8& h) {
  if (!report.is_square)
    throw std::invalid_argument(
        "spinor recovery requires a polyform passing the square conditions");

  const Matrix16 m = static_cast<double>(report.kappa) * represent(rep, a, h);
  const Eigen::SelfAdjointEigenSolver<Matrix16> es(
      (m + m.transpose()) / 2.0);
  const auto& ev = es.eigenvalues();  // ascending
  const double top = ev(15);
  if (top <= 0.0) {
    if (a.is_zero()) return Spinor16::Zero();
    throw std::domain_error("represented polyform is not positive semidefinite");
  }
  const double ratio_tol = 1e-7 * top;
  if (std::abs(ev(14)) > ratio_tol || ev(0) < -ratio_tol)
    throw std::domain_error(
        "represented polyform is not a rank-one projector within tolerance");

  Spinor16 xi = std::sqrt(top) * es.eigenvectors().col(15);
  int lead = 0;
  for (int i = 1; i < 16; ++i)
    if (std::abs(xi[i]) > std::abs(xi[lead])) lead = i;
  if (xi[lead] < 0.0) xi = -xi;
  return xi;
}

}  // namespace spin7
