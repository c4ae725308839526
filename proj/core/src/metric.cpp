#include "spin7/metric.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace spin7 {

Metric8 Metric8::identity() { return Metric8(Matrix8::Identity()); }

Metric8::Metric8(const Matrix8& entries) : h_(entries) {
  if (!h_.allFinite())
    throw std::invalid_argument("metric entries must be finite");
  const double scale = h_.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw std::invalid_argument("metric must be nonzero");
  if ((h_ - h_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("metric must be symmetric");

  orthonormal_ = (h_ - Matrix8::Identity()).cwiseAbs().maxCoeff() <= 1e-14;
  if (orthonormal_) {
    // Exact unit data keeps the fast paths bit-reproducible.
    h_ = Matrix8::Identity();
    hinv_ = Matrix8::Identity();
    chol_ = Matrix8::Identity();
    chol_inv_ = Matrix8::Identity();
    det_ = 1.0;
    return;
  }

  Eigen::SelfAdjointEigenSolver<Matrix8> es(h_);
  if (es.eigenvalues().minCoeff() <= 1e-10)
    throw std::invalid_argument(
        "metric must be positive definite (eigenvalue floor 1e-10)");

  const Eigen::LLT<Matrix8> llt(h_);
  chol_ = llt.matrixL();
  chol_inv_ =
      chol_.triangularView<Eigen::Lower>().solve(Matrix8::Identity());
  hinv_ = llt.solve(Matrix8::Identity());
  // Symmetrize away the last-bit asymmetry of the solve.
  hinv_ = ((hinv_ + hinv_.transpose()) / 2.0).eval();
  det_ = chol_.diagonal().array().square().prod();
}

}  // namespace spin7
