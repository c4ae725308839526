#include "spin7/rng.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace spin7 {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Matrix8 random_rotation(Rng& rng) {
  Matrix8 g;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g(i, j) = rng.gaussian();

  Eigen::HouseholderQR<Matrix8> qr(g);
  Matrix8 q = qr.householderQ();
  const Matrix8 r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the signs of the R diagonal makes Q the unique factor with
  // R_ii > 0, which turns the QR output into a Haar sample on O(8).
  for (int i = 0; i < 8; ++i)
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  if (q.determinant() < 0.0) q.col(7) = -q.col(7);
  return q;
}

}  // namespace spin7
