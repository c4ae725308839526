#pragma once

#include <Eigen/Dense>

#include "spin7/blade.hpp"

namespace spin7 {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Vector8 = Eigen::Matrix<double, 8, 1>;

enum class Orientation : int { positive = +1, negative = -1 };

constexpr int orientation_sign(Orientation o) { return static_cast<int>(o); }

// Euclidean scalar product on the underlying 8-dimensional space, given by its
// symmetric positive-definite coefficient matrix in the working basis.  The
// inverse matrix is the induced scalar product on covectors; all algebra
// operations contract with it.  Construction validates the input: symmetric to
// 1e-12 relative and smallest eigenvalue above 1e-10, anything else throws.
//
// `orthonormal()` reports that the matrix is exactly the identity within
// 1e-14; operations use it to dispatch to the unit-coefficient fast paths.
class Metric8 {
 public:
  static Metric8 identity();

  explicit Metric8(const Matrix8& entries);

  const Matrix8& entries() const { return h_; }
  const Matrix8& inverse() const { return hinv_; }
  bool orthonormal() const { return orthonormal_; }
  double det() const { return det_; }

  // Lower-triangular Cholesky factor L with entries() = L L^T.  Its inverse
  // maps covector coordinates into an orthonormal coordinate frame that keeps
  // the orientation of the working basis.
  const Matrix8& cholesky() const { return chol_; }
  const Matrix8& cholesky_inverse() const { return chol_inv_; }

 private:
  Matrix8 h_;
  Matrix8 hinv_;
  Matrix8 chol_;
  Matrix8 chol_inv_;
  double det_ = 1.0;
  bool orthonormal_ = true;
};

}  // namespace spin7
