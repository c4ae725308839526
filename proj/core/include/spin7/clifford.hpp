#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "spin7/algebra.hpp"

namespace spin7 {

using Matrix16 = Eigen::Matrix<double, 16, 16>;
using Spinor16 = Eigen::Matrix<double, 16, 1>;

// Irreducible representation of the Clifford algebra of Euclidean 8-space on
// the 16-dimensional real spinor module.  The generators are signed
// permutation matrices, symmetric for the standard scalar product of R^16,
// satisfying gamma^i gamma^j + gamma^j gamma^i = 2 delta^{ij}.  The chirality
// operator gamma^1 ... gamma^8 squares to one, anticommutes with every
// generator and has eight-dimensional eigenspaces for +1 and -1.
//
// Instances are immutable; copies share the cached blade matrices.
class CliffordRep {
 public:
  const Matrix16& gamma(int index1) const;  // 1-based generator index
  const Matrix16& chirality() const;
  // Product of generators over the blade's indices in increasing order.
  const Matrix16& blade_matrix(Blade b) const;
  // Orthogonal projector onto the chiral subspace of the given sign.
  Matrix16 chiral_projector(int sign) const;

 private:
  friend CliffordRep build_rep();
  struct Data;
  std::shared_ptr<const Data> data_;
};

// Constructs the representation and verifies the Clifford relations, the
// symmetry of the generators and the chirality invariants; a violation throws.
CliffordRep build_rep();

// Algebra map polyform -> endomorphism: blades go to the corresponding
// generator products, so represent(a <> b) = represent(a) represent(b).  For a
// non-identity metric the coordinates are first mapped into the orthonormal
// frame of the Cholesky factor of h.
Matrix16 represent(const CliffordRep& rep, const Polyform& a, const Metric8& h);

// Trace of represent(a): sixteen times the rank-0 coefficient.  Vanishes on
// every higher rank, and is cyclic for the geometric product.
double ka_trace(const CliffordRep& rep, const Polyform& a, const Metric8& h);

// Frobenius pairing trace(represent(reversion(a)) represent(b)); equals
// sixteen times the scalar product of a and b.
double frobenius_pairing(const CliffordRep& rep, const Polyform& a,
                         const Polyform& b, const Metric8& h);

struct SpinAction {
  Matrix16 spinor_matrix;  // product of the represented unit covectors
  Matrix8 rotation;        // composed reflections, acts on covector coordinates
};

// Action of an even product of unit one-forms: the spinor-side matrix is
// orthogonal and commutes with the chirality operator; the covector-side
// rotation is the matching composition of hyperplane reflections, so that
// represent(transform(a, rotation)) = U represent(a) U^T.  Odd lists and
// non-unit factors are rejected.
SpinAction spin_action(const CliffordRep& rep,
                       const std::vector<Polyform>& units, const Metric8& h);

}  // namespace spin7
