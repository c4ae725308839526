#pragma once

#include <array>
#include <utility>

#include "spin7/blade.hpp"
#include "spin7/metric.hpp"
#include "spin7/polyform.hpp"

// Exterior and Kaehler-Atiyah algebra operations on polyforms over an
// oriented Euclidean 8-space.  Conventions:
//   * determinant normalization: blades with increasing indices built from an
//     orthonormal coframe have unit norm, <e^{i1..ik}, e^{j1..jk}> is the
//     Gram determinant of the covector scalar products;
//   * the generalized products Delta_k contract k slots of each factor with
//     the inverse metric and wedge the remainders;
//   * the geometric product expands as
//       a <> b = sum_k (-1)^{floor((k+1)/2) + k p} (a Delta_k b),  a of rank p,
//     extended bilinearly over rank components.
// Operations dispatch on Metric8::orthonormal(): unit-coefficient bitmask
// kernels when the metric is the identity, explicit inverse-metric
// contractions otherwise.

namespace spin7 {

// a ^ b, graded commutative: a ^ b = (-1)^{pq} b ^ a on ranks p, q.
Polyform wedge(const Polyform& a, const Polyform& b);

// Interior product of a vector (components in the working basis) into a
// polyform; odd antiderivation, squares to zero.
Polyform interior(const Vector8& v, const Polyform& a);

// a Delta_k b.  k outside 0..8 is rejected; k = 0 is the wedge; the result
// vanishes when k exceeds the rank of either factor.
Polyform generalized_product(const Polyform& a, const Polyform& b, int k,
                             const Metric8& h);

// Kaehler-Atiyah (Clifford) product a <> b; associative, unital.
Polyform geometric_product(const Polyform& a, const Polyform& b,
                           const Metric8& h);

enum class Involution { parity, reversion };

// parity:    a^(k) -> (-1)^k a^(k)            (algebra automorphism)
// reversion: a^(k) -> (-1)^{k(k-1)/2} a^(k)   (algebra anti-automorphism)
Polyform involution(const Polyform& a, Involution which);
Polyform parity(const Polyform& a);
Polyform reversion(const Polyform& a);

// Unit volume form of (h, o): o * sqrt(det h) e^{1..8}.  Squares to 1 under
// the geometric product.
Polyform volume_form(const Metric8& h, Orientation o = Orientation::positive);

// Hodge dual, realized as reversion(a) <> volume_form(h, o).
Polyform hodge(const Polyform& a, const Metric8& h,
               Orientation o = Orientation::positive);

// Scalar product with determinant normalization; ranks are orthogonal.
double inner(const Polyform& a, const Polyform& b, const Metric8& h);
double norm(const Polyform& a, const Metric8& h);

struct SelfDualSplit {
  Polyform plus;   // hodge(plus)  = +plus
  Polyform minus;  // hodge(minus) = -minus
};

// Orthogonal splitting of a four-form into self-dual and anti-self-dual
// parts; inputs of mixed rank are rejected.
SelfDualSplit self_dual_split(const Polyform& w, const Metric8& h,
                              Orientation o = Orientation::positive);

// Induced algebra map of an invertible change of covector coordinates:
// coordinates of rank-k components transform by the k-minors of m.  For
// orthogonal m this is the pullback action of the corresponding rotation.
Polyform transform(const Polyform& a, const Matrix8& m);

// Orthonormal basis of the 35-dimensional self-dual subspace of the
// four-forms.  For the identity metric and positive orientation this is the
// fixed list (e^I + hodge(e^I)) / sqrt(2) over the lexicographically ordered
// four-index tuples I containing index 1; general metrics orthonormalize the
// projected blade candidates deterministically.
std::array<Polyform, 35> self_dual_basis(const Metric8& h,
                                         Orientation o = Orientation::positive);

namespace detail {

// Explicit inverse-metric contraction path, exposed so tests can pin the
// orthonormal fast path against it on the identity metric.
Polyform generalized_product_general(const Polyform& a, const Polyform& b,
                                     int k, const Metric8& h);

// Determinant of the square submatrix of m selected by the row/column index
// sets (equal-rank blade masks).
double minor_det(const Matrix8& m, Blade rows, Blade cols);

}  // namespace detail

}  // namespace spin7
