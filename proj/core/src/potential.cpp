#include "spin7/potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spin7/spin7_forms.hpp"

namespace spin7 {
namespace {

constexpr double kSqrt14 = 3.7416573867739413;

void require_self_dual(const Polyform& phi, const Metric8& h, double tol,
                       const char* what) {
  if (!phi.pure_rank(4))
    throw std::invalid_argument(std::string(what) +
                                " expects a pure four-form");
  const double n = norm(phi, h);
  if (n == 0.0) return;
  const SelfDualSplit split = self_dual_split(phi, h);
  if (norm(split.minus, h) > tol * n)
    throw std::invalid_argument(std::string(what) +
                                " expects a self-dual four-form");
}

// Dense antisymmetric coefficient tensor of a four-form, 0-based indices.
using Tensor4 = std::array<double, 4096>;

constexpr int t4(int a, int b, int c, int d) {
  return ((a * 8 + b) * 8 + c) * 8 + d;
}

int permutation_parity(const std::array<int, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

Tensor4 dense_four_form(const Polyform& p) {
  Tensor4 t{};
  for (Blade m : blades_of_rank(4)) {
    const double c = p[m];
    if (c == 0.0) continue;
    const auto idx1 = blade_indices(m);
    const std::array<int, 4> base = {idx1[0] - 1, idx1[1] - 1, idx1[2] - 1,
                                     idx1[3] - 1};
    std::array<int, 4> sel = {0, 1, 2, 3};
    do {
      t[t4(base[sel[0]], base[sel[1]], base[sel[2]], base[sel[3]])] =
          parity_sign(permutation_parity(sel)) * c;
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  return t;
}

// out[... slot=a ...] = sum_d m(a, d) in[... slot=d ...]
Tensor4 contract_slot(const Tensor4& in, const Matrix8& m, int slot) {
  Tensor4 out{};
  std::array<int, 4> i{};
  for (i[0] = 0; i[0] < 8; ++i[0])
    for (i[1] = 0; i[1] < 8; ++i[1])
      for (i[2] = 0; i[2] < 8; ++i[2])
        for (i[3] = 0; i[3] < 8; ++i[3]) {
          double s = 0.0;
          std::array<int, 4> j = i;
          for (j[slot] = 0; j[slot] < 8; ++j[slot])
            s += m(i[slot], j[slot]) * in[t4(j[0], j[1], j[2], j[3])];
          out[t4(i[0], i[1], i[2], i[3])] = s;
        }
  return out;
}

double cubic_term(const Polyform& phi, const Metric8& h) {
  return inner(generalized_product(phi, phi, 2, h), phi, h);
}

}  // namespace

double potential_value(const Polyform& phi, const Metric8& h, double tol) {
  require_self_dual(phi, h, tol, "potential");
  const double n = norm(phi, h);
  return (kSqrt14 / 3.0) * cubic_term(phi, h) + 4.0 * n * n * n;
}

Polyform potential_gradient(const Polyform& phi, const Metric8& h,
                            double tol) {
  require_self_dual(phi, h, tol, "potential gradient");
  return kSqrt14 * generalized_product(phi, phi, 2, h) +
         (12.0 * norm(phi, h)) * phi;
}

Matrix35 potential_hessian(const Polyform& phi, const Metric8& h, double tol) {
  require_self_dual(phi, h, tol, "potential hessian");
  const double n = norm(phi, h);
  if (n == 0.0)
    throw std::invalid_argument("potential hessian requires a nonzero form");

  const std::array<Polyform, 35> basis = self_dual_basis(h);
  std::array<Polyform, 35> mapped;
  std::array<double, 35> along;
  for (int i = 0; i < 35; ++i) {
    mapped[i] = generalized_product(phi, basis[i], 2, h);
    along[i] = inner(basis[i], phi, h);
  }

  Matrix35 out;
  for (int i = 0; i < 35; ++i) {
    for (int j = i; j < 35; ++j) {
      // <b_i Delta_2 b_j, phi> = <phi Delta_2 b_j, b_i> by the cyclic
      // property of the triple product of four-forms.
      const double quad =
          inner(mapped[j], basis[i], h) + inner(mapped[i], basis[j], h);
      const double gram = inner(basis[i], basis[j], h);
      const double val = kSqrt14 * quad + 12.0 * n * gram +
                         (12.0 / n) * along[i] * along[j];
      out(i, j) = val;
      out(j, i) = val;
    }
  }
  return out;
}

HessianBlockReport hessian_block_report(const Polyform& phi, const Metric8& h,
                                        double tol) {
  const double n = norm(phi, h);
  if (n == 0.0)
    throw std::invalid_argument("hessian block report requires a nonzero form");
  const Polyform ref = (kSqrt14 / n) * phi;

  const Matrix35 hess = potential_hessian(phi, h, tol);
  const std::array<Polyform, 35> basis = self_dual_basis(h);

  // Coordinates of the three projections of each basis vector give the
  // projector matrices of the splitting in the Hessian basis.
  Matrix35 p1, p7, p27;
  for (int j = 0; j < 35; ++j) {
    const FourFormDecomposition d = decompose_4form(basis[j], ref, h, tol);
    for (int i = 0; i < 35; ++i) {
      p1(i, j) = inner(d.q1, basis[i], h);
      p7(i, j) = inner(d.q7, basis[i], h);
      p27(i, j) = inner(d.q27, basis[i], h);
    }
  }

  HessianBlockReport out;
  Eigen::SelfAdjointEigenSolver<Matrix35> es(hess);
  for (int i = 0; i < 35; ++i) out.eigenvalues[i] = es.eigenvalues()[i];
  const Matrix35* proj[3] = {&p1, &p7, &p27};
  int slot = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b, ++slot)
      out.block_norms[slot] = (*proj[a] * hess * proj[b]->transpose()).norm();
  return out;
}

double pair_potential(const Metric8& h, const Polyform& phi) {
  if (!phi.pure_rank(4))
    throw std::invalid_argument("pair potential expects a pure four-form");
  const double n = norm(phi, h);
  return (kSqrt14 / 3.0) * cubic_term(phi, h) + 4.0 * n * n * n;
}

Matrix8 metric_gradient(const Metric8& h, const Polyform& phi) {
  if (!phi.pure_rank(4))
    throw std::invalid_argument("metric gradient expects a pure four-form");

  const Tensor4 p = dense_four_form(phi);
  const Matrix8& hi = h.inverse();

  // Cubic term: chain the three coefficient tensors through five inverse
  // metrics, two open indices left on the outer factors.
  Tensor4 raised = contract_slot(contract_slot(p, hi, 0), hi, 1);
  raised = contract_slot(contract_slot(raised, hi, 2), hi, 3);

  Tensor4 c{};
  for (int x = 0; x < 8; ++x)
    for (int i2 = 0; i2 < 8; ++i2)
      for (int k3 = 0; k3 < 8; ++k3)
        for (int k4 = 0; k4 < 8; ++k4) {
          double s = 0.0;
          for (int i3 = 0; i3 < 8; ++i3)
            for (int i4 = 0; i4 < 8; ++i4)
              s += p[t4(x, i2, i3, i4)] * raised[t4(i3, i4, k3, k4)];
          c[t4(x, i2, k3, k4)] = s;
        }
  const Tensor4 e = contract_slot(c, hi, 1);

  Matrix8 t1;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      double s = 0.0;
      for (int k2 = 0; k2 < 8; ++k2)
        for (int k3 = 0; k3 < 8; ++k3)
          for (int k4 = 0; k4 < 8; ++k4)
            s += e[t4(x, k2, k3, k4)] * p[t4(y, k2, k3, k4)];
      t1(x, y) = s;
    }

  // Norm term: all but the first index contracted pairwise.
  const Tensor4 v =
      contract_slot(contract_slot(contract_slot(p, hi, 1), hi, 2), hi, 3);
  Matrix8 t2;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      double s = 0.0;
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
          for (int cc = 0; cc < 8; ++cc)
            s += p[t4(x, a, b, cc)] * v[t4(y, a, b, cc)];
      t2(x, y) = s;
    }

  const double n = norm(phi, h);
  const Matrix8 sym1 = (t1 + t1.transpose()) / 2.0;
  return Matrix8(-(kSqrt14 / 4.0) * sym1 - n * t2);
}

CubicReport cubic_bound_check(const Polyform& q, const Metric8& h,
                              double tol) {
  require_self_dual(q, h, tol, "cubic invariant");
  const double n = norm(q, h);
  if (n == 0.0)
    throw std::invalid_argument("cubic invariant requires a nonzero form");

  CubicReport r;
  const Polyform qq = generalized_product(q, q, 2, h);
  r.f_value = inner(q, qq, h) / 3.0;
  r.c = 3.0 * r.f_value / (n * n);
  r.saturated = norm(qq - r.c * q, h) <= tol * n * n;
  r.bound_gap = (26.0 / 3.0) * n * n * n - potential_value(q, h, tol);
  return r;
}

}  // namespace spin7
