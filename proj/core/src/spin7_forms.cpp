#include "spin7/spin7_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spin7 {
namespace {

constexpr double kSqrt14 = 3.7416573867739413;  // sqrt(14)

void require_four_form(const Polyform& p, const char* what) {
  if (!p.pure_rank(4)) {
    throw std::invalid_argument(std::string(what) +
                                " must be a pure four-form");
  }
}

// Replace index a by index b inside blade j (a present, b absent) and report
// the sign of re-sorting the covectors.
struct Substitution {
  Blade blade;
  double sign;
};

Substitution substitute_index(Blade j, int a, int b) {
  const Blade rest = j & ~blade_bit(a);
  return {rest | blade_bit(b),
          parity_sign(position_in(rest, a) + position_in(rest, b))};
}

}  // namespace

// Component signs are fixed by the quadratic identity phi D2 phi = -12 phi;
// the form is the four-form part of sixteen times the square of the last
// basis spinor of the positive half-representation.  Flipping the overall
// sign leaves the quadratic identity unsatisfiable.
Polyform canonical_cayley() {
  Polyform phi;
  const struct {
    int i, j, k, l;
    double c;
  } terms[] = {
      {1, 2, 3, 4, -1.0}, {1, 2, 5, 6, -1.0}, {1, 2, 7, 8, -1.0},
      {1, 3, 5, 7, -1.0}, {1, 3, 6, 8, 1.0},  {1, 4, 5, 8, 1.0},
      {1, 4, 6, 7, 1.0},  {5, 6, 7, 8, -1.0}, {3, 4, 7, 8, -1.0},
      {3, 4, 5, 6, -1.0}, {2, 4, 6, 8, -1.0}, {2, 4, 5, 7, 1.0},
      {2, 3, 5, 8, 1.0},  {2, 3, 6, 7, 1.0},
  };
  for (const auto& t : terms)
    phi[blade_from_indices({t.i, t.j, t.k, t.l})] = t.c;
  return phi;
}

Eigen::MatrixXd lambda_operator(const Polyform& phi, const Metric8& h) {
  require_four_form(phi, "lambda operator input");
  const auto& masks = blades_of_rank(4);
  const int n = static_cast<int>(masks.size());
  Eigen::MatrixXd op(n, n);
  for (int j = 0; j < n; ++j) {
    const Polyform col =
        generalized_product(phi, Polyform::blade(masks[j]), 2, h);
    for (int i = 0; i < n; ++i) op(i, j) = 2.0 * col[masks[i]];
  }
  return op;
}

Spin7Verdict is_conformal_spin7(const Polyform& phi, const Metric8& h,
                                double tol) {
  require_four_form(phi, "conformal Spin(7) candidate");
  const double n = norm(phi, h);
  if (n < 1e-150) throw std::invalid_argument("zero form rejected");

  const SelfDualSplit split = self_dual_split(phi, h);
  Spin7Verdict v;
  if (norm(split.minus, h) <= tol * n) {
    v.chirality_branch = +1;
  } else if (norm(split.plus, h) <= tol * n) {
    v.chirality_branch = -1;
  }

  const Polyform quad =
      kSqrt14 * generalized_product(phi, phi, 2, h) + (12.0 * n) * phi;
  v.residual = norm(quad, h) / (n * n);

  v.conformal = v.chirality_branch != 0 && v.residual <= tol;
  if (v.conformal) {
    v.conformal_constant = std::pow(14.0, -0.25) * std::sqrt(n);
    v.metric = std::abs(n - kSqrt14) <= tol * kSqrt14;
  }
  return v;
}

Metric8 induced_metric(const Polyform& phi, const Metric8& h, double tol) {
  const Spin7Verdict v = is_conformal_spin7(phi, h, tol);
  if (!v.conformal)
    throw std::domain_error(
        "form does not define a conformal Spin(7) structure");
  return Metric8(v.conformal_constant * h.entries());
}

FourFormDecomposition decompose_4form(const Polyform& q,
                                      const Polyform& phi_ref, const Metric8& h,
                                      double tol) {
  require_four_form(q, "decomposition input");
  const Spin7Verdict ref = is_conformal_spin7(phi_ref, h, tol);
  if (!ref.metric || ref.chirality_branch != +1)
    throw std::invalid_argument(
        "reference form must define a self-dual metric Spin(7) structure");

  const double n = norm(phi_ref, h);
  const double l1 = -12.0 * n / kSqrt14;
  const double l7 = -6.0 * n / kSqrt14;
  const double l27 = 2.0 * n / kSqrt14;

  const SelfDualSplit split = self_dual_split(q, h);
  const auto apply = [&](const Polyform& w) {
    return generalized_product(phi_ref, w, 2, h);
  };

  FourFormDecomposition d;
  d.q35 = split.minus;
  d.q1 = (inner(q, phi_ref, h) / inner(phi_ref, phi_ref, h)) * phi_ref;

  // Quadratic spectral projectors with the exact eigenvalues: applying
  // (T - a)(T - b) / ((c - a)(c - b)) to the self-dual part isolates the
  // eigenvalue-c component.
  {
    Polyform u = apply(split.plus) - l1 * split.plus;
    u = apply(u) - l27 * u;
    d.q7 = u * (1.0 / ((l7 - l1) * (l7 - l27)));
  }
  {
    Polyform u = apply(split.plus) - l1 * split.plus;
    u = apply(u) - l7 * u;
    d.q27 = u * (1.0 / ((l27 - l1) * (l27 - l7)));
  }

  // Residual guard: a reference form drifting off the Spin(7) locus breaks
  // the exact eigenvalues the projectors rely on.
  const double scale = n * std::max(norm(q, h), 1e-150);
  const struct {
    const Polyform* part;
    double eigenvalue;
  } checks[] = {{&d.q1, l1}, {&d.q7, l7}, {&d.q27, l27}};
  for (const auto& c : checks) {
    if (norm(apply(*c.part) - c.eigenvalue * (*c.part), h) > 10.0 * tol * scale)
      throw std::runtime_error(
          "spectral residual exceeds tolerance; reference form has drifted");
  }
  return d;
}

int stabilizer_dimension(const Polyform& phi, double cutoff) {
  require_four_form(phi, "stabilizer input");
  const auto& masks = blades_of_rank(4);
  const int n = static_cast<int>(masks.size());

  // Columns: derivation action of the antisymmetric generators E_ij - E_ji
  // (i < j) on phi, coordinatized over the 70 four-form blades.
  Eigen::MatrixXd action(n, 28);
  int col = 0;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j, ++col) {
      Polyform out;
      for (Blade m : masks) {
        const double c = phi[m];
        if (c == 0.0) continue;
        // e^j -> e^i contributes +, e^i -> e^j contributes -.
        if ((m & blade_bit(j)) && !(m & blade_bit(i))) {
          const Substitution s = substitute_index(m, j, i);
          out[s.blade] += s.sign * c;
        }
        if ((m & blade_bit(i)) && !(m & blade_bit(j))) {
          const Substitution s = substitute_index(m, i, j);
          out[s.blade] -= s.sign * c;
        }
      }
      for (int r = 0; r < n; ++r) action(r, col) = out[masks[r]];
    }
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(action);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  if (top == 0.0) return 28;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff * top) ++rank;
  return 28 - rank;
}

}  // namespace spin7
