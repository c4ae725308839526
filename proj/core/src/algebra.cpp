#include "spin7/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace spin7 {
namespace {

struct Term {
  Blade blade;
  double coeff;
};

std::vector<Term> nonzero_terms(const Polyform& a) {
  std::vector<Term> t;
  t.reserve(64);
  for (int i = 0; i < kBladeCount; ++i) {
    const Blade b = static_cast<Blade>(i);
    if (a[b] != 0.0) t.push_back({b, a[b]});
  }
  return t;
}

// Sign of the Delta_k term inside the geometric product expansion, for a left
// factor of rank p.
double diamond_sign(int k, int p) {
  const int e = (k + 1) / 2 + k * p;
  return parity_sign(e);
}

// One factor of the general contraction path: blade A split into a contracted
// sub-blade (by table index within its rank) and the wedged remainder, with
// the iterated-contraction sign folded into the coefficient.
struct ContractionPiece {
  int det_index;
  Blade rest;
  double signed_coeff;
};

std::vector<ContractionPiece> contraction_pieces(const std::vector<Term>& terms,
                                                 int k, bool with_diamond_sign) {
  std::vector<ContractionPiece> pieces;
  for (const Term& t : terms) {
    if (blade_rank(t.blade) < k) continue;
    const double base =
        with_diamond_sign ? diamond_sign(k, blade_rank(t.blade)) * t.coeff
                          : t.coeff;
    for (Blade s : sub_blades(t.blade, k)) {
      pieces.push_back({blade_rank_index(s), static_cast<Blade>(t.blade & ~s),
                        contraction_sign(t.blade, s) * base});
    }
  }
  return pieces;
}

// a Delta_k b through explicit inverse-metric contractions:
//   a Delta_k b = sum_{S in a, T in b, |S|=|T|=k}
//       det(h^{-1}[S,T]) * sign_a(S) * sign_b(T) * (a\S) ^ (b\T).
// With `with_diamond_sign` the per-pair expansion sign is folded in, turning
// the accumulated sum over k into the geometric product.
void accumulate_general(const std::vector<Term>& ta, const std::vector<Term>& tb,
                        int k, const Metric8& h, bool with_diamond_sign,
                        Polyform& out) {
  const auto left = contraction_pieces(ta, k, with_diamond_sign);
  if (left.empty()) return;
  const auto right = contraction_pieces(tb, k, false);
  if (right.empty()) return;

  const auto& masks = blades_of_rank(k);
  const int m = static_cast<int>(masks.size());
  std::vector<double> det(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      det[static_cast<std::size_t>(i) * m + j] =
          detail::minor_det(h.inverse(), masks[i], masks[j]);

  for (const ContractionPiece& l : left) {
    for (const ContractionPiece& r : right) {
      if (l.rest & r.rest) continue;
      const double d = det[static_cast<std::size_t>(l.det_index) * m + r.det_index];
      if (d == 0.0) continue;
      out[l.rest | r.rest] +=
          d * l.signed_coeff * r.signed_coeff * wedge_sign(l.rest, r.rest);
    }
  }
}

Polyform generalized_product_orthonormal(const std::vector<Term>& ta,
                                         const std::vector<Term>& tb, int k) {
  Polyform out;
  for (const Term& x : ta) {
    const double ds = diamond_sign(k, blade_rank(x.blade));
    for (const Term& y : tb) {
      if (std::popcount(x.blade & y.blade) != k) continue;
      out[x.blade ^ y.blade] +=
          ds * clifford_sign(x.blade, y.blade) * x.coeff * y.coeff;
    }
  }
  return out;
}

void check_order(int k) {
  if (k < 0 || k > kDim)
    throw std::invalid_argument("generalized product order must lie in 0..8");
}

}  // namespace

Polyform wedge(const Polyform& a, const Polyform& b) {
  Polyform out;
  const auto ta = nonzero_terms(a);
  const auto tb = nonzero_terms(b);
  for (const Term& x : ta) {
    for (const Term& y : tb) {
      if (x.blade & y.blade) continue;
      out[x.blade | y.blade] += wedge_sign(x.blade, y.blade) * x.coeff * y.coeff;
    }
  }
  return out;
}

Polyform interior(const Vector8& v, const Polyform& a) {
  Polyform out;
  for (int i = 0; i < kBladeCount; ++i) {
    const Blade blade = static_cast<Blade>(i);
    const double c = a[blade];
    if (c == 0.0) continue;
    for (Blade t = blade; t != 0; t &= t - 1) {
      const int index1 = std::countr_zero(t) + 1;
      const double vi = v[index1 - 1];
      if (vi == 0.0) continue;
      out[blade & ~blade_bit(index1)] +=
          parity_sign(position_in(blade, index1)) * vi * c;
    }
  }
  return out;
}

Polyform generalized_product(const Polyform& a, const Polyform& b, int k,
                             const Metric8& h) {
  check_order(k);
  const auto ta = nonzero_terms(a);
  const auto tb = nonzero_terms(b);
  if (h.orthonormal()) return generalized_product_orthonormal(ta, tb, k);
  Polyform out;
  accumulate_general(ta, tb, k, h, false, out);
  return out;
}

Polyform geometric_product(const Polyform& a, const Polyform& b,
                           const Metric8& h) {
  Polyform out;
  const auto ta = nonzero_terms(a);
  const auto tb = nonzero_terms(b);
  if (h.orthonormal()) {
    // The expansion signs cancel blade by blade against the Delta_k signs,
    // leaving the plain merge-parity Clifford kernel.
    for (const Term& x : ta)
      for (const Term& y : tb)
        out[x.blade ^ y.blade] +=
            clifford_sign(x.blade, y.blade) * x.coeff * y.coeff;
    return out;
  }
  for (int k = 0; k <= kDim; ++k)
    accumulate_general(ta, tb, k, h, true, out);
  return out;
}

Polyform involution(const Polyform& a, Involution which) {
  Polyform out;
  for (int i = 0; i < kBladeCount; ++i) {
    const Blade b = static_cast<Blade>(i);
    if (a[b] == 0.0) continue;
    const int k = blade_rank(b);
    const int e = which == Involution::parity ? k : k * (k - 1) / 2;
    out[b] = parity_sign(e) * a[b];
  }
  return out;
}

Polyform parity(const Polyform& a) { return involution(a, Involution::parity); }

Polyform reversion(const Polyform& a) {
  return involution(a, Involution::reversion);
}

Polyform volume_form(const Metric8& h, Orientation o) {
  return Polyform::blade(kVolumeBlade,
                         orientation_sign(o) * std::sqrt(h.det()));
}

Polyform hodge(const Polyform& a, const Metric8& h, Orientation o) {
  return geometric_product(reversion(a), volume_form(h, o), h);
}

double inner(const Polyform& a, const Polyform& b, const Metric8& h) {
  if (h.orthonormal()) {
    double s = 0.0;
    for (int i = 0; i < kBladeCount; ++i) {
      const Blade blade = static_cast<Blade>(i);
      s += a[blade] * b[blade];
    }
    return s;
  }
  double s = 0.0;
  const auto ta = nonzero_terms(a);
  const auto tb = nonzero_terms(b);
  for (const Term& x : ta)
    for (const Term& y : tb) {
      if (blade_rank(x.blade) != blade_rank(y.blade)) continue;
      s += x.coeff * y.coeff * detail::minor_det(h.inverse(), x.blade, y.blade);
    }
  return s;
}

double norm(const Polyform& a, const Metric8& h) {
  return std::sqrt(std::max(0.0, inner(a, a, h)));
}

SelfDualSplit self_dual_split(const Polyform& w, const Metric8& h,
                              Orientation o) {
  if (!w.pure_rank(4))
    throw std::invalid_argument("self-dual splitting expects a pure four-form");
  const Polyform dual = hodge(w, h, o);
  return {(w + dual) * 0.5, (w - dual) * 0.5};
}

Polyform transform(const Polyform& a, const Matrix8& m) {
  Polyform out;
  out[0] = a[0];
  for (int k = 1; k <= kDim; ++k) {
    const auto& masks = blades_of_rank(k);
    bool any = false;
    for (Blade src : masks)
      if (a[src] != 0.0) {
        any = true;
        break;
      }
    if (!any) continue;
    for (Blade dst : masks) {
      double s = 0.0;
      for (Blade src : masks) {
        const double c = a[src];
        if (c == 0.0) continue;
        s += detail::minor_det(m, dst, src) * c;
      }
      out[dst] = s;
    }
  }
  return out;
}

std::array<Polyform, 35> self_dual_basis(const Metric8& h, Orientation o) {
  std::array<Polyform, 35> basis;
  // Lexicographic four-index tuples containing index 1.
  std::vector<Blade> leading;
  leading.reserve(35);
  for (int b = 2; b <= 6; ++b)
    for (int c = b + 1; c <= 7; ++c)
      for (int d = c + 1; d <= 8; ++d)
        leading.push_back(blade_bit(1) | blade_bit(b) | blade_bit(c) |
                          blade_bit(d));

  if (h.orthonormal()) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 35; ++i) {
      const Polyform e = Polyform::blade(leading[i]);
      basis[i] = (e + hodge(e, h, o)) * inv_sqrt2;
    }
    return basis;
  }

  // General metric: project blade candidates onto the self-dual subspace and
  // orthonormalize deterministically, preferring the canonical leading list.
  std::vector<Blade> candidates = leading;
  for (Blade b : blades_of_rank(4))
    if (std::find(leading.begin(), leading.end(), b) == leading.end())
      candidates.push_back(b);

  int filled = 0;
  for (Blade cand : candidates) {
    if (filled == 35) break;
    Polyform v = self_dual_split(Polyform::blade(cand), h, o).plus;
    for (int j = 0; j < filled; ++j) v -= inner(v, basis[j], h) * basis[j];
    // Second sweep stabilizes the projection for nearly dependent candidates.
    for (int j = 0; j < filled; ++j) v -= inner(v, basis[j], h) * basis[j];
    const double n = norm(v, h);
    if (n <= 1e-8) continue;
    basis[filled++] = v * (1.0 / n);
  }
  if (filled != 35)
    throw std::runtime_error("self-dual basis construction degenerated");
  return basis;
}

namespace detail {

Polyform generalized_product_general(const Polyform& a, const Polyform& b,
                                     int k, const Metric8& h) {
  check_order(k);
  Polyform out;
  accumulate_general(nonzero_terms(a), nonzero_terms(b), k, h, false, out);
  return out;
}

double minor_det(const Matrix8& m, Blade rows, Blade cols) {
  const int k = blade_rank(rows);
  if (k != blade_rank(cols))
    throw std::invalid_argument("minor requires equal-rank index sets");
  if (k == 0) return 1.0;
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8> sub(k, k);
  int i = 0;
  for (Blade r = rows; r != 0; r &= r - 1, ++i) {
    const int ri = std::countr_zero(r);
    int j = 0;
    for (Blade c = cols; c != 0; c &= c - 1, ++j)
      sub(i, j) = m(ri, std::countr_zero(c));
  }
  return sub.determinant();
}

}  // namespace detail

}  // namespace spin7
