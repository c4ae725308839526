#include "spin7/clifford.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace spin7 {
namespace {

// Octonion basis multiplication u_i u_j = sign * u_k on indices 0..7, with
// u_0 the real unit.  The seven oriented lines of the Fano plane fix the
// products of the imaginary units.
struct OctonionTable {
  std::array<std::array<int, 8>, 8> index;
  std::array<std::array<double, 8>, 8> sign;

  OctonionTable() {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (i == 0) {
          index[i][j] = j;
          sign[i][j] = 1.0;
        } else if (j == 0) {
          index[i][j] = i;
          sign[i][j] = 1.0;
        } else if (i == j) {
          index[i][j] = 0;
          sign[i][j] = -1.0;
        } else {
          index[i][j] = -1;  // filled from the Fano lines below
          sign[i][j] = 0.0;
        }
      }
    const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 5, 7},
                             {2, 4, 6}, {3, 4, 7}, {3, 6, 5}};
    for (const auto& l : lines) {
      const int a = l[0], b = l[1], c = l[2];
      set(a, b, c, +1.0);
      set(b, c, a, +1.0);
      set(c, a, b, +1.0);
      set(b, a, c, -1.0);
      set(c, b, a, -1.0);
      set(a, c, b, -1.0);
    }
  }

  void set(int i, int j, int k, double s) {
    index[i][j] = k;
    sign[i][j] = s;
  }
};

// Left multiplication by basis octonion u_i as an 8x8 signed permutation.
Matrix8 left_mult(const OctonionTable& t, int i) {
  Matrix8 m = Matrix8::Zero();
  for (int j = 0; j < 8; ++j) m(t.index[i][j], j) = t.sign[i][j];
  return m;
}

}  // namespace

struct CliffordRep::Data {
  std::array<Matrix16, 8> gamma;
  Matrix16 chirality;
  std::array<Matrix16, kBladeCount> blade;
};

const Matrix16& CliffordRep::gamma(int index1) const {
  if (index1 < 1 || index1 > kDim)
    throw std::invalid_argument("generator index must lie in 1..8");
  return data_->gamma[index1 - 1];
}

const Matrix16& CliffordRep::chirality() const { return data_->chirality; }

const Matrix16& CliffordRep::blade_matrix(Blade b) const {
  return data_->blade[b];
}

Matrix16 CliffordRep::chiral_projector(int sign) const {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("chiral projector sign must be +1 or -1");
  return (Matrix16::Identity() + static_cast<double>(sign) * chirality()) / 2.0;
}

CliffordRep build_rep() {
  const OctonionTable table;
  auto data = std::make_shared<CliffordRep::Data>();

  // gamma(v) acts on pairs of octonions by (x, y) -> (v y, conj(v) x).  The
  // Clifford relation reduces to v (conj(v) x) = |v|^2 x, which holds in any
  // alternative algebra, and symmetry to <a b, c> = <b, conj(a) c>.
  for (int i = 0; i < 8; ++i) {
    const Matrix8 l = left_mult(table, i);
    const Matrix8 lc = (i == 0) ? l : Matrix8(-l);  // conjugate basis unit
    Matrix16 g = Matrix16::Zero();
    g.block<8, 8>(0, 8) = l;
    g.block<8, 8>(8, 0) = lc;
    data->gamma[i] = g;
  }

  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Matrix16 anti = data->gamma[i] * data->gamma[j] +
                            data->gamma[j] * data->gamma[i];
      const Matrix16 expect =
          (i == j) ? Matrix16(2.0 * Matrix16::Identity()) : Matrix16::Zero();
      if ((anti - expect).cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("Clifford relations violated");
    }
    if ((data->gamma[i] - data->gamma[i].transpose()).cwiseAbs().maxCoeff() >
        1e-12)
      throw std::logic_error("generator not symmetric");
  }

  data->blade[0] = Matrix16::Identity();
  for (Blade b = 1; b < kBladeCount; ++b) {
    const int low = std::countr_zero(b);
    data->blade[b] = data->gamma[low] * data->blade[b & (b - 1)];
  }
  data->chirality = data->blade[kVolumeBlade];

  const Matrix16& ch = data->chirality;
  if ((ch * ch - Matrix16::Identity()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::logic_error("chirality does not square to the identity");
  if (std::abs(ch.trace()) > 1e-12)
    throw std::logic_error("chirality must be traceless");
  for (int i = 0; i < 8; ++i)
    if ((ch * data->gamma[i] + data->gamma[i] * ch).cwiseAbs().maxCoeff() >
        1e-12)
      throw std::logic_error("chirality must anticommute with the generators");

  CliffordRep rep;
  rep.data_ = std::move(data);
  return rep;
}

Matrix16 represent(const CliffordRep& rep, const Polyform& a,
                   const Metric8& h) {
  const Polyform& frame_coords =
      h.orthonormal() ? a : transform(a, h.cholesky_inverse());
  Matrix16 m = Matrix16::Zero();
  for (int i = 0; i < kBladeCount; ++i) {
    const Blade b = static_cast<Blade>(i);
    const double c = frame_coords[b];
    if (c == 0.0) continue;
    m += c * rep.blade_matrix(b);
  }
  return m;
}

double ka_trace(const CliffordRep& rep, const Polyform& a, const Metric8& h) {
  (void)rep;
  (void)h;
  return 16.0 * a.scalar_part();
}

double frobenius_pairing(const CliffordRep& rep, const Polyform& a,
                         const Polyform& b, const Metric8& h) {
  return ka_trace(rep, geometric_product(reversion(a), b, h), h);
}

SpinAction spin_action(const CliffordRep& rep,
                       const std::vector<Polyform>& units, const Metric8& h) {
  if (units.size() % 2 != 0)
    throw std::invalid_argument("spin action requires an even number of units");

  SpinAction out{Matrix16::Identity(), Matrix8::Identity()};
  for (const Polyform& u : units) {
    if (!u.pure_rank(1))
      throw std::invalid_argument("spin action factors must be one-forms");
    if (std::abs(norm(u, h) - 1.0) > 1e-10)
      throw std::invalid_argument("spin action factors must have unit norm");

    out.spinor_matrix = Matrix16(out.spinor_matrix * represent(rep, u, h));

    Vector8 comp;
    for (int i = 1; i <= kDim; ++i) comp[i - 1] = u[blade_bit(i)];
    const Vector8 raised = h.inverse() * comp;
    const Matrix8 reflection =
        Matrix8::Identity() - 2.0 * comp * raised.transpose();
    out.rotation = Matrix8(out.rotation * reflection);
  }
  return out;
}

}  // namespace spin7
