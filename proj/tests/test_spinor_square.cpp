#include <doctest.h>

#include <cmath>
#include <spin7/rng.hpp>
#include <spin7/spin7_forms.hpp>
#include <spin7/spinor_square.hpp>

#include "test_support.hpp"

using namespace spin7;
using spin7::test::max_abs_diff;
using spin7::test::random_mixed;
using spin7::test::random_spd;

namespace {

Spinor16 random_spinor(Rng& rng) {
  Spinor16 xi;
  for (int i = 0; i < 16; ++i) xi[i] = rng.gaussian();
  return xi;
}

Spinor16 random_chiral(const CliffordRep& rep, Rng& rng, int sign) {
  while (true) {
    const Spinor16 xi = rep.chiral_projector(sign) * random_spinor(rng);
    if (xi.norm() > 0.5) return xi;
  }
}

}  // namespace

TEST_CASE("the square represents as the rank-one projector of the spinor") {
  const CliffordRep rep = build_rep();
  Rng rng(51);
  for (const Metric8& h : {Metric8::identity(), random_spd(rng)}) {
    for (int kappa : {+1, -1}) {
      const Spinor16 xi = random_spinor(rng);
      const Polyform sq = signed_square(rep, xi, kappa, h);
      const Matrix16 lhs = represent(rep, sq, h);
      const Matrix16 rhs = static_cast<double>(kappa) * xi * xi.transpose();
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("squares of chiral spinors pass the square conditions") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  Rng rng(52);
  for (int mu : {+1, -1}) {
    for (int kappa : {+1, -1}) {
      const Spinor16 xi = random_chiral(rep, rng, mu);
      const Polyform sq = signed_square(rep, xi, kappa, id);
      const SquareReport r = check_square_conditions(sq, id);
      CHECK(r.is_square);
      CHECK(r.kappa == kappa);
      CHECK(r.mu == mu);
      CHECK(r.spinor_norm == doctest::Approx(xi.squaredNorm()).epsilon(1e-10));
      for (double res : r.residuals) CHECK(res < 1e-10);
    }
  }
}

TEST_CASE("the zero polyform counts as the square of the zero spinor") {
  const SquareReport r = check_square_conditions(Polyform(), Metric8::identity());
  CHECK(r.is_square);
  CHECK(r.kappa == 1);
  CHECK(r.mu == 1);
  CHECK(r.spinor_norm == 0.0);
}

TEST_CASE("generic polyforms and squares of non-chiral spinors are rejected") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  Rng rng(53);

  const SquareReport generic = check_square_conditions(random_mixed(rng), id);
  CHECK(!generic.is_square);

  // A mixed-chirality spinor violates the volume eigenvalue condition.
  Spinor16 xi = Spinor16::Zero();
  xi[0] = 1.0;
  xi[15] = 1.0;
  const SquareReport mixed =
      check_square_conditions(signed_square(rep, xi, 1, id), id);
  CHECK(!mixed.is_square);
  CHECK(mixed.residuals[2] > 1e-3);
}

TEST_CASE("recovery inverts the square up to overall spinor sign") {
  const CliffordRep rep = build_rep();
  Rng rng(54);
  for (const Metric8& h : {Metric8::identity(), random_spd(rng)}) {
    for (int mu : {+1, -1}) {
      for (int kappa : {+1, -1}) {
        Spinor16 xi = random_chiral(rep, rng, mu);
        xi *= 0.5 + rng.uniform();  // vary the norm
        const Polyform sq = signed_square(rep, xi, kappa, h);
        const SquareReport r = check_square_conditions(sq, h);
        REQUIRE(r.is_square);
        const Spinor16 back = recover_spinor(rep, sq, r, h);
        const double dplus = (back - xi).cwiseAbs().maxCoeff();
        const double dminus = (back + xi).cwiseAbs().maxCoeff();
        CHECK(std::min(dplus, dminus) < 1e-8);
      }
    }
  }
}

TEST_CASE("recovered spinors fix the sign by the largest component") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  Rng rng(55);
  const Spinor16 xi = random_chiral(rep, rng, +1);
  const Polyform sq = signed_square(rep, xi, 1, id);
  const SquareReport r = check_square_conditions(sq, id);
  REQUIRE(r.is_square);
  const Spinor16 a = recover_spinor(rep, sq, r, id);
  const Spinor16 b = recover_spinor(rep, signed_square(rep, Spinor16(-xi), 1, id),
                                    r, id);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
  int top = 0;
  for (int i = 1; i < 16; ++i)
    if (std::abs(a[i]) > std::abs(a[top])) top = i;
  CHECK(a[top] > 0.0);
}

TEST_CASE("Cayley form of a spinor: chirality fixes the duality type") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  Rng rng(56);
  for (int mu : {+1, -1}) {
    const Spinor16 xi = random_chiral(rep, rng, mu);
    const Polyform phi = cayley_from_spinor(rep, xi, id);
    CHECK(phi.pure_rank(4));
    const Polyform expect =
        16.0 * signed_square(rep, xi, 1, id).rank_component(4);
    CHECK(max_abs_diff(phi, expect) < 1e-12);
    CHECK(max_abs_diff(hodge(phi, id), static_cast<double>(mu) * phi) < 1e-10);
    // Norm ties to the spinor norm quadratically.
    CHECK(norm(phi, id) ==
          doctest::Approx(std::sqrt(14.0) * xi.squaredNorm()).epsilon(1e-10));
  }
  CHECK_THROWS_AS((void)cayley_from_spinor(rep, Spinor16::Zero(), id),
                  std::invalid_argument);
  Spinor16 mixed = Spinor16::Zero();
  mixed[0] = 1.0;
  mixed[15] = 1.0;
  CHECK_THROWS_AS((void)cayley_from_spinor(rep, mixed, id),
                  std::invalid_argument);
}

TEST_CASE("the canonical form is the Cayley form of a basis spinor") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  Spinor16 e15 = Spinor16::Zero();
  e15[15] = 1.0;
  CHECK(max_abs_diff(cayley_from_spinor(rep, e15, id), canonical_cayley()) ==
        0.0);
}

TEST_CASE("the unit polyform built from the canonical form is a square") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  const Polyform alpha =
      (1.0 / 16.0) * (Polyform::scalar(1.0) + canonical_cayley() +
                      volume_form(id));
  const SquareReport r = check_square_conditions(alpha, id, 1e-10);
  CHECK(r.is_square);
  CHECK(r.kappa == 1);
  CHECK(r.mu == 1);
  CHECK(r.spinor_norm == doctest::Approx(1.0).epsilon(1e-12));
  for (double res : r.residuals) CHECK(res < 1e-10);

  const Spinor16 xi = recover_spinor(rep, alpha, r, id);
  CHECK(xi.norm() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(max_abs_diff(signed_square(rep, xi, 1, id), alpha) < 1e-12);
}

TEST_CASE("volume form of a general metric represents as the chirality") {
  const CliffordRep rep = build_rep();
  Rng rng(57);
  const Metric8 h = random_spd(rng);
  const Matrix16 nu = represent(rep, volume_form(h), h);
  CHECK((nu - rep.chirality()).cwiseAbs().maxCoeff() < 1e-11);
}
