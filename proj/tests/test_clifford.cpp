#include <doctest.h>

#include <cmath>
#include <spin7/clifford.hpp>
#include <spin7/rng.hpp>

#include "test_support.hpp"

using namespace spin7;
using spin7::test::max_abs_diff;
using spin7::test::random_mixed;
using spin7::test::random_pure;
using spin7::test::random_spd;

namespace {
double mdiff(const Matrix16& a, const Matrix16& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("generators anticommute, are symmetric and square to one") {
  const CliffordRep rep = build_rep();
  for (int i = 1; i <= 8; ++i) {
    const Matrix16& gi = rep.gamma(i);
    CHECK(mdiff(gi, gi.transpose()) == 0.0);
    for (int j = 1; j <= 8; ++j) {
      const Matrix16 anti = gi * rep.gamma(j) + rep.gamma(j) * gi;
      const Matrix16 expect =
          (i == j) ? Matrix16(2.0 * Matrix16::Identity()) : Matrix16::Zero();
      CHECK(mdiff(anti, expect) == 0.0);
    }
  }
  CHECK_THROWS_AS((void)rep.gamma(0), std::invalid_argument);
  CHECK_THROWS_AS((void)rep.gamma(9), std::invalid_argument);
}

TEST_CASE("chirality operator splits the module into two eight-planes") {
  const CliffordRep rep = build_rep();
  const Matrix16& ch = rep.chirality();
  CHECK(mdiff(ch * ch, Matrix16::Identity()) == 0.0);
  CHECK(std::abs(ch.trace()) == 0.0);
  for (int i = 1; i <= 8; ++i)
    CHECK(mdiff(ch * rep.gamma(i), -(rep.gamma(i) * ch).eval()) == 0.0);

  for (int sign : {+1, -1}) {
    const Matrix16 p = rep.chiral_projector(sign);
    CHECK(mdiff(p * p, p) < 1e-14);
    CHECK(p.trace() == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(mdiff(ch * p, static_cast<double>(sign) * p) < 1e-14);
  }
  CHECK_THROWS_AS((void)rep.chiral_projector(0), std::invalid_argument);
}

TEST_CASE("blade matrices are ordered generator products") {
  const CliffordRep rep = build_rep();
  CHECK(mdiff(rep.blade_matrix(0), Matrix16::Identity()) == 0.0);
  const Blade b = blade_from_indices({2, 3, 5, 8});
  const Matrix16 expect =
      rep.gamma(2) * rep.gamma(3) * rep.gamma(5) * rep.gamma(8);
  CHECK(mdiff(rep.blade_matrix(b), expect) == 0.0);
  CHECK(mdiff(rep.chirality(), rep.blade_matrix(kVolumeBlade)) == 0.0);
}

TEST_CASE("represent is an algebra map for the geometric product") {
  const CliffordRep rep = build_rep();
  Rng rng(41);
  for (const Metric8& h : {Metric8::identity(), random_spd(rng)}) {
    const Polyform a = random_mixed(rng);
    const Polyform b = random_mixed(rng);
    const Matrix16 lhs = represent(rep, geometric_product(a, b, h), h);
    const Matrix16 rhs = represent(rep, a, h) * represent(rep, b, h);
    CHECK(mdiff(lhs, rhs) < 1e-9 * lhs.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("trace functional: sixteen on the unit, zero on higher ranks") {
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  CHECK(ka_trace(rep, Polyform::scalar(1.0), id) == 16.0);
  Rng rng(42);
  for (int k = 1; k <= 8; ++k) {
    const Polyform p = random_pure(rng, k);
    CHECK(std::abs(represent(rep, p, id).trace()) < 1e-12);
    CHECK(ka_trace(rep, p, id) == 0.0);
  }
}

TEST_CASE("trace is cyclic for the geometric product") {
  const CliffordRep rep = build_rep();
  Rng rng(43);
  for (const Metric8& h : {Metric8::identity(), random_spd(rng)}) {
    const Polyform a = random_mixed(rng);
    const Polyform b = random_mixed(rng);
    const double lhs = ka_trace(rep, geometric_product(a, b, h), h);
    const double rhs = ka_trace(rep, geometric_product(b, a, h), h);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("Frobenius pairing is sixteen times the scalar product") {
  const CliffordRep rep = build_rep();
  Rng rng(44);
  for (const Metric8& h : {Metric8::identity(), random_spd(rng)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polyform a = random_mixed(rng);
      const Polyform b = random_mixed(rng);
      CHECK(frobenius_pairing(rep, a, b, h) ==
            doctest::Approx(16.0 * inner(a, b, h)).epsilon(1e-9));
    }
  }
}

TEST_CASE("represented polyforms obey the operator norm bound") {
  // |a <> b| <= 4 |a| |b|: the representation is faithful with Frobenius
  // norm 4 on unit-norm polyforms, and matrix norms are submultiplicative.
  const CliffordRep rep = build_rep();
  const Metric8 id = Metric8::identity();
  Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const Polyform a = random_mixed(rng);
    const Polyform b = random_mixed(rng);
    const double lhs = norm(geometric_product(a, b, id), id);
    CHECK(lhs <= 4.0 * norm(a, id) * norm(b, id) + 1e-9);
  }
}

TEST_CASE("spin action: orthogonal pair acting compatibly on both sides") {
  const CliffordRep rep = build_rep();
  Rng rng(46);
  const Metric8 id = Metric8::identity();

  std::vector<Polyform> units;
  for (int n = 0; n < 4; ++n) {
    Polyform u = random_pure(rng, 1);
    u *= 1.0 / norm(u, id);
    units.push_back(u);
  }
  const SpinAction act = spin_action(rep, units, id);

  CHECK((act.rotation * act.rotation.transpose() - Matrix8::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(act.rotation.determinant() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mdiff(Matrix16(act.spinor_matrix * act.spinor_matrix.transpose()),
              Matrix16::Identity()) < 1e-12);
  CHECK(mdiff(Matrix16(act.spinor_matrix * rep.chirality()),
              Matrix16(rep.chirality() * act.spinor_matrix)) < 1e-12);

  const Polyform a = random_mixed(rng);
  const Matrix16 lhs = represent(rep, transform(a, act.rotation), id);
  const Matrix16 rhs =
      act.spinor_matrix * represent(rep, a, id) * act.spinor_matrix.transpose();
  CHECK(mdiff(lhs, rhs) < 1e-10);

  CHECK_THROWS_AS((void)spin_action(rep, {units[0]}, id),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)spin_action(rep, {2.0 * units[0], units[1]}, id),
                  std::invalid_argument);
}
