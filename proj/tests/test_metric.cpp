#include <doctest.h>

#include <spin7/metric.hpp>
#include <spin7/rng.hpp>

#include "test_support.hpp"

using namespace spin7;

TEST_CASE("identity metric reports the orthonormal fast path") {
  const Metric8 id = Metric8::identity();
  CHECK(id.orthonormal());
  CHECK(id.entries() == Matrix8::Identity());
  CHECK(id.inverse() == Matrix8::Identity());
  CHECK(id.det() == 1.0);
  CHECK(id.cholesky() == Matrix8::Identity());
}

TEST_CASE("construction validates symmetry and positivity") {
  Matrix8 asym = Matrix8::Identity();
  asym(0, 1) = 0.5;
  CHECK_THROWS_AS(Metric8{asym}, std::invalid_argument);

  Matrix8 indef = Matrix8::Identity();
  indef(0, 0) = -1.0;
  CHECK_THROWS_AS(Metric8{indef}, std::invalid_argument);

  Matrix8 degenerate = Matrix8::Identity();
  degenerate(7, 7) = 0.0;
  CHECK_THROWS_AS(Metric8{degenerate}, std::invalid_argument);
}

TEST_CASE("inverse, determinant and Cholesky agree with Eigen") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const Metric8 h = spin7::test::random_spd(rng);
    CHECK(!h.orthonormal());
    CHECK((h.inverse() * h.entries() - Matrix8::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK(h.det() ==
          doctest::Approx(h.entries().determinant()).epsilon(1e-10));

    const Matrix8& l = h.cholesky();
    CHECK((l * l.transpose() - h.entries()).cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 0; i < 8; ++i) {
      CHECK(l(i, i) > 0.0);
      for (int j = i + 1; j < 8; ++j) CHECK(l(i, j) == 0.0);
    }
    CHECK((h.cholesky_inverse() * l - Matrix8::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-11);
  }
}

TEST_CASE("a diagonal rescaling is recognized as non-orthonormal") {
  Matrix8 d = Matrix8::Identity();
  d(3, 3) = 4.0;
  const Metric8 h(d);
  CHECK(!h.orthonormal());
  CHECK(h.det() == doctest::Approx(4.0).epsilon(1e-14));
}
