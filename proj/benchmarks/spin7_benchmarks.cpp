#include <benchmark/benchmark.h>

#include <spin7/algebra.hpp>
#include <spin7/clifford.hpp>
#include <spin7/flow.hpp>
#include <spin7/potential.hpp>
#include <spin7/rng.hpp>
#include <spin7/spin7_forms.hpp>
#include <spin7/spinor_square.hpp>

namespace {

using namespace spin7;

Polyform dense_polyform(std::uint64_t seed) {
  Rng rng(seed);
  Polyform p;
  for (int i = 0; i < kBladeCount; ++i) p[static_cast<Blade>(i)] = rng.gaussian();
  return p;
}

Polyform random_four_form(std::uint64_t seed) {
  Rng rng(seed);
  Polyform p;
  for (Blade b : blades_of_rank(4)) p[b] = rng.gaussian();
  return p;
}

Metric8 generic_metric() {
  Rng rng(99);
  Matrix8 g;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j <= i; ++j) g(i, j) = g(j, i) = rng.gaussian();
  return Metric8(Matrix8(Matrix8::Identity() + 0.1 * g));
}

void geometric_product_dense(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform a = dense_polyform(1);
  const Polyform b = dense_polyform(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_product(a, b, h));
  }
}
BENCHMARK(geometric_product_dense);

void geometric_product_four_forms(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform a = random_four_form(3);
  const Polyform b = random_four_form(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_product(a, b, h));
  }
}
BENCHMARK(geometric_product_four_forms);

void delta2_orthonormal(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform a = random_four_form(5);
  const Polyform b = random_four_form(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_product(a, b, 2, h));
  }
}
BENCHMARK(delta2_orthonormal);

void delta2_general_metric(benchmark::State& state) {
  const Metric8 h = generic_metric();
  const Polyform a = random_four_form(5);
  const Polyform b = random_four_form(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_product(a, b, 2, h));
  }
}
BENCHMARK(delta2_general_metric);

void hessian_assembly(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform phi = canonical_cayley();
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential_hessian(phi, h));
  }
}
BENCHMARK(hessian_assembly);

void descent_step(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform phi = canonical_cayley();
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow_step(phi, h, 0.01));
  }
}
BENCHMARK(descent_step);

void quadratic_operator_matrix(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform phi = canonical_cayley();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_operator(phi, h));
  }
}
BENCHMARK(quadratic_operator_matrix);

void spinor_square_map(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const CliffordRep rep = build_rep();
  Rng rng(7);
  Spinor16 xi;
  for (int i = 0; i < 16; ++i) xi[i] = rng.gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(signed_square(rep, xi, 1, h));
  }
}
BENCHMARK(spinor_square_map);

void conformal_verdict(benchmark::State& state) {
  const Metric8 h = Metric8::identity();
  const Polyform phi = canonical_cayley();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_conformal_spin7(phi, h));
  }
}
BENCHMARK(conformal_verdict);

}  // namespace

BENCHMARK_MAIN();
