// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <liemeans/covariance.hpp>
#include <liemeans/groups.hpp>
#include <liemeans/lie_core.hpp>
#include <liemeans/means.hpp>

using namespace liemeans;

namespace {

Vector fixed_coords(const GroupSpec& spec) {
  Vector x(spec.algebra_dim());
  for (int i = 0; i < spec.algebra_dim(); ++i) x[i] = 0.1 * (i + 1);
  return x;
}

void BM_exp_closed_form(benchmark::State& state, const char* name) {
  const GroupSpec spec = make_group(name);
  const AlgebraElement x = hat(spec, fixed_coords(spec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_exp(x).mat);
  }
}
BENCHMARK_CAPTURE(BM_exp_closed_form, so3, "SO3");
BENCHMARK_CAPTURE(BM_exp_closed_form, se3, "SE3");

void BM_log_closed_form(benchmark::State& state, const char* name) {
  const GroupSpec spec = make_group(name);
  const GroupElement g = group_exp(hat(spec, fixed_coords(spec)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_log(g).coords);
  }
}
BENCHMARK_CAPTURE(BM_log_closed_form, so3, "SO3");
BENCHMARK_CAPTURE(BM_log_closed_form, se3, "SE3");

void BM_log_generic(benchmark::State& state) {
  // the scaling-and-squaring path used by groups without closed forms
  const GroupSpec se3 = make_group("SE3");
  std::vector<Matrix> basis;
  for (int i = 0; i < 6; ++i) basis.push_back(se3.basis(i));
  const GroupSpec generic =
      GroupSpec::make("SE3#generic", 4, 6, basis, se3.structure_constants());
  const GroupElement g = group_exp(hat(generic, fixed_coords(generic)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_log(g).coords);
  }
}
BENCHMARK(BM_log_generic);

void BM_jacobian_log_se3(benchmark::State& state) {
  const GroupSpec se3 = make_group("SE3");
  const GroupElement h = group_exp(hat(se3, fixed_coords(se3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian_log(h));
  }
}
BENCHMARK(BM_jacobian_log_se3);

void BM_Ad_matrix_se3(benchmark::State& state) {
  const GroupSpec se3 = make_group("SE3");
  const GroupElement g = group_exp(hat(se3, fixed_coords(se3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Ad_matrix(g));
  }
}
BENCHMARK(BM_Ad_matrix_se3);

void BM_group_mean_so3(benchmark::State& state) {
  const GroupSpec so3 = make_group("SO3");
  const EmpiricalDistribution d = sample_concentrated(
      so3, identity(so3), 0.04 * Matrix::Identity(3, 3),
      static_cast<int>(state.range(0)), RngSeed{99});
  SolverConfig cfg;
  cfg.tol = 1e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_theoretic_mean(d, cfg).mean.mat);
  }
}
BENCHMARK(BM_group_mean_so3)->Arg(100)->Arg(1000);

void BM_geodesic_flow_se3(benchmark::State& state) {
  const GroupSpec se3 = make_group("SE3");
  const InnerProduct frob = InnerProduct::frobenius(se3);
  const AlgebraElement xi = hat(se3, fixed_coords(se3));
  const GroupElement start = identity(se3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        geodesic_flow(frob, start, xi, 1.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_geodesic_flow_se3)->Arg(100)->Arg(1000);

void BM_riemannian_log_shooting(benchmark::State& state) {
  const GroupSpec se3 = make_group("SE3");
  const InnerProduct eye = InnerProduct::make(se3, Matrix::Identity(6, 6));
  const GroupElement g = identity(se3);
  Vector v(6);
  v << 0.3, -0.2, 0.1, 0.4, 0.2, -0.3;
  const ShootConfig cfg{400, 100, 1e-10, 1e-7};
  const GroupElement h = riemannian_exp(eye, g, hat(se3, v), cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemannian_log(eye, g, h, cfg).coords);
  }
}
BENCHMARK(BM_riemannian_log_shooting);

void BM_quat_roundtrip(benchmark::State& state) {
  const GroupSpec so3 = make_group("SO3");
  const GroupElement r = group_exp(hat(so3, fixed_coords(so3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quat_to_so3(so3, so3_to_quat(r)).mat);
  }
}
BENCHMARK(BM_quat_roundtrip);

void BM_projection_so3(benchmark::State& state) {
  Matrix a(3, 3);
  a << 1.0, 0.2, -0.1, 0.0, 0.9, 0.3, 0.1, -0.2, 1.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_special_orthogonal_matrix(a));
  }
}
BENCHMARK(BM_projection_so3);

}  // namespace

BENCHMARK_MAIN();
