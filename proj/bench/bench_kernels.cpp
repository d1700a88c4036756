#include <benchmark/benchmark.h>

#include "scmc/mesh.hpp"
#include "scmc/rotational.hpp"

namespace {

using namespace scmc;

void mesh_args(benchmark::internal::Benchmark* b) { b->Arg(64)->Arg(128); }

template <bool Parallel>
void BM_Mesh(benchmark::State& st) {
  SpectralData d = rot::genus1(1.0, 3.0);
  Potential xi = offdiag_potential(d.a, d.g);
  MeshOptions opt;
  opt.nx = opt.ny = static_cast<int>(st.range(0));
  opt.x_extent = std::abs(32.0 * d.b[0]);
  for (auto _ : st) {
    SurfaceMesh m = Parallel ? build_mesh(xi, d.lambda1, d.lambda2(), opt)
                             : build_mesh_serial(xi, d.lambda1, d.lambda2(), opt);
    benchmark::DoNotOptimize(m.points.data());
  }
}
BENCHMARK(BM_Mesh<false>)->Name("mesh/serial")->Apply(mesh_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mesh<true>)->Name("mesh/openmp")->Apply(mesh_args)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_Sweep(benchmark::State& st) {
  std::vector<double> Hs{0.0, 0.5, 1.0, 2.0, 5.0}, alphas{2.0, 2.5, 3.0, 5.0, 10.0};
  for (auto _ : st) {
    auto r = rot::sweep(Hs, alphas, 1e-9, Parallel);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_Sweep<false>)->Name("sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<true>)->Name("sweep/openmp")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
