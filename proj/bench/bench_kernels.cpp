// Serial reference vs OpenMP kernels on the 80-point 2D grid of the alpha = 0.437 set.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "csfq/lanczos.hpp"
#include "csfq/numeric.hpp"

namespace {

using namespace csfq;

const ValidatedQubit& device_qubit() {
  static const ValidatedQubit q = validate_params(QubitParams{0.437, 136.75, 3.2, 60.0});
  return q;
}

numeric::HamiltonianOperator make_operator(int n) {
  return numeric::build_hamiltonian_2d(device_qubit(), FluxBias{0.5}, numeric::GridSpec(n));
}

std::vector<double> random_vector(std::size_t dim) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(dim);
  for (double& v : x) v = u(rng);
  return x;
}

void BM_ApplySerial(benchmark::State& state) {
  const auto h = make_operator(static_cast<int>(state.range(0)));
  const std::vector<double> x = random_vector(h.dim());
  std::vector<double> y(h.dim());
  for (auto _ : state) {
    h.apply_serial(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(h.dim()));
}

void BM_ApplyParallel(benchmark::State& state) {
  const auto h = make_operator(static_cast<int>(state.range(0)));
  const std::vector<double> x = random_vector(h.dim());
  std::vector<double> y(h.dim());
  for (auto _ : state) {
    h.apply_parallel(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(h.dim()));
}

void BM_Lanczos(benchmark::State& state) {
  const auto h = make_operator(80);
  numeric::LanczosOptions opts;
  opts.execution = state.range(0) == 0 ? numeric::Execution::serial : numeric::Execution::parallel;
  for (auto _ : state) {
    const numeric::EigenResult r = numeric::lowest_eigenpairs(h, 3, opts);
    benchmark::DoNotOptimize(r.eigenvalues.data());
  }
}

}  // namespace

BENCHMARK(BM_ApplySerial)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApplyParallel)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Lanczos)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
