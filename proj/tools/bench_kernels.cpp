#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "fracdim/grid.hpp"
#include "fracdim/kernels.hpp"

// Serial reference vs OpenMP kernels on the grid-level hot paths. Run with
// --benchmark_filter to pick a family; sizes span cache-resident to
// memory-bound.

namespace {

using fracdim::kernels::Exec;

void bench_map_grid(benchmark::State& state, Exec exec) {
    const int n = static_cast<int>(state.range(0));
    const fracdim::RadialGrid grid(1.0, 2.0, n);
    std::vector<double> out(static_cast<std::size_t>(n));
    const double D = 2.5;
    auto fn = [D](double r) { return std::pow(r, D - 1.0) * std::exp(-r * r); };
    for (auto _ : state) {
        fracdim::kernels::map_grid(grid, fn, out, exec);
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * n);
}

void bench_fd_stencil(benchmark::State& state, Exec exec) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> values(n), out(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = std::sin(0.001 * static_cast<double>(i));
    for (auto _ : state) {
        fracdim::kernels::fd_stencil(values, 1e-3, 2, out, exec);
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}

void bench_tridiag_matvec(benchmark::State& state, Exec exec) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> sub(n, -1.0), diag(n, 2.0), super(n, -1.0), x(n), out(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::cos(0.001 * static_cast<double>(i));
    for (auto _ : state) {
        fracdim::kernels::tridiag_matvec(sub, diag, super, x, out, exec);
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}

void map_grid_serial(benchmark::State& s) { bench_map_grid(s, Exec::serial); }
void map_grid_parallel(benchmark::State& s) { bench_map_grid(s, Exec::parallel); }
void fd_stencil_serial(benchmark::State& s) { bench_fd_stencil(s, Exec::serial); }
void fd_stencil_parallel(benchmark::State& s) { bench_fd_stencil(s, Exec::parallel); }
void tridiag_matvec_serial(benchmark::State& s) { bench_tridiag_matvec(s, Exec::serial); }
void tridiag_matvec_parallel(benchmark::State& s) { bench_tridiag_matvec(s, Exec::parallel); }

BENCHMARK(map_grid_serial)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(map_grid_parallel)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(fd_stencil_serial)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(fd_stencil_parallel)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(tridiag_matvec_serial)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(tridiag_matvec_parallel)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);

}  // namespace

BENCHMARK_MAIN();
