#pragma once

#include <span>

#include "fracdim/grid.hpp"

// Grid-level kernels on the hot paths: profile sampling, finite-difference
// stencil application, and the tridiagonal matvec inside the Crank-Nicolson
// right-hand side. Each has a serial reference implementation and an OpenMP
// variant; both write disjoint outputs per index, so results are bitwise
// identical and the serial path stays the ground truth in tests.

namespace fracdim::kernels {

enum class Exec { automatic, serial, parallel };

/// True when the build carries OpenMP; parallel falls back to serial otherwise.
bool openmp_enabled();

/// Problem size at which Exec::automatic switches to the parallel path.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {
void fd_stencil(std::span<const double> values, double h, int order, std::span<double> out);
void tridiag_matvec(std::span<const double> sub, std::span<const double> diag,
                    std::span<const double> super, std::span<const double> x,
                    std::span<double> out);
}  // namespace serial

namespace parallel {
void fd_stencil(std::span<const double> values, double h, int order, std::span<double> out);
void tridiag_matvec(std::span<const double> sub, std::span<const double> diag,
                    std::span<const double> super, std::span<const double> x,
                    std::span<double> out);
}  // namespace parallel

/// Derivative of sampled values: order 1 or 2. Fourth-order central stencils
/// in the deep interior, second-order central next to the edges, second-order
/// one-sided at the edges. Needs values.size() >= 5.
void fd_stencil(std::span<const double> values, double h, int order, std::span<double> out,
                Exec exec = Exec::automatic);

/// out = T x for tridiagonal T; sub[0] and super[n-1] are ignored.
void tridiag_matvec(std::span<const double> sub, std::span<const double> diag,
                    std::span<const double> super, std::span<const double> x,
                    std::span<double> out, Exec exec = Exec::automatic);

namespace detail {
bool run_parallel(Exec exec, std::size_t n);
}

/// Evaluate fn over the grid nodes into out.
template <class F>
void map_grid(const RadialGrid& g, F&& fn, std::span<double> out, Exec exec = Exec::automatic) {
    const int n = g.n_nodes();
    if (detail::run_parallel(exec, static_cast<std::size_t>(n))) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(g.node(i));
    } else {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(g.node(i));
    }
}

}  // namespace fracdim::kernels
