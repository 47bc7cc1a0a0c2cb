#pragma once

#include <functional>
#include <vector>

#include "fracdim/dimension.hpp"
#include "fracdim/fields.hpp"
#include "fracdim/grid.hpp"

namespace fracdim {

/// Boundary condition a u + b u' = value at one end of the grid.
struct BoundaryCondition {
    double a = 1.0;
    double b = 0.0;
    double value = 0.0;

    static BoundaryCondition dirichlet(double value) { return {1.0, 0.0, value}; }
    static BoundaryCondition neumann(double slope) { return {0.0, 1.0, slope}; }
    static BoundaryCondition robin(double a, double b, double value) { return {a, b, value}; }

    bool is_dirichlet() const { return b == 0.0; }
};

struct TridiagonalSystem {
    std::vector<double> sub;    // sub[0] unused
    std::vector<double> diag;
    std::vector<double> super;  // super[n-1] unused
    std::vector<double> rhs;
};

/// Thomas elimination. Throws NumericError on a vanishing pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys);

/// Solve u'' + (A/r) u' + (B/r^2) u = f(r) on the grid with second-order
/// stencils; Neumann/Robin ends are folded in by ghost-node elimination at
/// the same order. Requires grid.r_min > 0.
SolutionProfile solve_linear_bvp(double A_coeff, double B_coeff, const RadialScalarField& f,
                                 const RadialGrid& grid, const BoundaryCondition& left,
                                 const BoundaryCondition& right);

/// Crank-Nicolson march of
///   phi_t = a_diff (phi'' + (c/r) phi') + source(r, t),
/// c taken from spec.radial_coefficient(). With grid.r_min = 0 the left
/// condition is replaced by the symmetry row: phi'(0) = 0 and the singular
/// term becomes its limit c phi''(0).
///
/// Returns snapshots every snapshot_stride steps; the initial state and the
/// final step are always included. Throws NumericError if the march blows up
/// (|phi| > 1e12).
std::vector<SolutionProfile> solve_heat_transient(
    const DimensionSpec& spec, double a_diff,
    const std::function<double(double, double)>& source, const RadialGrid& grid,
    const BoundaryCondition& left, const BoundaryCondition& right,
    const std::vector<double>& initial, double t_end, int n_steps, int snapshot_stride = 1);

/// Differentiate a sampled profile (order 1 or 2). Central stencils in the
/// interior, one-sided at the edges, O(h^2) at worst; needs 5 nodes.
SolutionProfile fd_derivative(const SolutionProfile& p, int order);

}  // namespace fracdim
