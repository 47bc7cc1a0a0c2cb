#pragma once

#include <functional>
#include <vector>

#include "fracdim/dimension.hpp"
#include "fracdim/fields.hpp"
#include "fracdim/grid.hpp"
#include "fracdim/material.hpp"
#include "fracdim/quadrature.hpp"
#include "fracdim/radial_solver.hpp"

namespace fracdim {

/// Heat conduction on a radial shell. The steady problem solved is
///   phi'' + (c/r) phi' = -q(r) / (c_p rho),
/// with c = D - 1 (spherical) or D - 2 (cylindrical); the transient march is
///   phi_t = a phi_lap + q / (c_p rho),  a = k / (rho c_p).
struct HeatScenario {
    Symmetry symmetry = Symmetry::spherical;
    double D = 3.0;
    double r_min = 1.0;
    double r_max = 2.0;
    MaterialParams material;
    double q0 = 0.0;                    // constant volumetric source
    std::function<double(double)> q;    // general source; overrides q0 when set
    BoundaryCondition bc_left = BoundaryCondition::dirichlet(0.0);
    BoundaryCondition bc_right = BoundaryCondition::dirichlet(0.0);
};

/// Closed-form steady temperature for constant source q0. The homogeneous
/// basis is {1, r^(2-De)} with De = c + 1, or {1, ln r} when De = 2
/// (spherical D = 2, cylindrical D = 3); the particular term is
/// -q0 r^2 / (2 De c_p rho). Constants are fitted to the scenario BCs.
double steady_constant_source(const HeatScenario& s, double r);

/// Same solution as a field with analytic derivatives.
RadialScalarField steady_constant_source_field(const HeatScenario& s);

/// Steady temperature for a general source q(r), built from quadrature
/// antiderivatives of q r^(De-1) and q r taken from r_min. Rejects the
/// De = 2 branch (needs the ln r basis, constant-source path covers it).
double steady_general_source(const HeatScenario& s, double r, const QuadratureConfig& cfg = {});
RadialScalarField steady_general_source_field(const HeatScenario& s,
                                              const QuadratureConfig& cfg = {});

/// Crank-Nicolson transient march; delegates to solve_heat_transient with
/// diffusivity k / (rho c_p) and source q / (c_p rho).
std::vector<SolutionProfile> transient(const HeatScenario& s, const RadialGrid& grid,
                                       const std::vector<double>& initial, double t_end,
                                       int n_steps, int snapshot_stride = 1);

}  // namespace fracdim
