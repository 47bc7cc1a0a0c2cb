#pragma once

#include "fracdim/material.hpp"

namespace fracdim {

enum class ElasticGeometry { hollow_ball, pipe, cavity_infinite };

/// Pressurized shell with point symmetry (hollow_ball, displacement basis
/// r and r^(1-D)), a cylindrical cross-section (pipe, basis r and r^(2-D)
/// away from D = 1, 2), or a spherical cavity in an unbounded medium
/// (R2 -> infinity limit of the ball; R2 is ignored).
///
/// Boundary pressures enter as sigma_rr(R1) = -p1, sigma_rr(R2) = -p2; the
/// constants always come from solving that 2x2 system directly.
struct ElasticScenario {
    ElasticGeometry geometry = ElasticGeometry::hollow_ball;
    double D = 3.0;
    double R1 = 1.0;
    double R2 = 2.0;
    double p1 = 0.0;
    double p2 = 0.0;
    MaterialParams material;
};

struct DisplacementConstants {
    double C1 = 0.0;
    double C2 = 0.0;
};

// Hollow ball: u = C1 r + C2 r^(1-D), sigma_rr = (2mu + lambda) u' + lambda (D-1) u / r.
DisplacementConstants ball_constants(const ElasticScenario& s);
double ball_displacement(const ElasticScenario& s, double r);
double ball_stress(const ElasticScenario& s, double r);

// Pipe: u = C1 r + C2 r^(2-D) away from the degenerate dimensions;
// at D = 1 the basis is {r, r ln r}, at D = 2 it is {1, r} where the stress
// is uniform and the loading must satisfy p1 = p2.
// sigma_rr = (2mu + lambda) u' + lambda (D-2) u / r.
DisplacementConstants pipe_constants(const ElasticScenario& s);
double pipe_displacement(const ElasticScenario& s, double r);
double pipe_stress(const ElasticScenario& s, double r);

// Cavity of radius R1 in an infinite medium, pressures p1 at the cavity wall
// and p2 at infinity: the R2 -> infinity limit of the ball constants.
DisplacementConstants cavity_constants(const ElasticScenario& s);
double cavity_displacement(const ElasticScenario& s, double r);
double cavity_stress(const ElasticScenario& s, double r);

/// Max-norm relative displacement error between the closed form and a
/// finite-difference solve of the displacement equation on n_nodes.
double validate_against_bvp(const ElasticScenario& s, int n_nodes);

}  // namespace fracdim
