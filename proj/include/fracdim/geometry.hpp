#pragma once

#include "fracdim/dimension.hpp"
#include "fracdim/fields.hpp"
#include "fracdim/quadrature.hpp"

namespace fracdim {

/// Interval on the radial axis. r_max may be +infinity for integrands that
/// decay fast enough (faster than r^(-D) by some margin).
struct RadialInterval {
    double r_min = 0.0;
    double r_max = 0.0;

    static RadialInterval finite(double r_min, double r_max);
    static RadialInterval to_infinity(double r_min);
    bool infinite() const;
};

/// Surface measure of the unit (D-1)-sphere: 2 pi^(D/2) / Gamma(D/2).
/// Domain: 0 < D <= 3.
double sphere_area(double D);

/// Volume of the radius-R ball: sphere_area(D) R^D / D.
double ball_volume(double D, double R);

/// Volume of the shell R1 < r < R2. Requires 0 <= R1 < R2.
double shell_volume(double D, double R1, double R2);

/// Mass of a homogeneous ball of density rho0.
double ball_mass(double D, double R, double rho0);

/// D-dimensional radial integral sphere_area(D) * int r^(D-1) f(r) dr over
/// the interval. Infinite upper bounds are mapped through r = t/(1-t); a
/// decay probe rejects integrands with a divergent tail.
double integrate_radial(const RadialScalarField& f, double D, const RadialInterval& iv,
                        const QuadratureConfig& cfg = {});

/// Closed form of int d^D r r^(2 alpha) / (r^2 + a^2)^beta over [0, inf):
///   Gamma(alpha + D/2) Gamma(beta - alpha - D/2) / (Gamma(D/2) Gamma(beta))
///   * pi^(D/2) * a^(D + 2 alpha - 2 beta).
/// Outside the convergent branch the value is the analytic continuation.
/// Throws domain_error when a Gamma argument hits a non-positive integer.
double closed_form_power_integral(double D, double alpha, double beta, double a);

/// Closed form of int d^D r (r^2 + a) / (r^2 + b) over [0, inf), which only
/// the analytic continuation assigns a value:
///   (pi b)^(D/2) (a/b - 1) Gamma(1 - D/2).
/// Has a pole at D = 2 within (0, 3]. Not comparable to quadrature.
double closed_form_rational_integral(double D, double a, double b);

/// Flux of u = u_r e_r across the radius-r sphere of boundary dimension d:
///   2 pi^((d+1)/2) / Gamma((d+1)/2) * u_r(r) * r^d.
double flux_across_sphere(const RadialVectorField& u, double d, double r);

/// Divergence-theorem mismatch over the shell [R1, R2]: the shell integral of
/// div u minus the boundary flux difference, normalized by the flux scale.
/// Near machine zero when the theorem holds for the (D, d) pairing.
double gauss_residual(const RadialVectorField& u, const DimensionSpec& spec,
                      double R1, double R2, const QuadratureConfig& cfg = {});

}  // namespace fracdim
