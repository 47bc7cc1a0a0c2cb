#pragma once

#include "fracdim/dimension.hpp"
#include "fracdim/fields.hpp"

namespace fracdim {

enum class Basis { scalar, e_r };

/// Pointwise operator value tagged with the basis element it multiplies.
struct OperatorResult {
    double value = 0.0;
    Basis basis = Basis::scalar;
};

// --------------------------------------------------------------------------
// Simple family: one dimension parameter, coefficient c = D - 1 (spherical)
// or c = D - 2 (cylindrical). All evaluations need r > 0.
// --------------------------------------------------------------------------

/// Divergence of u = u_r e_r: u' + (c/r) u.
double div_radial(const RadialVectorField& u, const DimensionSpec& spec, double r);

/// Gradient of a radial scalar: phi' along e_r.
OperatorResult grad_radial(const RadialScalarField& phi, const DimensionSpec& spec, double r);

/// Curl of a purely radial field, identically zero.
OperatorResult curl_radial(const RadialVectorField& u, const DimensionSpec& spec, double r);

/// Axisymmetric curl component du_r/dz - du_z/dr, reported along e_r.
OperatorResult curl_rz(const AxialField& u, const DimensionSpec& spec, double r, double z);

/// Scalar Laplacian phi'' + (c/r) phi'.
double laplacian_scalar(const RadialScalarField& phi, const DimensionSpec& spec, double r);

/// Vector Laplacian of u = u_r e_r: u'' + (c/r) u' - (c/r^2) u, along e_r.
/// Annihilates r^(1-D) (spherical) and r^(2-D) (cylindrical).
OperatorResult laplacian_vector(const RadialVectorField& u, const DimensionSpec& spec, double r);

/// Radial Laplacian parameterized directly by D; coincides with the spherical
/// scalar Laplacian at every point.
double stillinger_laplacian_radial(const RadialScalarField& phi, double D, double r);

// --------------------------------------------------------------------------
// Generalized family: bulk dimension D and boundary dimension d decouple,
// alpha_r = D - d. Gamma-weighted prefactors collapse to 1 at alpha_r = 1,
// reducing every operator to its simple spherical counterpart.
// --------------------------------------------------------------------------

double div_generalized(const RadialVectorField& u, const DimensionSpec& spec, double r);
OperatorResult grad_generalized(const RadialScalarField& phi, const DimensionSpec& spec, double r);
double laplacian_scalar_generalized(const RadialScalarField& phi, const DimensionSpec& spec, double r);
OperatorResult laplacian_vector_generalized(const RadialVectorField& u, const DimensionSpec& spec, double r);

}  // namespace fracdim
