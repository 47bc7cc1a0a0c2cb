#include "fracdim/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracdim/special_functions.hpp"

namespace fracdim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::domain_error("operator evaluation needs finite r > 0");
}

// Prefactor of the generalized divergence and vector Laplacian:
//   pi^((1 - alpha)/2) Gamma((d + alpha)/2) / Gamma((d + 1)/2).
double div_prefactor(double d, double alpha) {
    return std::pow(kPi, 0.5 * (1.0 - alpha)) *
           gamma_ratio(0.5 * (d + alpha), 0.5 * (d + 1.0));
}

// Prefactor of the generalized gradient: Gamma(alpha/2) / pi^(alpha/2).
double grad_prefactor(double alpha) {
    return gamma(0.5 * alpha) / std::pow(kPi, 0.5 * alpha);
}

}  // namespace

double div_radial(const RadialVectorField& u, const DimensionSpec& spec, double r) {
    check_radius(r);
    return u.radial.deriv1(r) + spec.radial_coefficient() / r * u.radial(r);
}

OperatorResult grad_radial(const RadialScalarField& phi, const DimensionSpec&, double r) {
    check_radius(r);
    return {phi.deriv1(r), Basis::e_r};
}

OperatorResult curl_radial(const RadialVectorField&, const DimensionSpec&, double r) {
    check_radius(r);
    return {0.0, Basis::e_r};
}

OperatorResult curl_rz(const AxialField& u, const DimensionSpec&, double r, double z) {
    check_radius(r);
    if (!std::isfinite(z)) throw std::domain_error("curl_rz: z must be finite");
    return {u.dur_dz(r, z) - u.duz_dr(r, z), Basis::e_r};
}

double laplacian_scalar(const RadialScalarField& phi, const DimensionSpec& spec, double r) {
    check_radius(r);
    return phi.deriv2(r) + spec.radial_coefficient() / r * phi.deriv1(r);
}

OperatorResult laplacian_vector(const RadialVectorField& u, const DimensionSpec& spec, double r) {
    check_radius(r);
    const double c = spec.radial_coefficient();
    const double v = u.radial.deriv2(r) + c / r * u.radial.deriv1(r) - c / (r * r) * u.radial(r);
    return {v, Basis::e_r};
}

double stillinger_laplacian_radial(const RadialScalarField& phi, double D, double r) {
    check_radius(r);
    if (!std::isfinite(D) || D <= 0.0 || D > 3.0)
        throw std::domain_error("stillinger_laplacian_radial: D must lie in (0, 3]");
    return phi.deriv2(r) + (D - 1.0) / r * phi.deriv1(r);
}

double div_generalized(const RadialVectorField& u, const DimensionSpec& spec, double r) {
    check_radius(r);
    const double a = spec.alpha_r();
    const double d = spec.d();
    return div_prefactor(d, a) *
           (std::pow(r, 1.0 - a) * u.radial.deriv1(r) + d * std::pow(r, -a) * u.radial(r));
}

OperatorResult grad_generalized(const RadialScalarField& phi, const DimensionSpec& spec, double r) {
    check_radius(r);
    const double a = spec.alpha_r();
    return {grad_prefactor(a) * std::pow(r, 1.0 - a) * phi.deriv1(r), Basis::e_r};
}

double laplacian_scalar_generalized(const RadialScalarField& phi, const DimensionSpec& spec,
                                    double r) {
    check_radius(r);
    const double a = spec.alpha_r();
    const double d = spec.d();
    const double pref = div_prefactor(d, a) * grad_prefactor(a);
    return pref * (std::pow(r, 2.0 - 2.0 * a) * phi.deriv2(r) +
                   (d + 1.0 - a) * std::pow(r, 1.0 - 2.0 * a) * phi.deriv1(r));
}

OperatorResult laplacian_vector_generalized(const RadialVectorField& u, const DimensionSpec& spec,
                                            double r) {
    check_radius(r);
    const double a = spec.alpha_r();
    const double d = spec.d();
    const double pref = div_prefactor(d, a) * grad_prefactor(a);
    const double v = pref * (std::pow(r, 2.0 - 2.0 * a) * u.radial.deriv2(r) +
                             (d + 1.0 - a) * std::pow(r, 1.0 - 2.0 * a) * u.radial.deriv1(r) -
                             d * a * std::pow(r, -2.0 * a) * u.radial(r));
    return {v, Basis::e_r};
}

}  // namespace fracdim
