#pragma once

#include <functional>

namespace fracdim {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (7, 15) quadrature on a finite interval. The worst
/// subinterval by error estimate is bisected until the combined estimate meets
/// max(abs_tol, rel_tol * |integral|).
///
/// Nodes are strictly interior, so integrable endpoint singularities are fine.
/// Throws NumericError when the integrand evaluates non-finite or the bound is
/// not reached within max_subdivisions.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

}  // namespace fracdim
