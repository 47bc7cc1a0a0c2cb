#include "fracdim/electrostatics.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdim/special_functions.hpp"

namespace fracdim {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Width of the D = 3 window in which the (D-3) denominators of the
// potential constants are replaced by the log branch.
constexpr double kLogBranchTol = 1e-8;

void check_scenario(const CylinderChargeScenario& s) {
    if (!std::isfinite(s.D) || s.D <= 2.0 || s.D > 3.0)
        throw std::domain_error("CylinderChargeScenario: D must lie in (2, 3]");
    if (!(s.R > 0.0) || !std::isfinite(s.R))
        throw std::domain_error("CylinderChargeScenario: R must be positive");
    if (!(s.material.eps0 > 0.0))
        throw std::domain_error("CylinderChargeScenario: eps0 must be positive");
}

void check_radius(double r) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::domain_error("electrostatics: r must be finite and >= 0");
}

}  // namespace

double potential(const CylinderChargeScenario& s, double r) {
    check_scenario(s);
    check_radius(r);
    const double rho = s.material.rho_q;
    const double e0 = s.material.eps0;
    const double D = s.D, R = s.R;
    if (std::abs(D - 3.0) < kLogBranchTol) {
        if (r <= R) return -rho * r * r / (4.0 * e0);
        return -rho * R * R / (4.0 * e0) - rho * R * R / (2.0 * e0) * std::log(r / R);
    }
    if (r <= R) return -rho * r * r / (2.0 * e0 * (D - 1.0));
    return -rho * R * R / (2.0 * e0 * (D - 3.0)) +
           rho * std::pow(R, D - 1.0) * std::pow(r, 3.0 - D) /
               (e0 * (D - 1.0) * (D - 3.0));
}

OperatorResult field(const CylinderChargeScenario& s, double r) {
    check_scenario(s);
    check_radius(r);
    const double rho = s.material.rho_q;
    const double e0 = s.material.eps0;
    const double D = s.D, R = s.R;
    const double value =
        r <= R ? rho * r / (e0 * (D - 1.0))
               : rho * std::pow(R, D - 1.0) * std::pow(r, 2.0 - D) / (e0 * (D - 1.0));
    return {value, Basis::e_r};
}

double charge_per_length(const CylinderChargeScenario& s) {
    check_scenario(s);
    return s.material.rho_q * std::pow(kPi, (s.D - 1.0) / 2.0) *
           std::pow(s.R, s.D - 1.0) / gamma((s.D + 1.0) / 2.0);
}

std::pair<double, double> effective_permittivities(const CylinderChargeScenario& s) {
    check_scenario(s);
    const double D = s.D;
    const double eps_in = (D - 1.0) / 2.0;
    const double eps_out =
        (D - 1.0) / (2.0 * std::pow(kPi, (3.0 - D) / 2.0) * gamma((D + 1.0) / 2.0));
    return {eps_in, eps_out};
}

}  // namespace fracdim
