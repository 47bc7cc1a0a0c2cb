#include "fracdim/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdim/errors.hpp"
#include "fracdim/quadrature.hpp"

namespace fracdim {

namespace {

// Window in which the homogeneous basis switches to {1, ln r}.
constexpr double kLogBranchTol = 1e-8;

// Steady solutions need r_min > 0 (the homogeneous basis and the
// antiderivative lower limit live there); the transient march accepts
// r_min = 0 through the axis handling in the solver.
void check_scenario(const HeatScenario& s, bool steady) {
    if (!std::isfinite(s.D) || s.D <= 0.0 || s.D > 3.0)
        throw std::domain_error("HeatScenario: D must lie in (0, 3]");
    if (s.symmetry == Symmetry::cylindrical && s.D <= 1.0)
        throw std::domain_error("HeatScenario: cylindrical symmetry needs D > 1");
    if (!(s.r_min >= 0.0) || (steady && s.r_min == 0.0) || !(s.r_max > s.r_min) ||
        !std::isfinite(s.r_max))
        throw std::domain_error("HeatScenario: need 0 <= r_min < r_max (steady: r_min > 0)");
    if (!(s.material.c_p > 0.0) || !(s.material.rho > 0.0) || !(s.material.k > 0.0))
        throw std::domain_error("HeatScenario: c_p, rho, k must be positive");
}

double radial_coefficient(const HeatScenario& s) {
    return s.symmetry == Symmetry::spherical ? s.D - 1.0 : s.D - 2.0;
}

// Effective dimension of the radial operator: the exponent family of the
// homogeneous solutions is {1, r^(2-De)}.
double effective_dimension(const HeatScenario& s) { return radial_coefficient(s) + 1.0; }

struct SteadyPieces {
    double C1 = 0.0, C2 = 0.0;
    bool log_branch = false;
    double De = 0.0;
};

// Fit C1, C2 of phi = C1 + C2 B(r) + particular(r) to the two BCs.
SteadyPieces fit_constants(const HeatScenario& s, double De, bool log_branch,
                           const std::function<double(double)>& part,
                           const std::function<double(double)>& part_d1) {
    auto B = [&](double r) { return log_branch ? std::log(r) : std::pow(r, 2.0 - De); };
    auto Bd = [&](double r) {
        return log_branch ? 1.0 / r : (2.0 - De) * std::pow(r, 1.0 - De);
    };
    const BoundaryCondition& L = s.bc_left;
    const BoundaryCondition& R = s.bc_right;
    const double m11 = L.a, m12 = L.a * B(s.r_min) + L.b * Bd(s.r_min);
    const double m21 = R.a, m22 = R.a * B(s.r_max) + R.b * Bd(s.r_max);
    const double b1 = L.value - L.a * part(s.r_min) - L.b * part_d1(s.r_min);
    const double b2 = R.value - R.a * part(s.r_max) - R.b * part_d1(s.r_max);
    const double det = m11 * m22 - m12 * m21;
    const double scale =
        std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22), 1e-30});
    if (!(std::abs(det) > 1e-14 * scale * scale))
        throw NumericError("heat: steady boundary conditions do not pin the constants");
    return {(b1 * m22 - m12 * b2) / det, (m11 * b2 - b1 * m21) / det, log_branch, De};
}

}  // namespace

RadialScalarField steady_constant_source_field(const HeatScenario& s) {
    check_scenario(s, true);
    const double De = effective_dimension(s);
    const bool log_branch = std::abs(De - 2.0) < kLogBranchTol;
    const double cp_rho = s.material.c_p * s.material.rho;
    const double q0 = s.q0;
    const double pcoef = -q0 / (2.0 * De * cp_rho);

    auto part = [pcoef](double r) { return pcoef * r * r; };
    auto part_d1 = [pcoef](double r) { return 2.0 * pcoef * r; };
    const SteadyPieces c = fit_constants(s, De, log_branch, part, part_d1);

    if (log_branch) {
        return RadialScalarField(
            [c, pcoef](double r) { return c.C1 + c.C2 * std::log(r) + pcoef * r * r; },
            [c, pcoef](double r) { return c.C2 / r + 2.0 * pcoef * r; },
            [c, pcoef](double r) { return -c.C2 / (r * r) + 2.0 * pcoef; });
    }
    const double De_ = De;
    return RadialScalarField(
        [c, pcoef, De_](double r) {
            return c.C1 + c.C2 * std::pow(r, 2.0 - De_) + pcoef * r * r;
        },
        [c, pcoef, De_](double r) {
            return c.C2 * (2.0 - De_) * std::pow(r, 1.0 - De_) + 2.0 * pcoef * r;
        },
        [c, pcoef, De_](double r) {
            return c.C2 * (2.0 - De_) * (1.0 - De_) * std::pow(r, -De_) + 2.0 * pcoef;
        });
}

double steady_constant_source(const HeatScenario& s, double r) {
    if (!(r >= s.r_min) || !(r <= s.r_max))
        throw std::domain_error("steady_constant_source: r outside the domain");
    return steady_constant_source_field(s)(r);
}

RadialScalarField steady_general_source_field(const HeatScenario& s,
                                              const QuadratureConfig& cfg) {
    check_scenario(s, true);
    if (!s.q) throw std::invalid_argument("steady_general_source: scenario has no q(r)");
    const double De = effective_dimension(s);
    if (std::abs(De - 2.0) < kLogBranchTol)
        throw std::domain_error(
            "steady_general_source: ln-branch dimension not supported here, "
            "use the constant-source solution");
    const double cp_rho = s.material.c_p * s.material.rho;
    const double r0 = s.r_min;
    const auto q = s.q;

    // Antiderivatives from r_min: F = int q t^(De-1) dt, G = int q t dt.
    auto F = [q, De, r0, cfg](double r) {
        if (r == r0) return 0.0;
        return integrate([&](double t) { return q(t) * std::pow(t, De - 1.0); }, r0, r, cfg)
            .value;
    };
    auto G = [q, r0, cfg](double r) {
        if (r == r0) return 0.0;
        return integrate([&](double t) { return q(t) * t; }, r0, r, cfg).value;
    };

    const double inv = 1.0 / (cp_rho * (De - 2.0));
    auto part = [F, G, De, inv](double r) {
        return inv * (std::pow(r, 2.0 - De) * F(r) - G(r));
    };
    auto part_d1 = [F, De, cp_rho](double r) {
        return -std::pow(r, 1.0 - De) * F(r) / cp_rho;
    };
    auto part_d2 = [F, q, De, cp_rho](double r) {
        return -((1.0 - De) * std::pow(r, -De) * F(r) + q(r)) / cp_rho;
    };

    const SteadyPieces c = fit_constants(s, De, false, part, part_d1);
    return RadialScalarField(
        [c, part, De](double r) { return c.C1 + c.C2 * std::pow(r, 2.0 - De) + part(r); },
        [c, part_d1, De](double r) {
            return c.C2 * (2.0 - De) * std::pow(r, 1.0 - De) + part_d1(r);
        },
        [c, part_d2, De](double r) {
            return c.C2 * (2.0 - De) * (1.0 - De) * std::pow(r, -De) + part_d2(r);
        });
}

double steady_general_source(const HeatScenario& s, double r, const QuadratureConfig& cfg) {
    if (!(r >= s.r_min) || !(r <= s.r_max))
        throw std::domain_error("steady_general_source: r outside the domain");
    return steady_general_source_field(s, cfg)(r);
}

std::vector<SolutionProfile> transient(const HeatScenario& s, const RadialGrid& grid,
                                       const std::vector<double>& initial, double t_end,
                                       int n_steps, int snapshot_stride) {
    check_scenario(s, false);
    const double cp_rho = s.material.c_p * s.material.rho;
    const double a_diff = s.material.k / cp_rho;
    auto q = s.q ? s.q : [q0 = s.q0](double) { return q0; };
    auto source = [q, cp_rho](double r, double) { return q(r) / cp_rho; };

    // The march only consumes the radial coefficient; pick a valid boundary
    // dimension even where the default d = D - 1 is out of range.
    const DimensionSpec spec =
        s.symmetry == Symmetry::spherical
            ? (s.D > 1.0 ? DimensionSpec::spherical(s.D)
                         : DimensionSpec::spherical(s.D, 0.5 * s.D))
            : DimensionSpec::cylindrical(s.D);
    return solve_heat_transient(spec, a_diff, source, grid, s.bc_left, s.bc_right, initial,
                                t_end, n_steps, snapshot_stride);
}

}  // namespace fracdim
