#include "fracdim/elasticity.hpp"

#include <cmath>
#include <stdexcept>

#include "fracdim/errors.hpp"
#include "fracdim/radial_solver.hpp"

namespace fracdim {

namespace {

// Degenerate-dimension window for the pipe branches.
constexpr double kBranchTol = 1e-12;

void check_common(const ElasticScenario& s, bool need_R2) {
    if (!std::isfinite(s.D) || s.D <= 0.0 || s.D > 3.0)
        throw std::domain_error("ElasticScenario: D must lie in (0, 3]");
    if (!(s.material.mu > 0.0))
        throw std::domain_error("ElasticScenario: mu must be positive");
    if (!(s.R1 > 0.0))
        throw std::domain_error("ElasticScenario: R1 must be positive");
    if (need_R2 && !(s.R2 > s.R1 && std::isfinite(s.R2)))
        throw std::domain_error("ElasticScenario: need R1 < R2 < inf");
    if (!std::isfinite(s.p1) || !std::isfinite(s.p2))
        throw std::domain_error("ElasticScenario: pressures must be finite");
}

void check_inside(const ElasticScenario& s, double r, bool outer_bounded) {
    if (!(r >= s.R1) || (outer_bounded && !(r <= s.R2)))
        throw std::domain_error("elasticity: r outside the shell");
}

// Solve [[m11, m12], [m21, m22]] (C1, C2)^T = (b1, b2)^T.
DisplacementConstants solve2x2(double m11, double m12, double m21, double m22, double b1,
                               double b2) {
    const double det = m11 * m22 - m12 * m21;
    const double scale = std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
    if (!(std::abs(det) > 1e-14 * scale * scale))
        throw NumericError("elasticity: boundary-condition system is singular");
    return {(b1 * m22 - m12 * b2) / det, (m11 * b2 - b1 * m21) / det};
}

}  // namespace

// ------------------------------------------------------------- hollow ball ---

DisplacementConstants ball_constants(const ElasticScenario& s) {
    check_common(s, true);
    if (std::abs(s.D - 1.0) < kBranchTol)
        throw std::domain_error("ball_constants: D = 1 degenerates the r^(1-D) basis");
    const double lam = s.material.lambda, mu = s.material.mu, D = s.D;
    const double k1 = 2.0 * mu + D * lam;        // sigma coefficient of C1
    const double k2 = 2.0 * mu * (1.0 - D);      // sigma coefficient of C2 r^-D
    if (k1 == 0.0)
        throw std::domain_error("ball_constants: 2 mu + D lambda must not vanish");
    return solve2x2(k1, k2 * std::pow(s.R1, -D), k1, k2 * std::pow(s.R2, -D), -s.p1, -s.p2);
}

double ball_displacement(const ElasticScenario& s, double r) {
    const DisplacementConstants c = ball_constants(s);
    check_inside(s, r, true);
    return c.C1 * r + c.C2 * std::pow(r, 1.0 - s.D);
}

double ball_stress(const ElasticScenario& s, double r) {
    const DisplacementConstants c = ball_constants(s);
    check_inside(s, r, true);
    const double lam = s.material.lambda, mu = s.material.mu, D = s.D;
    return (2.0 * mu + D * lam) * c.C1 + 2.0 * mu * (1.0 - D) * c.C2 * std::pow(r, -D);
}

// -------------------------------------------------------------------- pipe ---

DisplacementConstants pipe_constants(const ElasticScenario& s) {
    check_common(s, true);
    const double lam = s.material.lambda, mu = s.material.mu, D = s.D;
    const double k1 = 2.0 * mu + lam * (D - 1.0);  // sigma coefficient of C1
    if (k1 == 0.0)
        throw std::domain_error("pipe_constants: 2 mu + lambda (D - 1) must not vanish");

    if (std::abs(D - 1.0) < kBranchTol) {
        // u = C1 r + C2 r ln r, sigma = 2 mu C1 + C2 (2 mu ln r + 2 mu + lambda).
        return solve2x2(2.0 * mu, 2.0 * mu * std::log(s.R1) + 2.0 * mu + lam,
                        2.0 * mu, 2.0 * mu * std::log(s.R2) + 2.0 * mu + lam,
                        -s.p1, -s.p2);
    }
    if (std::abs(D - 2.0) < kBranchTol) {
        // u = C1 + C2 r, sigma = (2 mu + lambda) C2 uniformly: the system is
        // rank one. Consistent loading (p1 = p2) pins C2 and leaves the
        // stress-free offset C1 = 0; anything else is unsolvable.
        if (std::abs(s.p1 - s.p2) > 1e-12 * std::max({std::abs(s.p1), std::abs(s.p2), 1.0}))
            throw NumericError("pipe_constants: D = 2 carries uniform stress, needs p1 = p2");
        return {0.0, -s.p1 / (2.0 * mu + lam)};
    }
    const double k2 = 2.0 * mu * (2.0 - D);  // sigma coefficient of C2 r^(1-D)
    return solve2x2(k1, k2 * std::pow(s.R1, 1.0 - D), k1, k2 * std::pow(s.R2, 1.0 - D),
                    -s.p1, -s.p2);
}

double pipe_displacement(const ElasticScenario& s, double r) {
    const DisplacementConstants c = pipe_constants(s);
    check_inside(s, r, true);
    if (std::abs(s.D - 1.0) < kBranchTol) return c.C1 * r + c.C2 * r * std::log(r);
    if (std::abs(s.D - 2.0) < kBranchTol) return c.C1 + c.C2 * r;
    return c.C1 * r + c.C2 * std::pow(r, 2.0 - s.D);
}

double pipe_stress(const ElasticScenario& s, double r) {
    const DisplacementConstants c = pipe_constants(s);
    check_inside(s, r, true);
    const double lam = s.material.lambda, mu = s.material.mu, D = s.D;
    if (std::abs(D - 1.0) < kBranchTol)
        return 2.0 * mu * c.C1 + c.C2 * (2.0 * mu * std::log(r) + 2.0 * mu + lam);
    if (std::abs(D - 2.0) < kBranchTol) return (2.0 * mu + lam) * c.C2;
    return (2.0 * mu + lam * (D - 1.0)) * c.C1 +
           2.0 * mu * (2.0 - D) * c.C2 * std::pow(r, 1.0 - D);
}

// ------------------------------------------------------------------ cavity ---

DisplacementConstants cavity_constants(const ElasticScenario& s) {
    check_common(s, false);
    if (std::abs(s.D - 1.0) < kBranchTol)
        throw std::domain_error("cavity_constants: D = 1 degenerates the r^(1-D) basis");
    const double lam = s.material.lambda, mu = s.material.mu, D = s.D;
    const double k1 = 2.0 * mu + D * lam;
    if (k1 == 0.0)
        throw std::domain_error("cavity_constants: 2 mu + D lambda must not vanish");
    // R2 -> infinity limit of the ball system: the far field carries p2 alone.
    return {-s.p2 / k1, (s.p2 - s.p1) * std::pow(s.R1, D) / (2.0 * mu * (1.0 - D))};
}

double cavity_displacement(const ElasticScenario& s, double r) {
    const DisplacementConstants c = cavity_constants(s);
    check_inside(s, r, false);
    return c.C1 * r + c.C2 * std::pow(r, 1.0 - s.D);
}

double cavity_stress(const ElasticScenario& s, double r) {
    const DisplacementConstants c = cavity_constants(s);
    check_inside(s, r, false);
    const double lam = s.material.lambda, mu = s.material.mu, D = s.D;
    return (2.0 * mu + D * lam) * c.C1 + 2.0 * mu * (1.0 - D) * c.C2 * std::pow(r, -s.D);
}

// ---------------------------------------------------------- BVP validation ---

double validate_against_bvp(const ElasticScenario& s, int n_nodes) {
    check_common(s, true);
    if (n_nodes < 5)
        throw std::domain_error("validate_against_bvp: need at least 5 nodes");
    const bool ball = s.geometry == ElasticGeometry::hollow_ball;
    if (!ball && s.geometry != ElasticGeometry::pipe)
        throw std::domain_error("validate_against_bvp: cavity has no finite domain");

    const double lam = s.material.lambda, mu = s.material.mu;
    const double c_geom = ball ? s.D - 1.0 : s.D - 2.0;

    const RadialGrid grid(s.R1, s.R2, n_nodes);
    RadialScalarField zero([](double) { return 0.0; });
    const auto bc = [&](double R, double p) {
        return BoundaryCondition::robin(lam * c_geom / R, 2.0 * mu + lam, -p);
    };
    const SolutionProfile fd =
        solve_linear_bvp(c_geom, -c_geom, zero, grid, bc(s.R1, s.p1), bc(s.R2, s.p2));

    double err = 0.0, scale = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        const double r = grid.node(i);
        const double exact = ball ? ball_displacement(s, r) : pipe_displacement(s, r);
        err = std::max(err, std::abs(fd.values[static_cast<std::size_t>(i)] - exact));
        scale = std::max(scale, std::abs(exact));
    }
    if (scale == 0.0) return err;
    return err / scale;
}

}  // namespace fracdim
