#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "fracdim/errors.hpp"
#include "fracdim/radial_solver.hpp"

using namespace fracdim;

namespace {

constexpr double kPi = std::numbers::pi;

// Max-norm error of the Dirichlet problem u'' + (A/r) u' + (B/r^2) u = f
// for u = sin(r) on [1, 2].
double sine_bvp_error(int n_nodes) {
    const double A = 2.0, B = -1.0;
    RadialScalarField f([=](double r) {
        return -std::sin(r) + A * std::cos(r) / r + B * std::sin(r) / (r * r);
    });
    const RadialGrid grid(1.0, 2.0, n_nodes);
    const auto sol = solve_linear_bvp(A, B, f, grid,
                                      BoundaryCondition::dirichlet(std::sin(1.0)),
                                      BoundaryCondition::dirichlet(std::sin(2.0)));
    double err = 0.0;
    for (int i = 0; i < n_nodes; ++i)
        err = std::max(err, std::abs(sol.values[static_cast<std::size_t>(i)] -
                                     std::sin(grid.node(i))));
    return err;
}

// Same manufactured problem with a Robin left end and a Neumann right end.
double robin_bvp_error(int n_nodes) {
    const double A = 1.5, B = 0.0;
    RadialScalarField f([=](double r) { return -std::cos(r) - A * std::sin(r) / r; });
    const RadialGrid grid(1.0, 2.0, n_nodes);
    const auto left = BoundaryCondition::robin(1.0, 2.0, std::cos(1.0) - 2.0 * std::sin(1.0));
    const auto right = BoundaryCondition::neumann(-std::sin(2.0));
    const auto sol = solve_linear_bvp(A, B, f, grid, left, right);
    double err = 0.0;
    for (int i = 0; i < n_nodes; ++i)
        err = std::max(err, std::abs(sol.values[static_cast<std::size_t>(i)] -
                                     std::cos(grid.node(i))));
    return err;
}

}  // namespace

TEST_CASE("Thomas elimination solves diagonally dominant systems") {
    const std::size_t n = 80;
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> draw(-1.0, 1.0);
    TridiagonalSystem sys;
    sys.sub.resize(n);
    sys.diag.resize(n);
    sys.super.resize(n);
    sys.rhs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.sub[i] = draw(rng);
        sys.super[i] = draw(rng);
        sys.diag[i] = 4.0 + draw(rng);
        sys.rhs[i] = draw(rng);
    }
    const auto x = solve_tridiagonal(sys);
    REQUIRE(x.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        double lhs = sys.diag[i] * x[i];
        if (i > 0) lhs += sys.sub[i] * x[i - 1];
        if (i + 1 < n) lhs += sys.super[i] * x[i + 1];
        CHECK(std::abs(lhs - sys.rhs[i]) <= 1e-12);
    }
}

TEST_CASE("Thomas elimination reports vanishing pivots and bad sizes") {
    TridiagonalSystem singular;
    singular.sub = {0.0, 1.0};
    singular.diag = {1.0, 1.0};
    singular.super = {1.0, 0.0};
    singular.rhs = {1.0, 1.0};
    // Second pivot: 1 - 1 * 1 = 0.
    CHECK_THROWS_AS(solve_tridiagonal(singular), NumericError);

    TridiagonalSystem zero_head;
    zero_head.sub = {0.0, 1.0};
    zero_head.diag = {0.0, 1.0};
    zero_head.super = {1.0, 0.0};
    zero_head.rhs = {1.0, 1.0};
    CHECK_THROWS_AS(solve_tridiagonal(zero_head), NumericError);

    TridiagonalSystem ragged;
    ragged.sub = {0.0};
    ragged.diag = {1.0, 1.0};
    ragged.super = {0.0, 0.0};
    ragged.rhs = {1.0, 1.0};
    CHECK_THROWS_AS(solve_tridiagonal(ragged), std::invalid_argument);
}

TEST_CASE("boundary value solver converges at second order, Dirichlet ends") {
    const double e101 = sine_bvp_error(101);
    const double e201 = sine_bvp_error(201);
    CHECK(e201 <= 1e-4);
    const double ratio = e101 / e201;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
    CHECK(sine_bvp_error(1001) <= 5e-7);
}

TEST_CASE("ghost-node elimination keeps Robin and Neumann ends second order") {
    const double e101 = robin_bvp_error(101);
    const double e201 = robin_bvp_error(201);
    CHECK(e101 <= 1e-2);
    const double ratio = e101 / e201;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("pure flux conditions without a zeroth-order term are rejected") {
    RadialScalarField f([](double) { return 1.0; });
    const RadialGrid grid(1.0, 2.0, 11);
    CHECK_THROWS_AS(solve_linear_bvp(1.0, 0.0, f, grid, BoundaryCondition::neumann(0.0),
                                     BoundaryCondition::neumann(0.0)),
                    NumericError);
    // With a zeroth-order term the same conditions are fine.
    CHECK_NOTHROW(solve_linear_bvp(1.0, -1.0, f, grid, BoundaryCondition::neumann(0.0),
                                   BoundaryCondition::neumann(0.0)));
}

TEST_CASE("boundary value solver rejects bad inputs") {
    RadialScalarField f([](double) { return 1.0; });
    CHECK_THROWS_AS(solve_linear_bvp(1.0, 0.0, f, RadialGrid(0.0, 1.0, 11),
                                     BoundaryCondition::dirichlet(0.0),
                                     BoundaryCondition::dirichlet(0.0)),
                    std::domain_error);
    RadialScalarField bad([](double) { return std::nan(""); });
    CHECK_THROWS_AS(solve_linear_bvp(1.0, 0.0, bad, RadialGrid(1.0, 2.0, 11),
                                     BoundaryCondition::dirichlet(0.0),
                                     BoundaryCondition::dirichlet(0.0)),
                    NumericError);
    // a = b = 0 pins nothing and is rejected up front.
    CHECK_THROWS_AS(solve_linear_bvp(1.0, 0.0, f, RadialGrid(1.0, 2.0, 11),
                                     BoundaryCondition::robin(0.0, 0.0, 1.0),
                                     BoundaryCondition::dirichlet(0.0)),
                    std::domain_error);
}

TEST_CASE("transient march conserves insulated heat content") {
    // With zero-flux ends the weighted integral of phi r^2 is invariant for
    // the continuous equation; the discrete march leaks only through the
    // second-order boundary rows, so the drift must be small and shrink by
    // about 4x per grid refinement.
    const auto spec = DimensionSpec::spherical(3.0);
    auto drift_for = [&](int n) {
        const RadialGrid grid(1.0, 2.0, n);
        std::vector<double> initial(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            initial[static_cast<std::size_t>(i)] = 1.0 + std::cos(kPi * (grid.node(i) - 1.0));

        auto no_source = [](double, double) { return 0.0; };
        const auto snaps = solve_heat_transient(spec, 1.0, no_source, grid,
                                                BoundaryCondition::neumann(0.0),
                                                BoundaryCondition::neumann(0.0), initial,
                                                0.01, 1000, 1000);
        REQUIRE(snaps.size() >= 2);

        auto heat_content = [&](const std::vector<double>& phi) {
            double sum = 0.0;
            for (int i = 0; i + 1 < n; ++i) {
                const double r0 = grid.node(i), r1 = grid.node(i + 1);
                const auto u0 = static_cast<std::size_t>(i);
                sum += 0.5 * (phi[u0] * r0 * r0 + phi[u0 + 1] * r1 * r1) * grid.h();
            }
            return sum;
        };
        const double before = heat_content(snaps.front().values);
        const double after = heat_content(snaps.back().values);
        return std::abs(after - before) / std::abs(before);
    };

    const double coarse = drift_for(201);
    const double fine = drift_for(401);
    CHECK(coarse <= 1e-5);
    CHECK(fine <= 0.5 * coarse);
}

TEST_CASE("axis row reproduces the classical ball eigenmode decay") {
    // phi(r, t) = exp(-lambda^2 t) sin(lambda r) / (lambda r) with lambda = pi
    // solves the three-dimensional heat equation on [0, 1] with phi(1) = 0.
    const auto spec = DimensionSpec::spherical(3.0);
    const int n = 1601;
    const RadialGrid grid(0.0, 1.0, n);
    const double lambda = kPi;
    std::vector<double> initial(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double r = grid.node(i);
        initial[static_cast<std::size_t>(i)] =
            r == 0.0 ? 1.0 : std::sin(lambda * r) / (lambda * r);
    }
    auto no_source = [](double, double) { return 0.0; };
    const double t_end = 0.1;
    const auto snaps = solve_heat_transient(spec, 1.0, no_source, grid,
                                            BoundaryCondition::neumann(0.0),
                                            BoundaryCondition::dirichlet(0.0), initial,
                                            t_end, 2000, 2000);
    const auto& last = snaps.back();
    CHECK(last.meta.time == doctest::Approx(t_end).epsilon(1e-12));
    const double decay = std::exp(-lambda * lambda * t_end);
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = grid.node(i);
        const double exact = decay * (r == 0.0 ? 1.0 : std::sin(lambda * r) / (lambda * r));
        err = std::max(err, std::abs(last.values[static_cast<std::size_t>(i)] - exact));
    }
    CHECK(err <= 5e-6);
}

TEST_CASE("snapshot cadence includes the initial state and the final step") {
    const auto spec = DimensionSpec::spherical(2.5);
    const RadialGrid grid(1.0, 2.0, 21);
    std::vector<double> initial(21, 1.0);
    auto no_source = [](double, double) { return 0.0; };
    auto run = [&](int n_steps, int stride) {
        return solve_heat_transient(spec, 1.0, no_source, grid,
                                    BoundaryCondition::dirichlet(1.0),
                                    BoundaryCondition::dirichlet(1.0), initial, 1.0,
                                    n_steps, stride);
    };
    const auto every_third = run(10, 3);
    REQUIRE(every_third.size() == 5);
    const double dt = 0.1;
    const double expected[] = {0.0, 3.0 * dt, 6.0 * dt, 9.0 * dt, 10.0 * dt};
    for (std::size_t i = 0; i < every_third.size(); ++i) {
        CHECK(every_third[i].meta.time == doctest::Approx(expected[i]).epsilon(1e-12));
        CHECK(every_third[i].meta.field == "phi");
        CHECK(every_third[i].meta.D == doctest::Approx(2.5));
        CHECK(every_third[i].meta.symmetry == "spherical");
    }
    CHECK(run(10, 100).size() == 2);   // initial and final only
    CHECK(run(10, 1).size() == 11);
    CHECK(run(10, 5).size() == 3);
}

TEST_CASE("transient march rejects bad arguments and detects divergence") {
    const auto spec = DimensionSpec::spherical(3.0);
    const RadialGrid grid(1.0, 2.0, 21);
    std::vector<double> initial(21, 0.0);
    auto no_source = [](double, double) { return 0.0; };
    CHECK_THROWS_AS(solve_heat_transient(spec, -1.0, no_source, grid,
                                         BoundaryCondition::dirichlet(0.0),
                                         BoundaryCondition::dirichlet(0.0), initial, 1.0,
                                         10, 1),
                    std::domain_error);
    std::vector<double> short_initial(5, 0.0);
    CHECK_THROWS_AS(solve_heat_transient(spec, 1.0, no_source, grid,
                                         BoundaryCondition::dirichlet(0.0),
                                         BoundaryCondition::dirichlet(0.0), short_initial,
                                         1.0, 10, 1),
                    std::invalid_argument);
    // A source pushing past the overflow sentinel is flagged, not returned.
    auto huge = [](double, double) { return 1e12; };
    CHECK_THROWS_AS(solve_heat_transient(spec, 1.0, huge, grid,
                                         BoundaryCondition::neumann(0.0),
                                         BoundaryCondition::neumann(0.0), initial, 10.0,
                                         2, 1),
                    NumericError);
    auto nan_source = [](double, double) { return std::nan(""); };
    CHECK_THROWS_AS(solve_heat_transient(spec, 1.0, nan_source, grid,
                                         BoundaryCondition::dirichlet(0.0),
                                         BoundaryCondition::dirichlet(0.0), initial, 1.0,
                                         10, 1),
                    NumericError);
}

TEST_CASE("profile derivative wraps the stencils with updated metadata") {
    const RadialGrid grid(1.0, 2.0, 101);
    SolutionProfile p{grid, std::vector<double>(101), {}};
    p.meta.field = "phi";
    for (int i = 0; i < 101; ++i)
        p.values[static_cast<std::size_t>(i)] = std::sin(grid.node(i));

    const auto d1 = fd_derivative(p, 1);
    CHECK(d1.meta.field == "phi_d1");
    const auto d2 = fd_derivative(p, 2);
    CHECK(d2.meta.field == "phi_d2");
    double worst1 = 0.0, worst2 = 0.0;
    for (int i = 0; i < 101; ++i) {
        const double r = grid.node(i);
        worst1 = std::max(worst1, std::abs(d1.values[static_cast<std::size_t>(i)] -
                                           std::cos(r)));
        worst2 = std::max(worst2, std::abs(d2.values[static_cast<std::size_t>(i)] +
                                           std::sin(r)));
    }
    CHECK(worst1 <= 1e-4);
    CHECK(worst2 <= 1e-3);
}
