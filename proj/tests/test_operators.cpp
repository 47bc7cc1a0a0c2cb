#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fracdim/operators.hpp"

using namespace fracdim;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// r^k with exact derivatives, so operator identities are tested at the
// accuracy of the operators themselves.
RadialScalarField power_field(double k) {
    return RadialScalarField(
        [k](double r) { return std::pow(r, k); },
        [k](double r) { return k * std::pow(r, k - 1.0); },
        [k](double r) { return k * (k - 1.0) * std::pow(r, k - 2.0); });
}

RadialVectorField power_vector(double k) { return {power_field(k)}; }

}  // namespace

TEST_CASE("three-dimensional operators match the textbook values") {
    const auto spec = DimensionSpec::spherical(3.0);
    const auto r2 = power_field(2.0);
    for (double r : {0.4, 1.0, 2.3}) {
        CHECK(rel_err(laplacian_scalar(r2, spec, r), 6.0) <= 1e-13);
        CHECK(rel_err(grad_radial(r2, spec, r).value, 2.0 * r) <= 1e-13);
        CHECK(rel_err(div_radial(power_vector(1.0), spec, r), 3.0) <= 1e-13);
        CHECK(rel_err(div_radial(power_vector(2.0), spec, r), 4.0 * r) <= 1e-13);
        CHECK(curl_radial(power_vector(2.0), spec, r).value == 0.0);
        // u = r e_r is a pure dilation; the vector Laplacian annihilates it.
        CHECK(std::abs(laplacian_vector(power_vector(1.0), spec, r).value) <= 1e-13);
        // 1/r is harmonic away from the origin.
        CHECK(std::abs(laplacian_scalar(power_field(-1.0), spec, r)) <= 1e-13);
    }
    CHECK(grad_radial(r2, spec, 1.0).basis == Basis::e_r);
    CHECK(curl_radial(power_vector(2.0), spec, 1.0).basis == Basis::e_r);
    CHECK(laplacian_vector(power_vector(1.0), spec, 1.0).basis == Basis::e_r);
}

TEST_CASE("power rule for the divergence across dimensions") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> dim(1.05, 3.0);
    std::uniform_real_distribution<double> expo(-3.0, 3.0);
    std::uniform_real_distribution<double> rad(0.3, 2.5);
    for (int i = 0; i < 30; ++i) {
        const double D = dim(rng), k = expo(rng), r = rad(rng);
        const auto sph = DimensionSpec::spherical(D);
        CHECK(rel_err(div_radial(power_vector(k), sph, r),
                      (k + D - 1.0) * std::pow(r, k - 1.0)) <= 1e-12);
        const auto cyl = DimensionSpec::cylindrical(D);
        CHECK(rel_err(div_radial(power_vector(k), cyl, r),
                      (k + D - 2.0) * std::pow(r, k - 1.0)) <= 1e-12);
    }
}

TEST_CASE("vector Laplacian annihilates the free-space displacement modes") {
    // Spherical: r^(1-D); cylindrical: r^(2-D). Scale against the largest
    // term in the cancellation.
    for (double D : {1.5, 2.5, 2.9}) {
        for (double r : {0.5, 1.0, 1.7}) {
            const double sph_scale = std::abs(power_field(1.0 - D).deriv2(r));
            CHECK(std::abs(laplacian_vector(power_vector(1.0 - D),
                                            DimensionSpec::spherical(D), r).value) <=
                  1e-13 * std::max(sph_scale, 1.0));
            const double cyl_scale =
                std::max(std::abs(power_field(2.0 - D).deriv2(r)), 1.0);
            CHECK(std::abs(laplacian_vector(power_vector(2.0 - D),
                                            DimensionSpec::cylindrical(D), r).value) <=
                  1e-13 * cyl_scale);
        }
    }
}

TEST_CASE("scalar Laplacian annihilates the harmonic powers") {
    for (double D : {1.5, 2.5}) {
        for (double r : {0.5, 1.3}) {
            CHECK(std::abs(laplacian_scalar(power_field(2.0 - D),
                                            DimensionSpec::spherical(D), r)) <= 1e-12);
            CHECK(std::abs(laplacian_scalar(power_field(3.0 - D),
                                            DimensionSpec::cylindrical(D), r)) <= 1e-12);
        }
    }
}

TEST_CASE("axisymmetric curl combines the two cross partials") {
    // u_r = z r^2, u_z = r^3: curl component is r^2 - 3 r^2 = -2 r^2.
    const auto spec = DimensionSpec::cylindrical(3.0);
    AxialField analytic(
        [](double r, double z) { return z * r * r; },
        [](double r, double) { return r * r * r; },
        [](double r, double) { return r * r; },
        [](double r, double) { return 3.0 * r * r; });
    AxialField numeric(
        [](double r, double z) { return z * r * r; },
        [](double r, double) { return r * r * r; });
    for (double r : {0.5, 1.0, 2.0}) {
        for (double z : {-1.0, 0.0, 0.7}) {
            const auto got = curl_rz(analytic, spec, r, z);
            CHECK(got.basis == Basis::e_r);
            CHECK(rel_err(got.value, -2.0 * r * r) <= 1e-13);
            CHECK(rel_err(curl_rz(numeric, spec, r, z).value, -2.0 * r * r) <= 1e-7);
        }
    }
}

TEST_CASE("numeric derivative fallback stays within a few digits of exact") {
    const auto spec = DimensionSpec::spherical(2.5);
    RadialScalarField numeric([](double r) { return std::sin(r); });
    for (double r : {0.4, 1.0, 2.2}) {
        const double exact = -std::sin(r) + 1.5 / r * std::cos(r);
        CHECK(rel_err(laplacian_scalar(numeric, spec, r), exact) <= 1e-8);
    }
}

TEST_CASE("radial Laplacian parameterized by D equals the spherical one") {
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> dim(0.2, 3.0);
    std::uniform_real_distribution<double> rad(0.1, 3.0);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double D = dim(rng), r = rad(rng);
        const double a = coef(rng), b = coef(rng);
        RadialScalarField phi(
            [a, b](double x) { return std::sin(a * x) + b * x * x; },
            [a, b](double x) { return a * std::cos(a * x) + 2.0 * b * x; },
            [a, b](double x) { return -a * a * std::sin(a * x) + 2.0 * b; });
        // The default boundary dimension D - 1 needs D > 1; the coefficient
        // only depends on D, so any valid d gives the same operator.
        const auto spec = DimensionSpec::spherical(D, 0.5 * D);
        const double lhs = stillinger_laplacian_radial(phi, D, r);
        const double rhs = laplacian_scalar(phi, spec, r);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("generalized operators collapse to the simple family at alpha_r = 1") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dim(1.2, 3.0);
    std::uniform_real_distribution<double> expo(-1.5, 2.5);
    std::uniform_real_distribution<double> rad(0.4, 2.0);
    for (int i = 0; i < 40; ++i) {
        const double D = dim(rng), k = expo(rng), r = rad(rng);
        const auto spec = DimensionSpec::spherical(D, D - 1.0);
        const auto phi = power_field(k);
        const auto u = power_vector(k);
        CHECK(rel_err(div_generalized(u, spec, r), div_radial(u, spec, r)) <= 1e-12);
        CHECK(rel_err(grad_generalized(phi, spec, r).value,
                      grad_radial(phi, spec, r).value) <= 1e-12);
        CHECK(rel_err(laplacian_scalar_generalized(phi, spec, r),
                      laplacian_scalar(phi, spec, r)) <= 1e-12);
        const double lv = laplacian_vector(u, spec, r).value;
        CHECK(std::abs(laplacian_vector_generalized(u, spec, r).value - lv) <=
              1e-12 * std::max(1.0, std::abs(lv)));
    }
}

TEST_CASE("generalized operators match hand-evaluated references") {
    // div with D = 2.7, d = 1.5, u = r e_r at r = 2:
    // pi^((1-1.2)/2) Gamma(1.35)/Gamma(1.25) (2^-0.2 + 1.5 * 2^-1.2 * 2),
    // 30-digit value.
    const auto spec = DimensionSpec::spherical(2.7, 1.5);
    CHECK(rel_err(div_generalized(power_vector(1.0), spec, 2.0),
                  1.9083123140627395) <= 1e-12);
    // grad with alpha_r = 1.2 on phi = r^1.2 at r = 1: Gamma(0.6) 1.2 / pi^0.6.
    CHECK(rel_err(grad_generalized(power_field(1.2), spec, 1.0).value,
                  0.89917058153131861) <= 1e-12);
    CHECK(grad_generalized(power_field(1.2), spec, 1.0).basis == Basis::e_r);
}

TEST_CASE("generalized Laplacians factor through gradient and divergence") {
    std::mt19937 rng(1312);
    std::uniform_real_distribution<double> dim(1.1, 3.0);
    std::uniform_real_distribution<double> bdry(0.2, 0.9);  // d = bdry * D
    std::uniform_real_distribution<double> expo(0.5, 3.0);
    std::uniform_real_distribution<double> rad(0.5, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double D = dim(rng);
        const double d = bdry(rng) * D;
        const double k = expo(rng), r = rad(rng);
        const auto spec = DimensionSpec::spherical(D, d);

        // Scalar chain: S-Laplacian = Div(Grad phi).
        const auto phi = power_field(k);
        RadialVectorField grad_of_phi{RadialScalarField(
            [phi, spec](double x) { return grad_generalized(phi, spec, x).value; })};
        const double direct = laplacian_scalar_generalized(phi, spec, r);
        const double chained = div_generalized(grad_of_phi, spec, r);
        CHECK(std::abs(direct - chained) <= 1e-10 * std::max(1.0, std::abs(direct)));

        // Vector chain: V-Laplacian = Grad(Div u).
        const auto u = power_vector(k);
        RadialScalarField div_of_u(
            [u, spec](double x) { return div_generalized(u, spec, x); });
        const double vdirect = laplacian_vector_generalized(u, spec, r).value;
        const double vchained = grad_generalized(div_of_u, spec, r).value;
        CHECK(std::abs(vdirect - vchained) <= 1e-10 * std::max(1.0, std::abs(vdirect)));
    }
}

TEST_CASE("operators reject non-positive radii") {
    const auto spec = DimensionSpec::spherical(2.5);
    const auto phi = power_field(2.0);
    CHECK_THROWS_AS(laplacian_scalar(phi, spec, 0.0), std::domain_error);
    CHECK_THROWS_AS(div_radial(power_vector(1.0), spec, -1.0), std::domain_error);
    CHECK_THROWS_AS(grad_radial(phi, spec, 0.0), std::domain_error);
    CHECK_THROWS_AS(stillinger_laplacian_radial(phi, 3.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(stillinger_laplacian_radial(phi, 2.5, 0.0), std::domain_error);
}
