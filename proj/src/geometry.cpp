#include "fracdim/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fracdim/errors.hpp"
#include "fracdim/operators.hpp"
#include "fracdim/special_functions.hpp"

namespace fracdim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void check_dimension(const char* who, double D) {
    if (!std::isfinite(D) || D <= 0.0 || D > 3.0)
        throw std::domain_error(std::string(who) + ": D must lie in (0, 3]");
}

// Gamma continued to negative non-integer arguments through the reflection
// formula. The public gamma covers positive arguments only; the closed-form
// integrals below need the continuation.
double gamma_continued(double x) {
    if (x > 0.0) return gamma(x);
    if (x == std::floor(x))
        throw std::domain_error("gamma: pole at non-positive integer argument");
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
}

bool near_nonpositive_integer(double x) {
    return x < 0.5 && std::abs(x - std::round(x)) < 1e-12;
}

// Tail probe for [r0, inf) integrands: r^D f(r) must be heading to zero.
void check_decay(const RadialScalarField& f, double D, double r0) {
    const double base = std::max(r0, 1.0);
    double prev = kInf;
    for (double scale : {1e3, 1e6, 1e9}) {
        const double r = base * scale;
        const double v = std::abs(f(r)) * std::pow(r, D);
        if (!std::isfinite(v))
            throw NumericError("integrate_radial: integrand not finite on the tail");
        if (v > 1e-300 && v >= 0.9 * prev)
            throw NumericError("integrate_radial: integrand does not decay fast enough for [r, inf)");
        prev = v;
    }
}

}  // namespace

RadialInterval RadialInterval::finite(double r_min, double r_max) {
    if (!(r_min >= 0.0) || !std::isfinite(r_min) || !std::isfinite(r_max) || r_max <= r_min)
        throw std::domain_error("RadialInterval: need 0 <= r_min < r_max < inf");
    return {r_min, r_max};
}

RadialInterval RadialInterval::to_infinity(double r_min) {
    if (!(r_min >= 0.0) || !std::isfinite(r_min))
        throw std::domain_error("RadialInterval: r_min must be finite and non-negative");
    return {r_min, kInf};
}

bool RadialInterval::infinite() const { return std::isinf(r_max); }

double sphere_area(double D) {
    check_dimension("sphere_area", D);
    return 2.0 * std::pow(kPi, 0.5 * D) / gamma(0.5 * D);
}

double ball_volume(double D, double R) {
    check_dimension("ball_volume", D);
    if (!(R >= 0.0) || !std::isfinite(R))
        throw std::domain_error("ball_volume: R must be finite and non-negative");
    return sphere_area(D) * std::pow(R, D) / D;
}

double shell_volume(double D, double R1, double R2) {
    check_dimension("shell_volume", D);
    if (!(R1 >= 0.0) || !std::isfinite(R2) || R1 >= R2)
        throw std::domain_error("shell_volume: need 0 <= R1 < R2");
    return sphere_area(D) * (std::pow(R2, D) - std::pow(R1, D)) / D;
}

double ball_mass(double D, double R, double rho0) {
    if (!std::isfinite(rho0) || rho0 < 0.0)
        throw std::domain_error("ball_mass: density must be non-negative");
    return rho0 * ball_volume(D, R);
}

double integrate_radial(const RadialScalarField& f, double D, const RadialInterval& iv,
                        const QuadratureConfig& cfg) {
    check_dimension("integrate_radial", D);
    const double area = sphere_area(D);

    if (!iv.infinite()) {
        if (iv.r_max <= iv.r_min)
            throw std::domain_error("integrate_radial: empty interval");
        auto g = [&](double r) { return std::pow(r, D - 1.0) * f(r); };
        return area * integrate(g, iv.r_min, iv.r_max, cfg).value;
    }

    check_decay(f, D, iv.r_min);
    // Map [r_min, inf) to t in [t0, 1) by r = t / (1 - t); nodes stay interior
    // so t = 1 is never evaluated.
    const double t0 = iv.r_min / (1.0 + iv.r_min);
    auto g = [&](double t) {
        const double om = 1.0 - t;
        const double r = t / om;
        return std::pow(r, D - 1.0) * f(r) / (om * om);
    };
    return area * integrate(g, t0, 1.0, cfg).value;
}

double closed_form_power_integral(double D, double alpha, double beta, double a) {
    check_dimension("closed_form_power_integral", D);
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("closed_form_power_integral: scale a must be positive");
    const double g1 = alpha + 0.5 * D;
    const double g2 = beta - alpha - 0.5 * D;
    if (near_nonpositive_integer(g1) || near_nonpositive_integer(g2) ||
        near_nonpositive_integer(beta))
        throw std::domain_error("closed_form_power_integral: Gamma pole in parameters");
    return gamma_continued(g1) * gamma_continued(g2) /
           (gamma(0.5 * D) * gamma_continued(beta)) * std::pow(kPi, 0.5 * D) *
           std::pow(a, D + 2.0 * alpha - 2.0 * beta);
}

double closed_form_rational_integral(double D, double a, double b) {
    check_dimension("closed_form_rational_integral", D);
    if (!(b > 0.0) || !std::isfinite(b) || !std::isfinite(a))
        throw std::domain_error("closed_form_rational_integral: need finite a and b > 0");
    if (near_nonpositive_integer(1.0 - 0.5 * D))
        throw std::domain_error("closed_form_rational_integral: Gamma pole at D = 2");
    if (a == b) return 0.0;
    return std::pow(kPi * b, 0.5 * D) * (a / b - 1.0) * gamma_continued(1.0 - 0.5 * D);
}

double flux_across_sphere(const RadialVectorField& u, double d, double r) {
    if (!std::isfinite(d) || d <= 0.0 || d > 3.0)
        throw std::domain_error("flux_across_sphere: d must lie in (0, 3]");
    if (!(r > 0.0))
        throw std::domain_error("flux_across_sphere: r must be positive");
    return 2.0 * std::pow(kPi, 0.5 * (d + 1.0)) / gamma(0.5 * (d + 1.0)) *
           u.radial(r) * std::pow(r, d);
}

double gauss_residual(const RadialVectorField& u, const DimensionSpec& spec,
                      double R1, double R2, const QuadratureConfig& cfg) {
    if (!(R1 > 0.0) || !(R2 > R1) || !std::isfinite(R2))
        throw std::domain_error("gauss_residual: need 0 < R1 < R2");
    const double f1 = flux_across_sphere(u, spec.d(), R1);
    const double f2 = flux_across_sphere(u, spec.d(), R2);
    RadialScalarField divergence([&](double r) { return div_radial(u, spec, r); });
    const double volume = integrate_radial(divergence, spec.D(),
                                           RadialInterval::finite(R1, R2), cfg);
    // Normalize by the flux scale, not only the difference: for divergence-free
    // fields the difference is pure cancellation noise.
    const double floor = std::max({std::abs(f1), std::abs(f2),
                                   std::numeric_limits<double>::min()});
    return std::abs(volume - (f2 - f1)) / std::max(std::abs(f2 - f1), floor);
}

}  // namespace fracdim
