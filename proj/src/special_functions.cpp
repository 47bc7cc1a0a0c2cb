#include "fracdim/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracdim {

namespace {

// Lanczos approximation, g = 7, series truncated at nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_series(double z) {
    double acc = kLanczosCoeff[0];
    for (int i = 1; i < 9; ++i) acc += kLanczosCoeff[i] / (z + i);
    return acc;
}

void require_positive(const char* who, double x) {
    if (std::isnan(x) || x <= 0.0)
        throw std::domain_error(std::string(who) + ": argument must be a positive real");
}

}  // namespace

double gamma(double x) {
    require_positive("gamma", x);
    if (x > 170.0)
        throw std::overflow_error("gamma: argument above 170 overflows double");
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    // Above ~130 the intermediate power t^(z+1/2) leaves double range even
    // though the product would not, so switch to the log form there.
    if (x > 130.0) return std::exp(log_gamma(x));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) *
           lanczos_series(z);
}

double log_gamma(double x) {
    require_positive("log_gamma", x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_series(z));
}

double gamma_ratio(double a, double b) {
    require_positive("gamma_ratio", a);
    require_positive("gamma_ratio", b);
    if (a > 170.0 || b > 170.0)
        throw std::overflow_error("gamma_ratio: arguments above 170 rejected");
    return std::exp(log_gamma(a) - log_gamma(b));
}

}  // namespace fracdim
