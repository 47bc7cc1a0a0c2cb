#include "fracdim/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracdim {

namespace detail {

namespace {

double step_for(double x, bool positive_domain) {
    static const double eps5 = std::pow(std::numeric_limits<double>::epsilon(), 0.2);
    double h = std::max(eps5 * std::abs(x), eps5);
    if (positive_domain && x > 0.0) h = std::min(h, 0.25 * x);
    return h;
}

}  // namespace

double central_diff1(const std::function<double(double)>& f, double x, bool positive_domain) {
    const double h = step_for(x, positive_domain);
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double central_diff2(const std::function<double(double)>& f, double x, bool positive_domain) {
    const double h = step_for(x, positive_domain);
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
           (12 * h * h);
}

}  // namespace detail

double AxialField::dur_dz(double r, double z) const {
    if (durdz_) return durdz_(r, z);
    return detail::central_diff1([&](double zz) { return ur_(r, zz); }, z, false);
}

double AxialField::duz_dr(double r, double z) const {
    if (duzdr_) return duzdr_(r, z);
    return detail::central_diff1([&](double rr) { return uz_(rr, z); }, r, true);
}

}  // namespace fracdim
