#include "fracdim/dimension.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdim {

std::string to_string(Symmetry s) {
    return s == Symmetry::spherical ? "spherical" : "cylindrical";
}

DimensionSpec::DimensionSpec(double D, double d, Symmetry s) : D_(D), d_(d), symmetry_(s) {
    if (!std::isfinite(D) || D <= 0.0 || D > 3.0)
        throw std::domain_error("DimensionSpec: D must lie in (0, 3]");
    if (!std::isfinite(d) || d <= 0.0 || d >= D)
        throw std::domain_error("DimensionSpec: d must lie in (0, D)");
    if (s == Symmetry::cylindrical && D <= 1.0)
        throw std::domain_error("DimensionSpec: cylindrical symmetry needs D > 1");
}

DimensionSpec DimensionSpec::spherical(double D) {
    if (D <= 1.0)
        throw std::domain_error("DimensionSpec: default boundary dimension d = D - 1 needs D > 1");
    return DimensionSpec(D, D - 1.0, Symmetry::spherical);
}

DimensionSpec DimensionSpec::spherical(double D, double d) {
    return DimensionSpec(D, d, Symmetry::spherical);
}

DimensionSpec DimensionSpec::cylindrical(double D) {
    if (D <= 1.0)
        throw std::domain_error("DimensionSpec: default boundary dimension d = D - 1 needs D > 1");
    return DimensionSpec(D, D - 1.0, Symmetry::cylindrical);
}

DimensionSpec DimensionSpec::cylindrical(double D, double d) {
    return DimensionSpec(D, d, Symmetry::cylindrical);
}

double DimensionSpec::radial_coefficient() const {
    return symmetry_ == Symmetry::spherical ? D_ - 1.0 : D_ - 2.0;
}

}  // namespace fracdim
