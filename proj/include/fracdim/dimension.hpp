#pragma once

#include <string>

namespace fracdim {

enum class Symmetry { spherical, cylindrical };

std::string to_string(Symmetry s);

/// Dimension pair for non-integer dimensional calculus: D is the bulk
/// dimension of the region, d the dimension of the boundary that flux
/// crosses, alpha_r = D - d the radial co-dimension weight.
///
/// Valid range: 0 < D <= 3, 0 < d < D. The default boundary dimension is
/// d = D - 1, which needs D > 1. Cylindrical operator families act on a
/// cross-section of dimension D - 1 and therefore also require D > 1.
class DimensionSpec {
public:
    static DimensionSpec spherical(double D);
    static DimensionSpec spherical(double D, double d);
    static DimensionSpec cylindrical(double D);
    static DimensionSpec cylindrical(double D, double d);

    double D() const { return D_; }
    double d() const { return d_; }
    Symmetry symmetry() const { return symmetry_; }
    double alpha_r() const { return D_ - d_; }

    /// Coefficient c of the (c/r) term in the simple operator family:
    /// D - 1 for spherical symmetry, D - 2 for cylindrical.
    double radial_coefficient() const;

private:
    DimensionSpec(double D, double d, Symmetry s);
    double D_;
    double d_;
    Symmetry symmetry_;
};

}  // namespace fracdim
