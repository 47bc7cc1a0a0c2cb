#pragma once

#include <string>
#include <vector>

namespace fracdim {

/// Uniform grid on [r_min, r_max] with n_nodes >= 3 points. r_min = 0 is
/// accepted; solvers that cannot handle the axis row reject it themselves.
class RadialGrid {
public:
    RadialGrid(double r_min, double r_max, int n_nodes);

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    int n_nodes() const { return n_; }
    double h() const { return h_; }

    /// Node i; the endpoints are returned exactly.
    double node(int i) const {
        if (i == 0) return r_min_;
        if (i == n_ - 1) return r_max_;
        return r_min_ + h_ * i;
    }

    std::vector<double> nodes() const;

private:
    double r_min_;
    double r_max_;
    int n_;
    double h_;
};

struct ProfileMeta {
    std::string scenario;
    double D = 0.0;
    double d = 0.0;
    std::string symmetry;  // "spherical" or "cylindrical"
    std::string field;     // column name, e.g. "phi"
    std::string units;
    double time = 0.0;     // snapshot time for transient sequences
};

/// Sampled solution on a radial grid.
struct SolutionProfile {
    RadialGrid grid;
    std::vector<double> values;
    ProfileMeta meta;
};

}  // namespace fracdim
