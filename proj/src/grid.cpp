#include "fracdim/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdim {

RadialGrid::RadialGrid(double r_min, double r_max, int n_nodes)
    : r_min_(r_min), r_max_(r_max), n_(n_nodes) {
    if (!std::isfinite(r_min) || !std::isfinite(r_max) || r_min < 0.0 || r_max <= r_min)
        throw std::domain_error("RadialGrid: need 0 <= r_min < r_max");
    if (n_nodes < 3)
        throw std::domain_error("RadialGrid: need at least 3 nodes");
    h_ = (r_max - r_min) / (n_nodes - 1);
}

std::vector<double> RadialGrid::nodes() const {
    std::vector<double> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = node(i);
    return out;
}

}  // namespace fracdim
