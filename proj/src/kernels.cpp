#include "fracdim/kernels.hpp"

#include <stdexcept>

namespace fracdim::kernels {

namespace {

// One stencil evaluation. Index layout:
//   edge nodes        second-order one-sided,
//   next-to-edge      second-order central,
//   deep interior     fourth-order central.
inline double fd_point(std::span<const double> v, std::size_t i, std::size_t n, double h,
                       int order) {
    if (order == 1) {
        if (i == 0) return (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h);
        if (i == n - 1) return (3 * v[n - 1] - 4 * v[n - 2] + v[n - 3]) / (2 * h);
        if (i == 1 || i == n - 2) return (v[i + 1] - v[i - 1]) / (2 * h);
        return (v[i - 2] - 8 * v[i - 1] + 8 * v[i + 1] - v[i + 2]) / (12 * h);
    }
    if (i == 0) return (2 * v[0] - 5 * v[1] + 4 * v[2] - v[3]) / (h * h);
    if (i == n - 1) return (2 * v[n - 1] - 5 * v[n - 2] + 4 * v[n - 3] - v[n - 4]) / (h * h);
    if (i == 1 || i == n - 2) return (v[i - 1] - 2 * v[i] + v[i + 1]) / (h * h);
    return (-v[i - 2] + 16 * v[i - 1] - 30 * v[i] + 16 * v[i + 1] - v[i + 2]) / (12 * h * h);
}

void check_fd_args(std::span<const double> values, double h, int order,
                   std::span<double> out) {
    if (order != 1 && order != 2)
        throw std::domain_error("fd_stencil: order must be 1 or 2");
    if (values.size() < 5)
        throw std::domain_error("fd_stencil: need at least 5 samples");
    if (out.size() != values.size())
        throw std::invalid_argument("fd_stencil: output size mismatch");
    if (!(h > 0.0)) throw std::domain_error("fd_stencil: h must be positive");
}

void check_matvec_args(std::span<const double> sub, std::span<const double> diag,
                       std::span<const double> super, std::span<const double> x,
                       std::span<double> out) {
    const std::size_t n = diag.size();
    if (sub.size() != n || super.size() != n || x.size() != n || out.size() != n)
        throw std::invalid_argument("tridiag_matvec: size mismatch");
    if (n < 2) throw std::invalid_argument("tridiag_matvec: need at least 2 rows");
}

}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace detail {
bool run_parallel(Exec exec, std::size_t n) {
    if (!openmp_enabled()) return false;
    if (exec == Exec::serial) return false;
    if (exec == Exec::parallel) return true;
    return n >= kParallelThreshold;
}
}  // namespace detail

namespace serial {

void fd_stencil(std::span<const double> values, double h, int order, std::span<double> out) {
    check_fd_args(values, h, order, out);
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = fd_point(values, i, n, h, order);
}

void tridiag_matvec(std::span<const double> sub, std::span<const double> diag,
                    std::span<const double> super, std::span<const double> x,
                    std::span<double> out) {
    check_matvec_args(sub, diag, super, x, out);
    const std::size_t n = diag.size();
    out[0] = diag[0] * x[0] + super[0] * x[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = sub[i] * x[i - 1] + diag[i] * x[i] + super[i] * x[i + 1];
    out[n - 1] = sub[n - 1] * x[n - 2] + diag[n - 1] * x[n - 1];
}

}  // namespace serial

namespace parallel {

void fd_stencil(std::span<const double> values, double h, int order, std::span<double> out) {
    check_fd_args(values, h, order, out);
    const std::size_t n = values.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < n; ++i) out[i] = fd_point(values, i, n, h, order);
}

void tridiag_matvec(std::span<const double> sub, std::span<const double> diag,
                    std::span<const double> super, std::span<const double> x,
                    std::span<double> out) {
    check_matvec_args(sub, diag, super, x, out);
    const std::size_t n = diag.size();
    out[0] = diag[0] * x[0] + super[0] * x[1];
    out[n - 1] = sub[n - 1] * x[n - 2] + diag[n - 1] * x[n - 1];
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 1; i < n - 1; ++i)
        out[i] = sub[i] * x[i - 1] + diag[i] * x[i] + super[i] * x[i + 1];
}

}  // namespace parallel

void fd_stencil(std::span<const double> values, double h, int order, std::span<double> out,
                Exec exec) {
    if (detail::run_parallel(exec, values.size()))
        parallel::fd_stencil(values, h, order, out);
    else
        serial::fd_stencil(values, h, order, out);
}

void tridiag_matvec(std::span<const double> sub, std::span<const double> diag,
                    std::span<const double> super, std::span<const double> x,
                    std::span<double> out, Exec exec) {
    if (detail::run_parallel(exec, diag.size()))
        parallel::tridiag_matvec(sub, diag, super, x, out);
    else
        serial::tridiag_matvec(sub, diag, super, x, out);
}

}  // namespace fracdim::kernels
