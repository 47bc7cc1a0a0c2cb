#include "fracdim/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdim/errors.hpp"
#include "fracdim/kernels.hpp"

namespace fracdim {

namespace {

constexpr double kBlowupSentinel = 1e12;

void check_bc(const BoundaryCondition& bc) {
    if (bc.a == 0.0 && bc.b == 0.0)
        throw std::domain_error("BoundaryCondition: a and b cannot both vanish");
    if (!std::isfinite(bc.a) || !std::isfinite(bc.b) || !std::isfinite(bc.value))
        throw std::domain_error("BoundaryCondition: coefficients must be finite");
}

// Ghost-eliminated rows of L u = u'' + (A/r) u' + (B/r^2) u, so that
// (L u)_i ~ sub_i u_{i-1} + diag_i u_i + super_i u_{i+1} + shift_i.
// Dirichlet ends are left to the caller (marked, rows untouched beyond that).
// With axis_row set (r_min = 0), row 0 becomes the symmetry row
// (1 + A) u''(0) with u'(0) = 0 folded in.
struct OperatorStencil {
    std::vector<double> sub, diag, super, shift;
    bool dirichlet_left = false, dirichlet_right = false;
    double left_value = 0.0, right_value = 0.0;  // u values pinned at Dirichlet ends
};

OperatorStencil assemble_operator(double A, double B, const RadialGrid& grid,
                                  const BoundaryCondition& left, const BoundaryCondition& right,
                                  bool axis_row) {
    check_bc(left);
    check_bc(right);
    const int n = grid.n_nodes();
    const double h = grid.h();
    const auto un = static_cast<std::size_t>(n);

    OperatorStencil st;
    st.sub.assign(un, 0.0);
    st.diag.assign(un, 0.0);
    st.super.assign(un, 0.0);
    st.shift.assign(un, 0.0);

    for (int i = 1; i + 1 < n; ++i) {
        const double r = grid.node(i);
        const auto ui = static_cast<std::size_t>(i);
        st.sub[ui] = 1.0 / (h * h) - A / (2.0 * h * r);
        st.diag[ui] = -2.0 / (h * h) + B / (r * r);
        st.super[ui] = 1.0 / (h * h) + A / (2.0 * h * r);
    }

    if (axis_row) {
        // r = 0: (c/r) u' tends to c u'' for symmetric u, so the row is
        // (1 + A) u''(0) with the ghost u_{-1} = u_1.
        st.diag[0] = -2.0 * (1.0 + A) / (h * h);
        st.super[0] = 2.0 * (1.0 + A) / (h * h);
    } else if (left.is_dirichlet()) {
        st.dirichlet_left = true;
        st.left_value = left.value / left.a;
    } else {
        const double r0 = grid.node(0);
        const double a = left.a, b = left.b, c = left.value;
        st.diag[0] = -2.0 / (h * h) + 2.0 * a / (b * h) - A * a / (r0 * b) + B / (r0 * r0);
        st.super[0] = 2.0 / (h * h);
        st.shift[0] = -2.0 * c / (b * h) + A * c / (r0 * b);
    }

    if (right.is_dirichlet()) {
        st.dirichlet_right = true;
        st.right_value = right.value / right.a;
    } else {
        const auto last = un - 1;
        const double rn = grid.node(n - 1);
        const double a = right.a, b = right.b, c = right.value;
        st.sub[last] = 2.0 / (h * h);
        st.diag[last] = -2.0 / (h * h) - 2.0 * a / (b * h) - A * a / (rn * b) + B / (rn * rn);
        st.shift[last] = 2.0 * c / (b * h) + A * c / (rn * b);
    }
    return st;
}

void check_well_posed(double B, const OperatorStencil& st, const BoundaryCondition& left,
                      const BoundaryCondition& right, bool axis_row) {
    // Two flux conditions and no zeroth-order term leave the constant mode free.
    const bool left_flux = axis_row || (!st.dirichlet_left && left.a == 0.0);
    const bool right_flux = !st.dirichlet_right && right.a == 0.0;
    if (B == 0.0 && left_flux && right_flux)
        throw NumericError("solve_linear_bvp: pure flux conditions leave the solution "
                           "determined only up to a constant");
}

}  // namespace

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
    const std::size_t n = sys.diag.size();
    if (n < 2 || sys.sub.size() != n || sys.super.size() != n || sys.rhs.size() != n)
        throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");

    std::vector<double> c(n, 0.0), d(n, 0.0);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max({scale, std::abs(sys.diag[i]), std::abs(sys.sub[i]),
                          std::abs(sys.super[i])});
    const double pivot_floor = scale * 1e-14;

    double pivot = sys.diag[0];
    if (std::abs(pivot) <= pivot_floor)
        throw NumericError("solve_tridiagonal: vanishing pivot");
    c[0] = sys.super[0] / pivot;
    d[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i] * c[i - 1];
        if (std::abs(pivot) <= pivot_floor)
            throw NumericError("solve_tridiagonal: vanishing pivot");
        c[i] = sys.super[i] / pivot;
        d[i] = (sys.rhs[i] - sys.sub[i] * d[i - 1]) / pivot;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

SolutionProfile solve_linear_bvp(double A, double B, const RadialScalarField& f,
                                 const RadialGrid& grid, const BoundaryCondition& left,
                                 const BoundaryCondition& right) {
    if (!(grid.r_min() > 0.0))
        throw std::domain_error("solve_linear_bvp: grid must start at r > 0");
    if (!std::isfinite(A) || !std::isfinite(B))
        throw std::domain_error("solve_linear_bvp: coefficients must be finite");

    const OperatorStencil st = assemble_operator(A, B, grid, left, right, false);
    check_well_posed(B, st, left, right, false);

    const auto n = static_cast<std::size_t>(grid.n_nodes());
    TridiagonalSystem sys;
    sys.sub = st.sub;
    sys.diag = st.diag;
    sys.super = st.super;
    sys.rhs.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = f(grid.node(static_cast<int>(i)));
        if (!std::isfinite(fi))
            throw NumericError("solve_linear_bvp: source is not finite on the grid");
        sys.rhs[i] = fi - st.shift[i];
    }
    if (st.dirichlet_left) {
        sys.diag[0] = 1.0;
        sys.super[0] = 0.0;
        sys.rhs[0] = st.left_value;
    }
    if (st.dirichlet_right) {
        sys.diag[n - 1] = 1.0;
        sys.sub[n - 1] = 0.0;
        sys.rhs[n - 1] = st.right_value;
    }

    SolutionProfile p{grid, solve_tridiagonal(sys), {}};
    p.meta.field = "u";
    return p;
}

std::vector<SolutionProfile> solve_heat_transient(
    const DimensionSpec& spec, double a_diff,
    const std::function<double(double, double)>& source, const RadialGrid& grid,
    const BoundaryCondition& left, const BoundaryCondition& right,
    const std::vector<double>& initial, double t_end, int n_steps, int snapshot_stride) {
    const int n = grid.n_nodes();
    const auto un = static_cast<std::size_t>(n);
    if (initial.size() != un)
        throw std::invalid_argument("solve_heat_transient: initial profile size mismatch");
    if (!(a_diff > 0.0) || !std::isfinite(a_diff))
        throw std::domain_error("solve_heat_transient: diffusivity must be positive");
    if (!(t_end > 0.0) || n_steps < 1)
        throw std::domain_error("solve_heat_transient: need t_end > 0 and n_steps >= 1");
    if (snapshot_stride < 1)
        throw std::domain_error("solve_heat_transient: snapshot_stride must be >= 1");

    const bool axis_row = grid.r_min() == 0.0;
    const double c_geom = spec.radial_coefficient();
    const OperatorStencil st = assemble_operator(c_geom, 0.0, grid, left, right, axis_row);

    const double dt = t_end / n_steps;
    const double z = 0.5 * a_diff * dt;

    // Constant-in-time left-hand side (I - z T), Dirichlet rows pinned.
    TridiagonalSystem lhs;
    lhs.sub.assign(un, 0.0);
    lhs.diag.assign(un, 0.0);
    lhs.super.assign(un, 0.0);
    lhs.rhs.assign(un, 0.0);
    for (std::size_t i = 0; i < un; ++i) {
        lhs.sub[i] = -z * st.sub[i];
        lhs.diag[i] = 1.0 - z * st.diag[i];
        lhs.super[i] = -z * st.super[i];
    }
    if (st.dirichlet_left) {
        lhs.diag[0] = 1.0;
        lhs.super[0] = 0.0;
    }
    if (st.dirichlet_right) {
        lhs.diag[un - 1] = 1.0;
        lhs.sub[un - 1] = 0.0;
    }

    std::vector<double> phi = initial;
    std::vector<double> t_phi(un), src_now(un), src_next(un);
    auto eval_source = [&](double t, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            const double v = source(grid.node(i), t);
            if (!std::isfinite(v))
                throw NumericError("solve_heat_transient: source is not finite");
            out[static_cast<std::size_t>(i)] = v;
        }
    };
    eval_source(0.0, src_now);

    auto make_snapshot = [&](int step) {
        SolutionProfile p{grid, phi, {}};
        p.meta.field = "phi";
        p.meta.D = spec.D();
        p.meta.d = spec.d();
        p.meta.symmetry = to_string(spec.symmetry());
        p.meta.time = dt * step;
        return p;
    };

    std::vector<SolutionProfile> snaps;
    snaps.push_back(make_snapshot(0));

    for (int step = 1; step <= n_steps; ++step) {
        eval_source(dt * step, src_next);
        kernels::tridiag_matvec(st.sub, st.diag, st.super, phi, t_phi);
        for (std::size_t i = 0; i < un; ++i)
            lhs.rhs[i] = phi[i] + z * t_phi[i] + 2.0 * z * st.shift[i] +
                         0.5 * dt * (src_now[i] + src_next[i]);
        if (st.dirichlet_left) lhs.rhs[0] = st.left_value;
        if (st.dirichlet_right) lhs.rhs[un - 1] = st.right_value;

        phi = solve_tridiagonal(lhs);
        std::swap(src_now, src_next);

        double peak = 0.0;
        for (double v : phi) peak = std::max(peak, std::abs(v));
        if (!std::isfinite(peak) || peak > kBlowupSentinel)
            throw NumericError("solve_heat_transient: march diverged");

        if (step == n_steps || step % snapshot_stride == 0)
            snaps.push_back(make_snapshot(step));
    }
    return snaps;
}

SolutionProfile fd_derivative(const SolutionProfile& p, int order) {
    SolutionProfile out{p.grid, std::vector<double>(p.values.size()), p.meta};
    kernels::fd_stencil(p.values, p.grid.h(), order, out.values);
    out.meta.field = p.meta.field + (order == 1 ? "_d1" : "_d2");
    return out;
}

}  // namespace fracdim
