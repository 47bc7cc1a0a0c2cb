#pragma once

#include <functional>
#include <utility>

namespace fracdim {

namespace detail {
// Fourth-order central differences with step h = max(eps^(1/5) * |x|, eps^(1/5)).
// With positive_domain set, h is clamped to x/4 so the stencil stays in x > 0.
double central_diff1(const std::function<double(double)>& f, double x, bool positive_domain);
double central_diff2(const std::function<double(double)>& f, double x, bool positive_domain);
}  // namespace detail

/// Scalar field of the radial coordinate: an evaluator plus optional analytic
/// first and second derivatives. Missing derivatives fall back to fourth-order
/// central differences.
class RadialScalarField {
public:
    using Fn = std::function<double(double)>;

    explicit RadialScalarField(Fn eval) : eval_(std::move(eval)) {}
    RadialScalarField(Fn eval, Fn deriv1)
        : eval_(std::move(eval)), d1_(std::move(deriv1)) {}
    RadialScalarField(Fn eval, Fn deriv1, Fn deriv2)
        : eval_(std::move(eval)), d1_(std::move(deriv1)), d2_(std::move(deriv2)) {}

    double operator()(double r) const { return eval_(r); }
    double deriv1(double r) const {
        return d1_ ? d1_(r) : detail::central_diff1(eval_, r, true);
    }
    double deriv2(double r) const {
        return d2_ ? d2_(r) : detail::central_diff2(eval_, r, true);
    }

    bool analytic_deriv1() const { return static_cast<bool>(d1_); }
    bool analytic_deriv2() const { return static_cast<bool>(d2_); }

private:
    Fn eval_;
    Fn d1_;
    Fn d2_;
};

/// Purely radial vector field u = u_r(r) e_r.
struct RadialVectorField {
    RadialScalarField radial;
};

/// Axisymmetric field with components u_r(r, z) and u_z(r, z). The two
/// optional analytic partials are exactly the ones the rz-curl consumes.
class AxialField {
public:
    using Fn2 = std::function<double(double, double)>;

    AxialField(Fn2 u_r, Fn2 u_z) : ur_(std::move(u_r)), uz_(std::move(u_z)) {}
    AxialField(Fn2 u_r, Fn2 u_z, Fn2 dur_dz, Fn2 duz_dr)
        : ur_(std::move(u_r)), uz_(std::move(u_z)),
          durdz_(std::move(dur_dz)), duzdr_(std::move(duz_dr)) {}

    double u_r(double r, double z) const { return ur_(r, z); }
    double u_z(double r, double z) const { return uz_(r, z); }
    double dur_dz(double r, double z) const;
    double duz_dr(double r, double z) const;

private:
    Fn2 ur_;
    Fn2 uz_;
    Fn2 durdz_;
    Fn2 duzdr_;
};

}  // namespace fracdim
