#include "qcadp/model/constraints.hpp"

#include <cmath>
#include <stdexcept>

namespace qcadp::model {

namespace {

// Radial coordinate of the curve cos(r sin phi) cos(r cos phi) = cos(theta),
// solved by bisection (the left side decreases in r on the relevant range).
double boundary_radius(double theta, double phi) {
    const double target = std::cos(theta);
    const double s = std::sin(phi), c = std::cos(phi);
    auto val = [&](double r) { return std::cos(r * s) * std::cos(r * c) - target; };
    double lo = 0.0, hi = 1.5707963267948966;
    // the curve is reached before either angle hits pi/2
    while (val(hi) > 0) hi *= 1.1;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (val(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TiltEllipse fit_tilt_ellipse(double theta) {
    if (!(theta > 0 && theta < 1.5707963267948966)) {
        throw std::invalid_argument("fit_tilt_ellipse: theta must lie in (0, pi/2)");
    }
    const int n = 720;
    std::vector<double> phi(n), r(n);
    for (int i = 0; i < n; ++i) {
        phi[i] = 2.0 * M_PI * i / n;
        r[i] = boundary_radius(theta, phi[i]);
    }

    // Gauss-Newton on the radial residuals r_i - r_e(phi_i; a1, a2) with
    // r_e = 1 / sqrt(cos^2/a1^2 + sin^2/a2^2).
    double a1 = theta, a2 = theta;
    for (int it = 0; it < 60; ++it) {
        double h11 = 0, h12 = 0, h22 = 0, g1 = 0, g2 = 0;
        for (int i = 0; i < n; ++i) {
            const double c2 = std::cos(phi[i]) * std::cos(phi[i]);
            const double s2 = 1.0 - c2;
            const double q = c2 / (a1 * a1) + s2 / (a2 * a2);
            const double re = 1.0 / std::sqrt(q);
            const double res = r[i] - re;
            // d re / d a = re^3 * (axis term) / a^3
            const double d1 = re * re * re * c2 / (a1 * a1 * a1);
            const double d2 = re * re * re * s2 / (a2 * a2 * a2);
            g1 += res * d1;
            g2 += res * d2;
            h11 += d1 * d1;
            h12 += d1 * d2;
            h22 += d2 * d2;
        }
        const double det = h11 * h22 - h12 * h12;
        if (std::abs(det) < 1e-18) break;
        const double da1 = (h22 * g1 - h12 * g2) / det;
        const double da2 = (h11 * g2 - h12 * g1) / det;
        a1 += da1;
        a2 += da2;
        if (std::abs(da1) + std::abs(da2) < 1e-14) break;
    }
    return TiltEllipse{a1, a2};
}

InputConstraintSet constraint_polys(const QuadcopterParams& params, const ReducedLayout& layout) {
    InputConstraintSet set;
    set.ellipse = fit_tilt_ellipse(params.max_tilt);
    const std::size_t n = layout.arity();

    poly::Polynomial g_theta(n);
    g_theta.add_term(poly::Exponent(n), 1.0);
    if (layout.idx_roll >= 0) {
        poly::Exponent e(n);
        e[layout.idx_roll] = 2;
        g_theta.add_term(e, -1.0 / (set.ellipse.a1 * set.ellipse.a1));
    }
    if (layout.idx_pitch >= 0) {
        poly::Exponent e(n);
        e[layout.idx_pitch] = 2;
        g_theta.add_term(e, -1.0 / (set.ellipse.a2 * set.ellipse.a2));
    }
    set.g_theta = std::move(g_theta);

    poly::Polynomial g_f(n);
    if (layout.idx_thrust >= 0) {
        const double lb = params.thrust_min, ub = params.thrust_max;
        poly::Exponent e1(n), e2(n);
        e1[layout.idx_thrust] = 1;
        e2[layout.idx_thrust] = 2;
        g_f.add_term(e1, lb + ub);
        g_f.add_term(poly::Exponent(n), -lb * ub);
        g_f.add_term(e2, -1.0);
    }
    set.g_f = std::move(g_f);
    return set;
}

double eval_g_theta(const InputConstraintSet& set, double roll, double pitch) {
    const double a1 = set.ellipse.a1, a2 = set.ellipse.a2;
    return 1.0 - roll * roll / (a1 * a1) - pitch * pitch / (a2 * a2);
}

double eval_g_f(const QuadcopterParams& params, double thrust) {
    const double lb = params.thrust_min, ub = params.thrust_max;
    return thrust * (lb + ub) - lb * ub - thrust * thrust;
}

} // namespace qcadp::model
