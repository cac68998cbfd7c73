#pragma once

#include "qcadp/model/params.hpp"
#include "qcadp/model/reduced_dynamics.hpp"
#include "qcadp/poly/polynomial.hpp"

namespace qcadp::model {

struct TiltEllipse {
    double a1 = 0.0; ///< roll radius (rad)
    double a2 = 0.0; ///< pitch radius (rad)
};

/// Least-squares ellipse approximation of the tilt boundary
/// cos(pitch) cos(roll) = cos(theta), sampled at 720 uniform polar angles with
/// a radial-distance objective. The boundary is symmetric in (roll, pitch),
/// so the fit returns equal radii.
TiltEllipse fit_tilt_ellipse(double theta);

/// Quadratic input-constraint polynomials in the given variable layout:
///   g_theta(u) = 1 - roll^2/a1^2 - pitch^2/a2^2   (axes absent from the
///                layout are dropped)
///   g_f(u)     = f (lb + ub) - lb ub - f^2
struct InputConstraintSet {
    TiltEllipse ellipse;
    poly::Polynomial g_theta;
    poly::Polynomial g_f;

    std::vector<poly::Polynomial> all() const { return {g_theta, g_f}; }
};

InputConstraintSet constraint_polys(const QuadcopterParams& params, const ReducedLayout& layout);

/// Membership margins for a raw input vector (roll, pitch, yaw, thrust).
double eval_g_theta(const InputConstraintSet& set, double roll, double pitch);
double eval_g_f(const QuadcopterParams& params, double thrust);

} // namespace qcadp::model
