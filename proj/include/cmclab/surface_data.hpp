#pragma once

#include "cmclab/diffgeo.hpp"

namespace cmclab {

// Pointwise bundle consumed by the residual checkers: the intrinsic metric,
// the angle and height functions, and the surface constants.
struct SurfaceData {
    std::string name;
    MetricField metric;
    ScalarField nu;
    ScalarField h;
    double K = 0.0;
    double H = 0.0;
    double c = -1.0;
    double step = 1e-2; // finite-difference step for the intrinsic operators
};

// Closed-form data (metric and field gradients supplied analytically).
SurfaceData helicoid_surface_data(double H);
SurfaceData arl_surface_data(double H);                    // upper half-plane coords
SurfaceData cylinder_surface_data(double c, double k);     // flat arclength coords
SurfaceData slice_surface_data(double c);                  // horizontal slice, nu = 1

// Drops every closed-form derivative so the checkers run on pure finite
// differences of the value fields.
SurfaceData strip_closed_derivatives(SurfaceData sd, double step = 2e-2);

} // namespace cmclab
