#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cmclab/ambient.hpp"
#include "cmclab/errors.hpp"

namespace cmclab {

// Tagged description of a catalog surface (family + real parameters).
struct ImmersionSpec {
    enum class Family {
        VerticalCylinder, // c, k (geodesic curvature of the base curve)
        ArlSurface,       // H
        HelicoidH2R,      // H
        ParabolicPsl2,    // tau
        ScrewMotionPsl2,  // H, tau, eps
        CurveProduct      // k1, k2
    };

    Family family;
    double c = -1.0;
    double H = 0.0;
    double tau = 0.0;
    int eps = 1;
    double k = 0.0;
    double k1 = 0.0, k2 = 0.0;

    static ImmersionSpec vertical_cylinder(double c, double k);
    static ImmersionSpec arl(double H);
    static ImmersionSpec helicoid(double H);
    static ImmersionSpec parabolic(double tau);
    static ImmersionSpec screw(double H, double tau, int eps);
    static ImmersionSpec curve_product(double k1, double k2);
};

struct SurfaceType {
    enum class Tag { TypeI, TypeII, TypeIII } tag;
    const char* name() const;
};

// Constants of the screw-motion surfaces in PSL2; l is the pitch.
struct ScrewConstants {
    double A, B, C, l, d;
};

struct ClosedForms {
    double E, F, G; // first fundamental form coefficients
    double nu;      // angle function
    double h;       // height function
};

struct ConformalData {
    double factor; // conformal factor of ds^2 = factor |dz|^2
    double nu;
    double h;
};

struct ScrewProfile {
    double f;      // radial coordinate of the generating curve, in (-1,1)
    double u;      // vertical profile u_eps
    double du;     // closed-form u_eps'
};

// --- helicoidal surface in H^2 x R with K = 4H^2 - 1 ---
Eigen::Vector3d helicoid_immersion(double H, const Eigen::Vector2d& st);
ClosedForms helicoid_closed_forms(double H, const Eigen::Vector2d& st);
ConformalData helicoid_conformal(double H, std::complex<double> z);
// diffeomorphism (sigma,tau) -> z used for the conformal coordinates
std::complex<double> helicoid_to_halfplane(double H, const Eigen::Vector2d& st);

// --- ARL surface, conformal data on the upper half-plane ---
ConformalData arl_conformal(double H, std::complex<double> z);

// --- parabolic-invariant minimal surface in PSL2 (half-plane model) ---
Eigen::Vector3d parabolic_immersion(double tau, const Eigen::Vector2d& xy);
ClosedForms parabolic_closed_forms(double tau, const Eigen::Vector2d& xy);

// --- screw-motion surfaces in PSL2 (disk model) ---
ScrewConstants screw_constants(double H, double tau, int eps);
ScrewProfile screw_profile(double H, double tau, int eps, double sigma);
Eigen::Vector3d screw_immersion(double H, double tau, int eps, const Eigen::Vector2d& stheta);
// E, F, G of the induced metric as functions of sigma
Eigen::Vector3d screw_metric_coeffs(double H, double tau, int eps, double sigma);
SurfaceType screw_type(double H, double tau, int eps);

// --- vertical cylinders and products of curves ---
struct CylinderData {
    Eigen::Matrix2d metric; // flat, identity in arclength coordinates
    double nu;              // identically zero
    double h;               // the t coordinate
};
CylinderData cylinder_eval(double c, double k, const Eigen::Vector2d& st);
Eigen::Vector3d cylinder_immersion(double c, double k, const Eigen::Vector2d& st);

struct CurveProductData {
    Eigen::Matrix2d metric;
    double H; // norm of the mean curvature vector, sqrt(k1^2+k2^2)/2
};
CurveProductData curveproduct_eval(double k1, double k2, const Eigen::Vector2d& s12);

// Ambient model a catalog surface is immersed in. Throws ParameterError for
// families without a 3-manifold ambient here (ArlSurface, CurveProduct).
AmbientSpace ambient_of(const ImmersionSpec& spec);
// Immersion map; throws ParameterError for families without one.
Eigen::Vector3d immersion_point(const ImmersionSpec& spec, const Eigen::Vector2d& uv);

} // namespace cmclab
