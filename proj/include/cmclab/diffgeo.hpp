#pragma once

#include <Eigen/Dense>
#include <functional>

#include "cmclab/ambient.hpp"
#include "cmclab/catalog.hpp"

namespace cmclab {

// 2x2 metric field over a parameter domain. `derivative(p,i)` and
// `second_derivative(p,i,j)` are optional closed forms; finite differences
// are the fallback. `dependence` unlocks the specialized one-variable
// curvature formulas.
struct MetricField {
    enum class Dependence { General, FirstOnly, SecondOnly };

    std::function<Eigen::Matrix2d(const Eigen::Vector2d&)> value;
    Dependence dependence = Dependence::General;
    std::function<Eigen::Matrix2d(const Eigen::Vector2d&, int)> derivative;
    std::function<Eigen::Matrix2d(const Eigen::Vector2d&, int, int)> second_derivative;

    Eigen::Matrix2d d(const Eigen::Vector2d& p, int i, double step) const;
    Eigen::Matrix2d d2(const Eigen::Vector2d& p, int i, int j, double step) const;
};

struct ScalarField {
    std::function<double(const Eigen::Vector2d&)> value;
    std::function<Eigen::Vector2d(const Eigen::Vector2d&)> grad; // optional closed form

    Eigen::Vector2d gradient(const Eigen::Vector2d& p, double step) const;
};

// First and second fundamental forms with the unit normal used for II.
struct FundamentalForms {
    Eigen::Matrix2d I;
    Eigen::Matrix2d II;
    Eigen::Vector3d N;
    Eigen::Vector2d point;
};

struct SecondFormResult {
    FundamentalForms forms;
    double H;     // mean curvature w.r.t. forms.N
    double K_ext; // det II / det I
};

Eigen::Matrix2d induced_metric(const ImmersionSpec& spec, const AmbientSpace& space,
                               const Eigen::Vector2d& p, double step = 1e-2);

SecondFormResult second_form_and_curvatures(const ImmersionSpec& spec, const AmbientSpace& space,
                                            const Eigen::Vector2d& p, double step = 1e-2);

// Intrinsic Gauss curvature of a 2D metric field. One-variable metrics use
// the specialized formulas; the general case falls back to Brioschi.
double gauss_curvature(const MetricField& metric, const Eigen::Vector2d& p, double step = 1e-2);
double gauss_curvature_brioschi(const MetricField& metric, const Eigen::Vector2d& p,
                                double step = 1e-2);

// Angle function nu = g(vertical field, N) and height h (t-coordinate).
std::pair<double, double> angle_height(const ImmersionSpec& spec, const AmbientSpace& space,
                                       const Eigen::Vector2d& p, double step = 1e-2);

double intrinsic_gradient_sq(const MetricField& metric, const ScalarField& f,
                             const Eigen::Vector2d& p, double step = 1e-2);
double intrinsic_inner(const MetricField& metric, const ScalarField& f, const ScalarField& g,
                       const Eigen::Vector2d& p, double step = 1e-2);
double intrinsic_laplacian(const MetricField& metric, const ScalarField& f,
                           const Eigen::Vector2d& p, double step = 1e-2);

// MetricField views of catalog surfaces (closed-form coefficients).
MetricField helicoid_metric_field(double H);
MetricField parabolic_metric_field(double tau);
MetricField screw_metric_field(double H, double tau, int eps);
MetricField flat_metric_field();
// Numeric metric field pulled back through the immersion.
MetricField induced_metric_field(const ImmersionSpec& spec, double step = 1e-2);

} // namespace cmclab
