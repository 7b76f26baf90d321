#pragma once

#include <Eigen/Dense>
#include <array>

#include "cmclab/errors.hpp"

namespace cmclab {

// Ambient Riemannian models. ProductDisk is M^2_c x R in the conformal disk
// model; the two E(kappa,tau) models are normalized to kappa = -1.
struct AmbientSpace {
    enum class Kind { ProductDisk, EktHalfPlane, EktDisk };

    Kind kind;
    double c = 0.0;   // base curvature (ProductDisk)
    double tau = 0.0; // bundle curvature (EktHalfPlane / EktDisk)

    static AmbientSpace product_disk(double c);
    static AmbientSpace ekt_halfplane(double tau);
    static AmbientSpace ekt_disk(double tau);
};

struct MetricAtPoint {
    Eigen::Matrix3d g;
    Eigen::Vector3d point;
};

MetricAtPoint product_metric(double c, const Eigen::Vector3d& p);
MetricAtPoint ekt_halfplane_metric(double tau, const Eigen::Vector3d& p);
MetricAtPoint ekt_disk_metric(double tau, const Eigen::Vector3d& p);

MetricAtPoint metric_at(const AmbientSpace& space, const Eigen::Vector3d& p);
bool in_domain(const AmbientSpace& space, const Eigen::Vector3d& p);

// Unit Killing field d/dt; has g-norm 1 in all three models.
Eigen::Vector3d vertical_field(const AmbientSpace& space, const Eigen::Vector3d& p);

// Christoffel symbols Gamma[k](i,j) by central finite differences of the
// metric with one Richardson level. step scales as step*(1+|coord|).
std::array<Eigen::Matrix3d, 3> ambient_christoffels(const AmbientSpace& space,
                                                    const Eigen::Vector3d& p,
                                                    double step = 1e-5);

} // namespace cmclab
