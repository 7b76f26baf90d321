#include "cmclab/ambient.hpp"

#include <cmath>

#include "cmclab/numeric.hpp"

namespace cmclab {

AmbientSpace AmbientSpace::product_disk(double c) {
    if (c == 0.0) throw ParameterError("product_disk: c must be nonzero");
    return {Kind::ProductDisk, c, 0.0};
}

AmbientSpace AmbientSpace::ekt_halfplane(double tau) {
    if (tau == 0.0) throw ParameterError("ekt_halfplane: tau must be nonzero");
    return {Kind::EktHalfPlane, -1.0, tau};
}

AmbientSpace AmbientSpace::ekt_disk(double tau) {
    if (tau == 0.0) throw ParameterError("ekt_disk: tau must be nonzero");
    return {Kind::EktDisk, -1.0, tau};
}

MetricAtPoint product_metric(double c, const Eigen::Vector3d& p) {
    if (c == 0.0) throw ParameterError("product_metric: c must be nonzero");
    const double s = 1.0 + c * (p.x() * p.x() + p.y() * p.y());
    if (s <= 0.0) throw DomainError("product_metric: point outside model disk");
    const double lam = 2.0 / s;
    MetricAtPoint m;
    m.g = Eigen::Vector3d(lam * lam, lam * lam, 1.0).asDiagonal();
    m.point = p;
    return m;
}

MetricAtPoint ekt_halfplane_metric(double tau, const Eigen::Vector3d& p) {
    if (tau == 0.0) throw ParameterError("ekt_halfplane_metric: tau must be nonzero");
    const double y = p.y();
    if (y <= 0.0) throw DomainError("ekt_halfplane_metric: requires y > 0");
    MetricAtPoint m;
    m.g.setZero();
    m.g(0, 0) = (1.0 + 4.0 * tau * tau) / (y * y);
    m.g(1, 1) = 1.0 / (y * y);
    m.g(2, 2) = 1.0;
    m.g(0, 2) = m.g(2, 0) = -2.0 * tau / y;
    m.point = p;
    return m;
}

MetricAtPoint ekt_disk_metric(double tau, const Eigen::Vector3d& p) {
    if (tau == 0.0) throw ParameterError("ekt_disk_metric: tau must be nonzero");
    const double s = p.x() * p.x() + p.y() * p.y();
    if (s >= 1.0) throw DomainError("ekt_disk_metric: point outside unit disk");
    const double lam = 2.0 / (1.0 - s);
    // lambda_x = x lambda^2, lambda_y = y lambda^2, so the connection form is
    // 2 tau lambda (y dx - x dy) + dt.
    const double wx = 2.0 * tau * lam * p.y();
    const double wy = -2.0 * tau * lam * p.x();
    MetricAtPoint m;
    m.g.setZero();
    m.g(0, 0) = lam * lam + wx * wx;
    m.g(1, 1) = lam * lam + wy * wy;
    m.g(0, 1) = m.g(1, 0) = wx * wy;
    m.g(2, 2) = 1.0;
    m.g(0, 2) = m.g(2, 0) = wx;
    m.g(1, 2) = m.g(2, 1) = wy;
    m.point = p;
    return m;
}

MetricAtPoint metric_at(const AmbientSpace& space, const Eigen::Vector3d& p) {
    switch (space.kind) {
        case AmbientSpace::Kind::ProductDisk: return product_metric(space.c, p);
        case AmbientSpace::Kind::EktHalfPlane: return ekt_halfplane_metric(space.tau, p);
        case AmbientSpace::Kind::EktDisk: return ekt_disk_metric(space.tau, p);
    }
    throw ParameterError("metric_at: unknown ambient kind");
}

bool in_domain(const AmbientSpace& space, const Eigen::Vector3d& p) {
    switch (space.kind) {
        case AmbientSpace::Kind::ProductDisk:
            return 1.0 + space.c * (p.x() * p.x() + p.y() * p.y()) > 0.0;
        case AmbientSpace::Kind::EktHalfPlane: return p.y() > 0.0;
        case AmbientSpace::Kind::EktDisk: return p.x() * p.x() + p.y() * p.y() < 1.0;
    }
    return false;
}

Eigen::Vector3d vertical_field(const AmbientSpace& space, const Eigen::Vector3d& p) {
    if (!in_domain(space, p)) throw DomainError("vertical_field: point outside model domain");
    return Eigen::Vector3d(0.0, 0.0, 1.0);
}

std::array<Eigen::Matrix3d, 3> ambient_christoffels(const AmbientSpace& space,
                                                    const Eigen::Vector3d& p,
                                                    double step) {
    if (step <= 0.0) throw ParameterError("ambient_christoffels: step must be positive");
    const Eigen::Matrix3d g = metric_at(space, p).g;

    std::array<Eigen::Matrix3d, 3> dg; // dg[l] = d_l g
    for (int l = 0; l < 3; ++l) {
        const double h = default_step(p[l], step);
        Eigen::Vector3d probe = p;
        probe[l] += h;
        if (!in_domain(space, probe)) throw StencilError("ambient_christoffels: stencil exits domain");
        probe[l] = p[l] - h;
        if (!in_domain(space, probe)) throw StencilError("ambient_christoffels: stencil exits domain");
        auto f = [&](double t) {
            Eigen::Vector3d q = p;
            q[l] = t;
            return Eigen::Matrix3d(metric_at(space, q).g);
        };
        dg[l] = dcentral(f, p[l], h);
    }

    const Eigen::Matrix3d ginv = g.inverse();
    std::array<Eigen::Matrix3d, 3> gamma;
    for (int k = 0; k < 3; ++k) {
        gamma[k].setZero();
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                double s = 0.0;
                for (int l = 0; l < 3; ++l)
                    s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                gamma[k](i, j) = gamma[k](j, i) = 0.5 * s;
            }
    }
    return gamma;
}

} // namespace cmclab
