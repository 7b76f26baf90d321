#include "cmclab/surface_data.hpp"

#include <cmath>

namespace cmclab {

SurfaceData helicoid_surface_data(double H) {
    const double K = 4.0 * H * H - 1.0;
    const double a = std::sqrt(-K);
    SurfaceData sd;
    sd.name = "helicoid";
    sd.metric = helicoid_metric_field(H);
    sd.nu.value = [H](const Eigen::Vector2d& p) { return helicoid_closed_forms(H, p).nu; };
    sd.nu.grad = [a](const Eigen::Vector2d& p) {
        const double sech = 1.0 / std::cosh(a * p[0]);
        return Eigen::Vector2d(a * a * sech * sech, 0.0);
    };
    sd.h.value = [H](const Eigen::Vector2d& p) { return helicoid_closed_forms(H, p).h; };
    sd.h.grad = [H, a](const Eigen::Vector2d&) { return Eigen::Vector2d(2.0 * H, a); };
    sd.K = K;
    sd.H = H;
    sd.c = -1.0;
    return sd;
}

SurfaceData arl_surface_data(double H) {
    const double K = 4.0 * H * H - 1.0;
    const double a = std::sqrt(-K);
    SurfaceData sd;
    sd.name = "arl";
    sd.metric.dependence = MetricField::Dependence::SecondOnly;
    sd.metric.value = [K](const Eigen::Vector2d& p) {
        if (!(p[1] > 0.0)) throw DomainError("arl metric: Im z > 0 required");
        const double lam = 1.0 / ((-K) * p[1] * p[1]);
        return Eigen::Matrix2d(Eigen::Vector2d(lam, lam).asDiagonal());
    };
    sd.metric.derivative = [K](const Eigen::Vector2d& p, int i) {
        Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
        if (i == 1) {
            const double v = -2.0 / ((-K) * p[1] * p[1] * p[1]);
            d(0, 0) = d(1, 1) = v;
        }
        return d;
    };
    sd.nu.value = [a](const Eigen::Vector2d&) { return a; };
    sd.nu.grad = [](const Eigen::Vector2d&) { return Eigen::Vector2d(Eigen::Vector2d::Zero()); };
    sd.h.value = [H, a](const Eigen::Vector2d& p) {
        return arl_conformal(H, {p[0], p[1]}).h;
    };
    sd.h.grad = [H, a](const Eigen::Vector2d& p) {
        return Eigen::Vector2d(0.0, -2.0 * H / (a * p[1]));
    };
    sd.K = K;
    sd.H = H;
    sd.c = -1.0;
    return sd;
}

SurfaceData cylinder_surface_data(double c, double k) {
    SurfaceData sd;
    sd.name = "cylinder";
    sd.metric = flat_metric_field();
    sd.nu.value = [](const Eigen::Vector2d&) { return 0.0; };
    sd.nu.grad = [](const Eigen::Vector2d&) { return Eigen::Vector2d(Eigen::Vector2d::Zero()); };
    sd.h.value = [](const Eigen::Vector2d& p) { return p[1]; };
    sd.h.grad = [](const Eigen::Vector2d&) { return Eigen::Vector2d(0.0, 1.0); };
    sd.K = 0.0;
    sd.H = k / 2.0;
    sd.c = c;
    return sd;
}

SurfaceData slice_surface_data(double c) {
    SurfaceData sd;
    sd.name = "slice";
    sd.metric = flat_metric_field(); // any metric works; all residual terms vanish
    sd.metric.value = [c](const Eigen::Vector2d& p) {
        const double s = 1.0 + c * (p[0] * p[0] + p[1] * p[1]);
        if (s <= 0.0) throw DomainError("slice metric: point outside model disk");
        const double lam = 2.0 / s;
        return Eigen::Matrix2d(Eigen::Vector2d(lam * lam, lam * lam).asDiagonal());
    };
    sd.metric.derivative = nullptr;
    sd.metric.second_derivative = nullptr;
    sd.metric.dependence = MetricField::Dependence::General;
    sd.nu.value = [](const Eigen::Vector2d&) { return 1.0; };
    sd.nu.grad = [](const Eigen::Vector2d&) { return Eigen::Vector2d(Eigen::Vector2d::Zero()); };
    sd.h.value = [](const Eigen::Vector2d&) { return 0.0; };
    sd.h.grad = [](const Eigen::Vector2d&) { return Eigen::Vector2d(Eigen::Vector2d::Zero()); };
    sd.K = c;
    sd.H = 0.0;
    sd.c = c;
    return sd;
}

SurfaceData strip_closed_derivatives(SurfaceData sd, double step) {
    sd.metric.derivative = nullptr;
    sd.metric.second_derivative = nullptr;
    sd.nu.grad = nullptr;
    sd.h.grad = nullptr;
    sd.step = step;
    sd.name += "-fd";
    return sd;
}

} // namespace cmclab
