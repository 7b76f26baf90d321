#include "cmclab/diffgeo.hpp"

#include <cmath>

#include "cmclab/numeric.hpp"

namespace cmclab {

namespace {

constexpr double kDegenerateDet = 1e-14;

Eigen::Vector3d immersion_partial(const ImmersionSpec& spec, const Eigen::Vector2d& p, int i,
                                  double step) {
    auto f = [&](double t) {
        Eigen::Vector2d q = p;
        q[i] = t;
        return Eigen::Vector3d(immersion_point(spec, q));
    };
    return dcentral(f, p[i], step);
}

Eigen::Vector3d immersion_second(const ImmersionSpec& spec, const Eigen::Vector2d& p, int i, int j,
                                 double step) {
    if (i == j) {
        auto f = [&](double t) {
            Eigen::Vector2d q = p;
            q[i] = t;
            return Eigen::Vector3d(immersion_point(spec, q));
        };
        return d2central(f, p[i], step);
    }
    auto f = [&](double a, double b) {
        return Eigen::Vector3d(immersion_point(spec, Eigen::Vector2d(a, b)));
    };
    return dmixed(f, p[0], p[1], step, step);
}

// Unit normal by the metric volume-form cross product of the tangents.
Eigen::Vector3d unit_normal(const Eigen::Matrix3d& g, const Eigen::Vector3d& Xu,
                            const Eigen::Vector3d& Xv) {
    const double sq = std::sqrt(g.determinant());
    const Eigen::Vector3d e = Xu.cross(Xv); // epsilon_{mab} Xu^a Xv^b
    const Eigen::Vector3d cov = sq * e;
    Eigen::Vector3d N = g.inverse() * cov;
    const double n2 = N.dot(g * N);
    if (!(n2 > 0.0)) throw DegeneracyError("unit_normal: degenerate tangent plane");
    return N / std::sqrt(n2);
}

// Reference parameter point fixing the sign of N so that nu >= 0 there.
bool reference_point(const ImmersionSpec& spec, Eigen::Vector2d& ref) {
    switch (spec.family) {
        case ImmersionSpec::Family::HelicoidH2R: ref = {1.0, 0.0}; return true;
        case ImmersionSpec::Family::ParabolicPsl2: ref = {0.0, 0.5}; return true;
        case ImmersionSpec::Family::ScrewMotionPsl2: ref = {1.0, 0.0}; return true;
        default: return false; // cylinders: nu = 0, sign immaterial
    }
}

double raw_nu(const ImmersionSpec& spec, const AmbientSpace& space, const Eigen::Vector2d& p,
              double step) {
    const Eigen::Vector3d x0 = immersion_point(spec, p);
    const Eigen::Matrix3d g = metric_at(space, x0).g;
    const Eigen::Vector3d Xu = immersion_partial(spec, p, 0, step);
    const Eigen::Vector3d Xv = immersion_partial(spec, p, 1, step);
    const Eigen::Vector3d N = unit_normal(g, Xu, Xv);
    return vertical_field(space, x0).dot(g * N);
}

// +1 or -1 so that sign * nu(reference) >= 0.
double normal_sign(const ImmersionSpec& spec, const AmbientSpace& space, double step) {
    Eigen::Vector2d ref;
    if (!reference_point(spec, ref)) return 1.0;
    return raw_nu(spec, space, ref, step) >= 0.0 ? 1.0 : -1.0;
}

} // namespace

Eigen::Matrix2d MetricField::d(const Eigen::Vector2d& p, int i, double step) const {
    if (derivative) return derivative(p, i);
    auto f = [&](double t) {
        Eigen::Vector2d q = p;
        q[i] = t;
        return Eigen::Matrix2d(value(q));
    };
    return dcentral(f, p[i], step);
}

Eigen::Matrix2d MetricField::d2(const Eigen::Vector2d& p, int i, int j, double step) const {
    if (second_derivative) return second_derivative(p, i, j);
    if (derivative) {
        auto f = [&](double t) {
            Eigen::Vector2d q = p;
            q[j] = t;
            return Eigen::Matrix2d(derivative(q, i));
        };
        return dcentral(f, p[j], step);
    }
    if (i == j) {
        auto f = [&](double t) {
            Eigen::Vector2d q = p;
            q[i] = t;
            return Eigen::Matrix2d(value(q));
        };
        return d2central(f, p[i], step);
    }
    auto f = [&](double a, double b) { return Eigen::Matrix2d(value(Eigen::Vector2d(a, b))); };
    return dmixed(f, p[0], p[1], step, step);
}

Eigen::Vector2d ScalarField::gradient(const Eigen::Vector2d& p, double step) const {
    if (grad) return grad(p);
    Eigen::Vector2d g;
    for (int i = 0; i < 2; ++i) {
        auto f = [&](double t) {
            Eigen::Vector2d q = p;
            q[i] = t;
            return value(q);
        };
        g[i] = dcentral(f, p[i], step);
    }
    return g;
}

Eigen::Matrix2d induced_metric(const ImmersionSpec& spec, const AmbientSpace& space,
                               const Eigen::Vector2d& p, double step) {
    const Eigen::Vector3d x0 = immersion_point(spec, p);
    const Eigen::Matrix3d g = metric_at(space, x0).g;
    const Eigen::Vector3d Xu = immersion_partial(spec, p, 0, step);
    const Eigen::Vector3d Xv = immersion_partial(spec, p, 1, step);
    Eigen::Matrix2d I;
    I(0, 0) = Xu.dot(g * Xu);
    I(0, 1) = I(1, 0) = Xu.dot(g * Xv);
    I(1, 1) = Xv.dot(g * Xv);
    if (!(I.determinant() > kDegenerateDet))
        throw DegeneracyError("induced_metric: Jacobian rank < 2");
    return I;
}

SecondFormResult second_form_and_curvatures(const ImmersionSpec& spec, const AmbientSpace& space,
                                            const Eigen::Vector2d& p, double step) {
    const Eigen::Vector3d x0 = immersion_point(spec, p);
    const Eigen::Matrix3d g = metric_at(space, x0).g;
    const Eigen::Vector3d Xu = immersion_partial(spec, p, 0, step);
    const Eigen::Vector3d Xv = immersion_partial(spec, p, 1, step);

    SecondFormResult r;
    r.forms.point = p;
    r.forms.I(0, 0) = Xu.dot(g * Xu);
    r.forms.I(0, 1) = r.forms.I(1, 0) = Xu.dot(g * Xv);
    r.forms.I(1, 1) = Xv.dot(g * Xv);
    if (!(r.forms.I.determinant() > kDegenerateDet))
        throw DegeneracyError("second_form: Jacobian rank < 2");

    const double sign = normal_sign(spec, space, step);
    r.forms.N = sign * unit_normal(g, Xu, Xv);

    const auto gamma = ambient_christoffels(space, x0);
    const Eigen::Vector3d tang[2] = {Xu, Xv};
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) {
            Eigen::Vector3d sec = immersion_second(spec, p, i, j, step);
            for (int k = 0; k < 3; ++k) sec[k] += tang[i].dot(gamma[k] * tang[j]);
            const double val = sec.dot(g * r.forms.N);
            r.forms.II(i, j) = r.forms.II(j, i) = val;
        }

    const Eigen::Matrix2d shape = r.forms.I.inverse() * r.forms.II;
    r.H = 0.5 * shape.trace();
    r.K_ext = r.forms.II.determinant() / r.forms.I.determinant();
    return r;
}

std::pair<double, double> angle_height(const ImmersionSpec& spec, const AmbientSpace& space,
                                       const Eigen::Vector2d& p, double step) {
    const double sign = normal_sign(spec, space, step);
    const double nu = sign * raw_nu(spec, space, p, step);
    const double h = immersion_point(spec, p)[2];
    return {nu, h};
}

namespace {

double curvature_first_only(const MetricField& m, const Eigen::Vector2d& p, double step) {
    const Eigen::Matrix2d g = m.value(p);
    const Eigen::Matrix2d gu = m.d(p, 0, step);
    const Eigen::Matrix2d guu = m.d2(p, 0, 0, step);
    const double E = g(0, 0), F = g(0, 1), G = g(1, 1);
    const double det = E * G - F * F;
    if (!(det > kDegenerateDet)) throw ConditioningError("gauss_curvature: near-degenerate metric");
    const double Gs = gu(1, 1);
    const double Gss = guu(1, 1);
    const double dets = gu(0, 0) * G + E * Gs - 2.0 * F * gu(0, 1);
    return (0.5 * dets * Gs - det * Gss) / (2.0 * det * det);
}

double curvature_second_only(const MetricField& m, const Eigen::Vector2d& p, double step) {
    const Eigen::Matrix2d g = m.value(p);
    const Eigen::Matrix2d gy = m.d(p, 1, step);
    const Eigen::Matrix2d gyy = m.d2(p, 1, 1, step);
    const double E = g(0, 0), F = g(0, 1), G = g(1, 1);
    const double det = E * G - F * F;
    if (!(det > kDegenerateDet)) throw ConditioningError("gauss_curvature: near-degenerate metric");
    const double Ey = gy(0, 0), Fy = gy(0, 1), Gy = gy(1, 1);
    const double Eyy = gyy(0, 0);
    const double EGy = Ey * G + E * Gy;
    return (Ey * EGy - 2.0 * det * Eyy - 2.0 * F * Ey * Fy) / (4.0 * det * det);
}

} // namespace

double gauss_curvature_brioschi(const MetricField& m, const Eigen::Vector2d& p, double step) {
    const Eigen::Matrix2d g = m.value(p);
    const Eigen::Matrix2d gu = m.d(p, 0, step);
    const Eigen::Matrix2d gv = m.d(p, 1, step);
    const Eigen::Matrix2d gvv = m.d2(p, 1, 1, step);
    const Eigen::Matrix2d guu = m.d2(p, 0, 0, step);
    const Eigen::Matrix2d guv = m.d2(p, 0, 1, step);
    const double E = g(0, 0), F = g(0, 1), G = g(1, 1);
    const double det = E * G - F * F;
    if (!(det > kDegenerateDet)) throw ConditioningError("gauss_curvature: near-degenerate metric");
    const double Eu = gu(0, 0), Ev = gv(0, 0);
    const double Fu = gu(0, 1), Fv = gv(0, 1);
    const double Gu = gu(1, 1), Gv = gv(1, 1);
    const double Evv = gvv(0, 0), Guu = guu(1, 1), Fuv = guv(0, 1);
    Eigen::Matrix3d M1, M2;
    M1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
          Fv - 0.5 * Gu, E, F,
          0.5 * Gv, F, G;
    M2 << 0.0, 0.5 * Ev, 0.5 * Gu,
          0.5 * Ev, E, F,
          0.5 * Gu, F, G;
    return (M1.determinant() - M2.determinant()) / (det * det);
}

double gauss_curvature(const MetricField& m, const Eigen::Vector2d& p, double step) {
    switch (m.dependence) {
        case MetricField::Dependence::FirstOnly: return curvature_first_only(m, p, step);
        case MetricField::Dependence::SecondOnly: return curvature_second_only(m, p, step);
        case MetricField::Dependence::General: return gauss_curvature_brioschi(m, p, step);
    }
    return gauss_curvature_brioschi(m, p, step);
}

double intrinsic_gradient_sq(const MetricField& metric, const ScalarField& f,
                             const Eigen::Vector2d& p, double step) {
    const Eigen::Matrix2d g = metric.value(p);
    if (!(g.determinant() > kDegenerateDet))
        throw ConditioningError("intrinsic_gradient_sq: near-degenerate metric");
    const Eigen::Vector2d df = f.gradient(p, step);
    return df.dot(g.inverse() * df);
}

double intrinsic_inner(const MetricField& metric, const ScalarField& f, const ScalarField& h,
                       const Eigen::Vector2d& p, double step) {
    const Eigen::Matrix2d g = metric.value(p);
    if (!(g.determinant() > kDegenerateDet))
        throw ConditioningError("intrinsic_inner: near-degenerate metric");
    return f.gradient(p, step).dot(g.inverse() * h.gradient(p, step));
}

double intrinsic_laplacian(const MetricField& metric, const ScalarField& f,
                           const Eigen::Vector2d& p, double step) {
    // divergence form: (1/sqrt g) d_i ( sqrt g g^{ij} d_j f )
    auto flux = [&](int i, const Eigen::Vector2d& q) {
        const Eigen::Matrix2d g = metric.value(q);
        const double det = g.determinant();
        if (!(det > kDegenerateDet))
            throw ConditioningError("intrinsic_laplacian: near-degenerate metric");
        const Eigen::Vector2d df = f.gradient(q, step);
        const Eigen::Vector2d up = g.inverse() * df;
        return std::sqrt(det) * up[i];
    };
    double div = 0.0;
    for (int i = 0; i < 2; ++i) {
        auto fi = [&](double t) {
            Eigen::Vector2d q = p;
            q[i] = t;
            return flux(i, q);
        };
        div += dcentral(fi, p[i], step);
    }
    return div / std::sqrt(metric.value(p).determinant());
}

MetricField helicoid_metric_field(double H) {
    const double a = std::sqrt(1.0 - 4.0 * H * H);
    MetricField m;
    m.dependence = MetricField::Dependence::FirstOnly;
    m.value = [H](const Eigen::Vector2d& p) {
        const ClosedForms cf = helicoid_closed_forms(H, p);
        Eigen::Matrix2d g;
        g << cf.E, cf.F, cf.F, cf.G;
        return g;
    };
    m.derivative = [a](const Eigen::Vector2d& p, int i) {
        Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
        if (i == 0) d(1, 1) = a * std::sinh(2.0 * a * p[0]);
        return d;
    };
    m.second_derivative = [a](const Eigen::Vector2d& p, int i, int j) {
        Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
        if (i == 0 && j == 0) d(1, 1) = 2.0 * a * a * std::cosh(2.0 * a * p[0]);
        return d;
    };
    return m;
}

MetricField parabolic_metric_field(double tau) {
    MetricField m;
    m.dependence = MetricField::Dependence::SecondOnly;
    m.value = [tau](const Eigen::Vector2d& p) {
        const ClosedForms cf = parabolic_closed_forms(tau, p);
        Eigen::Matrix2d g;
        g << cf.E, cf.F, cf.F, cf.G;
        return g;
    };
    const double t2 = tau * tau;
    const double Q = std::sqrt(4.0 * t2 + 1.0);
    m.derivative = [t2, Q, tau](const Eigen::Vector2d& p, int i) {
        Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
        if (i != 1) return d;
        const double y = p[1];
        const double w = 1.0 - y * y;
        d(0, 0) = -2.0 * (4.0 * t2 + 1.0) / (y * y * y);
        d(0, 1) = d(1, 0) = -2.0 * tau * Q * (2.0 * y * y - 1.0) / (y * y * std::pow(w, 1.5));
        // G = (4 t^2 y^2 + 1)/(y^2 (1-y^2))
        d(1, 1) = (8.0 * t2 * y) / (y * y * w) -
                  (4.0 * t2 * y * y + 1.0) * (2.0 * y * w + y * y * (-2.0 * y)) /
                      (y * y * y * y * w * w);
        return d;
    };
    auto deriv = m.derivative;
    m.second_derivative = [t2, deriv](const Eigen::Vector2d& p, int i, int j) {
        Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
        if (i != 1 || j != 1) return d;
        const double y = p[1];
        d(0, 0) = 6.0 * (4.0 * t2 + 1.0) / (y * y * y * y);
        // remaining entries by differentiating the closed-form first derivative
        auto f = [&](double t) {
            Eigen::Vector2d q = p;
            q[1] = t;
            return Eigen::Matrix2d(deriv(q, 1));
        };
        const Eigen::Matrix2d num = dcentral(f, y, 1e-3 * (1.0 - y * y));
        d(0, 1) = d(1, 0) = num(0, 1);
        d(1, 1) = num(1, 1);
        return d;
    };
    return m;
}

MetricField screw_metric_field(double H, double tau, int eps) {
    MetricField m;
    m.dependence = MetricField::Dependence::FirstOnly;
    m.value = [H, tau, eps](const Eigen::Vector2d& p) {
        const Eigen::Vector3d c = screw_metric_coeffs(H, tau, eps, p[0]);
        Eigen::Matrix2d g;
        g << c[0], c[1], c[1], c[2];
        return g;
    };
    return m;
}

MetricField flat_metric_field() {
    MetricField m;
    m.dependence = MetricField::Dependence::FirstOnly;
    m.value = [](const Eigen::Vector2d&) { return Eigen::Matrix2d(Eigen::Matrix2d::Identity()); };
    m.derivative = [](const Eigen::Vector2d&, int) {
        return Eigen::Matrix2d(Eigen::Matrix2d::Zero());
    };
    m.second_derivative = [](const Eigen::Vector2d&, int, int) {
        return Eigen::Matrix2d(Eigen::Matrix2d::Zero());
    };
    return m;
}

MetricField induced_metric_field(const ImmersionSpec& spec, double step) {
    MetricField m;
    const AmbientSpace space = ambient_of(spec);
    m.value = [spec, space, step](const Eigen::Vector2d& p) {
        return induced_metric(spec, space, p, step);
    };
    return m;
}

} // namespace cmclab
