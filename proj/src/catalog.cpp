#include "cmclab/catalog.hpp"

#include <cmath>

namespace cmclab {

namespace {

void require_subcritical(double H) {
    if (!(4.0 * H * H > 0.0 && 4.0 * H * H < 1.0))
        throw ParameterError("requires 0 < 4H^2 < 1");
}

void require_screw_params(double H, double tau, int eps) {
    if (!(H > 0.0)) throw ParameterError("screw surface requires H > 0");
    if (!(4.0 * H * H < 1.0)) throw ParameterError("screw surface requires 4H^2 < 1");
    if (tau == 0.0) throw ParameterError("screw surface requires tau != 0");
    if (eps != 1 && eps != -1) throw ParameterError("eps must be +1 or -1");
}

// Type III happens on the measure-zero branch tau^2 (1-8H^2) = 4H^4.
bool degenerate_branch(double H, double tau) {
    const double lhs = tau * tau * (1.0 - 8.0 * H * H);
    const double rhs = 4.0 * H * H * H * H;
    return std::abs(lhs - rhs) < 1e-12 * (tau * tau + H * H * H * H);
}

} // namespace

ImmersionSpec ImmersionSpec::vertical_cylinder(double c, double k) {
    if (c == 0.0) throw ParameterError("vertical_cylinder: c must be nonzero");
    ImmersionSpec s;
    s.family = Family::VerticalCylinder;
    s.c = c;
    s.k = k;
    return s;
}

ImmersionSpec ImmersionSpec::arl(double H) {
    require_subcritical(H);
    ImmersionSpec s;
    s.family = Family::ArlSurface;
    s.H = H;
    return s;
}

ImmersionSpec ImmersionSpec::helicoid(double H) {
    require_subcritical(H);
    ImmersionSpec s;
    s.family = Family::HelicoidH2R;
    s.H = H;
    return s;
}

ImmersionSpec ImmersionSpec::parabolic(double tau) {
    if (tau == 0.0) throw ParameterError("parabolic: tau must be nonzero");
    ImmersionSpec s;
    s.family = Family::ParabolicPsl2;
    s.tau = tau;
    return s;
}

ImmersionSpec ImmersionSpec::screw(double H, double tau, int eps) {
    require_screw_params(H, tau, eps);
    ImmersionSpec s;
    s.family = Family::ScrewMotionPsl2;
    s.H = H;
    s.tau = tau;
    s.eps = eps;
    return s;
}

ImmersionSpec ImmersionSpec::curve_product(double k1, double k2) {
    if (k1 == 0.0 && k2 == 0.0) throw ParameterError("curve_product: (k1,k2) != (0,0)");
    ImmersionSpec s;
    s.family = Family::CurveProduct;
    s.k1 = k1;
    s.k2 = k2;
    return s;
}

const char* SurfaceType::name() const {
    switch (tag) {
        case Tag::TypeI: return "I";
        case Tag::TypeII: return "II";
        case Tag::TypeIII: return "III";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Helicoid in H^2 x R (c = -1), K = 4H^2 - 1.

Eigen::Vector3d helicoid_immersion(double H, const Eigen::Vector2d& st) {
    require_subcritical(H);
    const double K = 4.0 * H * H - 1.0;
    const double a = std::sqrt(-K);
    const double s = st[0], t = st[1];
    const double rho = std::acosh(std::cosh(a * s) / a);
    const double arc = std::atan((std::exp(2.0 * a * s) + 2.0 * K + 1.0) / (4.0 * H * a));
    const double lambda = 2.0 * H * s + arc;
    const double phi = a * t - arc;
    const double r = std::tanh(rho / 2.0);
    return {r * std::cos(phi), r * std::sin(phi), lambda + phi};
}

ClosedForms helicoid_closed_forms(double H, const Eigen::Vector2d& st) {
    require_subcritical(H);
    const double K = 4.0 * H * H - 1.0;
    const double a = std::sqrt(-K);
    ClosedForms cf;
    cf.E = 1.0;
    cf.F = 0.0;
    const double ch = std::cosh(a * st[0]);
    cf.G = ch * ch;
    cf.nu = a * std::tanh(a * st[0]);
    cf.h = 2.0 * H * st[0] + a * st[1];
    return cf;
}

std::complex<double> helicoid_to_halfplane(double H, const Eigen::Vector2d& st) {
    require_subcritical(H);
    const double a = std::sqrt(1.0 - 4.0 * H * H);
    const double as = a * st[0];
    return std::exp(-a * st[1]) *
           std::complex<double>(std::tanh(as), 1.0 / std::cosh(as));
}

ConformalData helicoid_conformal(double H, std::complex<double> z) {
    require_subcritical(H);
    if (!(z.imag() > 0.0)) throw DomainError("helicoid_conformal: Im z > 0 required");
    const double K = 4.0 * H * H - 1.0;
    const double a = std::sqrt(-K);
    const double x = z.real(), y = z.imag();
    ConformalData d;
    d.factor = 1.0 / ((-K) * y * y); // 4/(K (z-zbar)^2)
    d.nu = a * x / std::abs(z);
    d.h = (2.0 * H / a) * std::asinh(x / y) - std::log(std::abs(z));
    return d;
}

// ---------------------------------------------------------------------------
// ARL surface, conformal data on the upper half-plane.

ConformalData arl_conformal(double H, std::complex<double> z) {
    require_subcritical(H);
    if (!(z.imag() > 0.0)) throw DomainError("arl_conformal: Im z > 0 required");
    const double K = 4.0 * H * H - 1.0;
    const double a = std::sqrt(-K);
    const double y = z.imag();
    ConformalData d;
    d.factor = 1.0 / ((-K) * y * y);
    d.nu = a; // nu^2 = (4H^2+c)/c at c = -1; positive sign chosen
    d.h = -(2.0 * H / a) * std::log(a * y);
    return d;
}

// ---------------------------------------------------------------------------
// Parabolic-invariant minimal surface in PSL2 (half-plane model).

Eigen::Vector3d parabolic_immersion(double tau, const Eigen::Vector2d& xy) {
    if (tau == 0.0) throw ParameterError("parabolic_immersion: tau != 0 required");
    const double y = xy[1];
    if (!(y > 0.0 && y < 1.0)) throw DomainError("parabolic_immersion: requires 0 < y < 1");
    const double Q = std::sqrt(4.0 * tau * tau + 1.0);
    return {xy[0], y, Q * std::asin(y)};
}

ClosedForms parabolic_closed_forms(double tau, const Eigen::Vector2d& xy) {
    if (tau == 0.0) throw ParameterError("parabolic_closed_forms: tau != 0 required");
    const double y = xy[1];
    if (!(y > 0.0 && y < 1.0)) throw DomainError("parabolic_closed_forms: requires 0 < y < 1");
    const double t2 = tau * tau;
    const double Q = std::sqrt(4.0 * t2 + 1.0);
    ClosedForms cf;
    cf.E = (4.0 * t2 + 1.0) / (y * y);
    cf.F = -2.0 * tau * Q / (y * std::sqrt(1.0 - y * y));
    cf.G = (4.0 * t2 * y * y + 1.0) / (y * y * (1.0 - y * y));
    cf.nu = std::sqrt(1.0 - y * y) / Q;
    cf.h = Q * std::asin(y);
    return cf;
}

// ---------------------------------------------------------------------------
// Screw-motion surfaces in PSL2 (disk model), K = 4H^2 - 1.

ScrewConstants screw_constants(double H, double tau, int eps) {
    require_screw_params(H, tau, eps);
    const double Q = std::sqrt(4.0 * tau * tau + 1.0);
    const double S = std::sqrt(H * H + tau * tau);
    const double R = std::sqrt(1.0 - 4.0 * H * H);
    ScrewConstants sc;
    sc.A = H * R / S * (Q - 2.0 * eps * tau);
    sc.B = -H * R / S * (Q + 2.0 * eps * tau);
    sc.C = -eps * tau * R / (2.0 * H * S);
    sc.l = -2.0 * tau + eps * Q;
    sc.d = eps * tau * (1.0 - 4.0 * H * H) / (H * Q);
    return sc;
}

ScrewProfile screw_profile(double H, double tau, int eps, double sigma) {
    require_screw_params(H, tau, eps);
    const ScrewConstants sc = screw_constants(H, tau, eps);
    const double Q = std::sqrt(4.0 * tau * tau + 1.0);
    const double S = std::sqrt(H * H + tau * tau);
    const double R = std::sqrt(1.0 - 4.0 * H * H);
    const bool degen = degenerate_branch(H, tau);
    const double ch = std::cosh(sigma);
    const double th = std::tanh(sigma / 2.0);

    ScrewProfile pr;
    if (degen && eps * tau < 0.0) {
        // type III branch: f is odd
        pr.f = th / std::sqrt(4.0 * H * H * th * th + 1.0 - 4.0 * H * H);
        pr.u = (2.0 * H * R / std::sqrt(1.0 - 8.0 * H * H)) * sigma -
               std::sqrt(1.0 - 8.0 * H * H) * std::atan(2.0 * H / R * th);
        // A = C = 1 here, so (cosh-C)/(cosh-A) cancels
        pr.du = (2.0 * H * Q / R) * ch / (ch - sc.B);
        return pr;
    }

    pr.f = std::sqrt(ch - sc.A) / std::sqrt(ch - sc.B);
    if (degen) { // eps*tau > 0, B = -1
        pr.u = (2.0 * H * R / std::sqrt(1.0 - 8.0 * H * H)) * sigma +
               std::sqrt(1.0 - 8.0 * H * H) * std::atan(R / (2.0 * H) * th);
    } else {
        const double A = sc.A, B = sc.B, C = sc.C;
        pr.u = (2.0 * H * Q / R) * sigma +
               (2.0 * S / (1.0 - 4.0 * H * H)) *
                   (A * (A - C) / std::sqrt(1.0 - A * A) *
                        std::atan(std::sqrt((1.0 + A) / (1.0 - A)) * th) -
                    B * (B - C) / std::sqrt(1.0 - B * B) *
                        std::atan(std::sqrt((1.0 + B) / (1.0 - B)) * th));
    }
    pr.du = (2.0 * H * Q / R) * (ch - sc.C) * ch / ((ch - sc.A) * (ch - sc.B));
    return pr;
}

Eigen::Vector3d screw_immersion(double H, double tau, int eps, const Eigen::Vector2d& stheta) {
    const ScrewProfile pr = screw_profile(H, tau, eps, stheta[0]);
    const ScrewConstants sc = screw_constants(H, tau, eps);
    const double theta = stheta[1];
    return {pr.f * std::cos(theta), pr.f * std::sin(theta), pr.u + sc.l * theta};
}

Eigen::Vector3d screw_metric_coeffs(double H, double tau, int eps, double sigma) {
    require_screw_params(H, tau, eps);
    const ScrewConstants sc = screw_constants(H, tau, eps);
    const ScrewProfile pr = screw_profile(H, tau, eps, sigma);
    const double S = std::sqrt(H * H + tau * tau);
    const double R = std::sqrt(1.0 - 4.0 * H * H);
    const double Q = std::sqrt(4.0 * tau * tau + 1.0);
    const double ch = std::cosh(sigma);
    // rho = 2 artanh(f); rho'^2 = (cosh^2-1)/((cosh-A)(cosh-B)), and on the
    // type III branch the (cosh-1) factor cancels against cosh-A.
    double rho_sq;
    if (degenerate_branch(H, tau) && eps * tau < 0.0)
        rho_sq = (ch + 1.0) / (ch - sc.B);
    else
        rho_sq = (ch * ch - 1.0) / ((ch - sc.A) * (ch - sc.B));
    const double E = rho_sq + pr.du * pr.du;
    const double F = pr.du / (H * R * Q) * (eps * H * R - 2.0 * tau * S * ch);
    const double G = (H * H + tau * tau) / (H * H * (1.0 - 4.0 * H * H)) * ch * ch;
    return {E, F, G};
}

SurfaceType screw_type(double H, double tau, int eps) {
    require_screw_params(H, tau, eps);
    if (eps * tau > 0.0) return {SurfaceType::Tag::TypeI};
    if (degenerate_branch(H, tau)) return {SurfaceType::Tag::TypeIII};
    const double lhs = tau * tau * (1.0 - 8.0 * H * H);
    const double rhs = 4.0 * H * H * H * H;
    return {lhs < rhs ? SurfaceType::Tag::TypeI : SurfaceType::Tag::TypeII};
}

// ---------------------------------------------------------------------------
// Vertical cylinders and curve products.

CylinderData cylinder_eval(double c, double k, const Eigen::Vector2d& st) {
    if (c == 0.0) throw ParameterError("cylinder_eval: c must be nonzero");
    CylinderData d;
    d.metric = Eigen::Matrix2d::Identity();
    d.nu = 0.0;
    d.h = st[1];
    return d;
}

Eigen::Vector3d cylinder_immersion(double c, double k, const Eigen::Vector2d& st) {
    if (c == 0.0) throw ParameterError("cylinder_immersion: c must be nonzero");
    const double s = st[0], t = st[1];
    const double sc = std::sqrt(std::abs(c));
    const double kh = k / sc; // curvature in the unit-curvature model
    std::complex<double> w;
    if (c > 0.0) {
        // circle of spherical radius arccot(kh), centered at the model origin
        const double rr = std::atan2(1.0, kh);
        const double R = std::tan(rr / 2.0);
        const double theta = s * sc / std::sin(rr);
        w = R * std::exp(std::complex<double>(0.0, theta));
    } else if (std::abs(kh) < 1.0) {
        // equidistant at distance artanh(kh) from a geodesic; Fermi coordinates
        // (u,v) -> e^u (tanh v + i sech v) in the half-plane, then Cayley map.
        const double dch = std::atanh(kh);
        const double u = s * sc / std::cosh(dch);
        const std::complex<double> z =
            std::exp(u) * std::complex<double>(std::tanh(dch), 1.0 / std::cosh(dch));
        w = (z - std::complex<double>(0, 1)) / (z + std::complex<double>(0, 1));
    } else if (std::abs(kh) > 1.0) {
        // hyperbolic circle of radius arcoth(|kh|) centered at the origin
        const double r = std::atanh(1.0 / std::abs(kh));
        const double R = std::tanh(r / 2.0);
        const double theta = s * sc / std::sinh(r);
        w = R * std::exp(std::complex<double>(0.0, theta));
    } else {
        throw ParameterError("cylinder_immersion: horocycle case |k| = sqrt(-c) not supported");
    }
    w /= sc;
    return {w.real(), w.imag(), t};
}

CurveProductData curveproduct_eval(double k1, double k2, const Eigen::Vector2d&) {
    if (k1 == 0.0 && k2 == 0.0) throw ParameterError("curveproduct_eval: (k1,k2) != (0,0)");
    CurveProductData d;
    d.metric = Eigen::Matrix2d::Identity();
    d.H = std::sqrt(k1 * k1 + k2 * k2) / 2.0;
    return d;
}

// ---------------------------------------------------------------------------

AmbientSpace ambient_of(const ImmersionSpec& spec) {
    switch (spec.family) {
        case ImmersionSpec::Family::VerticalCylinder:
            return AmbientSpace::product_disk(spec.c);
        case ImmersionSpec::Family::HelicoidH2R:
            return AmbientSpace::product_disk(-1.0);
        case ImmersionSpec::Family::ParabolicPsl2:
            return AmbientSpace::ekt_halfplane(spec.tau);
        case ImmersionSpec::Family::ScrewMotionPsl2:
            return AmbientSpace::ekt_disk(spec.tau);
        case ImmersionSpec::Family::ArlSurface:
            throw ParameterError("ambient_of: ARL surface carries conformal data only");
        case ImmersionSpec::Family::CurveProduct:
            throw ParameterError("ambient_of: curve products have no 3-manifold ambient");
    }
    throw ParameterError("ambient_of: unknown family");
}

Eigen::Vector3d immersion_point(const ImmersionSpec& spec, const Eigen::Vector2d& uv) {
    switch (spec.family) {
        case ImmersionSpec::Family::VerticalCylinder:
            return cylinder_immersion(spec.c, spec.k, uv);
        case ImmersionSpec::Family::HelicoidH2R:
            return helicoid_immersion(spec.H, uv);
        case ImmersionSpec::Family::ParabolicPsl2:
            return parabolic_immersion(spec.tau, uv);
        case ImmersionSpec::Family::ScrewMotionPsl2:
            return screw_immersion(spec.H, spec.tau, spec.eps, uv);
        case ImmersionSpec::Family::ArlSurface:
            throw ParameterError("immersion_point: ARL surface has no displayed immersion");
        case ImmersionSpec::Family::CurveProduct:
            throw ParameterError("immersion_point: curve products are data-level only");
    }
    throw ParameterError("immersion_point: unknown family");
}

} // namespace cmclab
