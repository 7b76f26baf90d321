#include <doctest.h>

#include <cmath>
#include <random>

#include "cmclab/diffgeo.hpp"

using namespace cmclab;

namespace {
const double kH = 0.25;
const double kTypeIIIH = std::sqrt(std::sqrt(2.0) - 1.0) / 2.0;
} // namespace

TEST_CASE("induced metric matches the closed forms") {
    // helicoid at the origin: identity
    {
        const auto spec = ImmersionSpec::helicoid(kH);
        const auto I = induced_metric(spec, ambient_of(spec), {0.0, 0.0});
        CHECK((I - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-8);
        const auto I2 = induced_metric(spec, ambient_of(spec), {1.3, -0.4});
        const auto cf = helicoid_closed_forms(kH, {1.3, -0.4});
        CHECK(std::abs(I2(0, 0) - cf.E) < 1e-8);
        CHECK(std::abs(I2(0, 1) - cf.F) < 1e-8);
        CHECK(std::abs(I2(1, 1) - cf.G) < 1e-8);
    }
    // parabolic at (0, 1/2)
    {
        const auto spec = ImmersionSpec::parabolic(0.5);
        const auto I = induced_metric(spec, ambient_of(spec), {0.0, 0.5}, 5e-3);
        const auto cf = parabolic_closed_forms(0.5, {0.0, 0.5});
        CHECK(std::abs(I(0, 0) - cf.E) < 1e-8);
        CHECK(std::abs(I(0, 1) - cf.F) < 1e-8);
        CHECK(std::abs(I(1, 1) - cf.G) < 1e-8);
    }
    // screw at sigma = 1
    {
        const auto spec = ImmersionSpec::screw(kH, 0.5, 1);
        const auto I = induced_metric(spec, ambient_of(spec), {1.0, 0.0}, 4e-3);
        const auto efg = screw_metric_coeffs(kH, 0.5, 1, 1.0);
        CHECK(std::abs(I(0, 0) - efg[0]) < 1e-7);
        CHECK(std::abs(I(0, 1) - efg[1]) < 1e-7);
        CHECK(std::abs(I(1, 1) - efg[2]) < 1e-7);
    }
}

TEST_CASE("second fundamental form and mean curvature") {
    // helicoid: |H| = 1/4 on a 10x10 grid
    {
        const auto spec = ImmersionSpec::helicoid(kH);
        const auto space = ambient_of(spec);
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const Eigen::Vector2d p(-2.0 + 4.0 * i / 9.0, -2.0 + 4.0 * j / 9.0);
                const auto r = second_form_and_curvatures(spec, space, p);
                CHECK(std::abs(std::abs(r.H) - kH) < 1e-6);
                // N is g-orthogonal to both tangents
                const Eigen::Matrix3d g = metric_at(space, immersion_point(spec, p)).g;
                auto dX = [&](int k) {
                    const double h = 1e-4;
                    Eigen::Vector2d q1 = p, q2 = p;
                    q1[k] += h;
                    q2[k] -= h;
                    return Eigen::Vector3d(
                        (immersion_point(spec, q1) - immersion_point(spec, q2)) / (2.0 * h));
                };
                CHECK(std::abs(dX(0).dot(g * r.forms.N)) < 1e-9);
                CHECK(std::abs(dX(1).dot(g * r.forms.N)) < 1e-9);
            }
    }
    // parabolic: minimal
    {
        const auto spec = ImmersionSpec::parabolic(0.5);
        const auto space = ambient_of(spec);
        for (double y = 0.1; y <= 0.9; y += 0.2)
            CHECK(std::abs(second_form_and_curvatures(spec, space, {0.3, y}, 5e-3).H) < 1e-6);
    }
    // vertical cylinder c=-1, k=1/2: |H| = 1/4 and nu = 0
    {
        const auto spec = ImmersionSpec::vertical_cylinder(-1.0, 0.5);
        const auto space = ambient_of(spec);
        const auto r = second_form_and_curvatures(spec, space, {0.2, 0.5});
        CHECK(std::abs(std::abs(r.H) - 0.25) < 1e-6);
        const auto [nu, h] = angle_height(spec, space, {0.2, 0.5});
        CHECK(std::abs(nu) < 1e-9);
        CHECK(h == doctest::Approx(0.5));
    }
}

TEST_CASE("gauss curvature of catalog metrics") {
    // helicoid: K = -3/4
    {
        const MetricField m = helicoid_metric_field(kH);
        for (double s = -2.0; s <= 2.0; s += 0.5)
            CHECK(std::abs(gauss_curvature(m, {s, 0.0}) + 0.75) < 1e-6);
    }
    // parabolic: K = -1
    {
        const MetricField m = parabolic_metric_field(0.5);
        for (double y = 0.1; y <= 0.9; y += 0.1)
            CHECK(std::abs(gauss_curvature(m, {0.0, y}) + 1.0) < 1e-6);
    }
    // screw (all three types): K = 4H^2 - 1
    {
        struct Case { double H, tau; int eps; };
        for (const Case cs : {Case{kH, 0.5, 1}, Case{kH, 0.5, -1}, Case{kTypeIIIH, 0.5, -1}}) {
            const MetricField m = screw_metric_field(cs.H, cs.tau, cs.eps);
            const double K = 4.0 * cs.H * cs.H - 1.0;
            for (double s = -2.0; s <= 2.0; s += 0.5)
                CHECK(std::abs(gauss_curvature(m, {s, 0.3}) - K) < 1e-6);
        }
    }
    // flat cylinder metric: K = 0
    CHECK(std::abs(gauss_curvature(flat_metric_field(), {0.1, 0.2})) < 1e-10);
}

TEST_CASE("specialized curvature formulas agree with Brioschi") {
    const MetricField hm = helicoid_metric_field(kH);
    for (double s : {-1.2, 0.4, 1.7})
        CHECK(std::abs(gauss_curvature(hm, {s, 0.0}) - gauss_curvature_brioschi(hm, {s, 0.0})) <
              1e-6);
    const MetricField pm = parabolic_metric_field(0.5);
    for (double y : {0.3, 0.5, 0.7})
        CHECK(std::abs(gauss_curvature(pm, {0.0, y}) - gauss_curvature_brioschi(pm, {0.0, y})) <
              1e-6);
}

TEST_CASE("angle and height track the closed forms") {
    {
        const auto spec = ImmersionSpec::helicoid(kH);
        const auto space = ambient_of(spec);
        for (double s : {-1.5, -0.3, 0.8, 2.0}) {
            const auto [nu, h] = angle_height(spec, space, {s, 0.4});
            const auto cf = helicoid_closed_forms(kH, {s, 0.4});
            CHECK(std::abs(nu - cf.nu) < 1e-6);
            CHECK(std::abs(h - cf.h) < 1e-12);
        }
    }
    {
        const auto spec = ImmersionSpec::parabolic(0.5);
        const auto space = ambient_of(spec);
        for (double y : {0.2, 0.5, 0.8}) {
            const auto [nu, h] = angle_height(spec, space, {0.1, y}, 5e-3);
            CHECK(std::abs(nu - parabolic_closed_forms(0.5, {0.1, y}).nu) < 1e-6);
        }
    }
}

TEST_CASE("intrinsic operators") {
    // Euclidean Laplacian of x^2 is 2
    {
        ScalarField f;
        f.value = [](const Eigen::Vector2d& p) { return p[0] * p[0]; };
        CHECK(std::abs(intrinsic_laplacian(flat_metric_field(), f, {0.3, -0.4}) - 2.0) < 1e-9);
    }
    // helicoid: |grad h|^2 = 1 - nu^2 and Delta h = 2 H nu
    {
        const double a = std::sqrt(0.75);
        const MetricField m = helicoid_metric_field(kH);
        ScalarField h;
        h.value = [a](const Eigen::Vector2d& p) { return helicoid_closed_forms(kH, p).h; };
        for (double s : {-1.0, 0.0, 0.7, 1.9}) {
            const Eigen::Vector2d p(s, 0.3);
            const double nu = helicoid_closed_forms(kH, p).nu;
            CHECK(std::abs(intrinsic_gradient_sq(m, h, p) - (1.0 - nu * nu)) < 1e-7);
            CHECK(std::abs(intrinsic_laplacian(m, h, p) - 2.0 * kH * nu) < 1e-7);
        }
    }
}

TEST_CASE("finite-difference outputs converge at order >= 2") {
    const auto spec = ImmersionSpec::helicoid(kH);
    const auto space = ambient_of(spec);
    const Eigen::Vector2d p(0.7, 0.2);
    const auto cf = helicoid_closed_forms(kH, p);
    auto err = [&](double step) {
        const auto I = induced_metric(spec, space, p, step);
        return std::max({std::abs(I(0, 0) - cf.E), std::abs(I(0, 1) - cf.F),
                         std::abs(I(1, 1) - cf.G)});
    };
    const double e1 = err(0.1), e2 = err(0.05);
    CHECK(std::log2(e1 / e2) >= 2.0);
}

TEST_CASE("degenerate immersions are reported") {
    // a curve product has no 3-manifold immersion at all
    CHECK_THROWS_AS(immersion_point(ImmersionSpec::curve_product(1.0, 1.0), {0.0, 0.0}),
                    ParameterError);
    CHECK_THROWS_AS(ambient_of(ImmersionSpec::arl(kH)), ParameterError);
}
