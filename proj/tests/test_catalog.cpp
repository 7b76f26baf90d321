#include <doctest.h>

#include <cmath>
#include <random>

#include "cmclab/catalog.hpp"
#include "cmclab/numeric.hpp"

using namespace cmclab;

namespace {
const double kH = 0.25;
const double kA = std::sqrt(0.75); // sqrt(-K) at H = 1/4
const double kTypeIIIH = std::sqrt(std::sqrt(2.0) - 1.0) / 2.0;
} // namespace

TEST_CASE("helicoid immersion basics") {
    const auto p0 = helicoid_immersion(kH, {0.0, 0.0});
    // rho(0) = arccosh(1/sqrt(3/4)), height = 0
    const double rho0 = std::acosh(1.0 / kA);
    CHECK(p0[0] == doctest::Approx(std::tanh(rho0 / 2.0)));
    CHECK(p0[2] == doctest::Approx(0.0).epsilon(1e-15));

    // height is exactly 2H sigma + sqrt(-K) tau
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double s = u(rng), t = u(rng);
        const auto p = helicoid_immersion(kH, {s, t});
        CHECK(p[2] == doctest::Approx(2.0 * kH * s + kA * t).epsilon(1e-12));
        CHECK(p[0] * p[0] + p[1] * p[1] < 1.0);
    }
    CHECK_THROWS_AS(helicoid_immersion(0.0, {0.0, 0.0}), ParameterError);
    CHECK_THROWS_AS(helicoid_immersion(0.6, {0.0, 0.0}), ParameterError);
}

TEST_CASE("helicoid closed forms") {
    const auto cf0 = helicoid_closed_forms(kH, {0.0, 0.7});
    CHECK(cf0.E == 1.0);
    CHECK(cf0.F == 0.0);
    CHECK(cf0.G == doctest::Approx(1.0));
    CHECK(cf0.nu == doctest::Approx(0.0));
    CHECK(cf0.h == doctest::Approx(kA * 0.7));

    const auto cf1 = helicoid_closed_forms(kH, {1.0, 0.0});
    CHECK(cf1.nu == doctest::Approx(kA * std::tanh(kA)).epsilon(1e-14));

    // nu odd, G even in sigma
    for (double s : {0.3, 1.1, 2.4}) {
        const auto plus = helicoid_closed_forms(kH, {s, 0.0});
        const auto minus = helicoid_closed_forms(kH, {-s, 0.0});
        CHECK(plus.nu == doctest::Approx(-minus.nu).epsilon(1e-14));
        CHECK(plus.G == doctest::Approx(minus.G).epsilon(1e-14));
    }

    // |nu| < sqrt(-K) everywhere
    for (double s = -6.0; s <= 6.0; s += 0.25)
        CHECK(std::abs(helicoid_closed_forms(kH, {s, 0.0}).nu) < kA);
}

TEST_CASE("helicoid conformal data") {
    const auto d = helicoid_conformal(kH, {0.0, 1.0});
    CHECK(d.nu == doctest::Approx(0.0));
    CHECK(d.h == doctest::Approx(0.0));
    CHECK_THROWS_AS(helicoid_conformal(kH, {0.0, -1.0}), DomainError);

    // nu is scaling invariant: nu(lambda z) = nu(z)
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.1, 3.0), ul(0.1, 5.0);
    for (int i = 0; i < 50; ++i) {
        const std::complex<double> z(ux(rng), uy(rng));
        const double lam = ul(rng);
        CHECK(helicoid_conformal(kH, lam * z).nu ==
              doctest::Approx(helicoid_conformal(kH, z).nu).epsilon(1e-12));
    }
}

TEST_CASE("helicoid conformal chart is consistent with the closed forms") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
        const Eigen::Vector2d st(u(rng), u(rng));
        const auto cf = helicoid_closed_forms(kH, st);
        const std::complex<double> z = helicoid_to_halfplane(kH, st);
        const auto cd = helicoid_conformal(kH, z);
        CHECK(cd.nu == doctest::Approx(cf.nu).epsilon(1e-10));
        CHECK(cd.h == doctest::Approx(cf.h).epsilon(1e-10));
        // pullback of factor |dz|^2 reproduces E = 1 and G = cosh^2
        auto zmap = [&](double s, double t) {
            return helicoid_to_halfplane(kH, {s, t});
        };
        const std::complex<double> zs =
            dcentral([&](double s) { return zmap(s, st[1]); }, st[0], 1e-3);
        const std::complex<double> zt =
            dcentral([&](double t) { return zmap(st[0], t); }, st[1], 1e-3);
        CHECK(cd.factor * std::norm(zs) == doctest::Approx(cf.E).epsilon(1e-8));
        CHECK(cd.factor * std::norm(zt) == doctest::Approx(cf.G).epsilon(1e-8));
    }
}

TEST_CASE("arl conformal data") {
    // nu^2 = 3/4, constant in z
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 4.0);
    for (int i = 0; i < 30; ++i) {
        const auto d = arl_conformal(kH, {ux(rng), uy(rng)});
        CHECK(d.nu * d.nu == doctest::Approx(0.75).epsilon(1e-14));
    }
    const auto di = arl_conformal(kH, {0.0, 1.0});
    CHECK(di.h == doctest::Approx(-(2.0 * kH / kA) * std::log(kA)).epsilon(1e-14));
    CHECK(di.factor == doctest::Approx(1.0 / 0.75).epsilon(1e-14)); // 1/(-K)
    CHECK_THROWS_AS(arl_conformal(kH, {0.0, 0.0}), DomainError);
}

TEST_CASE("parabolic surface closed forms") {
    const double tau = 0.5;
    const auto cf = parabolic_closed_forms(tau, {0.0, 0.5});
    CHECK(cf.nu == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-14));

    // nu -> 0 as y -> 1
    CHECK(parabolic_closed_forms(tau, {0.0, 0.999999}).nu < 2e-3);

    // EG - F^2 = (4 tau^2 + 1)/(y^4 (1-y^2))
    for (double y = 0.1; y < 0.95; y += 0.05) {
        const auto c = parabolic_closed_forms(tau, {0.3, y});
        const double det = c.E * c.G - c.F * c.F;
        const double expect = (4.0 * tau * tau + 1.0) / (std::pow(y, 4) * (1.0 - y * y));
        CHECK(det == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS(parabolic_closed_forms(tau, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(parabolic_closed_forms(tau, {0.0, -0.2}), DomainError);

    const auto p = parabolic_immersion(tau, {0.2, 0.5});
    CHECK(p[2] == doctest::Approx(std::sqrt(2.0) * std::asin(0.5)).epsilon(1e-14));
}

TEST_CASE("screw constants") {
    for (int eps : {1, -1})
        for (double tau : {0.5, -0.8, 1.5})
            for (double H : {0.1, 0.25, 0.45}) {
                const auto sc = screw_constants(H, tau, eps);
                CHECK(sc.A > 0.0);
                CHECK(sc.A <= 1.0);
                CHECK(sc.B < 0.0);
                CHECK(sc.B >= -1.0);
                const double Q = std::sqrt(4.0 * tau * tau + 1.0);
                const double lhs = 1.0 - sc.A * sc.A;
                const double num = eps * tau * (1.0 - 4.0 * H * H) + 2.0 * H * H * Q;
                const double rhs = num * num / (H * H + tau * tau);
                CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
                const double lhsB = 1.0 - sc.B * sc.B;
                const double numB = eps * tau * (1.0 - 4.0 * H * H) - 2.0 * H * H * Q;
                CHECK(std::abs(lhsB - numB * numB / (H * H + tau * tau)) <
                      1e-12 * (1.0 + std::abs(lhsB)));
                CHECK(sc.l == doctest::Approx(-2.0 * tau + eps * Q));
            }

    // A = 1 exactly on the type III boundary
    const auto sc3 = screw_constants(kTypeIIIH, 0.5, -1);
    CHECK(sc3.A == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(sc3.C - 1.0) < 1e-12);

    // A, B unchanged under (eps, tau) -> (-eps, -tau)
    const auto sp = screw_constants(0.3, 0.7, 1);
    const auto sm = screw_constants(0.3, -0.7, -1);
    CHECK(sp.A == doctest::Approx(sm.A).epsilon(1e-15));
    CHECK(sp.B == doctest::Approx(sm.B).epsilon(1e-15));

    CHECK_THROWS_AS(screw_constants(-0.25, 0.5, 1), ParameterError);
    CHECK_THROWS_AS(screw_constants(0.25, 0.0, 1), ParameterError);
    CHECK_THROWS_AS(screw_constants(0.5, 0.5, 1), ParameterError);
}

TEST_CASE("screw profile") {
    // u(0) = 0 and f(0) = sqrt(1-A)/sqrt(1-B) off the degenerate branch
    for (int eps : {1, -1}) {
        const auto sc = screw_constants(kH, 0.5, eps);
        const auto pr = screw_profile(kH, 0.5, eps, 0.0);
        CHECK(pr.u == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(pr.f ==
              doctest::Approx(std::sqrt(1.0 - sc.A) / std::sqrt(1.0 - sc.B)).epsilon(1e-13));
    }

    // type II: u' < 0 on (0, arccosh C)
    {
        const auto sc = screw_constants(kH, 0.5, -1);
        REQUIRE(sc.C > 1.0);
        const double s1 = std::acosh(sc.C);
        for (double s = 0.05; s < s1; s += s1 / 15.0)
            CHECK(screw_profile(kH, 0.5, -1, s).du < 0.0);
        for (double s = s1 + 0.05; s < s1 + 2.0; s += 0.2)
            CHECK(screw_profile(kH, 0.5, -1, s).du > 0.0);
    }

    // u' matches a high-order finite-difference oracle at 50 random sigma
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    struct Case { double H, tau; int eps; };
    for (const Case cs : {Case{kH, 0.5, 1}, Case{kH, 0.5, -1}, Case{kTypeIIIH, 0.5, -1}}) {
        for (int i = 0; i < 50; ++i) {
            const double s = u(rng);
            auto uf = [&](double x) { return screw_profile(cs.H, cs.tau, cs.eps, x).u; };
            // two Richardson levels on the oracle side
            auto D = [&](double h) { return (uf(s + h) - uf(s - h)) / (2.0 * h); };
            auto R1 = [&](double h) { return (4.0 * D(h / 2) - D(h)) / 3.0; };
            const double fd = (16.0 * R1(5e-3) - R1(1e-2)) / 15.0;
            CHECK(std::abs(fd - screw_profile(cs.H, cs.tau, cs.eps, s).du) < 1e-7);
        }
    }

    // type III: f and u odd
    for (double s : {0.4, 1.3, 2.9}) {
        const auto plus = screw_profile(kTypeIIIH, 0.5, -1, s);
        const auto minus = screw_profile(kTypeIIIH, 0.5, -1, -s);
        CHECK(plus.f == doctest::Approx(-minus.f).epsilon(1e-13));
        CHECK(plus.u == doctest::Approx(-minus.u).epsilon(1e-13));
    }
}

TEST_CASE("screw immersion and metric coefficients") {
    const double tau = 0.5;
    for (int eps : {1, -1}) {
        const auto sc = screw_constants(kH, tau, eps);
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int i = 0; i < 30; ++i) {
            const double s = u(rng), th = u(rng);
            const auto p = screw_immersion(kH, tau, eps, {s, th});
            const auto pr = screw_profile(kH, tau, eps, s);
            CHECK(p[2] - pr.u == doctest::Approx(sc.l * th).epsilon(1e-12));
            CHECK(p[0] * p[0] + p[1] * p[1] < 1.0);

            // EG - F^2 = (H^2+tau^2)/(H^2 (1-4H^2)^2) cosh^2 sigma
            const auto efg = screw_metric_coeffs(kH, tau, eps, s);
            const double det = efg[0] * efg[2] - efg[1] * efg[1];
            const double ch = std::cosh(s);
            const double expect = (kH * kH + tau * tau) /
                                  (kH * kH * std::pow(1.0 - 4.0 * kH * kH, 2)) * ch * ch;
            CHECK(det == doctest::Approx(expect).epsilon(1e-12));
        }
        // G(0) = (H^2+tau^2)/(H^2(1-4H^2))
        const auto efg0 = screw_metric_coeffs(kH, tau, eps, 0.0);
        CHECK(efg0[2] ==
              doctest::Approx((kH * kH + tau * tau) / (kH * kH * (1.0 - 4.0 * kH * kH))));
    }
}

TEST_CASE("screw type classification") {
    CHECK(screw_type(kH, 0.5, 1).tag == SurfaceType::Tag::TypeI);
    CHECK(screw_type(kH, 0.5, -1).tag == SurfaceType::Tag::TypeII);
    CHECK(screw_type(kTypeIIIH, 0.5, -1).tag == SurfaceType::Tag::TypeIII);
    CHECK(screw_type(std::sqrt(2.0) / 3.0, 0.5, -1).tag == SurfaceType::Tag::TypeI);

    // invariant under (eps, tau) -> (-eps, -tau)
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> uh(0.05, 0.49), ut(0.1, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double H = uh(rng), tau = ut(rng);
        for (int eps : {1, -1})
            CHECK(screw_type(H, tau, eps).tag == screw_type(H, -tau, -eps).tag);
    }
}

TEST_CASE("cylinders and curve products") {
    const auto cd = cylinder_eval(-1.0, 0.5, {0.3, 0.8});
    CHECK(cd.nu == 0.0);
    CHECK(cd.h == doctest::Approx(0.8));
    CHECK(cd.metric == Eigen::Matrix2d::Identity());

    const auto cp = curveproduct_eval(1.0, 1.0, {0.0, 0.0});
    CHECK(cp.H == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(curveproduct_eval(0.0, 0.0, {0.0, 0.0}), ParameterError);

    CHECK_THROWS_AS(cylinder_immersion(-1.0, 1.0, {0.0, 0.0}), ParameterError); // horocycle
    const auto p = cylinder_immersion(-1.0, 0.5, {0.4, 1.2});
    CHECK(p[2] == doctest::Approx(1.2));
    CHECK(p[0] * p[0] + p[1] * p[1] < 1.0);
}
