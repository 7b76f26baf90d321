#include <doctest.h>

#include <random>

#include "cmclab/moebius.hpp"

using namespace cmclab;

namespace {

std::mt19937 g_rng(31);

Rational rand_rational(bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    while (true) {
        const Rational r(num(g_rng), den(g_rng));
        if (!nonzero || r != 0) return r;
    }
}

MoebiusElement rand_element(bool allow_anti = true) {
    std::uniform_int_distribution<int> flip(0, 1);
    while (true) {
        const Rational a = rand_rational(), b = rand_rational(), c = rand_rational(),
                       d = rand_rational();
        if (a * d - b * c > 0)
            return MoebiusElement(a, b, c, d, allow_anti && flip(g_rng) == 1);
    }
}

MoebiusElement rand_GY() {
    std::uniform_int_distribution<int> flip(0, 1);
    Rational x = rand_rational(true);
    if (x < 0) x = -x;
    return flip(g_rng) ? MoebiusElement::diagonal(x) : MoebiusElement::anti_diagonal(x);
}

MoebiusElement rand_GX() {
    std::uniform_int_distribution<int> flip(0, 1);
    Rational a = rand_rational(true);
    if (a < 0) a = -a;
    const MoebiusElement t(a, rand_rational(), 0, 1);
    return flip(g_rng) ? compose(t, MoebiusElement::eta()) : t;
}

} // namespace

TEST_CASE("group operations") {
    const MoebiusElement id = MoebiusElement::identity();
    CHECK(compose(MoebiusElement::eta(), MoebiusElement::eta()) == id);

    // zeta(i) = 1/(1-i) = (1+i)/2
    const auto z = apply(MoebiusElement::zeta(), {0.0, 1.0});
    CHECK(z.real() == doctest::Approx(0.5));
    CHECK(z.imag() == doctest::Approx(0.5));

    for (int i = 0; i < 100; ++i) {
        const MoebiusElement f = rand_element();
        CHECK(compose(f, inverse(f)) == id);
        CHECK(compose(inverse(f), f) == id);
        // apply preserves the upper half-plane
        const auto w = apply(f, {0.37, 1.21});
        CHECK(w.imag() > 0.0);
    }

    // composition agrees with applying the maps in sequence
    for (int i = 0; i < 100; ++i) {
        const MoebiusElement f = rand_element(), g = rand_element();
        const std::complex<double> z0(0.3, 0.9);
        const auto lhs = apply(compose(f, g), z0);
        const auto rhs = apply(f, apply(g, z0));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    // determinant positivity is maintained
    for (int i = 0; i < 100; ++i) {
        const MoebiusElement f = rand_element(), g = rand_element();
        CHECK(compose(f, g).det() > 0);
        CHECK(inverse(f).det() > 0);
    }
}

TEST_CASE("the paper matrices act as displayed") {
    // eta(z) = -conj z
    const auto e = apply(MoebiusElement::eta(), {0.7, 1.1});
    CHECK(e.real() == doctest::Approx(-0.7));
    CHECK(e.imag() == doctest::Approx(1.1));
    // xi(z) = -1/z
    const auto x = apply(MoebiusElement::xi(), {0.0, 2.0});
    CHECK(std::abs(x - std::complex<double>(0.0, 0.5)) < 1e-15);
    // from_action_matrix with the paper's eta = ((-1,0),(0,1)) acting via conj
    const MoebiusElement eta2 = MoebiusElement::from_action_matrix(-1, 0, 0, 1, true);
    CHECK(eta2 == MoebiusElement::eta());
    CHECK_THROWS_AS(MoebiusElement::from_action_matrix(1, 0, 0, 1, true), ParameterError);
}

TEST_CASE("rho invariant") {
    CHECK(*rho(MoebiusElement::identity()) == 0);
    CHECK(!rho(MoebiusElement::xi()).has_value()); // infinity
    for (int num = -12; num <= 12; ++num) {
        const Rational s(num, 3);
        if (s == 0) continue;
        const auto r = rho(MoebiusElement::m_s(s));
        REQUIRE(r.has_value());
        CHECK(*r == (s - 1) / s);
    }

    // conjugation laws on PSL2 \ G_Y
    for (int i = 0; i < 300; ++i) {
        MoebiusElement f = rand_element(false);
        if (in_GY(f)) continue;
        Rational x = rand_rational(true);
        if (x < 0) x = -x;
        const MoebiusElement d = MoebiusElement::diagonal(x);
        CHECK(rho_equal(rho(compose(d, f)), rho(f)));
        CHECK(rho_equal(rho(compose(f, d)), rho(f)));
        const MoebiusElement dx = MoebiusElement::anti_diagonal(x);
        CHECK(rho_equal(rho(compose(dx, f)), rho_inverse(rho(f))));
        CHECK(rho_equal(rho(compose(f, dx)), rho_inverse(rho(f))));
    }
}

TEST_CASE("subgroup membership") {
    CHECK(in_GX(MoebiusElement::eta()));
    CHECK(in_GY(MoebiusElement::xi()));
    CHECK_FALSE(in_GY(MoebiusElement::eta()));
    const MoebiusElement diag(2, 0, 0, Rational(1, 2));
    CHECK(in_D(diag));
    CHECK(in_GX(diag));
    CHECK(in_GY(diag));
    CHECK(in_T(MoebiusElement(1, 5, 0, 1)));
    CHECK_FALSE(in_D(MoebiusElement(1, 5, 0, 1)));
    CHECK_FALSE(in_GX(MoebiusElement::zeta()));
}

TEST_CASE("class_xy") {
    CHECK(class_xy(MoebiusElement::zeta()) == XYClass::ZetaClass);
    CHECK(class_xy(MoebiusElement::xi()) == XYClass::IdClass);
    CHECK(class_xy(MoebiusElement::identity()) == XYClass::IdClass);

    for (int i = 0; i < 300; ++i) {
        const MoebiusElement f = rand_element();
        const MoebiusElement k = rand_GX(), g = rand_GY();
        CHECK(class_xy(compose(compose(k, f), g)) == class_xy(f));
    }
}

TEST_CASE("canonical_yy basic values") {
    CHECK(canonical_yy(MoebiusElement::identity()) == CanonicalRep{CanonicalRep::Tag::Id, 0});
    CHECK(canonical_yy(MoebiusElement::eta()) == CanonicalRep{CanonicalRep::Tag::Eta, 0});
    CHECK(canonical_yy(MoebiusElement::m_s(-1)) == CanonicalRep{CanonicalRep::Tag::M, 2});
    // zeta = m_0 literally
    CHECK(canonical_yy(MoebiusElement::zeta()) == CanonicalRep{CanonicalRep::Tag::M, 0});

    // canonical of m_s is M(s) for s >= 0 and M(1-s) for s < 0
    for (int num = 0; num <= 30; ++num) {
        const Rational s(num, 7);
        CHECK(canonical_yy(MoebiusElement::m_s(s)) == CanonicalRep{CanonicalRep::Tag::M, s});
    }
    for (int num = 1; num <= 30; ++num) {
        const Rational s(-num, 7);
        CHECK(canonical_yy(MoebiusElement::m_s(s)) == CanonicalRep{CanonicalRep::Tag::M, 1 - s});
    }
}

TEST_CASE("m_s equivalences follow the sign rules") {
    // m_s ~ m_{1-s} exactly when s outside [0,1] (or trivially s = 1/2)
    for (int num = -30; num <= 30; ++num) {
        const Rational s(num, 10);
        const bool equal =
            canonical_yy(MoebiusElement::m_s(s)) == canonical_yy(MoebiusElement::m_s(1 - s));
        const bool expect = (s < 0 || s > 1) || s == Rational(1, 2);
        CHECK(equal == expect);
    }
    // uniqueness: distinct s, t >= 0 give distinct canonical forms
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b) {
            const Rational s(a, 3), t(b, 3);
            CHECK_FALSE(canonical_yy(MoebiusElement::m_s(s)) ==
                        canonical_yy(MoebiusElement::m_s(t)));
        }
}

TEST_CASE("canonical_yy is a double-coset invariant (1000 random cases)") {
    for (int i = 0; i < 1000; ++i) {
        const MoebiusElement f = rand_element();
        const MoebiusElement g1 = rand_GY(), g2 = rand_GY();
        CHECK(canonical_yy(compose(compose(g1, f), g2)) == canonical_yy(f));
    }
}

TEST_CASE("classification invariants are scale independent") {
    for (int i = 0; i < 200; ++i) {
        const MoebiusElement f = rand_element();
        Rational t = rand_rational(true);
        if (t < 0) t = -t;
        const MoebiusElement g(f.a() * t, f.b() * t, f.c() * t, f.d() * t, f.antiholomorphic());
        CHECK(g == f); // normalization absorbs positive rescaling
        CHECK(class_xy(g) == class_xy(f));
        CHECK(canonical_yy(g) == canonical_yy(f));
    }
}

TEST_CASE("stabilizers") {
    CHECK(stabilizer(PairKind::A(XYClass::IdClass)) ==
          StabilizerDescriptor{StabilizerDescriptor::Tag::FullD, 0});
    CHECK(stabilizer(PairKind::A(XYClass::ZetaClass)) ==
          StabilizerDescriptor{StabilizerDescriptor::Tag::Trivial, 0});
    CHECK(stabilizer(PairKind::B({CanonicalRep::Tag::Eta, 0})) ==
          StabilizerDescriptor{StabilizerDescriptor::Tag::FullGY, 0});
    CHECK(stabilizer(PairKind::B({CanonicalRep::Tag::M, 2})) ==
          StabilizerDescriptor{StabilizerDescriptor::Tag::Trivial, 0});
    CHECK(stabilizer(PairKind::B({CanonicalRep::Tag::M, Rational(1, 2)})) ==
          StabilizerDescriptor{StabilizerDescriptor::Tag::OrderTwo, 1});
    CHECK(stabilizer(PairKind::B({CanonicalRep::Tag::EtaM, Rational(1, 4)})) ==
          StabilizerDescriptor{StabilizerDescriptor::Tag::OrderTwo, 3});

    // symbolic conjugation check m_s g m_s^{-1} in G_Y with mu^2 = (1-s)/s
    for (int num = 1; num < 10; ++num) CHECK(verify_order_two_stabilizer(Rational(num, 10)));
    CHECK_FALSE(verify_order_two_stabilizer(2));
}

TEST_CASE("canonical form of antiholomorphic elements") {
    // eta m_s has canonical EtaM(s) for s >= 0
    for (int num = 0; num < 10; ++num) {
        const Rational s(num, 3);
        const MoebiusElement em = compose(MoebiusElement::eta(), MoebiusElement::m_s(s));
        CHECK(canonical_yy(em) == CanonicalRep{CanonicalRep::Tag::EtaM, s});
    }
    // eta composed with G_Y stays in the Eta class
    for (int i = 0; i < 50; ++i) {
        const MoebiusElement f = compose(MoebiusElement::eta(), rand_GY());
        CHECK(canonical_yy(f) == CanonicalRep{CanonicalRep::Tag::Eta, 0});
    }
}
