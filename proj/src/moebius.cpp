#include "cmclab/moebius.hpp"

#include <array>
#include <sstream>
#include <tuple>

namespace cmclab {

namespace {

Integer lcm_den(const Rational& a, const Rational& b) {
    const Integer da = denominator(a), db = denominator(b);
    return da / gcd(da, db) * db;
}

// conjugate by z -> -z (negate the off-diagonal entries)
std::array<Rational, 4> tilde(const std::array<Rational, 4>& m) {
    return {m[0], -m[1], -m[2], m[3]};
}

} // namespace

MoebiusElement::MoebiusElement() : a_(1), b_(0), c_(0), d_(1) {}

MoebiusElement::MoebiusElement(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d, bool antiholomorphic)
    : a_(a), b_(b), c_(c), d_(d), anti_(antiholomorphic) {
    if (a_ * d_ - b_ * c_ <= 0)
        throw ParameterError("MoebiusElement: stored matrix must have positive determinant");
    normalize();
}

MoebiusElement MoebiusElement::from_action_matrix(const Rational& a, const Rational& b,
                                                  const Rational& c, const Rational& d,
                                                  bool antiholomorphic) {
    if (!antiholomorphic) return MoebiusElement(a, b, c, d, false);
    if (a * d - b * c >= 0)
        throw ParameterError("antiholomorphic action matrix must have negative determinant");
    // acting through conj z: M (conj z) = M' (-conj z) with the first column negated
    return MoebiusElement(-a, b, -c, d, true);
}

void MoebiusElement::normalize() {
    Integer den = lcm_den(lcm_den(a_, b_), lcm_den(c_, d_));
    std::array<Integer, 4> v;
    const std::array<Rational, 4> rs{a_, b_, c_, d_};
    for (int i = 0; i < 4; ++i) v[i] = numerator(rs[i] * den);
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g != 0)
        for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
    a_ = v[0];
    b_ = v[1];
    c_ = v[2];
    d_ = v[3];
}

MoebiusElement MoebiusElement::identity() { return MoebiusElement(); }
MoebiusElement MoebiusElement::eta() { return MoebiusElement(1, 0, 0, 1, true); }
MoebiusElement MoebiusElement::xi() { return MoebiusElement(0, 1, -1, 0); }
MoebiusElement MoebiusElement::zeta() { return MoebiusElement(0, 1, -1, 1); }

MoebiusElement MoebiusElement::m_s(const Rational& s) {
    return MoebiusElement(s, 1 - s, -1, 1);
}

MoebiusElement MoebiusElement::diagonal(const Rational& alpha) {
    if (alpha <= 0) throw ParameterError("diagonal: alpha must be positive (projectively)");
    return MoebiusElement(alpha, 0, 0, 1);
}

MoebiusElement MoebiusElement::anti_diagonal(const Rational& beta) {
    if (beta <= 0) throw ParameterError("anti_diagonal: beta must be positive (projectively)");
    return MoebiusElement(0, beta, -1, 0);
}

bool MoebiusElement::operator==(const MoebiusElement& o) const {
    return anti_ == o.anti_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

bool MoebiusElement::operator<(const MoebiusElement& o) const {
    return std::tie(anti_, a_, b_, c_, d_) < std::tie(o.anti_, o.a_, o.b_, o.c_, o.d_);
}

std::string MoebiusElement::to_string() const {
    std::ostringstream os;
    os << "[" << cmclab::to_string(a_) << "," << cmclab::to_string(b_) << ";"
       << cmclab::to_string(c_) << "," << cmclab::to_string(d_) << "]"
       << (anti_ ? "-" : "+");
    return os.str();
}

MoebiusElement compose(const MoebiusElement& f, const MoebiusElement& g) {
    std::array<Rational, 4> gm{g.a(), g.b(), g.c(), g.d()};
    if (f.antiholomorphic()) gm = tilde(gm);
    const Rational a = f.a() * gm[0] + f.b() * gm[2];
    const Rational b = f.a() * gm[1] + f.b() * gm[3];
    const Rational c = f.c() * gm[0] + f.d() * gm[2];
    const Rational d = f.c() * gm[1] + f.d() * gm[3];
    return MoebiusElement(a, b, c, d, f.antiholomorphic() != g.antiholomorphic());
}

MoebiusElement inverse(const MoebiusElement& f) {
    std::array<Rational, 4> m{f.d(), -f.b(), -f.c(), f.a()};
    if (f.antiholomorphic()) m = tilde(m);
    return MoebiusElement(m[0], m[1], m[2], m[3], f.antiholomorphic());
}

std::complex<double> apply(const MoebiusElement& f, std::complex<double> z) {
    if (!(z.imag() > 0.0)) throw DomainError("apply: point must lie in the upper half-plane");
    if (f.antiholomorphic()) z = -std::conj(z);
    const std::complex<double> a(static_cast<double>(f.a()), 0.0);
    const std::complex<double> b(static_cast<double>(f.b()), 0.0);
    const std::complex<double> c(static_cast<double>(f.c()), 0.0);
    const std::complex<double> d(static_cast<double>(f.d()), 0.0);
    return (a * z + b) / (c * z + d);
}

std::optional<Rational> rho(const MoebiusElement& f) {
    const Rational num = f.b() * f.c();
    const Rational den = f.a() * f.d();
    if (den == 0) {
        // both products zero would force det = 0, which cannot happen
        if (num == 0) throw std::logic_error("rho: 0/0 is unreachable for invertible elements");
        return std::nullopt;
    }
    return num / den;
}

bool rho_equal(const std::optional<Rational>& x, const std::optional<Rational>& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
}

std::optional<Rational> rho_inverse(const std::optional<Rational>& x) {
    if (!x) return Rational(0);
    if (*x == 0) return std::nullopt;
    return 1 / *x;
}

bool in_D(const MoebiusElement& f) {
    return !f.antiholomorphic() && f.b() == 0 && f.c() == 0;
}

bool in_T(const MoebiusElement& f) { return !f.antiholomorphic() && f.c() == 0; }

bool in_GX(const MoebiusElement& f) { return f.c() == 0; }

bool in_GY(const MoebiusElement& f) {
    if (f.antiholomorphic()) return false;
    return (f.b() == 0 && f.c() == 0) || (f.a() == 0 && f.d() == 0);
}

XYClass class_xy(const MoebiusElement& f) {
    return (f.c() == 0 || f.d() == 0) ? XYClass::IdClass : XYClass::ZetaClass;
}

bool CanonicalRep::operator==(const CanonicalRep& o) const {
    if (tag != o.tag) return false;
    if (tag == Tag::M || tag == Tag::EtaM) return s == o.s;
    return true;
}

bool CanonicalRep::operator<(const CanonicalRep& o) const {
    if (tag != o.tag) return static_cast<int>(tag) < static_cast<int>(o.tag);
    if (tag == Tag::M || tag == Tag::EtaM) return s < o.s;
    return false;
}

std::string CanonicalRep::to_string() const {
    switch (tag) {
        case Tag::Id: return "Id";
        case Tag::Eta: return "Eta";
        case Tag::M: return "M(" + cmclab::to_string(s) + ")";
        case Tag::EtaM: return "EtaM(" + cmclab::to_string(s) + ")";
    }
    return "?";
}

CanonicalRep canonical_yy(const MoebiusElement& f) {
    if (in_GY(f)) return {CanonicalRep::Tag::Id, 0};
    if (f.antiholomorphic()) {
        const MoebiusElement g = compose(MoebiusElement::eta(), f);
        if (in_GY(g)) return {CanonicalRep::Tag::Eta, 0};
        const CanonicalRep inner = canonical_yy(g);
        return {CanonicalRep::Tag::EtaM, inner.s};
    }
    if (f.c() != 0 && f.d() != 0) {
        const Rational D = f.det();
        const bool same_sign = f.c() * f.d() > 0;
        const Rational s0 = same_sign ? Rational(-f.b() * f.c() / D) : Rational(f.a() * f.d() / D);
        return {CanonicalRep::Tag::M, s0 >= 0 ? s0 : 1 - s0};
    }
    // gamma = 0 or delta = 0 but f not in G_Y: xi f is equivalent and generic
    return canonical_yy(compose(MoebiusElement::xi(), f));
}

std::string StabilizerDescriptor::to_string() const {
    switch (tag) {
        case Tag::FullD: return "FullD";
        case Tag::Trivial: return "Trivial";
        case Tag::FullGY: return "FullGY";
        case Tag::OrderTwo: return "OrderTwo(mu2=" + cmclab::to_string(mu_sq) + ")";
    }
    return "?";
}

bool StabilizerDescriptor::operator==(const StabilizerDescriptor& o) const {
    return tag == o.tag && (tag != Tag::OrderTwo || mu_sq == o.mu_sq);
}

PairKind PairKind::A(XYClass c) {
    PairKind k;
    k.tag = Tag::A;
    k.a_class = c;
    return k;
}

PairKind PairKind::B(CanonicalRep r) {
    PairKind k;
    k.tag = Tag::B;
    k.b_rep = r;
    return k;
}

StabilizerDescriptor stabilizer(const PairKind& kind) {
    if (kind.tag == PairKind::Tag::A) {
        if (kind.a_class == XYClass::IdClass) return {StabilizerDescriptor::Tag::FullD, 0};
        return {StabilizerDescriptor::Tag::Trivial, 0};
    }
    switch (kind.b_rep.tag) {
        case CanonicalRep::Tag::Id:
        case CanonicalRep::Tag::Eta:
            return {StabilizerDescriptor::Tag::FullGY, 0};
        case CanonicalRep::Tag::M:
        case CanonicalRep::Tag::EtaM: {
            const Rational& s = kind.b_rep.s;
            if (s > 0 && s < 1)
                return {StabilizerDescriptor::Tag::OrderTwo, (1 - s) / s};
            return {StabilizerDescriptor::Tag::Trivial, 0};
        }
    }
    return {StabilizerDescriptor::Tag::Trivial, 0};
}

bool verify_order_two_stabilizer(const Rational& s) {
    if (!(s > 0 && s < 1)) return false;
    const Rational mu2 = (1 - s) / s;
    // entries of m_s g m_s^{-1} as polynomials x + y*mu, with g = ((0,mu),(-1/mu,0)).
    // Scaling g by mu (projective) gives g ~ ((0,mu^2),(-1,0)), so the conjugate
    // has entries linear in mu^2 and membership in G_Y is an exact rational check.
    const Rational a = s, b = 1 - s, c = -1, d = 1;
    // m_s * ((0,mu2),(-1,0)) = ((-b, a*mu2), (-d, c*mu2))
    const Rational p11 = -b, p12 = a * mu2, p21 = -d, p22 = c * mu2;
    // * m_s^{-1}, with m_s^{-1} = ((1, s-1), (1, s)) for det 1
    const Rational q11 = p11 * 1 + p12 * 1;
    const Rational q12 = p11 * (s - 1) + p12 * s;
    const Rational q21 = p21 * 1 + p22 * 1;
    const Rational q22 = p21 * (s - 1) + p22 * s;
    // membership in D.xi: diagonal entries vanish, off-diagonal nonzero
    return q11 == 0 && q22 == 0 && q12 != 0 && q21 != 0;
}

} // namespace cmclab
